#[path = "common/golden_cases.rs"]
mod golden_cases;

use golden_cases::{expand, golden_path, transcript, CASES};

fn run_case(args: &[&str]) -> String {
    let mut argv = vec!["fintop".to_string()];
    argv.extend(expand(args));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = fintop_cli::run(argv, &mut out, &mut err);
    transcript(args, code, &out)
}

#[test]
fn transcripts_match() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in CASES {
        let got = run_case(args);
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(got, want, "transcript {name}");
    }
}

#[test]
fn transcripts_are_stable() {
    for (_, args) in CASES {
        assert_eq!(run_case(args), run_case(args));
    }
}

#[test]
fn twelve_cases() {
    assert_eq!(CASES.len(), 12);
}
