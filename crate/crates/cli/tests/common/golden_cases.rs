use std::path::{Path, PathBuf};

/// Fixed invocations; `{fx}` expands to the fixture directory.
pub const CASES: &[(&str, &[&str])] = &[
    ("check_t1_sierpinski", &["check", "--t1", "{fx}/sierpinski.json"]),
    ("enumerate_count_3", &["enumerate", "--n", "3", "--count"]),
    ("ops_closure_sierpinski", &["ops", "--closure", "--set", "1", "{fx}/sierpinski.json"]),
    ("validate_missing_carrier", &["validate", "{fx}/missing_carrier.json"]),
    ("validate_syntax_error", &["validate", "{fx}/syntax_error.json"]),
    ("generate_base", &["generate", "base", "--n", "3", "--family", "[[0],[1,2]]"]),
    ("product_sierpinski_squared", &["product", "{fx}/sierpinski.json", "{fx}/sierpinski.json"]),
    ("alexandroff_sierpinski", &["alexandroff", "{fx}/sierpinski.json"]),
    ("components_two_blocks", &["components", "{fx}/two_blocks.json"]),
    ("homeo_sierpinski_flipped", &["homeo", "{fx}/sierpinski.json", "{fx}/sierpinski_flipped.json"]),
    ("cover_minimal_discrete", &["cover", "{fx}/discrete3.json", "--cover", "[[0,1],[1,2],[0,2]]", "--minimal"]),
    ("enumerate_classes_3", &["enumerate", "--n", "3", "--mode", "classes", "--count"]),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn expand(args: &[&str]) -> Vec<String> {
    let fx = tests_dir().join("fixtures");
    args.iter().map(|a| a.replace("{fx}", &fx.to_string_lossy())).collect()
}

/// Transcript text: the command as written, the exit code, then standard output.
pub fn transcript(args: &[&str], code: i32, stdout: &[u8]) -> String {
    format!("$ fintop {}\nexit: {}\n{}", args.join(" "), code, String::from_utf8_lossy(stdout))
}

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(format!("{name}.txt"))
}
