use fintop_cli::{run, EXIT_FALSE, EXIT_INPUT, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["fintop".to_string()];
    argv.extend(args.iter().map(|a| a.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(call(&[]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "--n", "2", "--predicate", "t9"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn input_errors_exit_2() {
    let (code, out, err) = call(&["check", "no/such/file.json"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("InputError") && err.starts_with("error:"));
    let (code, out, _) = call(&["ops", "--set", "7", &fixture("sierpinski.json")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("PointOutOfRange"));
    let (code, out, _) = call(&["subspace", "--set", "0", &fixture("missing_carrier.json")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("MissingCarrier"));
    assert_eq!(call(&["enumerate", "--n", "6", "--count"]).0, EXIT_INPUT);
}

#[test]
fn predicates_set_exit_code() {
    let s = fixture("sierpinski.json");
    assert_eq!(call(&["check", "--t0", &s]), (EXIT_OK, "{\"t0\":true}\n".into(), String::new()));
    assert_eq!(call(&["check", "--t1", &s]).0, EXIT_FALSE);
    // every predicate is evaluated; a discrete space is not indiscrete
    let (code, out, _) = call(&["check", "builtin:discrete:3"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.starts_with("{\"t0\":true,\"t1\":true"));
    assert!(out.ends_with("\"discrete\":true,\"indiscrete\":false}\n"));
    let (_, out, _) = call(&["check", "--connected", "--compact", &s]);
    assert_eq!(out, "{\"connected\":true,\"compact\":true}\n");
}

#[test]
fn summary_goes_to_stderr() {
    let (_, out, err) = call(&["--summary", "enumerate", "--n", "2", "--count"]);
    assert_eq!(out, "{\"count\":4}\n");
    assert_eq!(err, "4 topologies\n");
}

#[test]
fn pretty_output() {
    let (_, out, _) = call(&["--pretty", "enumerate", "--n", "1", "--count"]);
    assert_eq!(out, "{\n  \"count\": 1\n}\n");
}

#[test]
fn operator_flags() {
    let s = fixture("sierpinski.json");
    let (_, out, _) = call(&["ops", "--set", "1", &s]);
    assert_eq!(out, "{\"interior\":[1],\"closure\":[0,1],\"exterior\":[],\"boundary\":[0],\"limit\":[0],\"isolated\":[1]}\n");
    let (_, out, _) = call(&["ops", "--fr", "--set", "", &s]);
    assert_eq!(out, "{\"boundary\":[]}\n");
    let (_, out, _) = call(&["ops", "--roles", "--point", "0", "--set", "1", &s]);
    assert!(out.contains("\"point\":0,\"interior\":false,\"exterior\":false,\"boundary\":true,\"adherent\":true,\"limit\":true"));
}

#[test]
fn enumeration_modes() {
    let (_, out, _) = call(&["enumerate", "--n", "3", "--count", "--parallel"]);
    assert_eq!(out, "{\"count\":29}\n");
    let (_, out, _) = call(&["enumerate", "--n", "4", "--mode", "classes", "--count"]);
    assert_eq!(out, "{\"count\":33}\n");
    let (_, out, _) = call(&["enumerate", "--n", "2"]);
    assert_eq!(out, "{\"n\":2,\"spaces\":[[[],[0],[1],[0,1]],[[],[0],[0,1]],[[],[1],[0,1]],[[],[0,1]]]}\n");
    let (_, fast, _) = call(&["enumerate", "--n", "3"]);
    assert_eq!(call(&["enumerate", "--n", "3", "--generator", "naive"]).1, fast);
    assert_eq!(call(&["enumerate", "--n", "3", "--generator", "preorder"]).1, fast);
    let (code, out, _) = call(&["enumerate", "--n", "3", "--cross-check"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "{\"by_search\":9,\"by_canonical\":9}\n"));
    let (_, out, _) = call(&["enumerate", "--n", "3", "--count", "--predicate", "connected"]);
    assert_eq!(out, "{\"count\":19}\n");
}

#[test]
fn constructors_from_the_command_line() {
    let s = fixture("sierpinski.json");
    let (_, out, _) = call(&["subspace", "--set", "1", &s]);
    assert_eq!(out, "{\"space\":{\"n\":1,\"opens\":[[],[0]]},\"inclusion\":[1]}\n");
    let (_, out, _) = call(&["quotient", "--partition", "[[0,1],[2]]", &fixture("discrete3.json")]);
    assert_eq!(out, "{\"space\":{\"n\":2,\"opens\":[[],[0],[1],[0,1]]},\"projection\":[0,0,1]}\n");
    let (_, out, _) = call(&["generate", "metric", "--table", "[[0,2],[2,0]]"]);
    assert_eq!(out, "{\"n\":2,\"opens\":[[],[0],[1],[0,1]]}\n");
    let (code, out, _) = call(&["generate", "subbase", "--n", "2", "--family", "[[0]]"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("SubbaseDoesNotCover"));
    let (code, out, _) = call(&["base", "--n", "3", "--family", "[[0,1],[1,2]]"]);
    assert_eq!(code, EXIT_FALSE);
    assert!(out.contains("IntersectionNotUnion"));
    let (_, out, _) = call(&["compare", &s, "builtin:discrete:2"]);
    assert_eq!(out, "{\"comparison\":\"strictly_coarser\"}\n");
    let (_, out, _) = call(&["t1-min", "--n", "2"]);
    assert_eq!(out, "{\"n\":2,\"opens\":[[],[0],[1],[0,1]]}\n");
}

#[test]
fn covers_and_maps() {
    let dir = std::env::temp_dir().join(format!("fintop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(fixture("sierpinski.json"), dir.join("s.json")).unwrap();
    let map = dir.join("swap.json");
    std::fs::write(&map, r#"{"dom":"s.json","cod":"s.json","table":[1,0]}"#).unwrap();
    let (code, out, _) = call(&["map", map.to_str().unwrap(), "--at", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("{\"continuous\":false,") && out.contains("\"continuous_at\":true"));
    let (_, out, _) = call(&["cover", &fixture("sierpinski.json"), "--cover", "[[1],[0,1]]", "--pasting", map.to_str().unwrap()]);
    assert!(out.contains("\"fundamental\":true") && out.contains("\"pasting\":true"));
    let (code, out, _) = call(&["cover", &fixture("sierpinski.json"), "--cover", "[[0],[1]]", "--pasting", map.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("NotFundamental"));
    std::fs::remove_dir_all(&dir).unwrap();
}
