use std::collections::BTreeSet;
use std::path::Path;

use fintop_cli::{subcommand_names, OPERATIONS};

/// Free functions declared at the top level of each library module.
fn library_operations() -> BTreeSet<String> {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/src");
    let mut names = BTreeSet::new();
    for entry in std::fs::read_dir(src).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("pub fn ") {
                let name: String = rest.chars().take_while(|c| c.is_alphanumeric() || *c == '_').collect();
                names.insert(name);
            }
        }
    }
    names
}

#[test]
fn every_operation_has_a_subcommand() {
    let mapped: BTreeSet<String> = OPERATIONS.iter().map(|(op, _)| op.to_string()).collect();
    let missing: Vec<String> = library_operations().difference(&mapped).cloned().collect();
    assert!(missing.is_empty(), "operations without a subcommand: {missing:?}");
}

#[test]
fn table_names_real_operations_and_subcommands() {
    let ops = library_operations();
    let subs = subcommand_names();
    for (op, sub) in OPERATIONS {
        assert!(ops.contains(*op), "`{op}` is not a library operation");
        assert!(subs.iter().any(|s| s == sub), "`{sub}` is not a subcommand");
    }
}

#[test]
fn required_subcommands_exist() {
    let subs = subcommand_names();
    for name in [
        "validate", "ops", "check", "generate", "subspace", "product", "quotient", "alexandroff", "components", "homeo",
        "cover", "enumerate", "sweep",
    ] {
        assert!(subs.iter().any(|s| s == name), "missing subcommand {name}");
    }
}
