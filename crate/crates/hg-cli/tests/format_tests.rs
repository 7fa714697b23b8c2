//! Parser and serializer behavior: positions on syntax errors, axiom
//! witnesses on semantic errors, and canonicalization.

use hg_cli::format::{parse_documents, serialize_bundle, serialize_hypergroup, LoadError};
use hypergroups::Rule;

#[test]
fn empty_input_is_a_syntax_error_at_1_1() {
    match parse_documents("") {
        Err(LoadError::Syntax { line: 1, col: 1, .. }) => {}
        other => panic!("expected syntax error at 1:1, got {other:?}"),
    }
    match parse_documents("# only a comment\n\n") {
        Err(LoadError::Syntax { line: 1, col: 1, .. }) => {}
        other => panic!("expected syntax error at 1:1, got {other:?}"),
    }
}

#[test]
fn broken_cell_is_a_semantic_error_with_witness() {
    let text = "hypergroup k2\nelements 1 g\ninv 1 g\ng g = g\n";
    match parse_documents(text) {
        Err(e @ LoadError::Semantic { .. }) => {
            let report = e.report().expect("axiom report attached");
            let first = report.first().unwrap();
            assert_eq!(first.rule, Rule::Reversibility);
            assert_eq!(first.witness, vec![0, 1, 1]);
        }
        other => panic!("expected semantic error, got {other:?}"),
    }
}

#[test]
fn syntax_error_variants() {
    let cases = [
        ("hypergroup k2\nelements 1 g\ng g = 1,g\n", "inv"),
        ("hypergroup k2\nelements 1 g\ninv 1 g\n", "missing cell"),
        (
            "hypergroup k2\nelements 1 g\ninv 1 g\ng g = 1,g\ng g = 1\n",
            "duplicate cell",
        ),
        (
            "hypergroup k2\nelements 1 g\ninv 1 g\ng g = 1,q\n",
            "unknown element",
        ),
        (
            "hypergroup k2\nelements 1 g g\ninv 1 g\ng g = 1\n",
            "duplicate element",
        ),
        ("widget w\n", "expected"),
    ];
    for (text, needle) in cases {
        match parse_documents(text) {
            Err(LoadError::Syntax { message, .. }) => {
                assert!(
                    message.contains(needle),
                    "expected '{needle}' in '{message}'"
                );
            }
            other => panic!("expected syntax error for {text:?}, got {other:?}"),
        }
    }
}

#[test]
fn explicit_identity_cells_are_checked() {
    // consistent: accepted
    let ok = "hypergroup k2\nelements 1 g\ninv 1 g\n1 g = g\ng g = 1,g\n";
    assert!(parse_documents(ok).is_ok());
    // inconsistent: rejected
    let bad = "hypergroup k2\nelements 1 g\ninv 1 g\n1 g = 1\ng g = 1,g\n";
    assert!(matches!(
        parse_documents(bad),
        Err(LoadError::Syntax { .. })
    ));
}

#[test]
fn serialization_canonicalizes_element_order() {
    // elements listed identity-first but otherwise unsorted
    let text = "hypergroup v3\nelements 0 b a\ninv 0 b a\nb b = 0,a,b\nb a = b\na b = b\na a = 0,a\n";
    let bundle = parse_documents(text).unwrap();
    let doc = bundle.hypergroups().next().unwrap();
    let canonical = serialize_hypergroup(doc);
    assert_eq!(
        canonical,
        "hypergroup v3\nelements 0 a b\ninv 0 a b\na a = 0,a\na b = b\nb a = b\nb b = 0,a,b\n"
    );
    // canonicalization is idempotent
    let reparsed = parse_documents(&canonical).unwrap();
    assert_eq!(
        serialize_hypergroup(reparsed.hypergroups().next().unwrap()),
        canonical
    );
}

#[test]
fn morphism_documents_must_be_total() {
    let text = "hypergroup k2\nelements 1 g\ninv 1 g\ng g = 1,g\n\nmorphism f : k2 -> k2\nmap 1 -> 1\n";
    match parse_documents(text) {
        Err(LoadError::Syntax { message, .. }) => {
            assert!(message.contains("no map entry"));
        }
        other => panic!("expected totality error, got {other:?}"),
    }
}

#[test]
fn non_morphism_maps_are_semantic_errors() {
    let text = "hypergroup z2\nelements 0 1\ninv 0 1\n1 1 = 0\n\nhypergroup k2\nelements 1 g\ninv 1 g\ng g = 1,g\n\nmorphism f : k2 -> z2\nmap 1 -> 0\nmap g -> 1\n";
    match parse_documents(text) {
        Err(e @ LoadError::Semantic { .. }) => {
            assert!(e.report().is_some());
        }
        other => panic!("expected semantic error, got {other:?}"),
    }
}

#[test]
fn bundles_round_trip() {
    for fixture in ["bundle_mor.hg", "pullback.hg", "ses.hg"] {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/fixtures")
            .join(fixture);
        let text = std::fs::read_to_string(path).unwrap();
        let bundle = parse_documents(&text).unwrap();
        let serialized = serialize_bundle(&bundle);
        let reparsed = parse_documents(&serialized).unwrap();
        assert_eq!(serialize_bundle(&reparsed), serialized, "{fixture}");
    }
}
