//! CLI acceptance: golden-file round-trip byte stability for the committed
//! corpus, contracted exit codes, JSON schema conformance, and witness
//! replay. Run with `cargo test -p hg-cli --test acceptance -- --nocapture`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hg_cli::format::{parse_documents, serialize_hypergroup};
use serde_json::Value;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn hg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const CORPUS: [&str; 7] = ["t", "z2", "k2", "v3", "s3", "s3_cosets_t1", "k2_plus_k2"];

/// Criterion 11a: serialize(parse(x)) is byte-identical to every committed
/// corpus file, and a second round trip is stable too.
#[test]
fn criterion_11_corpus_round_trip() {
    for name in CORPUS {
        let path = corpus_dir().join(format!("{name}.hg"));
        let original = std::fs::read_to_string(&path).expect("corpus file exists");
        let bundle = parse_documents(&original).expect("corpus parses");
        let docs: Vec<_> = bundle.hypergroups().collect();
        assert_eq!(docs.len(), 1, "{name}: one document per corpus file");
        let serialized = serialize_hypergroup(docs[0]);
        assert_eq!(serialized, original, "{name}: round trip must be byte-stable");
        let again = parse_documents(&serialized).expect("reparse");
        let doc2: Vec<_> = again.hypergroups().collect();
        assert_eq!(serialize_hypergroup(doc2[0]), serialized);
    }
    println!("criterion 11a (corpus round-trip byte stability, {} files): pass", CORPUS.len());
}

/// Criterion 11b: exit codes are exactly as contracted on success, failing
/// checks, and usage/syntax errors.
#[test]
fn criterion_11_exit_codes() {
    let v3 = corpus_dir().join("v3.hg");
    let k2 = corpus_dir().join("k2.hg");
    let z2 = corpus_dir().join("z2.hg");
    let v3s = v3.to_str().unwrap();
    let k2s = k2.to_str().unwrap();
    let z2s = z2.to_str().unwrap();

    // 0: success / passing checks
    assert_eq!(exit_code(&hg(&["verify", v3s])), 0);
    assert_eq!(exit_code(&hg(&["commutative", v3s])), 0);
    assert_eq!(exit_code(&hg(&["sip", z2s])), 0);
    assert_eq!(exit_code(&hg(&["quotient", v3s, "--sub", "0,a"])), 0);
    assert_eq!(exit_code(&hg(&["iso", k2s, k2s])), 0);
    assert_eq!(
        exit_code(&hg(&["search", "nonfull-image", "--max-order", "2"])),
        0
    );

    // 1: failing checks and semantic errors, witness printed
    let broken = fixture("broken_k2.hg");
    let out = hg(&["verify", broken.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("reversibility"), "witness printed: {text}");
    assert_eq!(exit_code(&hg(&["sip", v3s])), 1);
    assert_eq!(exit_code(&hg(&["iso", k2s, z2s])), 1);
    // semantic error on load for a non-verify command
    assert_eq!(
        exit_code(&hg(&["commutative", fixture("broken_k2.hg").to_str().unwrap()])),
        1
    );
    // coset space of a non-normal subgroup reports the construction failure
    let s3 = corpus_dir().join("s3.hg");
    let out = hg(&["coset-space", s3.to_str().unwrap(), "--sub", "e,t1"]);
    assert_eq!(exit_code(&out), 1);
    // ... while double cosets succeed
    let out = hg(&["coset-space", s3.to_str().unwrap(), "--sub", "e,t1", "--double"]);
    assert_eq!(exit_code(&out), 0);

    // 2: usage and syntax errors
    assert_eq!(exit_code(&hg(&["no-such-command"])), 2);
    assert_eq!(exit_code(&hg(&["verify"])), 2);
    assert_eq!(exit_code(&hg(&["enumerate", "--order", "9"])), 2);
    assert_eq!(exit_code(&hg(&["search", "equalizer-gap", "--max-order", "4"])), 2);
    // HG_MAX_ORDER lowers the enumeration cap
    let out = Command::new(env!("CARGO_BIN_EXE_hg"))
        .env("HG_MAX_ORDER", "2")
        .args(["enumerate", "--order", "3"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    let empty = fixture("empty.hg");
    std::fs::write(&empty, "").unwrap();
    let out = hg(&["verify", empty.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("1:1"), "position reported: {err}");
    println!("criterion 11b (exit codes 0/1/2 as contracted): pass");
}

/// Every `--json` output validates against the committed schema, and check
/// witnesses replay identically when the command is run again.
#[test]
fn criterion_11_json_schema_and_replay() {
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(
            Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/output.schema.json"),
        )
        .expect("schema file committed"),
    )
    .expect("schema is valid json");

    let v3 = corpus_dir().join("v3.hg");
    let broken = fixture("broken_k2.hg");
    let invocations: Vec<Vec<&str>> = vec![
        vec!["--json", "verify", v3.to_str().unwrap()],
        vec!["--json", "verify", broken.to_str().unwrap()],
        vec!["--json", "sip", v3.to_str().unwrap()],
        vec!["--json", "quotient", v3.to_str().unwrap(), "--sub", "0,a"],
        vec!["--json", "enumerate", "--order", "2"],
        vec!["--json", "search", "equalizer-gap", "--max-order", "2"],
        vec!["--json", "canon", v3.to_str().unwrap()],
        vec!["--json", "enumerate", "--order", "9"],
    ];
    for args in &invocations {
        let out = hg(args);
        let value: Value = serde_json::from_slice(&out.stdout)
            .unwrap_or_else(|e| panic!("{args:?} must print JSON: {e}"));
        if let Err(msg) = validate(&schema, &value) {
            panic!("{args:?} violates the schema: {msg}\n{value:#}");
        }
    }

    // witness replay: identical bytes on a second run, and the witness
    // fields are present and structured
    let first = hg(&["--json", "verify", broken.to_str().unwrap()]);
    let second = hg(&["--json", "verify", broken.to_str().unwrap()]);
    assert_eq!(exit_code(&first), 1);
    assert_eq!(first.stdout, second.stdout, "witness must replay identically");
    let value: Value = serde_json::from_slice(&first.stdout).unwrap();
    let violations = value["violations"].as_array().expect("violations array");
    assert!(!violations.is_empty());
    assert_eq!(violations[0]["rule"], "reversibility");
    assert_eq!(violations[0]["witness"], serde_json::json!([0, 1, 1]));
    println!("criterion 11c (JSON schema conformance and witness replay): pass");
}

/// Minimal JSON-schema validator covering the subset the committed schema
/// uses: type, properties, required, items, enum.
fn validate(schema: &Value, value: &Value) -> Result<(), String> {
    if let Some(allowed) = schema.get("enum") {
        let ok = allowed
            .as_array()
            .map(|a| a.contains(value))
            .unwrap_or(false);
        return if ok {
            Ok(())
        } else {
            Err(format!("{value} not in enum {allowed}"))
        };
    }
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => return Err(format!("unsupported type '{other}' in schema")),
        };
        if !ok {
            return Err(format!("expected {ty}, got {value}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().expect("required keys are strings");
            if value.get(key).is_none() {
                return Err(format!("missing required key '{key}'"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(sub, v).map_err(|e| format!("{key}: {e}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, v) in arr.iter().enumerate() {
                validate(items, v).map_err(|e| format!("[{i}]: {e}"))?;
            }
        }
    }
    Ok(())
}

/// The corpus files all verify through the binary, and the headline library
/// claims hold for the committed documents.
#[test]
fn corpus_documents_verify() {
    for name in CORPUS {
        let path = corpus_dir().join(format!("{name}.hg"));
        assert_eq!(exit_code(&hg(&["verify", path.to_str().unwrap()])), 0, "{name}");
    }
    // s3_cosets_t1 is the double-coset space and is isomorphic to k2
    let a = corpus_dir().join("s3_cosets_t1.hg");
    let b = corpus_dir().join("k2.hg");
    assert_eq!(
        exit_code(&hg(&["iso", a.to_str().unwrap(), b.to_str().unwrap()])),
        0
    );
    // k2_plus_k2 equals product k2 k2 up to isomorphism
    let bundle = parse_documents(
        &std::fs::read_to_string(corpus_dir().join("k2_plus_k2.hg")).unwrap(),
    )
    .unwrap();
    let doc = bundle.hypergroups().next().unwrap();
    let (product, _) = hypergroups::construct::product(&[
        hypergroups::samples::k2(),
        hypergroups::samples::k2(),
    ])
    .unwrap();
    assert_eq!(doc.hypergroup.raw(), product.raw());
    println!("corpus documents verify: pass");
}

/// Morphism and diagram documents parse, serialize, and drive the
/// morphism-level commands end to end.
#[test]
fn bundle_commands_work() {
    let bundle_path = fixture("bundle_mor.hg");
    let b = bundle_path.to_str().unwrap();
    let out = hg(&["kernel", b]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("0,a"));
    let out = hg(&["image", b]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("full: true"));
    // f is surjective, so its cokernel is the trivial hypergroup
    let out = hg(&["cokernel", b]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("elements [1]"));
    // the kernel inclusion from the exact-sequence fixture has cokernel K2
    let ses = fixture("ses.hg");
    let out = hg(&["cokernel", ses.to_str().unwrap(), "--name", "incl"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("[b] [b] = [0],[b]"));
    assert_eq!(exit_code(&hg(&["image-full", b])), 0);
    assert_eq!(exit_code(&hg(&["universal", "kernel", b])), 0);
    assert_eq!(exit_code(&hg(&["universal", "cokernel", b])), 0);

    // non-full morphism: cokernel requires --force-generated
    let nf = fixture("nonfull_mor.hg");
    let n = nf.to_str().unwrap();
    assert_eq!(exit_code(&hg(&["cokernel", n])), 1);
    assert_eq!(exit_code(&hg(&["cokernel", n, "--force-generated"])), 0);
    assert_eq!(exit_code(&hg(&["image-full", n, "--force-generated"])), 1);

    // pullback diagram: limit computes and its cone property passes
    let pb = fixture("pullback.hg");
    let p = pb.to_str().unwrap();
    let out = hg(&["limit", p]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("elements e0 e1 e2 e3 e4"));
    assert_eq!(exit_code(&hg(&["universal", "cone", p, "--mode", "limit"])), 0);
    assert_eq!(exit_code(&hg(&["colimit", p])), 0);

    // the short exact sequence checks out
    let out = hg(&["exact", ses.to_str().unwrap(), "--full", "incl"]);
    assert_eq!(exit_code(&out), 0);
    println!("bundle commands work: pass");
}
