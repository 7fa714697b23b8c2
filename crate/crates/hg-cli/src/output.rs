//! Rendering layer: human text by default, one JSON object with `--json`.
//!
//! The JSON envelope always carries `command` and `status`
//! (`pass`/`fail`/`ok`/`error`), with command-specific payload under `data`
//! and check violations under `violations`. The committed schema lives at
//! `schema/output.schema.json`.

use hypergroups::cat::{BiproductReport, HomStructure};
use hypergroups::{CheckReport, Violation};
use serde_json::{json, Value};

use crate::format::LoadError;

pub struct Out {
    json: bool,
    value: Option<Value>,
    checks: Vec<Value>,
}

fn violations_json(report: &CheckReport) -> Vec<Value> {
    report.violations().iter().map(violation_json).collect()
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "rule": v.rule.name(),
        "witness": v.witness,
        "detail": v.detail,
    })
}

impl Out {
    pub fn new(json: bool) -> Self {
        Out {
            json,
            value: None,
            checks: Vec::new(),
        }
    }

    fn set(&mut self, value: Value) {
        self.value = Some(value);
    }

    pub fn flush(&mut self) {
        if !self.json {
            return;
        }
        let value = match self.value.take() {
            Some(v) => v,
            None => match self.checks.len() {
                0 => return,
                1 => {
                    let single = self.checks.pop().expect("one check");
                    json!({
                        "command": "check",
                        "status": single["status"],
                        "data": { "name": single["name"] },
                        "violations": single["violations"],
                    })
                }
                _ => json!({
                    "command": "verify",
                    "status": if self.checks.iter().all(|c| c["status"] == "pass") {
                        "pass"
                    } else {
                        "fail"
                    },
                    "data": { "results": std::mem::take(&mut self.checks) },
                }),
            },
        };
        println!("{}", serde_json::to_string_pretty(&value).expect("valid json"));
    }

    /// A named check verdict; several may accumulate (verify over files).
    pub fn check(&mut self, label: &str, report: &CheckReport) {
        if self.json {
            self.checks.push(json!({
                "name": label,
                "status": if report.passed() { "pass" } else { "fail" },
                "violations": violations_json(report),
            }));
        } else {
            println!("{label}: {report}");
        }
    }

    pub fn load_failure(&mut self, path: &str, error: &LoadError) {
        if self.json {
            let violations = error
                .report()
                .map(violations_json)
                .unwrap_or_default();
            self.checks.push(json!({
                "name": path,
                "status": "fail",
                "message": error.to_string(),
                "violations": violations,
            }));
        } else {
            println!("{path}: {error}");
        }
    }

    pub fn verdict(&mut self, command: &str, passed: bool, data: Value) {
        if self.json {
            self.set(json!({
                "command": command,
                "status": if passed { "pass" } else { "fail" },
                "data": data,
            }));
        } else {
            let rendered: Vec<String> = data
                .as_object()
                .map(|m| m.iter().map(|(k, v)| format!("{k}={v}")).collect())
                .unwrap_or_default();
            println!(
                "{command}: {} ({})",
                if passed { "yes" } else { "no" },
                rendered.join(", ")
            );
        }
    }

    pub fn relational(
        &mut self,
        name: &str,
        triples: &[String],
        conditions: &CheckReport,
        round_trip: bool,
    ) {
        if self.json {
            self.set(json!({
                "command": "relational",
                "status": if conditions.passed() && round_trip { "pass" } else { "fail" },
                "data": {
                    "name": name,
                    "triples": triples,
                    "round_trip": round_trip,
                },
                "violations": violations_json(conditions),
            }));
        } else {
            println!("relational presentation of {name}:");
            for t in triples {
                println!("  {t}");
            }
            println!("conditions: {conditions}");
            println!("round trip: {}", if round_trip { "identical" } else { "differs" });
        }
    }

    pub fn members(&mut self, label: &str, members: &str, full: bool) {
        if self.json {
            self.set(json!({
                "command": label,
                "status": "ok",
                "data": { "members": members, "full": full },
            }));
        } else {
            println!("{label}: {{{members}}} (full: {full})");
        }
    }

    pub fn document(&mut self, text: &str) {
        if self.json {
            self.set(json!({
                "command": "document",
                "status": "ok",
                "data": { "documents": [text] },
            }));
        } else {
            print!("{text}");
        }
    }

    pub fn documents(&mut self, docs: &[String]) {
        if self.json {
            self.set(json!({
                "command": "document",
                "status": "ok",
                "data": { "documents": docs },
            }));
        } else {
            for (i, d) in docs.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print!("{d}");
            }
        }
    }

    pub fn hom_list(&mut self, rendered: &[String]) {
        if self.json {
            self.set(json!({
                "command": "hom",
                "status": "ok",
                "data": { "count": rendered.len(), "morphisms": rendered },
            }));
        } else {
            println!("{} morphisms", rendered.len());
            for r in rendered {
                println!();
                print!("{r}");
            }
        }
    }

    pub fn hom_table(&mut self, hs: &HomStructure) {
        let k = hs.len();
        let mut rows = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let members: Vec<String> =
                    hs.star(i, j).iter().map(|m| format!("f{m}")).collect();
                rows.push(format!("f{i} * f{j} = {{{}}}", members.join(",")));
            }
        }
        let maps: Vec<String> = hs
            .elements()
            .iter()
            .enumerate()
            .map(|(i, m)| format!("f{i}: {:?}", m.map()))
            .collect();
        if self.json {
            self.set(json!({
                "command": "hom-table",
                "status": if hs.report().passed() { "pass" } else { "fail" },
                "data": {
                    "count": k,
                    "morphisms": maps,
                    "star": rows,
                    "associative": hs.is_associative(),
                },
                "violations": violations_json(hs.report()),
            }));
        } else {
            println!("Hom structure with {k} morphisms");
            for m in &maps {
                println!("  {m}");
            }
            for r in &rows {
                println!("  {r}");
            }
            println!("verdict: {}", hs.report());
            println!("associative: {}", hs.is_associative());
        }
    }

    pub fn biproduct(&mut self, report: &BiproductReport) {
        if self.json {
            let mut violations = violations_json(&report.product);
            violations.extend(violations_json(&report.coproduct));
            self.set(json!({
                "command": "universal-biproduct",
                "status": if report.passed() { "pass" } else { "fail" },
                "data": {
                    "product_side": report.product.passed(),
                    "coproduct_side": report.coproduct.passed(),
                },
                "violations": violations,
            }));
        } else {
            println!("biproduct: {report}");
        }
    }

    pub fn canon(&mut self, name: &str, hex: &str) {
        if self.json {
            self.set(json!({
                "command": "canon",
                "status": "ok",
                "data": { "name": name, "canonical": hex },
            }));
        } else {
            println!("canonical form of {name}: {hex}");
        }
    }

    pub fn iso(&mut self, mapping: Option<&[String]>) {
        if self.json {
            self.set(json!({
                "command": "iso",
                "status": if mapping.is_some() { "pass" } else { "fail" },
                "data": { "isomorphism": mapping },
            }));
        } else {
            match mapping {
                Some(pairs) => {
                    println!("isomorphic via:");
                    for p in pairs {
                        println!("  {p}");
                    }
                }
                None => println!("not isomorphic"),
            }
        }
    }

    pub fn search_witness(&mut self, kind: &str, description: &str, stats: &str) {
        if self.json {
            self.set(json!({
                "command": "search",
                "status": "ok",
                "data": { "kind": kind, "witness": description, "scanned": stats },
            }));
        } else {
            println!("witness found ({kind}): {description}");
            println!("scanned: {stats}");
        }
    }

    pub fn search_exhausted(&mut self, stats: &str) {
        if self.json {
            self.set(json!({
                "command": "search",
                "status": "ok",
                "data": { "kind": "exhausted", "witness": null, "scanned": stats },
            }));
        } else {
            println!("no witness; exhausted {stats}");
        }
    }

    pub fn error(&mut self, message: &str, code: u8) {
        if self.json {
            self.set(json!({
                "command": "error",
                "status": "error",
                "data": { "message": message, "exit": code },
            }));
        } else {
            eprintln!("error: {message}");
        }
    }
}
