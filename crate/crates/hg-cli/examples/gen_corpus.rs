// One-off generator for the committed corpus files.
use hg_cli::format::{serialize_hypergroup, HypergroupDoc};
use hypergroups::construct::{double_coset_space, SubCarrier};
use hypergroups::samples;
use hypergroups::ElementSet;

fn write(name: &str, doc: &HypergroupDoc) {
    let path = format!("crates/hg-cli/tests/corpus/{name}.hg");
    std::fs::write(&path, serialize_hypergroup(doc)).unwrap();
    println!("wrote {path}");
}

fn main() {
    write(
        "t",
        &HypergroupDoc {
            name: "t".into(),
            element_names: vec!["1".into()],
            hypergroup: samples::trivial(),
        },
    );
    write(
        "z2",
        &HypergroupDoc {
            name: "z2".into(),
            element_names: vec!["0".into(), "1".into()],
            hypergroup: samples::cyclic(2),
        },
    );
    write(
        "k2",
        &HypergroupDoc {
            name: "k2".into(),
            element_names: vec!["1".into(), "g".into()],
            hypergroup: samples::k2(),
        },
    );
    write(
        "v3",
        &HypergroupDoc {
            name: "v3".into(),
            element_names: vec!["0".into(), "a".into(), "b".into()],
            hypergroup: samples::v3(),
        },
    );
    write(
        "s3",
        &HypergroupDoc {
            name: "s3".into(),
            element_names: vec![
                "e".into(),
                "r1".into(),
                "r2".into(),
                "t1".into(),
                "t2".into(),
                "t3".into(),
            ],
            hypergroup: samples::s3(),
        },
    );
    // The double-coset space S3 // {e, t1}; the left-coset operation on a
    // non-normal subgroup is not a hypergroup.
    let s3 = samples::s3();
    let sub = SubCarrier::new(s3.clone(), ElementSet::from_elements(&[0, 3])).unwrap();
    let q = double_coset_space(&s3, &sub).unwrap();
    write(
        "s3_cosets_t1",
        &HypergroupDoc {
            name: "s3_cosets_t1".into(),
            element_names: vec!["H".into(), "HxH".into()],
            hypergroup: q.quotient,
        },
    );
    let (sum, _) =
        hypergroups::construct::direct_sum(&[samples::k2(), samples::k2()]).unwrap();
    write(
        "k2_plus_k2",
        &HypergroupDoc {
            name: "k2_plus_k2".into(),
            element_names: vec!["1.1".into(), "1.g".into(), "g.1".into(), "g.g".into()],
            hypergroup: sum,
        },
    );
}
