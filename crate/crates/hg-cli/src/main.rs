//! `hg`: command-line front end for the hypergroups library.
//!
//! Exit codes: 0 success or passing check, 1 failing check or semantic
//! error (witness printed), 2 usage or syntax error.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hg_cli::format::{
    doc_for_blocks, doc_with_default_names, parse_documents, parse_members, parse_subcarrier,
    serialize_hypergroup, serialize_morphism, Bundle, HypergroupDoc, LoadError, MorphismDoc,
};
use hypergroups::cat::{
    bilinearity_check, biproduct_check, check_image_full, check_image_full_generated,
    exactness_check, hom_structure, universal_cocone_check, universal_cokernel_check,
    universal_cone_check, universal_kernel_check, ExactSequence,
};
use hypergroups::construct::{
    chain_hypergroup, coset_space, direct_sum, double_coset_space, generated, product, quotient,
};
use hypergroups::diagram::{directed_colimit, filtered_limit};
use hypergroups::enumerate::{
    canonical_form, enumerate_hypergroups, search_equalizer_kernel_gap,
    search_hom_nonassociative, search_nonfull_image, SearchOutcome, SearchWitness,
    ENUMERATION_CAP,
};
use hypergroups::morphism::{
    are_isomorphic, cokernel, cokernel_generated, enumerate_hom, image, kernel,
};
use hypergroups::{Hypergroup, SipVerdict};
use hg_cli::output::Out;

#[derive(Parser)]
#[command(
    name = "hg",
    about = "Finite hypergroups: verification, constructions, morphisms, enumeration",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArg {
    /// Input file.
    file: PathBuf,
    /// Document name, when the file holds several (default: first of the
    /// needed kind).
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of every hypergroup document in the given files.
    Verify { files: Vec<PathBuf> },
    /// Check commutativity (exit 1 when noncommutative).
    Commutative(FileArg),
    /// Strong inversion property: group or witness.
    Sip(FileArg),
    /// Print the relational presentation and verify its conditions,
    /// including the round trip back to the table.
    Relational(FileArg),
    /// Smallest full subcarrier containing the given elements.
    GenerateSub {
        #[command(flatten)]
        target: FileArg,
        /// Comma-separated generating elements.
        #[arg(long)]
        set: String,
    },
    /// Quotient of a commutative hypergroup by a subcarrier.
    Quotient {
        #[command(flatten)]
        target: FileArg,
        /// Comma-separated subcarrier members.
        #[arg(long)]
        sub: String,
    },
    /// Coset space of a subgroup in a group (left cosets; --double for
    /// double cosets, which work for non-normal subgroups too).
    CosetSpace {
        #[command(flatten)]
        target: FileArg,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        double: bool,
    },
    /// The chain hypergroup on k nonzero elements.
    Chain {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "chain")]
        name: String,
    },
    /// Direct product of the hypergroups in the given files.
    Product { files: Vec<PathBuf> },
    /// Direct sum of the commutative hypergroups in the given files.
    DirectSum { files: Vec<PathBuf> },
    /// Kernel of a morphism document.
    Kernel(FileArg),
    /// Image of a morphism document.
    Image(FileArg),
    /// Cokernel of a full morphism (with --force-generated, quotient by the
    /// generated image instead).
    Cokernel {
        #[command(flatten)]
        target: FileArg,
        #[arg(long)]
        force_generated: bool,
    },
    /// Enumerate Hom(G, H) for the first hypergroups of two files.
    Hom { g: PathBuf, h: PathBuf },
    /// The multivalued star table on Hom(G, H) with its axiom verdicts.
    HomTable { g: PathBuf, h: PathBuf },
    /// Bilinearity of composition over Hom(F,G) × Hom(G,H).
    Bilinearity { f: PathBuf, g: PathBuf, h: PathBuf },
    /// Whether Im(f) equals Ker(Coker(f)) as carriers.
    ImageFull {
        #[command(flatten)]
        target: FileArg,
        #[arg(long)]
        force_generated: bool,
    },
    /// Universal-property checks.
    #[command(subcommand)]
    Universal(UniversalCommand),
    /// Exactness of the sequence formed by the file's morphism documents in
    /// order (flag arrows that must be full with --full).
    Exact {
        file: PathBuf,
        /// Morphism names required to be full.
        #[arg(long)]
        full: Vec<String>,
    },
    /// Filtered limit of a diagram document.
    Limit(FileArg),
    /// Directed colimit of a diagram document.
    Colimit(FileArg),
    /// All isomorphism classes of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        commutative: bool,
    },
    /// Canonical (relabeling-minimal) form of a hypergroup.
    Canon(FileArg),
    /// Search for an isomorphism between the first hypergroups of two
    /// files (exit 1 when none exists).
    Iso { a: PathBuf, b: PathBuf },
    /// Counterexample searches.
    #[command(subcommand)]
    Search(SearchCommand),
}

#[derive(Subcommand)]
enum UniversalCommand {
    /// Kernel universal property of a morphism document.
    Kernel {
        #[command(flatten)]
        target: FileArg,
        /// Test objects: every class up to this order.
        #[arg(long, default_value_t = 3)]
        max_test_order: usize,
    },
    /// Cokernel universal property of a full morphism document.
    Cokernel {
        #[command(flatten)]
        target: FileArg,
        #[arg(long, default_value_t = 3)]
        max_test_order: usize,
    },
    /// Biproduct universal property of a pair of commutative hypergroups.
    Biproduct {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_test_order: usize,
    },
    /// Mediating-morphism property of a diagram's limit or colimit.
    Cone {
        #[command(flatten)]
        target: FileArg,
        #[arg(long, value_parser = ["limit", "colimit"], default_value = "limit")]
        mode: String,
        #[arg(long, default_value_t = 2)]
        max_test_order: usize,
    },
}

#[derive(Subcommand)]
enum SearchCommand {
    /// First Hom structure whose star fails associativity.
    HomNonassoc {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// First morphism whose image is not a full subcarrier.
    NonfullImage {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// First (f, g, h) where f∘h = g∘h does not match 0 ∈ (f∗r(g))∘h.
    EqualizerGap {
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.json);
    match run(cli.command, &mut out) {
        Ok(code) => {
            out.flush();
            code
        }
        Err(e) => {
            let code = match e.downcast_ref::<LoadError>() {
                Some(le) if le.is_syntax() => 2u8,
                Some(_) => 1,
                None if e.downcast_ref::<Usage>().is_some() => 2,
                None => 1,
            };
            out.error(&e.to_string(), code);
            out.flush();
            ExitCode::from(code)
        }
    }
}

fn load(path: &PathBuf) -> anyhow::Result<Bundle> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!(Usage(format!("cannot read {}: {e}", path.display()))))?;
    Ok(parse_documents(&text)?)
}

fn load_many(paths: &[PathBuf]) -> anyhow::Result<Bundle> {
    let mut all = Bundle::default();
    for p in paths {
        all.docs.extend(load(p)?.docs);
    }
    Ok(all)
}

fn pick_hypergroup<'a>(
    bundle: &'a Bundle,
    name: &Option<String>,
) -> anyhow::Result<&'a HypergroupDoc> {
    match name {
        Some(n) => bundle
            .hypergroup_by_name(n)
            .ok_or_else(|| anyhow::anyhow!(Usage(format!("no hypergroup named '{n}'")))),
        None => bundle
            .hypergroups()
            .next()
            .ok_or_else(|| anyhow::anyhow!(Usage("no hypergroup document in input".into()))),
    }
}

fn pick_morphism<'a>(
    bundle: &'a Bundle,
    name: &Option<String>,
) -> anyhow::Result<&'a MorphismDoc> {
    match name {
        Some(n) => bundle
            .morphism_by_name(n)
            .ok_or_else(|| anyhow::anyhow!(Usage(format!("no morphism named '{n}'")))),
        None => bundle
            .morphisms()
            .next()
            .ok_or_else(|| anyhow::anyhow!(Usage("no morphism document in input".into()))),
    }
}

fn pick_diagram<'a>(
    bundle: &'a Bundle,
    name: &Option<String>,
) -> anyhow::Result<&'a hg_cli::format::DiagramDoc> {
    match name {
        Some(n) => bundle
            .diagrams()
            .find(|d| &d.name == n)
            .ok_or_else(|| anyhow::anyhow!(Usage(format!("no diagram named '{n}'")))),
        None => bundle
            .diagrams()
            .next()
            .ok_or_else(|| anyhow::anyhow!(Usage("no diagram document in input".into()))),
    }
}

fn first_hypergroup(path: &PathBuf) -> anyhow::Result<HypergroupDoc> {
    let bundle = load(path)?;
    Ok(pick_hypergroup(&bundle, &None)?.clone())
}

fn enumeration_cap() -> usize {
    std::env::var("HG_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .map(|v| v.min(ENUMERATION_CAP))
        .unwrap_or(ENUMERATION_CAP)
}

fn classes_up_to(max: usize) -> anyhow::Result<Vec<Hypergroup>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_hypergroups(n, false)?);
    }
    Ok(out)
}

fn run(command: Command, out: &mut Out) -> anyhow::Result<ExitCode> {
    match command {
        Command::Verify { files } => {
            if files.is_empty() {
                anyhow::bail!(Usage("verify needs at least one file".into()));
            }
            let mut failed = false;
            for path in &files {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    anyhow::anyhow!(Usage(format!("cannot read {}: {e}", path.display())))
                })?;
                match parse_documents(&text) {
                    Ok(bundle) => {
                        for doc in &bundle.docs {
                            // parse already verified everything; re-run the
                            // checkers for the record
                            let report = match doc {
                                hg_cli::format::HgDocument::Hypergroup(h) => {
                                    h.hypergroup.verify_axioms()
                                }
                                hg_cli::format::HgDocument::Morphism(m) => {
                                    hypergroups::morphism::check_morphism(
                                        m.morphism.dom(),
                                        m.morphism.cod(),
                                        m.morphism.map(),
                                    )
                                }
                                hg_cli::format::HgDocument::Diagram(_) => {
                                    hypergroups::CheckReport::pass()
                                }
                            };
                            out.check(
                                &format!(
                                    "{} {} ({})",
                                    doc.kind(),
                                    doc.name(),
                                    path.display()
                                ),
                                &report,
                            );
                        }
                    }
                    Err(e) if e.is_syntax() => return Err(e.into()),
                    Err(e) => {
                        failed = true;
                        out.load_failure(&path.display().to_string(), &e);
                    }
                }
            }
            Ok(exit(failed))
        }
        Command::Commutative(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            let commutative = doc.hypergroup.is_commutative();
            out.verdict(
                "commutative",
                commutative,
                serde_json::json!({ "name": doc.name }),
            );
            Ok(exit(!commutative))
        }
        Command::Sip(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            match doc.hypergroup.sip_check() {
                SipVerdict::IsGroup => {
                    out.verdict("sip", true, serde_json::json!({ "name": doc.name }));
                    Ok(ExitCode::SUCCESS)
                }
                SipVerdict::NotSip { element, partners } => {
                    out.verdict(
                        "sip",
                        false,
                        serde_json::json!({
                            "name": doc.name,
                            "witness": doc.element_names[element],
                            "partners": hg_cli::format::render_members(doc, partners),
                        }),
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Relational(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            let rel = doc.hypergroup.to_relational();
            let conditions = rel.verify_conditions();
            let round_trip = rel.to_hypergroup()?.raw() == doc.hypergroup.raw();
            let triples: Vec<String> = rel
                .triples()
                .iter()
                .map(|&(x, y, z)| {
                    format!(
                        "({},{},{})",
                        doc.element_names[x], doc.element_names[y], doc.element_names[z]
                    )
                })
                .collect();
            out.relational(&doc.name, &triples, &conditions, round_trip);
            Ok(exit(!conditions.passed() || !round_trip))
        }
        Command::GenerateSub { target, set } => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            let seed = parse_members(doc, &set).map_err(|e| anyhow::anyhow!(Usage(e)))?;
            if seed.is_empty() {
                anyhow::bail!(Usage("--set must name at least one element".into()));
            }
            let sub = generated(&doc.hypergroup, seed);
            out.members(
                "generated",
                &hg_cli::format::render_members(doc, sub.members()),
                sub.is_full(),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { target, sub } => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            let sub = parse_subcarrier(doc, &sub).map_err(|e| anyhow::anyhow!(Usage(e)))?;
            let q = quotient(&doc.hypergroup, &sub)?;
            let result = doc_for_blocks(
                &format!("{}_quot", doc.name),
                doc,
                &q.cosets,
                q.quotient.clone(),
            );
            out.document(&serialize_hypergroup(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::CosetSpace { target, sub, double } => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            let sub = parse_subcarrier(doc, &sub).map_err(|e| anyhow::anyhow!(Usage(e)))?;
            let q = if double {
                double_coset_space(&doc.hypergroup, &sub)?
            } else {
                coset_space(&doc.hypergroup, &sub)?
            };
            let result = doc_for_blocks(
                &format!("{}_cosets", doc.name),
                doc,
                &q.cosets,
                q.quotient.clone(),
            );
            out.document(&serialize_hypergroup(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::Chain { k, name } => {
            let hg = chain_hypergroup(k)?;
            out.document(&serialize_hypergroup(&doc_with_default_names(&name, hg)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { files } => {
            let bundle = load_many(&files)?;
            let factors: Vec<Hypergroup> =
                bundle.hypergroups().map(|d| d.hypergroup.clone()).collect();
            let (p, _) = product(&factors)?;
            out.document(&serialize_hypergroup(&doc_with_default_names("product", p)));
            Ok(ExitCode::SUCCESS)
        }
        Command::DirectSum { files } => {
            let bundle = load_many(&files)?;
            let summands: Vec<Hypergroup> =
                bundle.hypergroups().map(|d| d.hypergroup.clone()).collect();
            let (s, _) = direct_sum(&summands)?;
            out.document(&serialize_hypergroup(&doc_with_default_names(
                "direct_sum",
                s,
            )));
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_morphism(&bundle, &target.name)?;
            let dom = bundle.hypergroup_by_name(&doc.dom_name).expect("resolved");
            let (sub, _) = kernel(&doc.morphism);
            out.members(
                "kernel",
                &hg_cli::format::render_members(dom, sub.members()),
                sub.is_full(),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Image(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_morphism(&bundle, &target.name)?;
            let cod = bundle.hypergroup_by_name(&doc.cod_name).expect("resolved");
            let (sub, _) = image(&doc.morphism);
            out.members(
                "image",
                &hg_cli::format::render_members(cod, sub.members()),
                sub.is_full(),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Cokernel {
            target,
            force_generated,
        } => {
            let bundle = load(&target.file)?;
            let doc = pick_morphism(&bundle, &target.name)?;
            let cod = bundle.hypergroup_by_name(&doc.cod_name).expect("resolved");
            let q = if force_generated {
                cokernel_generated(&doc.morphism)?
            } else {
                cokernel(&doc.morphism)?
            };
            let result = doc_for_blocks(
                &format!("coker_{}", doc.name),
                cod,
                &q.cosets,
                q.quotient.clone(),
            );
            out.document(&serialize_hypergroup(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { g, h } => {
            let gd = first_hypergroup(&g)?;
            let hd = first_hypergroup(&h)?;
            let homs = enumerate_hom(&gd.hypergroup, &hd.hypergroup);
            let rendered: Vec<String> = homs
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let doc = MorphismDoc {
                        name: format!("f{i}"),
                        dom_name: gd.name.clone(),
                        cod_name: hd.name.clone(),
                        morphism: m.clone(),
                    };
                    serialize_morphism(&doc, &gd, &hd)
                })
                .collect();
            out.hom_list(&rendered);
            Ok(ExitCode::SUCCESS)
        }
        Command::HomTable { g, h } => {
            let gd = first_hypergroup(&g)?;
            let hd = first_hypergroup(&h)?;
            let hs = hom_structure(&gd.hypergroup, &hd.hypergroup);
            out.hom_table(&hs);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bilinearity { f, g, h } => {
            let fd = first_hypergroup(&f)?;
            let gd = first_hypergroup(&g)?;
            let hd = first_hypergroup(&h)?;
            let report = bilinearity_check(&fd.hypergroup, &gd.hypergroup, &hd.hypergroup);
            out.check("bilinearity", &report);
            Ok(exit(!report.passed()))
        }
        Command::ImageFull {
            target,
            force_generated,
        } => {
            let bundle = load(&target.file)?;
            let doc = pick_morphism(&bundle, &target.name)?;
            let verdict = if force_generated {
                check_image_full_generated(&doc.morphism)?
            } else {
                check_image_full(&doc.morphism)?
            };
            out.verdict(
                "image-full",
                verdict,
                serde_json::json!({ "morphism": doc.name }),
            );
            Ok(exit(!verdict))
        }
        Command::Universal(utype) => run_universal(utype, out),
        Command::Exact { file, full } => {
            let bundle = load(&file)?;
            let morphisms: Vec<&MorphismDoc> = bundle.morphisms().collect();
            if morphisms.is_empty() {
                anyhow::bail!(Usage("no morphism documents in input".into()));
            }
            for f in &full {
                if !morphisms.iter().any(|m| &m.name == f) {
                    anyhow::bail!(Usage(format!("--full names unknown morphism '{f}'")));
                }
            }
            let flags: Vec<bool> = morphisms
                .iter()
                .map(|m| full.contains(&m.name))
                .collect();
            let seq = ExactSequence::new(
                morphisms.iter().map(|m| m.morphism.clone()).collect(),
                &flags,
            )?;
            let report = exactness_check(&seq);
            out.check("exact", &report);
            Ok(exit(!report.passed()))
        }
        Command::Limit(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_diagram(&bundle, &target.name)?;
            let (lim, _) = filtered_limit(&doc.diagram)?;
            out.document(&serialize_hypergroup(&doc_with_default_names(
                &format!("{}_limit", doc.name),
                lim,
            )));
            Ok(ExitCode::SUCCESS)
        }
        Command::Colimit(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_diagram(&bundle, &target.name)?;
            let (colim, _) = directed_colimit(&doc.diagram)?;
            out.document(&serialize_hypergroup(&doc_with_default_names(
                &format!("{}_colimit", doc.name),
                colim,
            )));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { order, commutative } => {
            let cap = enumeration_cap();
            if order == 0 || order > cap {
                anyhow::bail!(Usage(format!(
                    "--order must be between 1 and {cap} (HG_MAX_ORDER lowers the cap)"
                )));
            }
            let classes = enumerate_hypergroups(order, commutative)?;
            let docs: Vec<String> = classes
                .into_iter()
                .enumerate()
                .map(|(i, hg)| {
                    serialize_hypergroup(&doc_with_default_names(&format!("hg_{order}_{i}"), hg))
                })
                .collect();
            out.documents(&docs);
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon(target) => {
            let bundle = load(&target.file)?;
            let doc = pick_hypergroup(&bundle, &target.name)?;
            let form = canonical_form(&doc.hypergroup)?;
            out.canon(&doc.name, &form.hex());
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { a, b } => {
            let ad = first_hypergroup(&a)?;
            let bd = first_hypergroup(&b)?;
            match are_isomorphic(&ad.hypergroup, &bd.hypergroup) {
                Some(m) => {
                    let pairs: Vec<String> = ad
                        .element_names
                        .iter()
                        .enumerate()
                        .map(|(i, n)| format!("{n} -> {}", bd.element_names[m.apply(i)]))
                        .collect();
                    out.iso(Some(&pairs));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    out.iso(None);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Search(search) => {
            let check_range = |max_order: usize, cap: usize| -> anyhow::Result<()> {
                if max_order == 0 || max_order > cap {
                    anyhow::bail!(Usage(format!("--max-order must be between 1 and {cap}")));
                }
                Ok(())
            };
            let outcome = match search {
                SearchCommand::HomNonassoc { max_order } => {
                    check_range(max_order, 4)?;
                    search_hom_nonassociative(max_order)?
                }
                SearchCommand::NonfullImage { max_order } => {
                    check_range(max_order, 4)?;
                    search_nonfull_image(max_order)?
                }
                SearchCommand::EqualizerGap { max_order } => {
                    check_range(max_order, 3)?;
                    search_equalizer_kernel_gap(max_order)?
                }
            };
            print_search(&outcome, out);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_universal(utype: UniversalCommand, out: &mut Out) -> anyhow::Result<ExitCode> {
    match utype {
        UniversalCommand::Kernel {
            target,
            max_test_order,
        } => {
            let bundle = load(&target.file)?;
            let doc = pick_morphism(&bundle, &target.name)?;
            let tests = classes_up_to(max_test_order)?;
            let report = universal_kernel_check(&doc.morphism, &tests);
            out.check("universal kernel", &report);
            Ok(exit(!report.passed()))
        }
        UniversalCommand::Cokernel {
            target,
            max_test_order,
        } => {
            let bundle = load(&target.file)?;
            let doc = pick_morphism(&bundle, &target.name)?;
            let tests = classes_up_to(max_test_order)?;
            let report = universal_cokernel_check(&doc.morphism, &tests)?;
            out.check("universal cokernel", &report);
            Ok(exit(!report.passed()))
        }
        UniversalCommand::Biproduct {
            g,
            h,
            max_test_order,
        } => {
            let gd = first_hypergroup(&g)?;
            let hd = first_hypergroup(&h)?;
            let tests = classes_up_to(max_test_order)?;
            let report = biproduct_check(&gd.hypergroup, &hd.hypergroup, &tests)?;
            out.biproduct(&report);
            Ok(exit(!report.passed()))
        }
        UniversalCommand::Cone {
            target,
            mode,
            max_test_order,
        } => {
            let bundle = load(&target.file)?;
            let doc = pick_diagram(&bundle, &target.name)?;
            let tests = classes_up_to(max_test_order)?;
            let report = if mode == "limit" {
                universal_cone_check(&doc.diagram, &tests)?
            } else {
                universal_cocone_check(&doc.diagram, &tests)?
            };
            out.check(&format!("universal cone ({mode})"), &report);
            Ok(exit(!report.passed()))
        }
    }
}

fn print_search(outcome: &SearchOutcome, out: &mut Out) {
    match &outcome.witness {
        None => out.search_exhausted(&outcome.stats.to_string()),
        Some(SearchWitness::HomNonassoc { dom, cod, triple }) => {
            out.search_witness(
                "hom-nonassoc",
                &format!(
                    "Hom(G, H) with |G| = {}, |H| = {} fails associativity at morphism indices {:?}",
                    dom.order(),
                    cod.order(),
                    triple
                ),
                &outcome.stats.to_string(),
            );
        }
        Some(SearchWitness::NonfullImage { morphism }) => {
            out.search_witness(
                "nonfull-image",
                &format!(
                    "map {:?} from order {} to order {} has the non-full image {}",
                    morphism.map(),
                    morphism.dom().order(),
                    morphism.cod().order(),
                    morphism.image_set()
                ),
                &outcome.stats.to_string(),
            );
        }
        Some(SearchWitness::EqualizerGap { f, g, h }) => {
            out.search_witness(
                "equalizer-gap",
                &format!(
                    "f = {:?} and g = {:?} agree after h = {:?}, yet no member of f∗r(g) composes with h to zero",
                    f.map(),
                    g.map(),
                    h.map()
                ),
                &outcome.stats.to_string(),
            );
        }
    }
}

fn exit(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

/// Usage errors raised after argument parsing (exit 2).
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for Usage {}
