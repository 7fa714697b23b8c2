//! Categorical structure over hypergroups: the multivalued star on Hom-sets,
//! bilinearity of composition, universal-property checks for kernels,
//! cokernels, biproducts and (co)limits, and exactness of sequences.

use std::collections::BTreeSet;

use crate::check::{CheckReport, Rule};
use crate::construct::{direct_sum, product};
use crate::diagram::{directed_colimit, filtered_limit, DirectedDiagram};
use crate::error::HgError;
use crate::hypergroup::{Hypergroup, RawHypergroup};
use crate::morphism::{
    cokernel, compose, enumerate_hom, image, kernel, Morphism,
};
use crate::set::{ElementId, ElementSet, MAX_ORDER};

/// The multivalued structure on `Hom(G, H)`:
/// `f ∗ g = {h : h(x) ∈ f(x) ∗ g(x) for all x}`, with the constant-identity
/// morphism as neutral element and `r(f)(x) = f(x)⁻¹`.
///
/// Axioms 1 and 2 always hold and are re-verified; associativity may fail
/// and its verdict is recorded, never assumed. Cells may come out empty;
/// that too is recorded rather than repaired.
#[derive(Debug, Clone)]
pub struct HomStructure {
    dom: Hypergroup,
    cod: Hypergroup,
    elements: Vec<Morphism>,
    /// Row-major `|Hom|²` table of morphism-index sets.
    star: Vec<BTreeSet<usize>>,
    neutral: usize,
    inv: Vec<usize>,
    report: CheckReport,
}

/// Build the Hom structure of a pair by enumerating all morphisms and
/// evaluating the star pointwise.
pub fn hom_structure(g: &Hypergroup, h: &Hypergroup) -> HomStructure {
    let elements = enumerate_hom(g, h);
    let k = elements.len();
    let mut star = vec![BTreeSet::new(); k * k];
    for i in 0..k {
        for j in 0..k {
            for (c, cand) in elements.iter().enumerate() {
                let inside = g.elements().all(|x| {
                    h.mul(elements[i].apply(x), elements[j].apply(x))
                        .contains(cand.apply(x))
                });
                if inside {
                    star[i * k + j].insert(c);
                }
            }
        }
    }
    // The zero morphism has the all-zero map, which sorts first.
    let neutral = 0;
    debug_assert!(elements[neutral].is_zero());
    let inv = elements
        .iter()
        .map(|f| {
            let target: Vec<ElementId> = f.map().iter().map(|&v| h.inv(v)).collect();
            elements
                .iter()
                .position(|e| e.map() == target)
                .expect("r(f) is always a morphism")
        })
        .collect();
    let mut hs = HomStructure {
        dom: g.clone(),
        cod: h.clone(),
        elements,
        star,
        neutral,
        inv,
        report: CheckReport::pass(),
    };
    hs.report = hs.verify();
    hs
}

impl HomStructure {
    pub fn dom(&self) -> &Hypergroup {
        &self.dom
    }

    pub fn cod(&self) -> &Hypergroup {
        &self.cod
    }

    pub fn elements(&self) -> &[Morphism] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        // Hom always contains the zero morphism.
        false
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn r_index(&self, f: usize) -> usize {
        self.inv[f]
    }

    pub fn star(&self, f: usize, g: usize) -> &BTreeSet<usize> {
        &self.star[f * self.elements.len() + g]
    }

    /// The recorded verdict: empty cells, axiom 1/2 failures, and the
    /// associativity verdict.
    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn is_associative(&self) -> bool {
        !self
            .report
            .violations()
            .iter()
            .any(|v| v.rule == Rule::Associativity)
    }

    /// True when axioms 1 and 2 hold with nonempty cells but associativity
    /// fails: a nonassociative hypergroup.
    pub fn is_nonassociative_hypergroup(&self) -> bool {
        self.report
            .violations()
            .iter()
            .all(|v| v.rule == Rule::Associativity)
            && !self.is_associative()
    }

    fn verify(&self) -> CheckReport {
        let k = self.elements.len();
        let mut report = CheckReport::pass();
        'empty: for i in 0..k {
            for j in 0..k {
                if self.star(i, j).is_empty() {
                    report.push(
                        Rule::EmptyCell,
                        vec![i, j],
                        "star cell is empty".to_string(),
                    );
                    break 'empty;
                }
            }
        }
        'rev: for i in 0..k {
            for j in 0..k {
                for &c in self.star(i, j) {
                    if !self.star(c, self.inv[j]).contains(&i)
                        || !self.star(self.inv[i], c).contains(&j)
                    {
                        report.push(
                            Rule::Reversibility,
                            vec![i, j, c],
                            "h ∈ f∗g but reversibility fails in Hom".to_string(),
                        );
                        break 'rev;
                    }
                }
            }
        }
        'ident: for f in 0..k {
            let cell = self.star(self.neutral, f);
            if cell.len() != 1 || !cell.contains(&f) {
                report.push(
                    Rule::Identity,
                    vec![self.neutral, f],
                    format!("zero∗f has {} members, expected exactly f", cell.len()),
                );
                break 'ident;
            }
        }
        'assoc: for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let mut lhs: BTreeSet<usize> = BTreeSet::new();
                    for &w in self.star(j, l) {
                        lhs.extend(self.star(i, w));
                    }
                    let mut rhs: BTreeSet<usize> = BTreeSet::new();
                    for &t in self.star(i, j) {
                        rhs.extend(self.star(t, l));
                    }
                    if lhs != rhs {
                        report.push(
                            Rule::Associativity,
                            vec![i, j, l],
                            format!("f∗(g∗h) has {} members, (f∗g)∗h has {}", lhs.len(), rhs.len()),
                        );
                        break 'assoc;
                    }
                }
            }
        }
        report
    }

    /// Reinterpret the star table as a hypergroup on morphism indices.
    /// Fails when a cell is empty, an axiom fails, or Hom is too large for
    /// the carrier representation.
    pub fn to_hypergroup(&self) -> Result<Hypergroup, HgError> {
        let k = self.elements.len();
        if k > MAX_ORDER {
            return Err(HgError::OrderOutOfRange(k));
        }
        let table: Vec<ElementSet> = self
            .star
            .iter()
            .map(|cell| cell.iter().copied().collect())
            .collect();
        Hypergroup::new(RawHypergroup::new(k, self.inv.clone(), table))
    }
}

/// Bilinearity of composition: for all `f, f' ∈ Hom(F, G)` and
/// `g, g' ∈ Hom(G, H)`, every `a ∈ g∗g'` and `b ∈ f∗f'` satisfy, pointwise,
/// `(a∘b)(x) ∈ (g∘f)(x) ∗ (g∘f')(x) ∗ (g'∘f)(x) ∗ (g'∘f')(x)`,
/// the chained product taken in `H` under the set-extension convention.
pub fn bilinearity_check(f_obj: &Hypergroup, g_obj: &Hypergroup, h_obj: &Hypergroup) -> CheckReport {
    let hom_fg = enumerate_hom(f_obj, g_obj);
    let hom_gh = enumerate_hom(g_obj, h_obj);
    let in_star = |u: &Morphism, v: &Morphism, cand: &Morphism, obj: &Hypergroup| {
        cand.dom()
            .elements()
            .all(|x| obj.mul(u.apply(x), v.apply(x)).contains(cand.apply(x)))
    };
    let mut report = CheckReport::pass();
    'outer: for (gi, g) in hom_gh.iter().enumerate() {
        for (gj, g2) in hom_gh.iter().enumerate() {
            for (fi, f) in hom_fg.iter().enumerate() {
                for (fj, f2) in hom_fg.iter().enumerate() {
                    for (ai, a) in hom_gh.iter().enumerate() {
                        if !in_star(g, g2, a, h_obj) {
                            continue;
                        }
                        for (bi, b) in hom_fg.iter().enumerate() {
                            if !in_star(f, f2, b, g_obj) {
                                continue;
                            }
                            let ab = compose(a, b).expect("endpoints match");
                            for x in f_obj.elements() {
                                let terms = [
                                    g.apply(f.apply(x)),
                                    g.apply(f2.apply(x)),
                                    g2.apply(f.apply(x)),
                                    g2.apply(f2.apply(x)),
                                ];
                                let mut prod = ElementSet::singleton(terms[0]);
                                for &t in &terms[1..] {
                                    prod = h_obj.mul_sets(prod, ElementSet::singleton(t));
                                }
                                if !prod.contains(ab.apply(x)) {
                                    report.push(
                                        Rule::Bilinearity,
                                        vec![gi, gj, fi, fj, ai, bi, x],
                                        format!(
                                            "(a∘b)({x}) = {} ∉ {prod}",
                                            ab.apply(x)
                                        ),
                                    );
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Whether the image of `f` is full in the categorical sense:
/// `carrier(Im f) = carrier(Ker(Coker f))`. Requires a full morphism with
/// commutative codomain so the cokernel exists.
pub fn check_image_full(f: &Morphism) -> Result<bool, HgError> {
    let ck = cokernel(f)?;
    compare_image_kernel(f, &ck.projection)
}

/// Variant applying the `G/⟨H⟩` convention: quotient by the generated image
/// instead of requiring fullness.
pub fn check_image_full_generated(f: &Morphism) -> Result<bool, HgError> {
    let ck = crate::morphism::cokernel_generated(f)?;
    compare_image_kernel(f, &ck.projection)
}

fn compare_image_kernel(f: &Morphism, projection: &Morphism) -> Result<bool, HgError> {
    let (im, _) = image(f);
    let ker_of_coker: ElementSet = projection
        .dom()
        .elements()
        .filter(|&b| projection.apply(b) == 0)
        .collect();
    Ok(im.members() == ker_of_coker)
}

/// Universal property of the kernel: for every test object `E` and every
/// `t : E → dom(f)` with `f∘t = 0`, exactly one `t̄ : E → Ker(f)` satisfies
/// `ι∘t̄ = t`.
pub fn universal_kernel_check(f: &Morphism, tests: &[Hypergroup]) -> CheckReport {
    let (_, inclusion) = kernel(f);
    let ker_hg = inclusion.dom().clone();
    let mut report = CheckReport::pass();
    for (ei, e) in tests.iter().enumerate() {
        let factorings = enumerate_hom(e, &ker_hg);
        for (ti, t) in enumerate_hom(e, f.dom()).iter().enumerate() {
            if !compose(f, t).expect("endpoints match").is_zero() {
                continue;
            }
            let count = factorings
                .iter()
                .filter(|tb| compose(&inclusion, tb).expect("endpoints match") == *t)
                .count();
            record_mediating(&mut report, count, vec![ei, ti]);
        }
    }
    report
}

/// Universal property of the cokernel of a full morphism: for every `E` and
/// `t : cod(f) → E` with `t∘f = 0`, exactly one `t̄` has `t̄∘π = t`.
pub fn universal_cokernel_check(
    f: &Morphism,
    tests: &[Hypergroup],
) -> Result<CheckReport, HgError> {
    let ck = cokernel(f)?;
    let mut report = CheckReport::pass();
    for (ei, e) in tests.iter().enumerate() {
        let factorings = enumerate_hom(&ck.quotient, e);
        for (ti, t) in enumerate_hom(f.cod(), e).iter().enumerate() {
            if !compose(t, f).expect("endpoints match").is_zero() {
                continue;
            }
            let count = factorings
                .iter()
                .filter(|tb| compose(tb, &ck.projection).expect("endpoints match") == *t)
                .count();
            record_mediating(&mut report, count, vec![ei, ti]);
        }
    }
    Ok(report)
}

/// The two halves of a biproduct check, reported separately. The product
/// side always holds; the coproduct side is the substantive claim and can
/// fail on uniqueness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiproductReport {
    pub product: CheckReport,
    pub coproduct: CheckReport,
}

impl BiproductReport {
    pub fn passed(&self) -> bool {
        self.product.passed() && self.coproduct.passed()
    }
}

impl std::fmt::Display for BiproductReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "product side: {}; coproduct side: {}",
            self.product, self.coproduct
        )
    }
}

/// Biproduct check: the product carrier with its projections against the
/// product universal property for every test object, and the same carrier
/// with its injections against the coproduct universal property for every
/// commutative test object. Mediating morphisms are counted exhaustively;
/// anything other than exactly one is a violation.
pub fn biproduct_check(
    g: &Hypergroup,
    h: &Hypergroup,
    tests: &[Hypergroup],
) -> Result<BiproductReport, HgError> {
    let (p, projections) = product(&[g.clone(), h.clone()])?;
    let (_, injections) = direct_sum(&[g.clone(), h.clone()])?;
    let mut product_report = CheckReport::pass();
    for (ei, e) in tests.iter().enumerate() {
        let mediating = enumerate_hom(e, &p);
        let homs_g = enumerate_hom(e, g);
        let homs_h = enumerate_hom(e, h);
        for (i, t1) in homs_g.iter().enumerate() {
            for (j, t2) in homs_h.iter().enumerate() {
                let count = mediating
                    .iter()
                    .filter(|m| {
                        compose(&projections[0], m).expect("endpoints match") == *t1
                            && compose(&projections[1], m).expect("endpoints match") == *t2
                    })
                    .count();
                record_mediating(&mut product_report, count, vec![ei, i, j]);
            }
        }
    }
    let mut coproduct_report = CheckReport::pass();
    for (ei, e) in tests.iter().enumerate() {
        if !e.is_commutative() {
            continue;
        }
        let mediating = enumerate_hom(&p, e);
        let homs_g = enumerate_hom(g, e);
        let homs_h = enumerate_hom(h, e);
        for (i, s1) in homs_g.iter().enumerate() {
            for (j, s2) in homs_h.iter().enumerate() {
                let count = mediating
                    .iter()
                    .filter(|m| {
                        compose(m, &injections[0]).expect("endpoints match") == *s1
                            && compose(m, &injections[1]).expect("endpoints match") == *s2
                    })
                    .count();
                record_mediating(&mut coproduct_report, count, vec![ei, i, j]);
            }
        }
    }
    Ok(BiproductReport {
        product: product_report,
        coproduct: coproduct_report,
    })
}

/// `|Hom(T, G)| = |Hom(G, T)| = 1` for every test object.
pub fn zero_object_check(tests: &[Hypergroup]) -> CheckReport {
    let t = Hypergroup::from_parts(1, vec![0], vec![ElementSet::singleton(0)])
        .expect("the trivial hypergroup is valid");
    let mut report = CheckReport::pass();
    for (ei, g) in tests.iter().enumerate() {
        let from = enumerate_hom(&t, g).len();
        let into = enumerate_hom(g, &t).len();
        if from != 1 {
            record_mediating(&mut report, from, vec![ei, 0]);
        }
        if into != 1 {
            record_mediating(&mut report, into, vec![ei, 1]);
        }
    }
    report
}

/// Universal property of the filtered limit: projection compatibility
/// `φ_ij∘ψ_i = ψ_j`, and for every compatible cone from a test object a
/// unique mediating morphism into the limit.
pub fn universal_cone_check(
    d: &DirectedDiagram,
    tests: &[Hypergroup],
) -> Result<CheckReport, HgError> {
    let (limit, psi) = filtered_limit(d)?;
    let mut report = CheckReport::pass();
    for (&(i, j), arrow) in d.arrows() {
        if compose(arrow, &psi[i]).expect("endpoints match") != psi[j] {
            report.push(
                Rule::ConeCompatibility,
                vec![i, j],
                "projection compatibility fails".to_string(),
            );
        }
    }
    for (ei, e) in tests.iter().enumerate() {
        let legs: Vec<Vec<Morphism>> = d
            .objects()
            .iter()
            .map(|g| enumerate_hom(e, g))
            .collect();
        let mediating = enumerate_hom(e, &limit);
        for (cone_idx, cone) in cones(&legs).into_iter().enumerate() {
            let compatible = d.arrows().all(|(&(i, j), arrow)| {
                compose(arrow, cone[i]).expect("endpoints match") == *cone[j]
            });
            if !compatible {
                continue;
            }
            let count = mediating
                .iter()
                .filter(|m| {
                    (0..d.node_count()).all(|i| {
                        compose(&psi[i], m).expect("endpoints match") == *cone[i]
                    })
                })
                .count();
            record_mediating(&mut report, count, vec![ei, cone_idx]);
        }
    }
    Ok(report)
}

/// Universal property of the directed colimit: injection compatibility
/// `ψ_j∘φ_ij = ψ_i`, and for every compatible cocone into a test object a
/// unique mediating morphism out of the colimit.
pub fn universal_cocone_check(
    d: &DirectedDiagram,
    tests: &[Hypergroup],
) -> Result<CheckReport, HgError> {
    let (colimit, psi) = directed_colimit(d)?;
    let mut report = CheckReport::pass();
    for (&(i, j), arrow) in d.arrows() {
        if compose(&psi[j], arrow).expect("endpoints match") != psi[i] {
            report.push(
                Rule::ConeCompatibility,
                vec![i, j],
                "injection compatibility fails".to_string(),
            );
        }
    }
    for (ei, e) in tests.iter().enumerate() {
        let legs: Vec<Vec<Morphism>> = d
            .objects()
            .iter()
            .map(|g| enumerate_hom(g, e))
            .collect();
        let mediating = enumerate_hom(&colimit, e);
        for (cone_idx, cocone) in cones(&legs).into_iter().enumerate() {
            let compatible = d.arrows().all(|(&(i, j), arrow)| {
                compose(cocone[j], arrow).expect("endpoints match") == *cocone[i]
            });
            if !compatible {
                continue;
            }
            let count = mediating
                .iter()
                .filter(|m| {
                    (0..d.node_count()).all(|i| {
                        compose(m, &psi[i]).expect("endpoints match") == *cocone[i]
                    })
                })
                .count();
            record_mediating(&mut report, count, vec![ei, cone_idx]);
        }
    }
    Ok(report)
}

/// All choices of one morphism per node.
fn cones(legs: &[Vec<Morphism>]) -> Vec<Vec<&Morphism>> {
    let mut out: Vec<Vec<&Morphism>> = vec![Vec::new()];
    for node in legs {
        let mut next = Vec::with_capacity(out.len() * node.len());
        for prefix in &out {
            for m in node {
                let mut cone = prefix.clone();
                cone.push(m);
                next.push(cone);
            }
        }
        out = next;
    }
    out
}

fn record_mediating(report: &mut CheckReport, count: usize, witness: Vec<ElementId>) {
    if count == 0 {
        report.push(
            Rule::MediatingMissing,
            witness,
            "no mediating morphism".to_string(),
        );
    } else if count > 1 {
        report.push(
            Rule::MediatingNotUnique,
            witness,
            format!("{count} mediating morphisms"),
        );
    }
}

/// A chain of composable morphisms between commutative hypergroups, with
/// per-arrow fullness requirements. Consecutive arrows must compose to zero;
/// exactness itself is a computed verdict.
#[derive(Debug, Clone)]
pub struct ExactSequence {
    objects: Vec<Hypergroup>,
    arrows: Vec<Morphism>,
}

impl ExactSequence {
    pub fn new(arrows: Vec<Morphism>, full_required: &[bool]) -> Result<Self, HgError> {
        if arrows.is_empty() {
            return Err(HgError::InvalidSequence("no arrows".to_string()));
        }
        if full_required.len() != arrows.len() {
            return Err(HgError::InvalidSequence(
                "one fullness flag per arrow required".to_string(),
            ));
        }
        for w in arrows.windows(2) {
            if w[0].cod() != w[1].dom() {
                return Err(HgError::InvalidSequence(
                    "arrows do not chain".to_string(),
                ));
            }
        }
        let mut objects = vec![arrows[0].dom().clone()];
        for a in &arrows {
            objects.push(a.cod().clone());
        }
        if objects.iter().any(|g| !g.is_commutative()) {
            return Err(HgError::RequiresCommutative("ExactSequence"));
        }
        for (k, (a, &req)) in arrows.iter().zip(full_required).enumerate() {
            if req && !a.is_full() {
                return Err(HgError::InvalidSequence(format!(
                    "arrow {k} is required to be full but is not"
                )));
            }
        }
        for (k, w) in arrows.windows(2).enumerate() {
            if !compose(&w[1], &w[0]).expect("chained").is_zero() {
                return Err(HgError::InvalidSequence(format!(
                    "arrows {k} and {} do not compose to zero",
                    k + 1
                )));
            }
        }
        Ok(ExactSequence { objects, arrows })
    }

    pub fn objects(&self) -> &[Hypergroup] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Morphism] {
        &self.arrows
    }
}

/// Exactness at every interior object: the image carrier of the incoming
/// arrow equals the kernel carrier of the outgoing arrow.
pub fn exactness_check(s: &ExactSequence) -> CheckReport {
    let mut report = CheckReport::pass();
    for k in 1..s.objects.len() - 1 {
        let incoming = &s.arrows[k - 1];
        let outgoing = &s.arrows[k];
        let im = incoming.image_set();
        let ker: ElementSet = outgoing
            .dom()
            .elements()
            .filter(|&a| outgoing.apply(a) == 0)
            .collect();
        if im != ker {
            report.push(
                Rule::Exactness,
                vec![k],
                format!("Im = {im} but Ker = {ker} at object {k}"),
            );
        }
    }
    report
}
