//! Morphisms of hypergroups: total maps `f : G → H` with
//!
//! 1. `c ∈ a∗b` implies `f(c) ∈ f(a)∗f(b)`;
//! 2. `f(a⁻¹) = f(a)⁻¹`;
//! 3. `f(1) = 1`.
//!
//! A morphism is *full* when `f(a∗b) = f(a)∗f(b)` as sets. Kernels, images,
//! cokernels, Hom enumeration, isomorphism search and the canonical first
//! isomorphism all live here.

use crate::check::{CheckReport, Rule};
use crate::construct::{quotient, QuotientPresentation, SubCarrier};
use crate::error::HgError;
use crate::hypergroup::Hypergroup;
use crate::set::{ElementId, ElementSet};

/// A validated morphism with cached fullness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    dom: Hypergroup,
    cod: Hypergroup,
    map: Vec<ElementId>,
    full: bool,
}

impl Morphism {
    /// Validate the three morphism conditions; on success caches fullness.
    pub fn new(dom: Hypergroup, cod: Hypergroup, map: Vec<ElementId>) -> Result<Self, HgError> {
        let report = check_morphism(&dom, &cod, &map);
        if !report.passed() {
            return Err(HgError::NotAMorphism(report));
        }
        let full = compute_full(&dom, &cod, &map);
        Ok(Morphism {
            dom,
            cod,
            map,
            full,
        })
    }

    pub fn identity(g: &Hypergroup) -> Morphism {
        Morphism::new(g.clone(), g.clone(), g.elements().collect())
            .expect("the identity map is a morphism")
    }

    /// The constant-identity morphism, the zero of `Hom(dom, cod)`.
    pub fn zero(dom: &Hypergroup, cod: &Hypergroup) -> Morphism {
        Morphism::new(dom.clone(), cod.clone(), vec![0; dom.order()])
            .expect("the constant-identity map is a morphism")
    }

    pub fn dom(&self) -> &Hypergroup {
        &self.dom
    }

    pub fn cod(&self) -> &Hypergroup {
        &self.cod
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a]
    }

    /// Image of a subset of the domain.
    pub fn apply_set(&self, s: ElementSet) -> ElementSet {
        s.map(|e| self.map[e])
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = ElementSet::EMPTY;
        for &v in &self.map {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.cod.order()
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&v| v == 0)
    }

    pub fn image_set(&self) -> ElementSet {
        self.map.iter().copied().collect()
    }

    /// Whether this morphism is an isomorphism: bijective, and the inverse
    /// map is itself a morphism.
    pub fn is_isomorphism(&self) -> bool {
        if self.dom.order() != self.cod.order() || !self.is_injective() {
            return false;
        }
        self.inverse().is_some()
    }

    /// The inverse morphism of a bijection, when the inverse map satisfies
    /// the morphism conditions.
    pub fn inverse(&self) -> Option<Morphism> {
        if self.dom.order() != self.cod.order() || !self.is_injective() {
            return None;
        }
        let mut back = vec![0; self.map.len()];
        for (a, &v) in self.map.iter().enumerate() {
            back[v] = a;
        }
        Morphism::new(self.cod.clone(), self.dom.clone(), back).ok()
    }
}

/// Check the three morphism conditions exhaustively, reporting the first
/// violation of each with its witness.
pub fn check_morphism(dom: &Hypergroup, cod: &Hypergroup, map: &[ElementId]) -> CheckReport {
    let mut report = CheckReport::pass();
    if map.len() != dom.order() {
        report.push(
            Rule::MorphismIdentity,
            vec![],
            format!("map has {} entries, expected {}", map.len(), dom.order()),
        );
        return report;
    }
    if let Some(&v) = map.iter().find(|&&v| v >= cod.order()) {
        report.push(
            Rule::MorphismIdentity,
            vec![v],
            format!("map value {v} outside the codomain"),
        );
        return report;
    }
    if map[0] != 0 {
        report.push(
            Rule::MorphismIdentity,
            vec![0],
            format!("f(1) = {}, expected 1", map[0]),
        );
    }
    'inv: for a in dom.elements() {
        if map[dom.inv(a)] != cod.inv(map[a]) {
            report.push(
                Rule::MorphismInverse,
                vec![a],
                format!(
                    "f(a⁻¹) = {} but f(a)⁻¹ = {} for a = {a}",
                    map[dom.inv(a)],
                    cod.inv(map[a])
                ),
            );
            break 'inv;
        }
    }
    'compat: for a in dom.elements() {
        for b in dom.elements() {
            let target = cod.mul(map[a], map[b]);
            for c in dom.mul(a, b).iter() {
                if !target.contains(map[c]) {
                    report.push(
                        Rule::MorphismCompat,
                        vec![a, b, c],
                        format!("{c} ∈ {a}∗{b} but f({c}) = {} ∉ f({a})∗f({b}) = {target}", map[c]),
                    );
                    break 'compat;
                }
            }
        }
    }
    report
}

fn compute_full(dom: &Hypergroup, cod: &Hypergroup, map: &[ElementId]) -> bool {
    for a in dom.elements() {
        for b in dom.elements() {
            let image = dom.mul(a, b).map(|c| map[c]);
            if image != cod.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

/// `g ∘ f`, verified to be a morphism (it always is).
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, HgError> {
    if f.cod() != g.dom() {
        return Err(HgError::ComposeMismatch);
    }
    let map = f.map().iter().map(|&a| g.apply(a)).collect();
    Ok(Morphism::new(f.dom().clone(), g.cod().clone(), map)
        .expect("a composite of morphisms is a morphism"))
}

/// `Ker(f) = {g : f(g) = 1}` with its full inclusion morphism.
pub fn kernel(f: &Morphism) -> (SubCarrier, Morphism) {
    let members: ElementSet = f
        .dom()
        .elements()
        .filter(|&a| f.apply(a) == 0)
        .collect();
    let sub = SubCarrier::new(f.dom().clone(), members)
        .expect("a kernel contains the identity and is inverse-closed");
    let (_, inclusion) = sub
        .induced()
        .expect("a kernel is a full subcarrier");
    (sub, inclusion)
}

/// `Im(f) = {f(g)}` as a subcarrier of the codomain.
///
/// The inclusion morphism is returned only when the image is a full
/// subcarrier (always the case for full `f`); a non-full image carries no
/// canonical hypergroup structure.
pub fn image(f: &Morphism) -> (SubCarrier, Option<Morphism>) {
    let sub = SubCarrier::new(f.cod().clone(), f.image_set())
        .expect("an image contains the identity and is inverse-closed");
    let inclusion = sub.induced().map(|(_, incl)| incl);
    (sub, inclusion)
}

/// Cokernel of a full morphism with commutative codomain: the quotient of
/// the codomain by the image, with its projection.
pub fn cokernel(f: &Morphism) -> Result<QuotientPresentation, HgError> {
    if !f.is_full() {
        return Err(HgError::RequiresFullMorphism("cokernel"));
    }
    let (im, _) = image(f);
    quotient(f.cod(), &im)
}

/// Cokernel variant that first replaces the image by the subcarrier it
/// generates, the `G/⟨H⟩` convention. Defined for any morphism with
/// commutative codomain.
pub fn cokernel_generated(f: &Morphism) -> Result<QuotientPresentation, HgError> {
    let (im, _) = image(f);
    quotient(f.cod(), &im)
}

/// All morphisms `G → H` in lexicographic order of their map arrays.
pub fn enumerate_hom(g: &Hypergroup, h: &Hypergroup) -> Vec<Morphism> {
    let mut out = Vec::new();
    let mut map = vec![0usize; g.order()];
    assign_hom(g, h, &mut map, 1, &mut out);
    out
}

fn assign_hom(
    g: &Hypergroup,
    h: &Hypergroup,
    map: &mut Vec<ElementId>,
    depth: usize,
    out: &mut Vec<Morphism>,
) {
    if depth == g.order() {
        out.push(
            Morphism::new(g.clone(), h.clone(), map.clone())
                .expect("backtracking only reaches maps satisfying all conditions"),
        );
        return;
    }
    for v in h.elements() {
        map[depth] = v;
        if hom_prefix_ok(g, h, map, depth) {
            assign_hom(g, h, map, depth + 1, out);
        }
    }
    map[depth] = 0;
}

/// Conditions restricted to the assigned prefix `0..=depth`.
fn hom_prefix_ok(g: &Hypergroup, h: &Hypergroup, map: &[ElementId], depth: usize) -> bool {
    let a = depth;
    let ia = g.inv(a);
    if ia <= a && map[ia] != h.inv(map[a]) {
        return false;
    }
    for x in 0..=depth {
        for y in 0..=depth {
            let target = h.mul(map[x], map[y]);
            for c in g.mul(x, y).iter() {
                if c <= depth && !target.contains(map[c]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Search for an isomorphism: a bijective morphism whose inverse map is also
/// a morphism. Cheap invariants (order, cell-size multiset, commutativity,
/// inverse fixed points) prune before backtracking.
pub fn are_isomorphic(g: &Hypergroup, h: &Hypergroup) -> Option<Morphism> {
    if g.order() != h.order()
        || g.is_commutative() != h.is_commutative()
        || cell_size_multiset(g) != cell_size_multiset(h)
        || inv_fixed_points(g) != inv_fixed_points(h)
    {
        return None;
    }
    let mut map = vec![0usize; g.order()];
    let mut used = ElementSet::singleton(0);
    if find_iso(g, h, &mut map, &mut used, 1) {
        let m = Morphism::new(g.clone(), h.clone(), map)
            .expect("isomorphism search verifies both membership directions");
        debug_assert!(m.inverse().is_some());
        Some(m)
    } else {
        None
    }
}

fn cell_size_multiset(g: &Hypergroup) -> Vec<usize> {
    let mut sizes: Vec<usize> = g
        .elements()
        .flat_map(|x| g.elements().map(move |y| (x, y)))
        .map(|(x, y)| g.mul(x, y).len())
        .collect();
    sizes.sort_unstable();
    sizes
}

fn inv_fixed_points(g: &Hypergroup) -> usize {
    g.elements().filter(|&a| g.inv(a) == a).count()
}

fn find_iso(
    g: &Hypergroup,
    h: &Hypergroup,
    map: &mut Vec<ElementId>,
    used: &mut ElementSet,
    depth: usize,
) -> bool {
    if depth == g.order() {
        return true;
    }
    for v in h.elements() {
        if used.contains(v) {
            continue;
        }
        map[depth] = v;
        if iso_prefix_ok(g, h, map, depth) {
            used.insert(v);
            if find_iso(g, h, map, used, depth + 1) {
                return true;
            }
            used.remove(v);
        }
    }
    false
}

/// Both membership directions on the assigned prefix, so a completed map
/// transports the whole table.
fn iso_prefix_ok(g: &Hypergroup, h: &Hypergroup, map: &[ElementId], depth: usize) -> bool {
    let a = depth;
    let ia = g.inv(a);
    if ia <= a && map[ia] != h.inv(map[a]) {
        return false;
    }
    for x in 0..=depth {
        for y in 0..=depth {
            let target = h.mul(map[x], map[y]);
            for c in 0..=depth {
                if g.mul(x, y).contains(c) != target.contains(map[c]) {
                    return false;
                }
            }
        }
    }
    true
}

/// The canonical map `f̄([a]) = f(a)` from `dom/Ker(f)` onto `Im(f)`, for a
/// full morphism between commutative hypergroups. The result is a full
/// isomorphism with morphism inverse.
pub fn first_iso(f: &Morphism) -> Result<Morphism, HgError> {
    if !f.is_full() {
        return Err(HgError::RequiresFullMorphism("first_iso"));
    }
    if !f.dom().is_commutative() {
        return Err(HgError::RequiresCommutative("first_iso"));
    }
    if !f.cod().is_commutative() {
        return Err(HgError::RequiresCommutative("first_iso"));
    }
    let (ker, _) = kernel(f);
    let q = quotient(f.dom(), &ker)?;
    let (im, _) = image(f);
    let (im_hg, im_inclusion) = im
        .induced()
        .expect("the image of a full morphism is a full subcarrier");
    // Position of each codomain element within the image carrier.
    let mut position = vec![usize::MAX; f.cod().order()];
    for (i, e) in im.members().iter().enumerate() {
        position[e] = i;
    }
    let mut map = Vec::with_capacity(q.quotient.order());
    for block in &q.cosets {
        let values: ElementSet = block.iter().map(|a| f.apply(a)).collect();
        assert_eq!(
            values.len(),
            1,
            "f must be constant on cosets of its kernel"
        );
        map.push(position[values.min_element().unwrap()]);
    }
    let iso = Morphism::new(q.quotient.clone(), im_hg, map)
        .expect("the induced map on cosets is a morphism");
    debug_assert!(compose(&im_inclusion, &iso).is_ok());
    Ok(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Rule;
    use crate::enumerate::enumerate_hypergroups;
    use crate::samples;

    #[test]
    fn check_morphism_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        assert!(check_morphism(&v3, &v3, &[0, 1, 2]).passed());
        assert!(check_morphism(&v3, &k2, &[0, 0, 0]).passed());
        // The oracle's verdict for 0↦1, a↦g, b↦g: a genuine morphism
        // (not full, kernel {0}).
        assert!(check_morphism(&v3, &k2, &[0, 1, 1]).passed());
        let f = Morphism::new(v3.clone(), k2.clone(), vec![0, 1, 1]).unwrap();
        assert!(!f.is_full());
        assert_eq!(kernel(&f).0.members(), ElementSet::singleton(0));
        assert!(!f.is_injective());
    }

    #[test]
    fn check_morphism_violations() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        // f(b) = 1 breaks compatibility on a+b = {b}
        let report = check_morphism(&v3, &k2, &[0, 1, 0]);
        let first = report.first().unwrap();
        assert_eq!(first.rule, Rule::MorphismCompat);
        assert_eq!(first.witness, vec![1, 2, 2]);
        // inverse condition
        let z3 = samples::cyclic(3);
        let report = check_morphism(&z3, &z3, &[0, 1, 1]);
        assert!(report
            .violations()
            .iter()
            .any(|v| v.rule == Rule::MorphismInverse && v.witness == vec![1]));
        // identity condition
        let report = check_morphism(&k2, &k2, &[1, 1]);
        assert!(report
            .violations()
            .iter()
            .any(|v| v.rule == Rule::MorphismIdentity));
    }

    #[test]
    fn fullness_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        assert!(Morphism::identity(&v3).is_full());
        assert!(Morphism::zero(&v3, &k2).is_full());
        let h = crate::construct::SubCarrier::new(v3.clone(), ElementSet::from_elements(&[0, 1]))
            .unwrap();
        let (_, incl) = h.induced().unwrap();
        assert!(incl.is_full());
    }

    #[test]
    fn compose_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        let f = Morphism::new(v3.clone(), k2.clone(), vec![0, 0, 1]).unwrap();
        let id = Morphism::identity(&k2);
        assert_eq!(compose(&id, &f).unwrap(), f);
        let z = Morphism::zero(&k2, &v3);
        assert!(compose(&z, &f).unwrap().is_zero());
        // π ∘ ι = zero for the kernel inclusion of π
        let h = crate::construct::SubCarrier::new(v3.clone(), ElementSet::from_elements(&[0, 1]))
            .unwrap();
        let (_, incl) = h.induced().unwrap();
        let q = crate::construct::quotient(&v3, &h).unwrap();
        assert!(compose(&q.projection, &incl).unwrap().is_zero());
        assert!(matches!(compose(&f, &f), Err(HgError::ComposeMismatch)));
    }

    /// Composites of morphisms are morphisms, exhaustively over all class
    /// triples of order ≤ 3.
    #[test]
    fn compose_closure_exhaustive() {
        let mut classes = Vec::new();
        for n in 1..=3 {
            classes.extend(enumerate_hypergroups(n, false).unwrap());
        }
        for g in &classes {
            for h in &classes {
                let hom_gh = enumerate_hom(g, h);
                for k in &classes {
                    for t in enumerate_hom(h, k) {
                        for f in &hom_gh {
                            // compose re-verifies and panics on failure
                            let _ = compose(&t, f).unwrap();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        assert_eq!(
            kernel(&Morphism::identity(&v3)).0.members(),
            ElementSet::singleton(0)
        );
        assert_eq!(
            kernel(&Morphism::zero(&v3, &k2)).0.members(),
            ElementSet::full(3)
        );
        let f = Morphism::new(v3.clone(), k2.clone(), vec![0, 0, 1]).unwrap();
        let (sub, incl) = kernel(&f);
        assert_eq!(sub.members(), ElementSet::from_elements(&[0, 1]));
        assert!(sub.is_full());
        assert!(incl.is_full());
    }

    #[test]
    fn image_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        let (im, incl) = image(&Morphism::identity(&v3));
        assert_eq!(im.members(), ElementSet::full(3));
        assert!(incl.is_some());
        let (im, _) = image(&Morphism::zero(&v3, &k2));
        assert_eq!(im.members(), ElementSet::singleton(0));
        let h = crate::construct::SubCarrier::new(v3.clone(), ElementSet::from_elements(&[0, 1]))
            .unwrap();
        let (_, iota) = h.induced().unwrap();
        let (im, incl) = image(&iota);
        assert_eq!(im.members(), ElementSet::from_elements(&[0, 1]));
        assert!(im.is_full() && incl.unwrap().is_full());
        // non-full image: Z2 → V3 with 1 ↦ b
        let z2 = samples::cyclic(2);
        let f = Morphism::new(z2, v3.clone(), vec![0, 2]).unwrap();
        let (im, incl) = image(&f);
        assert_eq!(im.members(), ElementSet::from_elements(&[0, 2]));
        assert!(!im.is_full());
        assert!(incl.is_none());
    }

    #[test]
    fn cokernel_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        let t = samples::trivial();
        let ck = cokernel(&Morphism::zero(&t, &v3)).unwrap();
        assert!(are_isomorphic(&ck.quotient, &v3).is_some());
        let ck = cokernel(&Morphism::identity(&v3)).unwrap();
        assert_eq!(ck.quotient.order(), 1);
        let h = crate::construct::SubCarrier::new(v3.clone(), ElementSet::from_elements(&[0, 1]))
            .unwrap();
        let (_, iota) = h.induced().unwrap();
        let ck = cokernel(&iota).unwrap();
        assert!(are_isomorphic(&ck.quotient, &k2).is_some());
        // non-full morphism: rejected unless the generated convention is used
        let z2 = samples::cyclic(2);
        let f = Morphism::new(z2, v3.clone(), vec![0, 2]).unwrap();
        assert!(matches!(cokernel(&f), Err(HgError::RequiresFullMorphism(_))));
        let ck = cokernel_generated(&f).unwrap();
        assert_eq!(ck.quotient.order(), 1);
    }

    #[test]
    fn enumerate_hom_examples() {
        let t = samples::trivial();
        let k2 = samples::k2();
        let v3 = samples::v3();
        assert_eq!(enumerate_hom(&t, &k2).len(), 1);
        assert_eq!(enumerate_hom(&k2, &t).len(), 1);
        let maps: Vec<Vec<ElementId>> = enumerate_hom(&k2, &k2)
            .iter()
            .map(|m| m.map().to_vec())
            .collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1]]);
        let maps: Vec<Vec<ElementId>> = enumerate_hom(&v3, &k2)
            .iter()
            .map(|m| m.map().to_vec())
            .collect();
        assert_eq!(maps, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn are_isomorphic_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        let iso = are_isomorphic(&v3, &v3).unwrap();
        assert!(iso.map().iter().enumerate().all(|(a, &v)| a == v));
        assert!(are_isomorphic(&k2, &samples::cyclic(2)).is_none());
        let h = crate::construct::SubCarrier::new(v3.clone(), ElementSet::from_elements(&[0, 1]))
            .unwrap();
        let q = crate::construct::quotient(&v3, &h).unwrap();
        let iso = are_isomorphic(&q.quotient, &k2).unwrap();
        assert!(iso.is_isomorphism());
        assert!(iso.inverse().unwrap().is_isomorphism());
    }

    #[test]
    fn first_iso_examples() {
        let v3 = samples::v3();
        let k2 = samples::k2();
        let fi = first_iso(&Morphism::identity(&v3)).unwrap();
        assert_eq!(fi.dom().order(), 3);
        assert!(fi.is_isomorphism() && fi.is_full());
        let fi = first_iso(&Morphism::zero(&v3, &k2)).unwrap();
        assert_eq!(fi.dom().order(), 1);
        assert_eq!(fi.cod().order(), 1);
        let f = Morphism::new(v3.clone(), k2.clone(), vec![0, 0, 1]).unwrap();
        let fi = first_iso(&f).unwrap();
        assert_eq!(fi.map(), &[0, 1]);
        assert!(fi.is_full() && fi.is_isomorphism());
        assert!(fi.inverse().is_some());
        // rejections
        let nonfull = Morphism::new(v3.clone(), k2.clone(), vec![0, 1, 1]).unwrap();
        assert!(matches!(
            first_iso(&nonfull),
            Err(HgError::RequiresFullMorphism(_))
        ));
        let s3 = samples::s3();
        assert!(matches!(
            first_iso(&Morphism::identity(&s3)),
            Err(HgError::RequiresCommutative(_))
        ));
    }

    /// Kernels are full subcarriers for every morphism between order ≤ 2
    /// classes, and r(f) stays inside Hom.
    #[test]
    fn kernel_full_and_hom_inverse_closed() {
        let mut classes = Vec::new();
        for n in 1..=2 {
            classes.extend(enumerate_hypergroups(n, false).unwrap());
        }
        for g in &classes {
            for h in &classes {
                for f in enumerate_hom(g, h) {
                    assert!(kernel(&f).0.is_full());
                    let rf: Vec<ElementId> = f.map().iter().map(|&v| h.inv(v)).collect();
                    assert!(check_morphism(g, h, &rf).passed());
                }
            }
        }
    }
}
