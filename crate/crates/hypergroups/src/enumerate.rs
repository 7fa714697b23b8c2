//! Exhaustive generation of hypergroups up to isomorphism, canonical forms,
//! and counterexample searches for the open empirical questions about Hom
//! structures, non-full images, and the equalizer/kernel gap.
//!
//! The enumeration fixes the identity at index 0, chooses the inverse
//! involution first, then fills table cells in row-major order. Memberships
//! `z ∈ x∗y` live in orbits under the reversibility maps
//! `(x,y,z) ↦ (z, r(y), x)` and `(x,y,z) ↦ (r(x), z, y)`, so assigning one
//! cell propagates forced memberships and exclusions to later cells.
//! Associativity is checked incrementally on fully determined triples.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::HgError;
use crate::hypergroup::{Hypergroup, RawHypergroup};
use crate::morphism::{compose, enumerate_hom, image, Morphism};
use crate::cat::hom_structure;
use crate::set::{ElementId, ElementSet};

/// Hard cap on the enumeration order.
pub const ENUMERATION_CAP: usize = 6;

/// Largest order for which a canonical form is computed by brute force over
/// identity-fixing relabelings.
pub const CANONICAL_CAP: usize = 10;

/// Relabeling-minimal serialization of a hypergroup. Two hypergroups have
/// equal canonical forms exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    /// Short hex rendering for display.
    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Serialization of the table as relabeled by `perm`, without building the
/// relabeled hypergroup.
fn relabeled_bytes(g: &Hypergroup, perm: &[ElementId]) -> Vec<u8> {
    let n = g.order();
    let mut out = vec![0u8; 1 + n + 8 * n * n];
    out[0] = n as u8;
    for a in g.elements() {
        out[1 + perm[a]] = perm[g.inv(a)] as u8;
    }
    let base = 1 + n;
    for x in g.elements() {
        for y in g.elements() {
            let bits = g.mul(x, y).map(|e| perm[e]).bits();
            let off = base + 8 * (perm[x] * n + perm[y]);
            out[off..off + 8].copy_from_slice(&bits.to_le_bytes());
        }
    }
    out
}

/// Apply an identity-fixing relabeling, `perm[old] = new`.
pub fn relabel(g: &Hypergroup, perm: &[ElementId]) -> Hypergroup {
    assert_eq!(perm[0], 0, "relabelings must fix the identity");
    let n = g.order();
    let mut inv = vec![0; n];
    let mut table = vec![ElementSet::EMPTY; n * n];
    for a in g.elements() {
        inv[perm[a]] = perm[g.inv(a)];
    }
    for x in g.elements() {
        for y in g.elements() {
            table[perm[x] * n + perm[y]] = g.mul(x, y).map(|e| perm[e]);
        }
    }
    Hypergroup::new(RawHypergroup::new(n, inv, table))
        .expect("relabeling preserves the axioms")
}

/// Minimal serialization over all identity-fixing relabelings.
pub fn canonical_form(g: &Hypergroup) -> Result<CanonicalForm, HgError> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(HgError::CanonicalOrder {
            order: n,
            cap: CANONICAL_CAP,
        });
    }
    let mut best: Option<Vec<u8>> = None;
    let mut perm: Vec<ElementId> = (0..n).collect();
    permute_tail(&mut perm, 1, &mut |p| {
        let bytes = relabeled_bytes(g, p);
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
    });
    Ok(CanonicalForm(best.expect("at least the identity relabeling")))
}

fn permute_tail(perm: &mut Vec<ElementId>, from: usize, visit: &mut impl FnMut(&[ElementId])) {
    if from >= perm.len() {
        visit(perm);
        return;
    }
    for i in from..perm.len() {
        perm.swap(from, i);
        permute_tail(perm, from + 1, visit);
        perm.swap(from, i);
    }
}

/// All isomorphism classes of hypergroups of the given order, sorted by
/// canonical form. With `commutative_only` the search is restricted to
/// commutative tables.
///
/// The search tree is parallelized over the top-level inverse-permutation
/// branches; each branch is independent and the branch results are merged
/// by canonical form, so the output is deterministic.
pub fn enumerate_hypergroups(
    n: usize,
    commutative_only: bool,
) -> Result<Vec<Hypergroup>, HgError> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(HgError::EnumerationOrder {
            order: n,
            cap: ENUMERATION_CAP,
        });
    }
    let found = involutions_fixing_zero(n)
        .into_par_iter()
        .map(|inv| {
            let mut branch: BTreeMap<CanonicalForm, Hypergroup> = BTreeMap::new();
            let mut search = CellSearch::new(n, inv, commutative_only);
            search.run(&mut branch);
            branch
        })
        .reduce(BTreeMap::new, |mut acc, branch| {
            acc.extend(branch);
            acc
        });
    Ok(found.into_values().collect())
}

/// Involutions of `0..n` fixing 0, ordered deterministically.
fn involutions_fixing_zero(n: usize) -> Vec<Vec<ElementId>> {
    let mut out = Vec::new();
    let mut current: Vec<Option<ElementId>> = vec![None; n];
    current[0] = Some(0);
    fn rec(current: &mut Vec<Option<ElementId>>, out: &mut Vec<Vec<ElementId>>) {
        match current.iter().position(|v| v.is_none()) {
            None => out.push(current.iter().map(|v| v.unwrap()).collect()),
            Some(i) => {
                current[i] = Some(i);
                rec(current, out);
                current[i] = None;
                for j in i + 1..current.len() {
                    if current[j].is_none() {
                        current[i] = Some(j);
                        current[j] = Some(i);
                        rec(current, out);
                        current[i] = None;
                        current[j] = None;
                    }
                }
            }
        }
    }
    rec(&mut current, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OrbitState {
    Unknown,
    In,
    Out,
}

/// Backtracking state for one inverse-permutation branch.
struct CellSearch {
    n: usize,
    inv: Vec<ElementId>,
    /// Orbit id per triple index `(x*n + y)*n + z`.
    orbit_of: Vec<usize>,
    state: Vec<OrbitState>,
    feasible: bool,
    /// `None` for not-yet-assigned nonidentity cells.
    table: Vec<Option<ElementSet>>,
    cells: Vec<(usize, usize)>,
    checked: Vec<bool>,
}

impl CellSearch {
    fn new(n: usize, inv: Vec<ElementId>, commutative_only: bool) -> Self {
        let triple = |x: usize, y: usize, z: usize| (x * n + y) * n + z;
        // Orbit partition under the reversibility maps (and the transpose
        // map when restricting to commutative tables).
        let mut orbit_of = vec![usize::MAX; n * n * n];
        let mut orbit_count = 0;
        for start in 0..n * n * n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbit_count;
            orbit_count += 1;
            let mut stack = vec![start];
            orbit_of[start] = id;
            while let Some(t) = stack.pop() {
                let z = t % n;
                let y = (t / n) % n;
                let x = t / (n * n);
                let mut next = vec![triple(z, inv[y], x), triple(inv[x], z, y)];
                if commutative_only {
                    next.push(triple(y, x, z));
                }
                for u in next.drain(..) {
                    if orbit_of[u] == usize::MAX {
                        orbit_of[u] = id;
                        stack.push(u);
                    }
                }
            }
        }
        let mut state = vec![OrbitState::Unknown; orbit_count];
        let mut feasible = true;
        // Identity cells and 0-membership are forced before any search.
        let force = |orbit: usize, value: bool, state: &mut Vec<OrbitState>, feasible: &mut bool| {
            let want = if value { OrbitState::In } else { OrbitState::Out };
            match state[orbit] {
                OrbitState::Unknown => state[orbit] = want,
                s if s == want => {}
                _ => *feasible = false,
            }
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = triple(x, y, z);
                    if x == 0 {
                        force(orbit_of[t], y == z, &mut state, &mut feasible);
                    } else if y == 0 {
                        force(orbit_of[t], x == z, &mut state, &mut feasible);
                    } else if z == 0 {
                        force(orbit_of[t], y == inv[x], &mut state, &mut feasible);
                    }
                }
            }
        }
        let mut table = vec![None; n * n];
        for a in 0..n {
            table[a] = Some(ElementSet::singleton(a));
            table[a * n] = Some(ElementSet::singleton(a));
        }
        let cells = (1..n)
            .flat_map(|x| (1..n).map(move |y| (x, y)))
            .collect();
        CellSearch {
            n,
            inv,
            orbit_of,
            state,
            feasible,
            table,
            cells,
            checked: vec![false; n * n * n],
        }
    }

    fn run(&mut self, found: &mut BTreeMap<CanonicalForm, Hypergroup>) {
        if self.feasible {
            self.assign_cell(0, found);
        }
    }

    fn triple(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.n + y) * self.n + z
    }

    fn assign_cell(&mut self, cell_idx: usize, found: &mut BTreeMap<CanonicalForm, Hypergroup>) {
        if cell_idx == self.cells.len() {
            self.emit(found);
            return;
        }
        let (x, y) = self.cells[cell_idx];
        let mut forced = ElementSet::EMPTY;
        let mut open = Vec::new();
        for z in 0..self.n {
            match self.state[self.orbit_of[self.triple(x, y, z)]] {
                OrbitState::In => forced.insert(z),
                OrbitState::Out => {}
                OrbitState::Unknown => open.push(z),
            }
        }
        for mask in 0u64..(1 << open.len()) {
            let mut cell = forced;
            for (bit, &z) in open.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    cell.insert(z);
                }
            }
            if cell.is_empty() {
                continue;
            }
            let mut touched = Vec::with_capacity(open.len());
            for (bit, &z) in open.iter().enumerate() {
                let orbit = self.orbit_of[self.triple(x, y, z)];
                // Two open slots of this cell can share an orbit (for the
                // symmetric cell (y, x) in commutative mode, say); the
                // subset must then agree with itself under the orbit.
                let want = if mask & (1 << bit) != 0 {
                    OrbitState::In
                } else {
                    OrbitState::Out
                };
                match self.state[orbit] {
                    OrbitState::Unknown => {
                        self.state[orbit] = want;
                        touched.push(orbit);
                    }
                    s if s == want => {}
                    _ => {
                        for o in touched.drain(..) {
                            self.state[o] = OrbitState::Unknown;
                        }
                        // conflicting subset; skip this mask
                        cell = ElementSet::EMPTY;
                        break;
                    }
                }
            }
            if cell.is_empty() {
                continue;
            }
            self.table[x * self.n + y] = Some(cell);
            let newly_checked = self.check_determined_triples();
            if let Some(marks) = newly_checked {
                self.assign_cell(cell_idx + 1, found);
                for t in marks {
                    self.checked[t] = false;
                }
            }
            self.table[x * self.n + y] = None;
            for o in touched {
                self.state[o] = OrbitState::Unknown;
            }
        }
    }

    /// Evaluate associativity on every triple whose cells are all assigned,
    /// and on half-determined triples check the sound containment: if one
    /// side is fully known, every assigned fragment of the other side must
    /// already lie inside it. Returns the indices newly marked checked, or
    /// `None` on a violation.
    fn check_determined_triples(&mut self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut marks = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = self.triple(a, b, c);
                    if self.checked[t] {
                        continue;
                    }
                    let Some(bc) = self.table[b * n + c] else {
                        continue;
                    };
                    let Some(ab) = self.table[a * n + b] else {
                        continue;
                    };
                    let mut lhs = ElementSet::EMPTY;
                    let mut lhs_full = true;
                    for w in bc.iter() {
                        match self.table[a * n + w] {
                            Some(s) => lhs = lhs.union(s),
                            None => lhs_full = false,
                        }
                    }
                    let mut rhs = ElementSet::EMPTY;
                    let mut rhs_full = true;
                    for u in ab.iter() {
                        match self.table[u * n + c] {
                            Some(s) => rhs = rhs.union(s),
                            None => rhs_full = false,
                        }
                    }
                    let ok = match (lhs_full, rhs_full) {
                        (true, true) => lhs == rhs,
                        (true, false) => rhs.is_subset(lhs),
                        (false, true) => lhs.is_subset(rhs),
                        (false, false) => true,
                    };
                    if !ok {
                        for m in marks.drain(..) {
                            self.checked[m] = false;
                        }
                        return None;
                    }
                    if lhs_full && rhs_full {
                        self.checked[t] = true;
                        marks.push(t);
                    }
                }
            }
        }
        Some(marks)
    }

    fn emit(&self, found: &mut BTreeMap<CanonicalForm, Hypergroup>) {
        let table: Vec<ElementSet> = self
            .table
            .iter()
            .map(|c| c.expect("all cells assigned at a leaf"))
            .collect();
        let raw = RawHypergroup::new(self.n, self.inv.clone(), table);
        let hg = Hypergroup::new(raw)
            .expect("the search only reaches tables satisfying all axioms");
        let form = canonical_form(&hg).expect("enumeration orders are small");
        found.entry(form).or_insert(hg);
    }
}

/// What a counterexample search scanned, for exhausted-range reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanStats {
    pub max_order: usize,
    /// Isomorphism classes available to the scan.
    pub classes: usize,
    /// Object tuples (pairs or triples) visited.
    pub object_tuples: usize,
    /// Candidate configurations tested inside those tuples.
    pub candidates: usize,
}

impl std::fmt::Display for ScanStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "orders 1..={}: {} classes, {} object tuples, {} candidates",
            self.max_order, self.classes, self.object_tuples, self.candidates
        )
    }
}

/// A found counterexample, carrying everything needed to replay it through
/// the public checkers.
#[derive(Debug, Clone)]
pub enum SearchWitness {
    /// `(f∗g)∗h ≠ f∗(g∗h)` in `Hom(dom, cod)` at the given morphism indices.
    HomNonassoc {
        dom: Hypergroup,
        cod: Hypergroup,
        triple: (usize, usize, usize),
    },
    /// A morphism whose image is not a full subcarrier.
    NonfullImage { morphism: Morphism },
    /// `f∘h = g∘h` yet no member of `f∗r(g)` composes with `h` to zero.
    EqualizerGap {
        f: Morphism,
        g: Morphism,
        h: Morphism,
    },
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub witness: Option<SearchWitness>,
    pub stats: ScanStats,
}

fn classes_up_to(max_order: usize) -> Result<Vec<Hypergroup>, HgError> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_hypergroups(n, false)?);
    }
    Ok(out)
}

/// Scan all pairs up to `max_order` for a Hom structure whose star fails
/// associativity. Capped at order 4.
pub fn search_hom_nonassociative(max_order: usize) -> Result<SearchOutcome, HgError> {
    if max_order == 0 || max_order > 4 {
        return Err(HgError::EnumerationOrder {
            order: max_order,
            cap: 4,
        });
    }
    let classes = classes_up_to(max_order)?;
    let mut stats = ScanStats {
        max_order,
        classes: classes.len(),
        object_tuples: 0,
        candidates: 0,
    };
    for g in &classes {
        for h in &classes {
            stats.object_tuples += 1;
            let hs = hom_structure(g, h);
            stats.candidates += hs.len() * hs.len() * hs.len();
            if let Some(v) = hs
                .report()
                .violations()
                .iter()
                .find(|v| v.rule == crate::check::Rule::Associativity)
            {
                return Ok(SearchOutcome {
                    witness: Some(SearchWitness::HomNonassoc {
                        dom: g.clone(),
                        cod: h.clone(),
                        triple: (v.witness[0], v.witness[1], v.witness[2]),
                    }),
                    stats,
                });
            }
        }
    }
    Ok(SearchOutcome {
        witness: None,
        stats,
    })
}

/// Scan all morphisms up to `max_order` for an image that is not a full
/// subcarrier. Full morphisms are skipped; their images are always full.
pub fn search_nonfull_image(max_order: usize) -> Result<SearchOutcome, HgError> {
    if max_order == 0 || max_order > 4 {
        return Err(HgError::EnumerationOrder {
            order: max_order,
            cap: 4,
        });
    }
    let classes = classes_up_to(max_order)?;
    let mut stats = ScanStats {
        max_order,
        classes: classes.len(),
        object_tuples: 0,
        candidates: 0,
    };
    for g in &classes {
        for h in &classes {
            stats.object_tuples += 1;
            for f in enumerate_hom(g, h) {
                stats.candidates += 1;
                if f.is_full() {
                    continue;
                }
                let (im, _) = image(&f);
                if !im.is_full() {
                    return Ok(SearchOutcome {
                        witness: Some(SearchWitness::NonfullImage { morphism: f }),
                        stats,
                    });
                }
            }
        }
    }
    Ok(SearchOutcome {
        witness: None,
        stats,
    })
}

/// Scan for `(f, g, h)` with `f∘h = g∘h` but `0 ∉ (f∗r(g))∘h`, the failure
/// of the equalizer-from-kernel shortcut. The reverse implication always
/// holds. Capped at order 3.
pub fn search_equalizer_kernel_gap(max_order: usize) -> Result<SearchOutcome, HgError> {
    if max_order == 0 || max_order > 3 {
        return Err(HgError::EnumerationOrder {
            order: max_order,
            cap: 3,
        });
    }
    let classes = classes_up_to(max_order)?;
    let mut stats = ScanStats {
        max_order,
        classes: classes.len(),
        object_tuples: 0,
        candidates: 0,
    };
    for e in &classes {
        for g in &classes {
            let homs_eg = enumerate_hom(e, g);
            for h_obj in &classes {
                stats.object_tuples += 1;
                let homs_gh = enumerate_hom(g, h_obj);
                for f in &homs_gh {
                    for g_m in &homs_gh {
                        let star: Vec<&Morphism> = homs_gh
                            .iter()
                            .filter(|cand| {
                                g.elements().all(|x| {
                                    h_obj
                                        .mul(f.apply(x), h_obj.inv(g_m.apply(x)))
                                        .contains(cand.apply(x))
                                })
                            })
                            .collect();
                        for h in &homs_eg {
                            stats.candidates += 1;
                            let equalized = compose(f, h).expect("endpoints match")
                                == compose(g_m, h).expect("endpoints match");
                            let difference_vanishes = star.iter().any(|e_m| {
                                compose(e_m, h).expect("endpoints match").is_zero()
                            });
                            if equalized != difference_vanishes {
                                return Ok(SearchOutcome {
                                    witness: Some(SearchWitness::EqualizerGap {
                                        f: f.clone(),
                                        g: g_m.clone(),
                                        h: h.clone(),
                                    }),
                                    stats,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(SearchOutcome {
        witness: None,
        stats,
    })
}
