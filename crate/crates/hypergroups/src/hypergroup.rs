//! Finite hypergroups.
//!
//! A hypergroup is a quadruple `(G, ∗, r, 1)` where `∗ : G×G → P(G)∖{∅}` is a
//! multivalued operation, `r` an inverse map and `1` an identity element,
//! subject to
//!
//! 1. reversibility: `z ∈ x∗y` implies `x ∈ z∗r(y)` and `y ∈ r(x)∗z`;
//! 2. identity law: `y ∈ 1∗x` iff `x = y`;
//! 3. associativity under the set-extension convention
//!    `x∗(y∗z) = ⋃_{w ∈ y∗z} x∗w`;
//! 4. (optional) commutativity: `x∗y = y∗x`.
//!
//! Carriers are `{0, .., order-1}` with the identity pinned to index 0.

use crate::check::{CheckReport, Rule, Violation};
use crate::error::HgError;
use crate::relational::RelationalHypergroup;
use crate::set::{ElementId, ElementSet, MAX_ORDER};

/// An unvalidated carrier, inverse map and operation table.
///
/// This is the input to [`verify`](RawHypergroup::verify_axioms) and to the
/// validating [`Hypergroup::new`] constructor; deliberately broken tables can
/// be represented and checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawHypergroup {
    pub order: usize,
    pub inv: Vec<ElementId>,
    /// Row-major `order × order` table; `table[x * order + y]` is `x ∗ y`.
    pub table: Vec<ElementSet>,
}

impl RawHypergroup {
    pub fn new(order: usize, inv: Vec<ElementId>, table: Vec<ElementSet>) -> Self {
        RawHypergroup { order, inv, table }
    }

    /// Build from a nested list of cells, `cells[x][y]` listing the members of `x ∗ y`.
    pub fn from_cells(inv: Vec<ElementId>, cells: &[Vec<Vec<ElementId>>]) -> Self {
        let order = cells.len();
        let mut table = Vec::with_capacity(order * order);
        for row in cells {
            for cell in row {
                table.push(ElementSet::from_elements(cell));
            }
        }
        RawHypergroup { order, inv, table }
    }

    pub fn cell(&self, x: ElementId, y: ElementId) -> ElementSet {
        self.table[x * self.order + y]
    }

    /// Structural well-formedness: order bounds, table shape, nonempty
    /// in-range cells, and `inv` a permutation. Axioms are not consulted.
    pub fn check_structure(&self) -> Result<(), HgError> {
        let n = self.order;
        if n == 0 || n > MAX_ORDER {
            return Err(HgError::OrderOutOfRange(n));
        }
        if self.inv.len() != n {
            return Err(HgError::InvLength {
                len: self.inv.len(),
                order: n,
            });
        }
        let mut seen = vec![false; n];
        for (i, &v) in self.inv.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(HgError::InvNotPermutation { index: i, value: v });
            }
            seen[v] = true;
        }
        if self.table.len() != n * n {
            return Err(HgError::TableShape {
                len: self.table.len(),
                expected: n * n,
            });
        }
        let carrier = ElementSet::full(n);
        for x in 0..n {
            for y in 0..n {
                let c = self.cell(x, y);
                if c.is_empty() {
                    return Err(HgError::EmptyCell { x, y });
                }
                if !c.is_subset(carrier) {
                    let value = c.difference(carrier).min_element().unwrap();
                    return Err(HgError::CellOutOfRange { x, y, value });
                }
            }
        }
        Ok(())
    }

    /// Check axioms 1–3 against the stored inverse map and identity 0.
    ///
    /// The table must be structurally well-formed. At most one violation is
    /// reported per axiom, each with the lexicographically minimal witness.
    pub fn verify_axioms(&self) -> CheckReport {
        let mut report = CheckReport::pass();
        if let Some(v) = self.reversibility_violation() {
            report.merge(from_violation(v));
        }
        if let Some(v) = self.identity_violation() {
            report.merge(from_violation(v));
        }
        if let Some(v) = self.associativity_violation() {
            report.merge(from_violation(v));
        }
        report
    }

    /// Like [`verify_axioms`](Self::verify_axioms) but also checks the
    /// commutativity axiom.
    pub fn verify_axioms_commutative(&self) -> CheckReport {
        let mut report = self.verify_axioms();
        if let Some(v) = self.commutativity_violation() {
            report.merge(from_violation(v));
        }
        report
    }

    fn reversibility_violation(&self) -> Option<Violation> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                for z in self.cell(x, y).iter() {
                    if !self.cell(z, self.inv[y]).contains(x) {
                        return Some(Violation {
                            rule: Rule::Reversibility,
                            witness: vec![x, y, z],
                            detail: format!(
                                "{z} ∈ {x}∗{y} but {x} ∉ {z}∗r({y}) = {}",
                                self.cell(z, self.inv[y])
                            ),
                        });
                    }
                    if !self.cell(self.inv[x], z).contains(y) {
                        return Some(Violation {
                            rule: Rule::Reversibility,
                            witness: vec![x, y, z],
                            detail: format!(
                                "{z} ∈ {x}∗{y} but {y} ∉ r({x})∗{z} = {}",
                                self.cell(self.inv[x], z)
                            ),
                        });
                    }
                }
            }
        }
        None
    }

    fn identity_violation(&self) -> Option<Violation> {
        for x in 0..self.order {
            let cell = self.cell(0, x);
            if cell != ElementSet::singleton(x) {
                return Some(Violation {
                    rule: Rule::Identity,
                    witness: vec![0, x],
                    detail: format!("1∗{x} = {cell}, expected {{{x}}}"),
                });
            }
        }
        None
    }

    fn associativity_violation(&self) -> Option<Violation> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.eval_right(x, y, z);
                    let rhs = self.eval_left(x, y, z);
                    if lhs != rhs {
                        return Some(Violation {
                            rule: Rule::Associativity,
                            witness: vec![x, y, z],
                            detail: format!("{x}∗({y}∗{z}) = {lhs} ≠ ({x}∗{y})∗{z} = {rhs}"),
                        });
                    }
                }
            }
        }
        None
    }

    fn commutativity_violation(&self) -> Option<Violation> {
        for x in 0..self.order {
            for y in 0..x {
                if self.cell(x, y) != self.cell(y, x) {
                    return Some(Violation {
                        rule: Rule::Commutativity,
                        witness: vec![y, x],
                        detail: format!(
                            "{y}∗{x} = {} ≠ {x}∗{y} = {}",
                            self.cell(y, x),
                            self.cell(x, y)
                        ),
                    });
                }
            }
        }
        None
    }

    /// `x ∗ (y ∗ z)` under the set-extension convention.
    fn eval_right(&self, x: ElementId, y: ElementId, z: ElementId) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for w in self.cell(y, z).iter() {
            out = out.union(self.cell(x, w));
        }
        out
    }

    /// `(x ∗ y) ∗ z` under the set-extension convention.
    fn eval_left(&self, x: ElementId, y: ElementId, z: ElementId) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for t in self.cell(x, y).iter() {
            out = out.union(self.cell(t, z));
        }
        out
    }

    fn is_symmetric(&self) -> bool {
        self.commutativity_violation().is_none()
    }
}

fn from_violation(v: Violation) -> CheckReport {
    let mut r = CheckReport::pass();
    r.push(v.rule, v.witness, v.detail);
    r
}

/// A validated finite hypergroup. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergroup {
    raw: RawHypergroup,
    commutative: bool,
}

impl Hypergroup {
    /// Validate structure and axioms; on success caches commutativity.
    pub fn new(raw: RawHypergroup) -> Result<Self, HgError> {
        raw.check_structure()?;
        let report = raw.verify_axioms();
        if !report.passed() {
            return Err(HgError::AxiomsFail(report));
        }
        let commutative = raw.is_symmetric();
        Ok(Hypergroup { raw, commutative })
    }

    pub fn from_parts(
        order: usize,
        inv: Vec<ElementId>,
        table: Vec<ElementSet>,
    ) -> Result<Self, HgError> {
        Hypergroup::new(RawHypergroup::new(order, inv, table))
    }

    pub fn order(&self) -> usize {
        self.raw.order
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    /// Iterator over the carrier `0..order`.
    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.raw.order
    }

    pub fn inv(&self, a: ElementId) -> ElementId {
        self.raw.inv[a]
    }

    pub fn inv_map(&self) -> &[ElementId] {
        &self.raw.inv
    }

    /// The cell `a ∗ b`. Never empty.
    ///
    /// Panics if `a` or `b` is outside the carrier.
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementSet {
        assert!(
            a < self.raw.order && b < self.raw.order,
            "element index out of range: ({a}, {b}) with order {}",
            self.raw.order
        );
        self.raw.cell(a, b)
    }

    /// `A ∗ B = ⋃ {a∗b : a ∈ A, b ∈ B}`.
    ///
    /// Panics if either operand is empty or reaches outside the carrier.
    pub fn mul_sets(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        assert!(
            !a.is_empty() && !b.is_empty(),
            "mul_sets requires nonempty operands"
        );
        let mut out = ElementSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out = out.union(self.mul(x, y));
            }
        }
        out
    }

    /// Image of a set under the inverse map.
    pub fn inv_set(&self, s: ElementSet) -> ElementSet {
        s.map(|e| self.raw.inv[e])
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn raw(&self) -> &RawHypergroup {
        &self.raw
    }

    /// Re-run the axiom verifier; checks commutativity too when cached.
    pub fn verify_axioms(&self) -> CheckReport {
        if self.commutative {
            self.raw.verify_axioms_commutative()
        } else {
            self.raw.verify_axioms()
        }
    }

    /// Verify the four basic identities that hold in every hypergroup:
    /// `1⁻¹ = 1`, `(a⁻¹)⁻¹ = a`, `c ∈ a∗b ⟺ c⁻¹ ∈ b⁻¹∗a⁻¹`, and
    /// `(a∗b)⁻¹ = b⁻¹∗a⁻¹`.
    ///
    /// The membership identity reverses the factors; keeping the original
    /// order is valid only in the commutative case, where the two forms
    /// coincide.
    pub fn check_basic_identities(&self) -> CheckReport {
        let mut report = CheckReport::pass();
        let n = self.order();
        if self.inv(0) != 0 {
            report.push(
                Rule::IdentitySelfInverse,
                vec![0],
                format!("1⁻¹ = {}, expected 0", self.inv(0)),
            );
        }
        'involution: for a in 0..n {
            if self.inv(self.inv(a)) != a {
                report.push(
                    Rule::InverseInvolution,
                    vec![a],
                    format!("(a⁻¹)⁻¹ = {} for a = {a}", self.inv(self.inv(a))),
                );
                break 'involution;
            }
        }
        'membership: for a in 0..n {
            for b in 0..n {
                let prod = self.mul(a, b);
                let inv_prod = self.mul(self.inv(b), self.inv(a));
                for c in 0..n {
                    if prod.contains(c) != inv_prod.contains(self.inv(c)) {
                        report.push(
                            Rule::InverseMembership,
                            vec![a, b, c],
                            format!(
                                "c ∈ a∗b is {} but c⁻¹ ∈ b⁻¹∗a⁻¹ is {}",
                                prod.contains(c),
                                inv_prod.contains(self.inv(c))
                            ),
                        );
                        break 'membership;
                    }
                }
            }
        }
        'product: for a in 0..n {
            for b in 0..n {
                let lhs = self.inv_set(self.mul(a, b));
                let rhs = self.mul(self.inv(b), self.inv(a));
                if lhs != rhs {
                    report.push(
                        Rule::ProductInverse,
                        vec![a, b],
                        format!("(a∗b)⁻¹ = {lhs} ≠ b⁻¹∗a⁻¹ = {rhs}"),
                    );
                    break 'product;
                }
            }
        }
        report
    }

    /// Decide the strong inversion property: every element has a unique
    /// partner with `a ∗ b = {1}`. Holding it is equivalent to being a group,
    /// in which case every cell is a singleton.
    pub fn sip_check(&self) -> SipVerdict {
        let one = ElementSet::singleton(0);
        for a in self.elements() {
            let partners: ElementSet = self
                .elements()
                .filter(|&b| self.mul(a, b) == one)
                .collect();
            if partners.len() != 1 {
                return SipVerdict::NotSip {
                    element: a,
                    partners,
                };
            }
        }
        // SIP forces singleton cells; a violation here would disprove the
        // equivalence on a validated table.
        for a in self.elements() {
            for b in self.elements() {
                assert_eq!(
                    self.mul(a, b).len(),
                    1,
                    "SIP holds but cell ({a}, {b}) is not a singleton"
                );
            }
        }
        SipVerdict::IsGroup
    }

    /// True iff every cell is a singleton (the table is a group Cayley table).
    pub fn is_group(&self) -> bool {
        self.raw.table.iter().all(|c| c.len() == 1)
    }

    /// The opposite hypergroup `x ∗' y = y ∗ x`, with the same inverse map.
    pub fn opposite(&self) -> Hypergroup {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(self.raw.cell(y, x));
            }
        }
        Hypergroup::new(RawHypergroup::new(n, self.raw.inv.clone(), table))
            .expect("the opposite of a hypergroup is a hypergroup")
    }

    /// Marshall's relational presentation `Π = {(x, y, z) : z ∈ x∗y}`.
    pub fn to_relational(&self) -> RelationalHypergroup {
        let mut triples = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                for z in self.mul(x, y).iter() {
                    triples.push((x, y, z));
                }
            }
        }
        RelationalHypergroup::new(self.order(), self.raw.inv.clone(), 0, triples)
            .expect("a valid hypergroup induces a valid relational presentation")
    }
}

/// Outcome of [`Hypergroup::sip_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SipVerdict {
    IsGroup,
    /// `element` has no unique partner; `partners` lists every `b` with
    /// `a ∗ b = {1}` (possibly empty).
    NotSip {
        element: ElementId,
        partners: ElementSet,
    },
}

impl SipVerdict {
    pub fn is_group(&self) -> bool {
        matches!(self, SipVerdict::IsGroup)
    }
}
