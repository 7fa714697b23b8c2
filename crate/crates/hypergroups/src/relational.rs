//! Marshall's relational presentation of a hypergroup: a ternary relation
//! `Π ⊆ G³` with `(x, y, z) ∈ Π` read as `z ∈ x∗y`, subject to
//!
//! - I: `(x, y, z) ∈ Π` implies `(z, r(y), x) ∈ Π` and `(r(x), z, y) ∈ Π`;
//! - II: `(x, 𝔦, y) ∈ Π` iff `x = y`;
//! - III: if some `p` has `(u, v, p) ∈ Π` and `(p, w, x) ∈ Π`, then some `q`
//!   has `(v, w, q) ∈ Π` and `(u, q, x) ∈ Π`.

use crate::check::{CheckReport, Rule};
use crate::error::HgError;
use crate::hypergroup::{Hypergroup, RawHypergroup};
use crate::set::{ElementId, ElementSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalHypergroup {
    order: usize,
    inv: Vec<ElementId>,
    identity: ElementId,
    /// Sorted, deduplicated list of triples.
    triples: Vec<(ElementId, ElementId, ElementId)>,
}

impl RelationalHypergroup {
    /// Structural validation only; conditions I–III are checked separately.
    /// The identity is pinned to element 0, matching the table presentation.
    pub fn new(
        order: usize,
        inv: Vec<ElementId>,
        identity: ElementId,
        mut triples: Vec<(ElementId, ElementId, ElementId)>,
    ) -> Result<Self, HgError> {
        if order == 0 || order > MAX_ORDER {
            return Err(HgError::OrderOutOfRange(order));
        }
        if identity != 0 {
            return Err(HgError::RelationalIdentityNotZero(identity));
        }
        if inv.len() != order {
            return Err(HgError::InvLength {
                len: inv.len(),
                order,
            });
        }
        let mut seen = vec![false; order];
        for (i, &v) in inv.iter().enumerate() {
            if v >= order || seen[v] {
                return Err(HgError::InvNotPermutation { index: i, value: v });
            }
            seen[v] = true;
        }
        for &(x, y, z) in &triples {
            for e in [x, y, z] {
                if e >= order {
                    return Err(HgError::CellOutOfRange { x, y, value: e });
                }
            }
        }
        triples.sort_unstable();
        triples.dedup();
        Ok(RelationalHypergroup {
            order,
            inv,
            identity,
            triples,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn inv(&self, a: ElementId) -> ElementId {
        self.inv[a]
    }

    pub fn triples(&self) -> &[(ElementId, ElementId, ElementId)] {
        &self.triples
    }

    pub fn contains(&self, x: ElementId, y: ElementId, z: ElementId) -> bool {
        self.triples.binary_search(&(x, y, z)).is_ok()
    }

    /// Verify conditions I–III literally, reporting the first witness per
    /// condition.
    pub fn verify_conditions(&self) -> CheckReport {
        let mut report = CheckReport::pass();
        'cond_i: for &(x, y, z) in &self.triples {
            if !self.contains(z, self.inv[y], x) {
                report.push(
                    Rule::RelReversibility,
                    vec![x, y, z],
                    format!("(x,y,z) ∈ Π but (z, r(y), x) = ({z}, {}, {x}) ∉ Π", self.inv[y]),
                );
                break 'cond_i;
            }
            if !self.contains(self.inv[x], z, y) {
                report.push(
                    Rule::RelReversibility,
                    vec![x, y, z],
                    format!("(x,y,z) ∈ Π but (r(x), z, y) = ({}, {z}, {y}) ∉ Π", self.inv[x]),
                );
                break 'cond_i;
            }
        }
        'cond_ii: for x in 0..self.order {
            for y in 0..self.order {
                if self.contains(x, self.identity, y) != (x == y) {
                    report.push(
                        Rule::RelIdentity,
                        vec![x, y],
                        format!(
                            "(x, 𝔦, y) ∈ Π is {} but x = y is {}",
                            self.contains(x, self.identity, y),
                            x == y
                        ),
                    );
                    break 'cond_ii;
                }
            }
        }
        'cond_iii: for u in 0..self.order {
            for v in 0..self.order {
                for w in 0..self.order {
                    for x in 0..self.order {
                        let premise = (0..self.order)
                            .any(|p| self.contains(u, v, p) && self.contains(p, w, x));
                        if !premise {
                            continue;
                        }
                        let conclusion = (0..self.order)
                            .any(|q| self.contains(v, w, q) && self.contains(u, q, x));
                        if !conclusion {
                            report.push(
                                Rule::RelAssociativity,
                                vec![u, v, w, x],
                                "some p has (u,v,p), (p,w,x) ∈ Π but no q has (v,w,q), (u,q,x) ∈ Π"
                                    .to_string(),
                            );
                            break 'cond_iii;
                        }
                    }
                }
            }
        }
        report
    }

    /// Convert back to the table presentation.
    ///
    /// Re-verifies conditions I–III (failures are returned with their
    /// witness), requires every section `{z : (x,y,z) ∈ Π}` nonempty, and
    /// runs the table constructor's own validation.
    pub fn to_hypergroup(&self) -> Result<Hypergroup, HgError> {
        let report = self.verify_conditions();
        if !report.passed() {
            return Err(HgError::RelationalConditionsFail(report));
        }
        let n = self.order;
        let mut table = vec![ElementSet::EMPTY; n * n];
        for &(x, y, z) in &self.triples {
            table[x * n + y].insert(z);
        }
        for x in 0..n {
            for y in 0..n {
                if table[x * n + y].is_empty() {
                    return Err(HgError::EmptyCell { x, y });
                }
            }
        }
        Hypergroup::new(RawHypergroup::new(n, self.inv.clone(), table))
    }
}
