//! Directed diagrams of hypergroups and their finite (co)limits.
//!
//! A diagram holds one hypergroup per node and one connecting morphism per
//! related pair, with identity self-arrows and commuting triangles. Arrows
//! point from source to target; directedness means every two nodes have a
//! common arrow-target. For a projective (limit) diagram the arrows run from
//! larger to smaller node, for an injective (colimit) diagram from smaller
//! to larger; both orientations are the same structural condition here.

use std::collections::BTreeMap;

use crate::error::HgError;
use crate::hypergroup::{Hypergroup, RawHypergroup};
use crate::morphism::{compose, Morphism};
use crate::set::{ElementId, ElementSet, MAX_ORDER};

#[derive(Debug, Clone)]
pub struct DirectedDiagram {
    objects: Vec<Hypergroup>,
    arrows: BTreeMap<(usize, usize), Morphism>,
}

impl DirectedDiagram {
    /// Validate a diagram: arrow endpoints match the objects, self-arrows
    /// are identities (added when missing), the relation is antisymmetric
    /// and transitively closed with commuting triangles, and every two
    /// nodes have a common arrow-target.
    pub fn new(
        objects: Vec<Hypergroup>,
        arrows: Vec<((usize, usize), Morphism)>,
    ) -> Result<Self, HgError> {
        if objects.is_empty() {
            return Err(HgError::InvalidDiagram("no nodes".to_string()));
        }
        let n = objects.len();
        let mut arrow_map = BTreeMap::new();
        for ((i, j), m) in arrows {
            if i >= n || j >= n {
                return Err(HgError::InvalidDiagram(format!(
                    "arrow ({i}, {j}) references a missing node"
                )));
            }
            if m.dom() != &objects[i] || m.cod() != &objects[j] {
                return Err(HgError::InvalidDiagram(format!(
                    "arrow ({i}, {j}) endpoints do not match the node objects"
                )));
            }
            if arrow_map.insert((i, j), m).is_some() {
                return Err(HgError::InvalidDiagram(format!(
                    "duplicate arrow ({i}, {j})"
                )));
            }
        }
        for (i, g) in objects.iter().enumerate() {
            match arrow_map.get(&(i, i)) {
                None => {
                    arrow_map.insert((i, i), Morphism::identity(g));
                }
                Some(m) if m.map().iter().enumerate().all(|(a, &v)| a == v) => {}
                Some(_) => {
                    return Err(HgError::InvalidDiagram(format!(
                        "self-arrow at node {i} is not the identity"
                    )));
                }
            }
        }
        for &(i, j) in arrow_map.keys() {
            if i != j && arrow_map.contains_key(&(j, i)) {
                return Err(HgError::InvalidDiagram(format!(
                    "arrows in both directions between {i} and {j}"
                )));
            }
        }
        let pairs: Vec<(usize, usize)> = arrow_map.keys().copied().collect();
        for &(i, j) in &pairs {
            for &(j2, k) in &pairs {
                if j != j2 {
                    continue;
                }
                match arrow_map.get(&(i, k)) {
                    None => {
                        return Err(HgError::InvalidDiagram(format!(
                            "missing composite arrow ({i}, {k})"
                        )));
                    }
                    Some(direct) => {
                        let via = compose(&arrow_map[&(j, k)], &arrow_map[&(i, j)])
                            .expect("endpoints were validated");
                        if via.map() != direct.map() {
                            return Err(HgError::InvalidDiagram(format!(
                                "triangle ({i}, {j}, {k}) does not commute"
                            )));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let bounded = (0..n)
                    .any(|k| arrow_map.contains_key(&(i, k)) && arrow_map.contains_key(&(j, k)));
                if !bounded {
                    return Err(HgError::InvalidDiagram(format!(
                        "nodes {i} and {j} have no common arrow-target"
                    )));
                }
            }
        }
        Ok(DirectedDiagram {
            objects,
            arrows: arrow_map,
        })
    }

    pub fn node_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object(&self, i: usize) -> &Hypergroup {
        &self.objects[i]
    }

    pub fn objects(&self) -> &[Hypergroup] {
        &self.objects
    }

    pub fn arrow(&self, i: usize, j: usize) -> Option<&Morphism> {
        self.arrows.get(&(i, j))
    }

    pub fn arrows(&self) -> impl Iterator<Item = (&(usize, usize), &Morphism)> {
        self.arrows.iter()
    }

    /// Arrow-targets common to `i` and `j` (including the nodes themselves).
    pub fn common_targets(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.node_count())
            .filter(|&k| self.arrows.contains_key(&(i, k)) && self.arrows.contains_key(&(j, k)))
            .collect()
    }
}

/// Limit of a projective diagram: the compatible tuples
/// `{(g_i) : φ_ij(g_i) = g_j for every arrow}` inside the product, with the
/// product operation intersected back into the carrier. Returns the limit
/// and the restricted coordinate projections `ψ_i`.
pub fn filtered_limit(d: &DirectedDiagram) -> Result<(Hypergroup, Vec<Morphism>), HgError> {
    let orders: Vec<usize> = d.objects().iter().map(|g| g.order()).collect();
    let total: usize = orders.iter().product();
    if total > MAX_ORDER {
        return Err(HgError::OrderOutOfRange(total));
    }
    let mut strides = vec![1usize; orders.len()];
    for i in (0..orders.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * orders[i + 1];
    }
    let tuple_of = |index: usize| -> Vec<ElementId> {
        orders
            .iter()
            .zip(&strides)
            .map(|(&n, &s)| (index / s) % n)
            .collect()
    };
    let mut members: Vec<Vec<ElementId>> = Vec::new();
    for index in 0..total {
        let t = tuple_of(index);
        let compatible = d
            .arrows()
            .all(|(&(i, j), m)| m.apply(t[i]) == t[j]);
        if compatible {
            members.push(t);
        }
    }
    // The identity tuple is always compatible and sorts first.
    debug_assert!(members[0].iter().all(|&e| e == 0));
    let k = members.len();
    let inv: Vec<ElementId> = members
        .iter()
        .map(|t| {
            let target: Vec<ElementId> = t
                .iter()
                .enumerate()
                .map(|(i, &e)| d.object(i).inv(e))
                .collect();
            members
                .iter()
                .position(|m| *m == target)
                .expect("compatible tuples are closed under inverses")
        })
        .collect();
    let mut table = Vec::with_capacity(k * k);
    for x in &members {
        for y in &members {
            let mut cell = ElementSet::EMPTY;
            for (zi, z) in members.iter().enumerate() {
                let inside = z
                    .iter()
                    .enumerate()
                    .all(|(i, &e)| d.object(i).mul(x[i], y[i]).contains(e));
                if inside {
                    cell.insert(zi);
                }
            }
            table.push(cell);
        }
    }
    let limit = Hypergroup::new(RawHypergroup::new(k, inv, table))?;
    let projections = (0..d.node_count())
        .map(|i| {
            let map = members.iter().map(|t| t[i]).collect();
            Morphism::new(limit.clone(), d.object(i).clone(), map)
                .expect("a restricted coordinate projection is a morphism")
        })
        .collect();
    Ok((limit, projections))
}

/// Colimit of an injective diagram of commutative hypergroups: the disjoint
/// union modulo `x_i ∼ x_j` when `φ_ik(x_i) = φ_jk(x_j)` for some common
/// target `k`, with the representative-pushing operation. Returns the
/// colimit and the injections `ψ_i`.
pub fn directed_colimit(d: &DirectedDiagram) -> Result<(Hypergroup, Vec<Morphism>), HgError> {
    if d.objects().iter().any(|g| !g.is_commutative()) {
        return Err(HgError::RequiresCommutative("directed_colimit"));
    }
    let mut offsets = Vec::with_capacity(d.node_count());
    let mut total = 0usize;
    for g in d.objects() {
        offsets.push(total);
        total += g.order();
    }
    let node_of = |global: usize| -> (usize, ElementId) {
        let i = offsets
            .iter()
            .rposition(|&o| o <= global)
            .expect("offsets start at 0");
        (i, global - offsets[i])
    };
    // The defining relation; directedness and commuting triangles make it an
    // equivalence, which the class extraction below double-checks.
    let related = |a: usize, b: usize| -> bool {
        let (i, x) = node_of(a);
        let (j, y) = node_of(b);
        d.common_targets(i, j).iter().any(|&k| {
            d.arrow(i, k).unwrap().apply(x) == d.arrow(j, k).unwrap().apply(y)
        })
    };
    let mut class_of = vec![usize::MAX; total];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..total {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = (a..total).filter(|&b| related(a, b)).collect();
        for &b in &members {
            assert!(
                class_of[b] == usize::MAX,
                "the colimit relation must be an equivalence"
            );
            class_of[b] = id;
        }
        classes.push(members);
    }
    for a in 0..total {
        for b in 0..total {
            assert_eq!(
                related(a, b),
                class_of[a] == class_of[b],
                "the colimit relation must be transitive"
            );
        }
    }
    let k = classes.len();
    if k > MAX_ORDER {
        return Err(HgError::OrderOutOfRange(k));
    }
    let mut inv = Vec::with_capacity(k);
    for members in &classes {
        let targets: ElementSet = members
            .iter()
            .map(|&a| {
                let (i, x) = node_of(a);
                class_of[offsets[i] + d.object(i).inv(x)]
            })
            .collect();
        assert_eq!(targets.len(), 1, "class inverses must be well-defined");
        inv.push(targets.min_element().unwrap());
    }
    let mut table = vec![ElementSet::EMPTY; k * k];
    for (ci, members_i) in classes.iter().enumerate() {
        for (cj, members_j) in classes.iter().enumerate() {
            let mut cell = ElementSet::EMPTY;
            for &a in members_i {
                let (i, x) = node_of(a);
                for &b in members_j {
                    let (j, y) = node_of(b);
                    for &t in &d.common_targets(i, j) {
                        let xi = d.arrow(i, t).unwrap().apply(x);
                        let yj = d.arrow(j, t).unwrap().apply(y);
                        for w in d.object(t).mul(xi, yj).iter() {
                            cell.insert(class_of[offsets[t] + w]);
                        }
                    }
                }
            }
            table[ci * k + cj] = cell;
        }
    }
    let colimit = Hypergroup::new(RawHypergroup::new(k, inv, table))?;
    let injections = (0..d.node_count())
        .map(|i| {
            let map = d.object(i).elements().map(|x| class_of[offsets[i] + x]).collect();
            Morphism::new(d.object(i).clone(), colimit.clone(), map)
                .expect("a colimit injection is a morphism")
        })
        .collect();
    Ok((colimit, injections))
}
