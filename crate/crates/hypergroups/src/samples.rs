//! Small standard instances used throughout the tests, docs, and CLI
//! fixtures.

use crate::construct::{chain_hypergroup, from_group};
use crate::hypergroup::Hypergroup;

/// The one-element hypergroup.
pub fn trivial() -> Hypergroup {
    from_group(&[vec![0]]).expect("the trivial group is a group")
}

/// The cyclic group of order `n` as a hypergroup.
pub fn cyclic(n: usize) -> Hypergroup {
    let cayley: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    from_group(&cayley).expect("cyclic tables are groups")
}

/// The Klein four-group as a hypergroup.
pub fn klein4() -> Hypergroup {
    let cayley: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    from_group(&cayley).expect("xor on two bits is a group")
}

/// The symmetric group on three letters as a hypergroup. Elements are
/// indexed identity, the two 3-cycles, then the three transpositions.
pub fn s3() -> Hypergroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 2, 0], // (123)
        [2, 0, 1], // (132)
        [1, 0, 2], // (12)
        [2, 1, 0], // (13)
        [0, 2, 1], // (23)
    ];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let cayley: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index_of([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect();
    from_group(&cayley).expect("permutation composition is a group")
}

/// The order-2 hypergroup with `g ∗ g = {1, g}`: the chain on one nonzero
/// element.
pub fn k2() -> Hypergroup {
    chain_hypergroup(1).expect("k = 1 is in range")
}

/// The chain hypergroup on `0 < a < b`.
pub fn v3() -> Hypergroup {
    chain_hypergroup(2).expect("k = 2 is in range")
}
