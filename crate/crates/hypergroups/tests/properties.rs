//! Cross-module property tests over the enumerated classes.

use proptest::prelude::*;

use hypergroups::enumerate::{canonical_form, enumerate_hypergroups, relabel};
use hypergroups::morphism::are_isomorphic;

fn classes() -> &'static [hypergroups::Hypergroup] {
    use std::sync::OnceLock;
    static CLASSES: OnceLock<Vec<hypergroups::Hypergroup>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        (1..=4)
            .flat_map(|n| enumerate_hypergroups(n, false).unwrap())
            .collect()
    })
}

proptest! {
    /// Relabeling never changes the canonical form, and the relabeled copy
    /// is isomorphic to the original.
    #[test]
    fn canonical_form_relabel_invariant(class in 0usize..115, seed in any::<u64>()) {
        let all = classes();
        let g = &all[class % all.len()];
        let n = g.order();
        // identity-fixing permutation from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (2..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = 1 + (state as usize) % i;
            perm.swap(i, j);
        }
        let relabeled = relabel(g, &perm);
        prop_assert!(relabeled.verify_axioms().passed());
        prop_assert_eq!(canonical_form(&relabeled).unwrap(), canonical_form(g).unwrap());
        prop_assert!(are_isomorphic(g, &relabeled).is_some());
    }

    /// The relational presentation round-trips bit-exactly.
    #[test]
    fn relational_round_trip(class in 0usize..115) {
        let all = classes();
        let g = &all[class % all.len()];
        let back = g.to_relational().to_hypergroup().unwrap();
        prop_assert_eq!(back.raw(), g.raw());
    }

    /// The opposite table is a hypergroup and the inverse map is an
    /// isomorphism onto it.
    #[test]
    fn opposite_carries_axioms(class in 0usize..115) {
        let all = classes();
        let g = &all[class % all.len()];
        let op = g.opposite();
        prop_assert!(op.verify_axioms().passed());
        let inv_map: Vec<usize> = g.elements().map(|a| g.inv(a)).collect();
        prop_assert!(hypergroups::morphism::check_morphism(g, &op, &inv_map).passed());
    }
}
