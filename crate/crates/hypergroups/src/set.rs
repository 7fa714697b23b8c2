use std::fmt;

/// Index of a carrier element. The identity element is always index 0.
pub type ElementId = usize;

/// Largest supported carrier order, fixed by the bitset representation.
pub const MAX_ORDER: usize = 64;

/// A subset of a carrier of order at most [`MAX_ORDER`], one bit per element.
///
/// Every value stored in an operation table is nonempty; emptiness is still
/// representable so that verifiers and builders can talk about intermediate
/// states.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn singleton(e: ElementId) -> Self {
        debug_assert!(e < MAX_ORDER);
        ElementSet(1 << e)
    }

    /// The whole carrier `{0, .., order-1}`.
    pub fn full(order: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&order));
        if order == MAX_ORDER {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << order) - 1)
        }
    }

    pub fn from_elements(elems: &[ElementId]) -> Self {
        let mut s = Self::EMPTY;
        for &e in elems {
            s.insert(e);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn insert(&mut self, e: ElementId) {
        debug_assert!(e < MAX_ORDER);
        self.0 |= 1 << e;
    }

    pub fn remove(&mut self, e: ElementId) {
        self.0 &= !(1 << e);
    }

    pub fn contains(self, e: ElementId) -> bool {
        e < MAX_ORDER && self.0 & (1 << e) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_element(self) -> Option<ElementId> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = ElementId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Image of the set under an element map.
    pub fn map(self, f: impl Fn(ElementId) -> ElementId) -> Self {
        let mut out = Self::EMPTY;
        for e in self.iter() {
            out.insert(f(e));
        }
        out
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = ElementSet::EMPTY;
        assert!(s.is_empty());
        s.insert(3);
        s.insert(0);
        assert_eq!(s.len(), 2);
        assert!(s.contains(0) && s.contains(3) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3]);
        assert_eq!(s.min_element(), Some(0));
        assert_eq!(format!("{s}"), "{0,3}");
        s.remove(0);
        assert_eq!(s, ElementSet::singleton(3));
    }

    #[test]
    fn full_set() {
        assert_eq!(ElementSet::full(3).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(ElementSet::full(MAX_ORDER).len(), MAX_ORDER);
    }

    proptest! {
        #[test]
        fn union_intersect_laws(a in any::<u64>(), b in any::<u64>()) {
            let (sa, sb) = (ElementSet::from_bits(a), ElementSet::from_bits(b));
            prop_assert!(sa.intersect(sb).is_subset(sa.union(sb)));
            prop_assert_eq!(sa.union(sb).len() + sa.intersect(sb).len(), sa.len() + sb.len());
            prop_assert!(sa.difference(sb).intersect(sb).is_empty());
        }
    }
}
