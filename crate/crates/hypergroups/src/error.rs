use crate::check::CheckReport;
use crate::set::MAX_ORDER;

/// Errors shared across the library.
///
/// Structural problems (wrong dimensions, empty cells, bad permutations) are
/// reported with a dedicated variant; axiom failures carry the full
/// [`CheckReport`] so the violating witness survives the error path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HgError {
    #[error("carrier order must be in 1..={MAX_ORDER}, got {0}")]
    OrderOutOfRange(usize),

    #[error("inverse map has length {len}, expected {order}")]
    InvLength { len: usize, order: usize },

    #[error("inverse map is not a permutation of the carrier (value {value} at index {index})")]
    InvNotPermutation { index: usize, value: usize },

    #[error("operation table has {len} cells, expected {expected}")]
    TableShape { len: usize, expected: usize },

    #[error("operation table cell ({x}, {y}) is empty")]
    EmptyCell { x: usize, y: usize },

    #[error("operation table cell ({x}, {y}) contains element {value} outside the carrier")]
    CellOutOfRange { x: usize, y: usize, value: usize },

    #[error("hypergroup axioms fail: {0}")]
    AxiomsFail(CheckReport),

    #[error("relational conditions fail: {0}")]
    RelationalConditionsFail(CheckReport),

    #[error("relational identity must be element 0, got {0}")]
    RelationalIdentityNotZero(usize),

    #[error("not a group Cayley table: {0}")]
    NotAGroup(String),

    #[error("subcarrier is invalid: {0}")]
    InvalidSubCarrier(String),

    #[error("{0} is only defined for commutative hypergroups")]
    RequiresCommutative(&'static str),

    #[error("{0} requires a full morphism")]
    RequiresFullMorphism(&'static str),

    #[error("candidate map is not a morphism: {0}")]
    NotAMorphism(CheckReport),

    #[error("cannot compose: codomain of the first map differs from domain of the second")]
    ComposeMismatch,

    #[error("block inverses are not well-defined: block {block} has members with inverses in distinct blocks")]
    BlockInverseIllDefined { block: usize },

    #[error("diagram is invalid: {0}")]
    InvalidDiagram(String),

    #[error("sequence is invalid: {0}")]
    InvalidSequence(String),

    #[error("{0}")]
    Domain(String),

    #[error("enumeration order must be in 1..={cap}, got {order}")]
    EnumerationOrder { order: usize, cap: usize },

    #[error("canonical form is only computed for orders up to {cap}, got {order}")]
    CanonicalOrder { order: usize, cap: usize },
}
