use std::fmt;

use crate::set::ElementId;

/// The rule a verifier found violated.
///
/// One flat enum serves every checker in the library so that reports can be
/// rendered and serialized uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `z ∈ x∗y` must force `x ∈ z∗r(y)` and `y ∈ r(x)∗z`.
    Reversibility,
    /// `1∗x = {x}`.
    Identity,
    /// Set-extended associativity `x∗(y∗z) = (x∗y)∗z`.
    Associativity,
    /// `x∗y = y∗x`.
    Commutativity,
    /// `1⁻¹ = 1`.
    IdentitySelfInverse,
    /// `(a⁻¹)⁻¹ = a`.
    InverseInvolution,
    /// `c ∈ a∗b` iff `c⁻¹ ∈ a⁻¹∗b⁻¹`.
    InverseMembership,
    /// `(a∗b)⁻¹ = b⁻¹∗a⁻¹` as sets.
    ProductInverse,
    /// Relational condition I (triple reversibility).
    RelReversibility,
    /// Relational condition II (`(x, i, y) ∈ Π` iff `x = y`).
    RelIdentity,
    /// Relational condition III (one-sided associativity of Π).
    RelAssociativity,
    /// Candidate map fails `c ∈ a∗b ⇒ f(c) ∈ f(a)∗f(b)`.
    MorphismCompat,
    /// Candidate map fails `f(a⁻¹) = f(a)⁻¹`.
    MorphismInverse,
    /// Candidate map fails `f(1) = 1`.
    MorphismIdentity,
    /// A multivalued operation produced an empty cell.
    EmptyCell,
    /// Bilinearity containment of composition fails.
    Bilinearity,
    /// A universal property has no mediating morphism.
    MediatingMissing,
    /// A universal property has several mediating morphisms.
    MediatingNotUnique,
    /// A projection/injection fails its compatibility equation.
    ConeCompatibility,
    /// Image of the incoming arrow differs from kernel of the outgoing one.
    Exactness,
    /// Consecutive arrows do not compose to zero.
    CompositeNotZero,
}

impl Rule {
    /// Stable kebab-case name used in machine-readable output.
    pub fn name(self) -> &'static str {
        match self {
            Rule::Reversibility => "reversibility",
            Rule::Identity => "identity",
            Rule::Associativity => "associativity",
            Rule::Commutativity => "commutativity",
            Rule::IdentitySelfInverse => "identity-self-inverse",
            Rule::InverseInvolution => "inverse-involution",
            Rule::InverseMembership => "inverse-membership",
            Rule::ProductInverse => "product-inverse",
            Rule::RelReversibility => "rel-reversibility",
            Rule::RelIdentity => "rel-identity",
            Rule::RelAssociativity => "rel-associativity",
            Rule::MorphismCompat => "morphism-compat",
            Rule::MorphismInverse => "morphism-inverse",
            Rule::MorphismIdentity => "morphism-identity",
            Rule::EmptyCell => "empty-cell",
            Rule::Bilinearity => "bilinearity",
            Rule::MediatingMissing => "mediating-missing",
            Rule::MediatingNotUnique => "mediating-not-unique",
            Rule::ConeCompatibility => "cone-compatibility",
            Rule::Exactness => "exactness",
            Rule::CompositeNotZero => "composite-not-zero",
        }
    }
}

/// A single violation: the rule, the lexicographically minimal witness tuple,
/// and a rendered explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub witness: Vec<ElementId>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (", self.rule.name())?;
        for (i, e) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "): {}", self.detail)
    }
}

/// Structured verdict emitted by every verifier: pass, or a list of
/// violations each carrying a minimal witness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    violations: Vec<Violation>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn push(&mut self, rule: Rule, witness: Vec<ElementId>, detail: impl Into<String>) {
        self.violations.push(Violation {
            rule,
            witness,
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            write!(f, "fail")?;
            for v in &self.violations {
                write!(f, "; {v}")?;
            }
            Ok(())
        }
    }
}
