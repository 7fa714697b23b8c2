//! Computational algebra for finite hypergroups: multivalued group-like
//! structures with an identity, an inverse map, reversibility, and
//! set-extended associativity.
//!
//! The crate provides
//!
//! - carrier representation, axiom verification, and Marshall's relational
//!   presentation ([`hypergroup`], [`relational`]);
//! - every standard construction: groups as hypergroups, coset spaces, the
//!   chain of a linear order, products, direct sums, generated subcarriers,
//!   quotients, filtered limits and directed colimits ([`construct`],
//!   [`diagram`]);
//! - morphisms with kernels, images, cokernels, Hom enumeration,
//!   isomorphism search, and the canonical first isomorphism ([`morphism`]);
//! - the multivalued Hom star, bilinearity of composition, universal
//!   properties, and exactness checks ([`cat`]);
//! - exhaustive enumeration of isomorphism classes and counterexample
//!   searches ([`enumerate`]).
//!
//! Everything is verified on concrete instances by brute force; no claimed
//! identity is assumed without a checker behind it.

pub mod cat;
pub mod check;
pub mod construct;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod hypergroup;
pub mod morphism;
pub mod relational;
pub mod samples;
pub mod set;

pub use check::{CheckReport, Rule, Violation};
pub use error::HgError;
pub use hypergroup::{Hypergroup, RawHypergroup, SipVerdict};
pub use morphism::Morphism;
pub use relational::RelationalHypergroup;
pub use set::{ElementId, ElementSet, MAX_ORDER};
