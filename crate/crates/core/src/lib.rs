//! Generalized Turán numbers `ex(n, K_r, {P_k, K_m})`.
//!
//! The crate builds the extremal graph families for a forbidden path `P_k`
//! and clique `K_m`, evaluates the closed-form clique counts and case
//! predicates, and checks them against exhaustive, isomorph-free searches
//! over small graphs.
//!
//! Closed forms in [`formulas`] are generic over the integer type through
//! the [`Count`] trait; the aliases below fix the common choices.

pub mod canon;
pub mod constructions;
pub mod count;
pub mod detect;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod report;

pub use canon::{canonical, canonical_form, CanonicalCode, CanonicalForm};
pub use count::Count;
pub use detect::classify::{classify_structure, ClassTag, ClassificationOutcome};
pub use formulas::{CaseLabel, CaseTag, TheoremParams};
pub use graph::{Graph, GraphError, Primitive, MAX_VERTICES};
pub use oracle::{EnumerationConfig, ExtremalResult};
pub use report::VerificationRow;

/// Clique counts of explicit graphs (at most `C(64, 32)`, which fits).
pub type Clique = u64;
/// 128-bit closed-form counts.
pub type WideCount = u128;
/// Arbitrary-precision closed-form counts.
pub type BigCount = num_bigint::BigUint;
/// Exact rational for threshold comparisons.
pub type Rational = num_rational::Ratio<u64>;
