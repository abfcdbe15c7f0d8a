//! Crate-wide error type. Structural failures name the witnessing tuple;
//! axiom scans go through `ValidationReport` instead.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplication table is not associative: ({0} * {1}) * {2} != {0} * ({1} * {2})")]
    NotAssociative(String, String, String),

    #[error("no two-sided unit in multiplication table (candidate {0} fails at {1})")]
    NoUnit(String, String),

    #[error("element {0} has no two-sided inverse")]
    NoInverse(String),

    #[error("cells are not composable: {0}")]
    NotComposable(String),

    #[error("source/target mismatch: {0}")]
    SourceTargetMismatch(String),

    #[error("shapes do not match: {0}")]
    ShapeMismatch(String),

    #[error("search budget exceeded after {visited} candidates (cap {cap})")]
    SearchBudgetExceeded { visited: u64, cap: u64 },

    #[error("pseudofunctor is not unital: {0}")]
    NotUnital(String),

    #[error("not a group homomorphism: phi_{0} . phi_{1} != phi_{2}")]
    NotHomomorphism(String, String, String),

    #[error("action is not strict: {0}")]
    NotStrictAction(String),

    #[error("enumeration produced no 0-cells: {0}")]
    EmptyEnumeration(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
