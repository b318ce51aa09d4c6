//! Search-free certificate checking and brute-force reference oracles.

mod canonical;
mod check;
pub mod oracle;

pub use canonical::{canonical_glued_subdivision, CanonVertex, CanonicalGluedSubdivision};
pub use check::{verify_certificate, Check, Violation};
pub use oracle::{clique_oracle, expectation_oracle, forbidden_expectation_oracle, OracleError};
