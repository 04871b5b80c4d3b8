//! Instance generators, exhaustive enumeration, equivalence suites and the
//! counterexample search.

pub mod enumerate;
pub mod generate;
pub mod search;
pub mod suite;
pub mod witness;
