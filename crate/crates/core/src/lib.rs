//! Simplicial complexes, posets and exact homology, with several independent
//! tests for sequential Cohen–Macaulayness.

pub mod complex;
pub mod error;
pub mod format;
pub mod harness;
pub mod homology;
pub mod linalg;
pub mod poset;
pub mod scm;
pub mod sr;

pub use complex::{Face, RelativePair, SimplicialComplex, VertexColoring};
pub use error::{Error, Result};
pub use homology::{Coefficient, HomologyProfile};
pub use poset::{FinitePoset, RankProfile};
