use thiserror::Error;

use crate::complex::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is not in the ground set")]
    VertexOutsideGround { vertex: u32 },
    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(Face),
    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },
    #[error("ground sets overlap at vertex {vertex}")]
    OverlappingGround { vertex: u32 },
    #[error("apex {apex} already lies in the ground set")]
    ApexCollision { apex: u32 },
    #[error("coloring is not completely balanced")]
    NotCompletelyBalanced,
    #[error("operation requires a complex with at least one nonempty face")]
    DegenerateComplex,
    #[error("subcomplex is not contained in the ambient complex")]
    NotASubcomplex,
    #[error("elements {lower} and {upper} are not comparable as lower <= upper")]
    IncomparableEndpoints { lower: String, upper: String },
    #[error("unknown poset element `{0}`")]
    UnknownElement(String),
    #[error("poset identifier `{0}` occurs in both operands")]
    IdentifierCollision(String),
    #[error("duplicate poset identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("order relation contains a cycle through `{0}`")]
    CyclicOrder(String),
    #[error("poset is not bounded")]
    NotBounded,
    #[error("poset is not semipure")]
    NotSemipure,
    #[error("operation requires field coefficients, got {0}")]
    NonFieldCoefficient(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("ideal generators have mixed degrees")]
    MixedDegrees,
    #[error("{what}: {value} exceeds bound {bound}")]
    Bound {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("time budget exhausted")]
    BudgetExhausted,
    #[error("generator failed after {attempts} attempts")]
    GeneratorExhausted { attempts: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
