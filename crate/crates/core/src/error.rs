//! Crate-wide error type.

use crate::algebra::VarPair;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable labels differ: {0} vs {1}")]
    VarMismatch(VarPair, VarPair),

    #[error("duplicate Vandermonde parameter {0}: matrix is singular")]
    SingularVandermonde(i64),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("crossing index {0} out of range")]
    InvalidCrossing(usize),

    #[error("crossing {0} is singular; operation requires a transverse crossing")]
    SingularCrossing(usize),

    #[error("crossing {0} is already singular")]
    AlreadySingular(usize),

    #[error("diagram contains singular crossings")]
    SingularDiagram,

    #[error("crossing count {count} exceeds the configured cap {cap}")]
    CrossingCap { count: usize, cap: usize },

    #[error("minimum z-exponent {found} violates the floor -mu+1 = {floor}")]
    ZFloor { found: i64, floor: i64 },

    #[error("q = {q} is below the domain floor -mu+1 = {floor}")]
    QBelowFloor { q: i64, floor: i64 },

    #[error("under-determined system: n = {n} but q + mu = {need} rows are required")]
    UnderDetermined { n: usize, need: usize },

    #[error("monomial a^{k} z^{j} retains an imaginary part under the Kauffman substitution")]
    ImaginaryResidue { k: i64, j: i64 },

    #[error("no invariant family registered for mu = {0}")]
    MissingFamily(u32),

    #[error("evaluation at zero while negative exponents are present")]
    ZeroWithNegativeExponents,

    #[error("precision must be at least 64 bits, got {0}")]
    PrecisionTooLow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
