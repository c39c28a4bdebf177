//! Exact HOMFLYPT and Dubrovnik/Kauffman polynomials of small links, plus a
//! certified pipeline approximating their coefficients by finite-type
//! invariants: substitution invariants w_{Nq}, intermediates B_{mj}, exact
//! Vandermonde recovery, and the complex weight sequence lambda_{m,n}.

pub mod algebra;
pub mod approx;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod skein;
pub mod verify;

pub use error::{Error, Result};
