//! Combinatorial models of the real moduli space of stable genus-0 curves:
//! the coset complexes B(n), the associahedral CW model, exact first
//! homology ranks, and spectral gaps of vertex links.

pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod moduli;
pub mod polygon;
pub mod spectra;
pub mod symmetry;

pub use error::{Error, Result};
