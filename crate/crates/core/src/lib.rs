//! Exact computations on Grassmannians 𝔾(m, m+n): canonical filtrations
//! U_l(sl(V))·L^d inside Sym^d(∧^m V), highest-weight decompositions of the
//! modules involved, and the Koszul incidence complex of O(d) on ℙ¹.
//!
//! Everything is finite-dimensional linear algebra over ℚ.

pub mod cli;
pub mod error;
pub mod exactla;
pub mod filtration;
pub mod koszul;
pub mod multipoly;
pub mod plucker;
pub mod reptheory;

pub use error::{Error, Result};
