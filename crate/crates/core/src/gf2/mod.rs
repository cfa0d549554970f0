//! Linear algebra and polynomial arithmetic over GF(2).
//!
//! Rows and polynomials are packed into `u64` words, and every row operation
//! is a word-parallel XOR.

mod bitvec;
mod matrix;
mod poly;

pub use bitvec::BitVec;
pub use matrix::{Matrix, Rref};
pub use poly::{chebyshev2, Poly2};
