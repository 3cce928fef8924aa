//! Generator matrices of digital nets and sequences in base 2.
//!
//! The crate covers four layers:
//!
//! - [`matrix`]: bit-packed square matrices over F_2 (dimension at most 64),
//!   the structural matrices `I`, `J` and the Pascal matrix `P`, products,
//!   rank, inverse and unit-triangular LU factorization.
//! - [`net`]: point generation for digital nets and digital sequence prefixes
//!   with exact dyadic coordinates.
//! - [`verify`]: the t-value via the rank criterion, a literal
//!   elementary-interval counting oracle, per-depth sequence checks and the
//!   L2 star discrepancy.
//! - [`characterize`]: decomposition, enumeration and sampling of all
//!   generator triples of digital (0,m,3)-nets and decision procedures for
//!   (0,1)- and (0,2)-sequence prefixes.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod characterize;
mod error;
pub mod matrix;
pub mod net;
pub mod verify;

pub use error::Error;
pub use matrix::F2Matrix;
pub use net::{Dyadic, DyadicPoint, GeneratorTuple, MatrixPrefix, NetPoints};
pub use verify::TReport;
