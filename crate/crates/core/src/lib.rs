//! Module factorizations of a regular normal element `omega` over exact rings.
//!
//! Everything here works with free components: objects are pairs of matrices
//! `(D0, D1)` and all constructions reduce to exact linear algebra over a
//! central Euclidean subring.

#![no_std]

extern crate alloc;

pub mod adjoint;
pub mod cokfun;
mod error;
pub mod factorization;
pub mod gamma;
pub mod homotopy;
pub mod linsys;
pub mod matrix;
pub mod modules;
pub mod normal_form;
pub mod ring;
pub mod rings;

pub use error::{Error, Result};
pub use matrix::{MatOps, Matrix, TwistOps};
pub use ring::{EuclideanDomain, FactorRing, RingKind, RingOps, Twist};
