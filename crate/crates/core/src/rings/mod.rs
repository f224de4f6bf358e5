//! The four concrete ring families.

pub mod fpx;
pub mod gf;
pub mod group;
pub mod integers;
pub mod skew;

pub use fpx::{FpPoly, FpX, PolyFp};
pub use gf::{Gf, GfEl};
pub use group::{GroupEl, GroupRingZCn};
pub use integers::{Integers, Zz};
pub use skew::{SkewGf, SkewPoly};
