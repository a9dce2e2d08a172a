//! Cyclic and affine Tamari lattices in all of their incarnations: translation-invariant
//! total orders, translation-invariant binary trees, annular arc diagrams, torsion classes,
//! tagged-arc triangulations, noncrossing partitions and ornamentations.
//!
//! Everything is periodic with period `n`; values are immutable and every operation is pure.

pub mod arcdiag;
pub mod chains;
mod error;
pub mod lattice;
pub mod ncpart;
pub mod repfan;
pub mod tibit;
pub mod tito;

pub use arcdiag::{Arc, ArcSet, Variant};
pub use error::{Error, Result};
pub use lattice::LatticeModel;
pub use ncpart::{NcPartition, QPoly, Tincp};
pub use tibit::Tibit;
pub use tito::{Kind, ReflectionIndex, Tito, Wall, WallKind};

/// Largest supported period.
pub const MAX_N: usize = 7;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (2..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::BadN(n))
    }
}

/// Residue of `x` in `1..=n`.
pub fn rep(x: i64, n: usize) -> i64 {
    let n = n as i64;
    (x - 1).rem_euclid(n) + 1
}
