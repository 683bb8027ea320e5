//! Lattice size of lattice polygons and 3D lattice polytopes with respect to
//! the unit cube.
//!
//! For a finite set `P ⊂ ℤ^d`, `ls_□(P)` is the smallest `l` such that some
//! affine unimodular map sends `P` into `[0, l]^d`. This crate computes it
//! exactly in dimensions 2 and 3 by greedy width reduction, together with
//! the lattice width `w(P)`, the 3D invariant `w₂(P)` and a box
//! `[0, w] × [0, w₂] × [0, ls]` that is minimal in the product order. Every
//! answer carries a map that can be re-checked with exact integers.
//!
//! The [`generic`] module computes the same numbers by bounded enumeration
//! and serves as an independent check.
//!
//! ```
//! use cubesize::{lattice_size, LatticePolytope};
//!
//! let triangle = LatticePolytope::from_i64(&[[0, 0], [1, 0], [2, 3]]).unwrap();
//! let cert = lattice_size(&triangle).unwrap();
//! assert_eq!(cert.value, 2.into());
//! assert!(cert.verify(&triangle));
//! ```

pub mod error;
pub mod generic;
pub mod lattice;
pub mod matrix;
pub mod reduce2d;
pub mod reduce3d;
pub mod sample;

pub use error::{Error, Result};
pub use lattice::{
    reduce_dimension, AffineUnimodularMap, BoxCertificate, DimensionReduction, Direction,
    LatticePolytope, LatticeVector, LowerDimensional, SizeCertificate, WidthProfile,
};
pub use matrix::IntMatrix;
pub use reduce2d::{lattice_size_2d, minimal_rectangle_2d, width_2d};
pub use reduce3d::{
    lattice_size_3d, lattice_size_3d_with, minimal_box_3d, minimal_box_3d_with, w2_3d, width_3d,
    Mode3D,
};

use num_bigint::BigInt;

/// Minimal box in the product order for a polytope of dimension 1, 2 or 3.
/// The shape is ascending.
pub fn minimal_box(polytope: &LatticePolytope) -> Result<BoxCertificate> {
    match polytope.dim() {
        1 => lattice::box_1d(polytope),
        2 => minimal_rectangle_2d(polytope),
        3 => minimal_box_3d(polytope),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

pub fn lattice_size(polytope: &LatticePolytope) -> Result<SizeCertificate> {
    match polytope.dim() {
        1 => SizeCertificate::from_map(polytope, AffineUnimodularMap::identity(1), 0),
        2 => lattice_size_2d(polytope),
        3 => lattice_size_3d(polytope),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

pub fn lattice_width(polytope: &LatticePolytope) -> Result<BigInt> {
    Ok(minimal_box(polytope)?.shape[0].clone())
}
