use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{AffineUnimodularMap, BoxCertificate, LatticePolytope, LatticeVector};
use crate::error::Result;
use crate::matrix::IntMatrix;

/// Result of [`reduce_dimension`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionReduction {
    FullDimensional,
    Lower(LowerDimensional),
}

/// A polytope whose affine hull is a proper subspace, rewritten in the
/// coordinates of that subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerDimensional {
    /// Dimension of the affine hull (0 for a single point).
    pub affine_dim: usize,
    /// The first `max(affine_dim, 1)` coordinates of `map(P)`. A point becomes
    /// the origin of `ℤ¹`.
    pub polytope: LatticePolytope,
    /// Unimodular map sending `P` into the subspace where every coordinate
    /// past `affine_dim` is zero.
    pub map: AffineUnimodularMap,
}

/// Detects lower-dimensional input. Uses unimodular row operations on the
/// matrix of edge vectors `x_i - x_0` (one per column) until only the first
/// `rank` rows are nonzero; the accumulated row operations form the map.
pub fn reduce_dimension(polytope: &LatticePolytope) -> DimensionReduction {
    let d = polytope.dim();
    let pts = polytope.points();
    let base = &pts[0];
    let mut edges: Vec<Vec<BigInt>> = (0..d)
        .map(|i| pts[1..].iter().map(|p| &p[i] - &base[i]).collect())
        .collect();
    let mut ops = IntMatrix::identity(d).into_rows();
    let cols = pts.len() - 1;

    let mut rank = 0;
    for col in 0..cols {
        if rank == d {
            break;
        }
        loop {
            // smallest nonzero pivot candidate at or below `rank`
            let pivot = (rank..d)
                .filter(|&r| !edges[r][col].is_zero())
                .min_by(|&a, &b| edges[a][col].abs().cmp(&edges[b][col].abs()));
            let Some(pivot) = pivot else { break };
            edges.swap(rank, pivot);
            ops.swap(rank, pivot);
            let mut done = true;
            for r in rank + 1..d {
                if edges[r][col].is_zero() {
                    continue;
                }
                let q = edges[r][col].div_floor(&edges[rank][col]);
                for rows in [&mut edges, &mut ops] {
                    let (top, rest) = rows.split_at_mut(r);
                    for (x, y) in rest[0].iter_mut().zip(&top[rank]) {
                        *x -= &q * y;
                    }
                }
                if !edges[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                rank += 1;
                break;
            }
        }
    }

    if rank == d {
        return DimensionReduction::FullDimensional;
    }

    let linear =
        AffineUnimodularMap::linear(IntMatrix::from_rows(ops).expect("square by construction"))
            .expect("row operations are unimodular");
    let shift: Vec<BigInt> = linear
        .apply_unchecked(base)
        .into_coords()
        .into_iter()
        .map(|x| -x)
        .collect();
    let map = AffineUnimodularMap::translation_only(LatticeVector::from_raw(shift))
        .compose(&linear)
        .expect("dimensions agree");

    let keep = rank.max(1);
    let projected = pts
        .iter()
        .map(|p| {
            let img = map.apply_unchecked(p);
            debug_assert!(img.coords()[rank..].iter().all(Zero::is_zero));
            LatticeVector::from_raw(img.coords()[..keep].to_vec())
        })
        .collect();
    let lower = LatticePolytope::new(projected).expect("nonempty and uniform");
    let (lower, _) = lower.normalize_translation();

    DimensionReduction::Lower(LowerDimensional {
        affine_dim: rank,
        polytope: lower,
        map,
    })
}

impl LowerDimensional {
    /// Lifts a box certificate of the reduced polytope back to the original
    /// ambient space. The zero-width coordinates come first, so the shape
    /// stays ascending.
    pub fn lift_box(
        &self,
        original: &LatticePolytope,
        lower: &BoxCertificate,
    ) -> Result<BoxCertificate> {
        let d = original.dim();
        let k = self.polytope.dim();
        let inner = lower.map.extend_to(d)?;
        let order: Vec<usize> = (k..d).chain(0..k).collect();
        let perm = AffineUnimodularMap::linear(IntMatrix::permutation(&order))?;
        let map = perm.compose(&inner.compose(&self.map)?)?;
        let cert = BoxCertificate::from_map(original, map)?;
        debug_assert_eq!(
            cert.shape[d - k..],
            lower.shape[..],
            "lifting must preserve the reduced shape"
        );
        Ok(cert)
    }
}

/// Box certificate for a full-dimensional 1D polytope or the reduced image of
/// a point: the identity up to translation.
pub(crate) fn box_1d(polytope: &LatticePolytope) -> Result<BoxCertificate> {
    BoxCertificate::from_map(polytope, AffineUnimodularMap::identity(polytope.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_reduces_to_its_lattice_length() {
        let p = LatticePolytope::from_i64(&[[0, 0, 0], [2, 4, 6]]).unwrap();
        let DimensionReduction::Lower(low) = reduce_dimension(&p) else {
            panic!("segment is not full-dimensional");
        };
        assert_eq!(low.affine_dim, 1);
        assert_eq!(low.polytope.dim(), 1);
        assert_eq!(low.polytope.e_box(), 2.into());
        let image = p.apply_map(&low.map).unwrap();
        assert!(image
            .points()
            .iter()
            .all(|x| x[1].is_zero() && x[2].is_zero()));
    }

    #[test]
    fn tetrahedron_is_full_dimensional() {
        let p = LatticePolytope::from_i64(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(reduce_dimension(&p), DimensionReduction::FullDimensional);
    }

    #[test]
    fn planar_quadrilateral_becomes_two_dimensional() {
        let l = 3;
        let p = LatticePolytope::from_i64(&[[0, 0, l], [l, 0, 0], [0, l, l], [l, l, 0]]).unwrap();
        let DimensionReduction::Lower(low) = reduce_dimension(&p) else {
            panic!("all points satisfy x + z = l");
        };
        assert_eq!(low.affine_dim, 2);
        assert_eq!(low.polytope.dim(), 2);
        let image = p.apply_map(&low.map).unwrap();
        assert!(image.points().iter().all(|x| x[2].is_zero()));
        // lattice-equivalent to a 3x3 square
        assert_eq!(low.polytope.deduped().len(), 4);
    }

    #[test]
    fn point_reduces_to_origin_of_z1() {
        let p = LatticePolytope::from_i64(&[[5, 5, 5], [5, 5, 5]]).unwrap();
        let DimensionReduction::Lower(low) = reduce_dimension(&p) else {
            panic!("a point is not full-dimensional");
        };
        assert_eq!(low.affine_dim, 0);
        assert_eq!(
            low.polytope.points()[0],
            LatticeVector::from_i64(&[0]).unwrap()
        );
    }

    #[test]
    fn lifted_box_puts_flat_coordinates_first() {
        let p = LatticePolytope::from_i64(&[[1, 1, 1], [3, 5, 7]]).unwrap();
        let DimensionReduction::Lower(low) = reduce_dimension(&p) else {
            unreachable!()
        };
        let b = box_1d(&low.polytope).unwrap();
        let lifted = low.lift_box(&p, &b).unwrap();
        assert_eq!(
            lifted.shape,
            vec![BigInt::zero(), BigInt::zero(), BigInt::from(2)]
        );
        assert!(lifted.verify(&p));
    }
}
