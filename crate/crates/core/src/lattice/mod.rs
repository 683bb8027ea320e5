//! Lattice points, polytopes stored as point sets, widths, and unimodular maps.

mod map;
mod reduce;

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};

pub use map::AffineUnimodularMap;
pub(crate) use reduce::box_1d;
pub use reduce::{reduce_dimension, DimensionReduction, LowerDimensional};

/// A point or vector of `ℤ^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(coords))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![BigInt::zero(); d.max(1)])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn dot(&self, other: &[BigInt]) -> BigInt {
        matrix::dot(&self.0, other)
    }

    pub(crate) fn from_raw(coords: Vec<BigInt>) -> Self {
        debug_assert!(!coords.is_empty());
        Self(coords)
    }
}

impl Index<usize> for LatticeVector {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A primitive nonzero integer vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(Vec<BigInt>);

impl Direction {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if !matrix::is_primitive(&coords) {
            return Err(Error::NotPrimitive);
        }
        Ok(Self(coords))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    /// Flips the sign so the first nonzero coordinate is positive.
    pub fn canonical(self) -> Self {
        match self.0.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => Self(self.0.into_iter().map(|x| -x).collect()),
            _ => self,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.0
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_positive())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LatticeVector::from_raw(self.0.clone()).fmt(f)
    }
}

/// A lattice polytope given as a finite point set; only its convex hull
/// matters to every computation here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    points: Vec<LatticeVector>,
    dim: usize,
}

impl LatticePolytope {
    pub fn new(points: Vec<LatticeVector>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPolytope)?.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(Self { points, dim })
    }

    pub fn from_i64<R: AsRef<[i64]>>(points: &[R]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| LatticeVector::from_i64(p.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Sorted, deduplicated copy of the point list.
    pub fn deduped(&self) -> Self {
        let mut points = self.points.clone();
        points.sort();
        points.dedup();
        Self {
            points,
            dim: self.dim,
        }
    }

    /// `Δ_P(f)`: max minus min of the functional `f` over the points. `f`
    /// need not be primitive.
    pub fn width(&self, f: &[BigInt]) -> Result<BigInt> {
        if f.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: f.len(),
            });
        }
        Ok(self.width_unchecked(f))
    }

    pub fn width_i64(&self, f: &[i64]) -> Result<BigInt> {
        let f: Vec<BigInt> = f.iter().map(|&x| BigInt::from(x)).collect();
        self.width(&f)
    }

    pub(crate) fn width_unchecked(&self, f: &[BigInt]) -> BigInt {
        let mut values = self.points.iter().map(|p| p.dot(f));
        let first = values.next().expect("polytope is nonempty");
        let (lo, hi) = values.fold((first.clone(), first), |(lo, hi), v| {
            if v < lo {
                (v, hi)
            } else if v > hi {
                (lo, v)
            } else {
                (lo, hi)
            }
        });
        hi - lo
    }

    /// Width along the `i`-th coordinate axis.
    pub fn coordinate_width(&self, i: usize) -> BigInt {
        let mut it = self.points.iter().map(|p| &p[i]);
        let first = it.next().expect("polytope is nonempty");
        let (lo, hi) = it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)));
        hi - lo
    }

    pub fn coordinate_widths(&self) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.coordinate_width(i)).collect()
    }

    /// `e_□(P)`: the largest coordinate width.
    pub fn e_box(&self) -> BigInt {
        self.coordinate_widths()
            .into_iter()
            .max()
            .expect("dimension is at least 1")
    }

    pub fn min_corner(&self) -> LatticeVector {
        let coords = (0..self.dim)
            .map(|i| {
                self.points
                    .iter()
                    .map(|p| &p[i])
                    .min()
                    .expect("polytope is nonempty")
                    .clone()
            })
            .collect();
        LatticeVector(coords)
    }

    pub fn translate(&self, shift: &[BigInt]) -> Result<Self> {
        if shift.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: shift.len(),
            });
        }
        let points = self
            .points
            .iter()
            .map(|p| LatticeVector(p.0.iter().zip(shift).map(|(x, s)| x + s).collect()))
            .collect();
        Ok(Self {
            points,
            dim: self.dim,
        })
    }

    /// Shifts the polytope so that every coordinate minimum is zero. Returns
    /// the shifted polytope and the shift that was added.
    pub fn normalize_translation(&self) -> (Self, LatticeVector) {
        let shift: Vec<BigInt> = self.min_corner().0.into_iter().map(|x| -x).collect();
        let moved = self.translate(&shift).expect("dimensions agree");
        (moved, LatticeVector(shift))
    }

    pub fn apply_map(&self, map: &AffineUnimodularMap) -> Result<Self> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: map.dim(),
            });
        }
        let points = self.points.iter().map(|p| map.apply_unchecked(p)).collect();
        Ok(Self {
            points,
            dim: self.dim,
        })
    }

    /// Coordinate widths sorted ascending, with the coordinate permutation
    /// that realizes that order. Equal widths keep their original order.
    pub fn width_profile(&self) -> WidthProfile {
        let widths = self.coordinate_widths();
        let mut order: Vec<usize> = (0..self.dim).collect();
        order.sort_by(|&a, &b| widths[a].cmp(&widths[b]));
        let sorted = order.iter().map(|&i| widths[i].clone()).collect();
        WidthProfile {
            widths: sorted,
            perm: AffineUnimodularMap::linear(IntMatrix::permutation(&order))
                .expect("permutation matrices are unimodular"),
            order,
        }
    }

    /// Whether every point lies in the box `[0, b_0] × … × [0, b_{d-1}]`.
    pub fn fits_in_box(&self, bounds: &[BigInt]) -> bool {
        bounds.len() == self.dim
            && self.points.iter().all(|p| {
                p.0.iter()
                    .zip(bounds)
                    .all(|(x, b)| !x.is_negative() && x <= b)
            })
    }
}

/// Sorted coordinate widths `l_1 ≤ … ≤ l_d` and the permutation realizing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthProfile {
    pub widths: Vec<BigInt>,
    /// Permutation map: coordinate `i` of the image is coordinate `order[i]`
    /// of the input.
    pub perm: AffineUnimodularMap,
    pub order: Vec<usize>,
}

impl WidthProfile {
    pub fn max(&self) -> &BigInt {
        self.widths.last().expect("dimension is at least 1")
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(i, &o)| i == o)
    }
}

/// An invariant value together with the map that realizes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeCertificate {
    pub value: BigInt,
    pub map: AffineUnimodularMap,
    pub image_widths: Vec<BigInt>,
    pub iterations: usize,
}

impl SizeCertificate {
    /// Builds a certificate from a map, normalizing its translation so the
    /// image starts at the origin.
    pub fn from_map(
        polytope: &LatticePolytope,
        map: AffineUnimodularMap,
        iterations: usize,
    ) -> Result<Self> {
        let map = map.normalized_for(polytope)?;
        let image = polytope.apply_map(&map)?;
        let image_widths = image.coordinate_widths();
        let value = image_widths.iter().max().cloned().unwrap_or_default();
        Ok(Self {
            value,
            map,
            image_widths,
            iterations,
        })
    }

    /// Re-checks the certificate against the polytope it claims to describe.
    pub fn verify(&self, polytope: &LatticePolytope) -> bool {
        let Ok(image) = polytope.apply_map(&self.map) else {
            return false;
        };
        let bounds = vec![self.value.clone(); polytope.dim()];
        image.fits_in_box(&bounds)
            && image.coordinate_widths() == self.image_widths
            && self.image_widths.iter().max() == Some(&self.value)
    }
}

/// A box shape `[0, s_0] × … × [0, s_{d-1}]` with `s` ascending, and a map
/// placing the polytope inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCertificate {
    pub shape: Vec<BigInt>,
    pub map: AffineUnimodularMap,
}

impl BoxCertificate {
    pub fn from_map(polytope: &LatticePolytope, map: AffineUnimodularMap) -> Result<Self> {
        let map = map.normalized_for(polytope)?;
        let shape = polytope.apply_map(&map)?.coordinate_widths();
        Ok(Self { shape, map })
    }

    pub fn verify(&self, polytope: &LatticePolytope) -> bool {
        polytope
            .apply_map(&self.map)
            .is_ok_and(|image| image.fits_in_box(&self.shape))
            && self.shape.windows(2).all(|w| w[0] <= w[1])
    }
}
