use num_bigint::BigInt;
use num_traits::Signed;

use super::{LatticePolytope, LatticeVector};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `x ↦ A x + v` with `A` an integer matrix of determinant ±1 and `v` integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineUnimodularMap {
    matrix: IntMatrix,
    translation: LatticeVector,
}

impl AffineUnimodularMap {
    pub fn new(matrix: IntMatrix, translation: LatticeVector) -> Result<Self> {
        let det = matrix.determinant()?;
        if matrix.ncols() != translation.dim() {
            return Err(Error::DimensionMismatch {
                expected: matrix.ncols(),
                found: translation.dim(),
            });
        }
        if det.abs() != BigInt::from(1) {
            return Err(Error::NotUnimodular {
                det: det.to_string(),
            });
        }
        Ok(Self {
            matrix,
            translation,
        })
    }

    pub fn linear(matrix: IntMatrix) -> Result<Self> {
        let d = matrix.ncols();
        Self::new(matrix, LatticeVector::zero(d))
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R], translation: &[i64]) -> Result<Self> {
        Self::new(
            IntMatrix::from_i64_rows(rows)?,
            LatticeVector::from_i64(translation)?,
        )
    }

    pub fn identity(d: usize) -> Self {
        Self {
            matrix: IntMatrix::identity(d),
            translation: LatticeVector::zero(d),
        }
    }

    pub fn translation_only(shift: LatticeVector) -> Self {
        Self {
            matrix: IntMatrix::identity(shift.dim()),
            translation: shift,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn translation(&self) -> &LatticeVector {
        &self.translation
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.determinant().expect("square by construction")
    }

    pub fn apply(&self, x: &LatticeVector) -> Result<LatticeVector> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &LatticeVector) -> LatticeVector {
        let coords = self
            .matrix
            .rows()
            .iter()
            .zip(self.translation.coords())
            .map(|(row, t)| x.dot(row) + t)
            .collect();
        LatticeVector::from_raw(coords)
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &AffineUnimodularMap) -> Result<AffineUnimodularMap> {
        if self.dim() != inner.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: inner.dim(),
            });
        }
        let matrix = self.matrix.mul(&inner.matrix)?;
        let translation = self.apply_unchecked(&inner.translation);
        Ok(Self {
            matrix,
            translation,
        })
    }

    /// Exact inverse `y ↦ A⁻¹ (y − v)`; `A⁻¹ = det(A) · adj(A)` since
    /// `det(A) = ±1`.
    pub fn invert(&self) -> AffineUnimodularMap {
        let det = self.determinant();
        let adj = self.matrix.adjugate().expect("square by construction");
        let rows: Vec<Vec<BigInt>> = adj
            .into_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x * &det).collect())
            .collect();
        let inv = IntMatrix::from_rows(rows).expect("square by construction");
        let shift = inv
            .mul_vec(self.translation.coords())
            .expect("dimensions agree")
            .into_iter()
            .map(|x| -x)
            .collect();
        Self {
            matrix: inv,
            translation: LatticeVector::from_raw(shift),
        }
    }

    /// Prepends `A` to a map: returns `x ↦ A (self x)` with zero extra shift.
    pub fn then_linear(&self, a: &IntMatrix) -> Result<AffineUnimodularMap> {
        Self::linear(a.clone())?.compose(self)
    }

    /// Same linear part, translation chosen so the image of `polytope` has
    /// all coordinate minima at zero.
    pub fn normalized_for(self, polytope: &LatticePolytope) -> Result<AffineUnimodularMap> {
        let image = polytope.apply_map(&self)?;
        let (_, shift) = image.normalize_translation();
        AffineUnimodularMap::translation_only(shift).compose(&self)
    }

    /// Block-diagonal extension `diag(A, I)` with translation `(v, 0)`.
    pub fn extend_to(&self, d: usize) -> Result<AffineUnimodularMap> {
        let k = self.dim();
        if d < k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: d,
            });
        }
        let mut rows = IntMatrix::identity(d).into_rows();
        for (i, row) in self.matrix.rows().iter().enumerate() {
            rows[i][..k].clone_from_slice(row);
        }
        let mut t = LatticeVector::zero(d).into_coords();
        t[..k].clone_from_slice(self.translation.coords());
        Self::new(IntMatrix::from_rows(rows)?, LatticeVector::from_raw(t))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMatrix::identity(self.dim())
            && self
                .translation
                .coords()
                .iter()
                .all(|x| x == &BigInt::from(0))
    }
}
