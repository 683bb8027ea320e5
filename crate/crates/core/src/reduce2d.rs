//! Lattice size, lattice width and the minimal rectangle of lattice polygons.
//!
//! The polygon is repeatedly replaced by its image under one of four shears
//! until both diagonal widths `Δ(x+y)`, `Δ(x−y)` are at least the larger
//! coordinate width. At that point no primitive direction other than the axes
//! has width below `e_□`, so `e_□` is the lattice size and the smaller axis
//! width is the lattice width. Only widths are ever evaluated; lattice points
//! of the polygon are never enumerated.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{
    reduce_dimension, AffineUnimodularMap, BoxCertificate, DimensionReduction, LatticePolytope,
    SizeCertificate,
};
use crate::matrix::IntMatrix;

/// Candidate shears, tried in this order when breaking ties.
pub const SHEARS: [[[i64; 2]; 2]; 4] = [
    [[1, 0], [1, 1]],
    [[1, 0], [1, -1]],
    [[0, 1], [1, 1]],
    [[0, 1], [1, -1]],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction2DState {
    /// Current polygon, translated so its coordinate minima are zero.
    pub polygon: LatticePolytope,
    /// Map from the original input to `polygon`.
    pub map: AffineUnimodularMap,
    pub dx: BigInt,
    pub dy: BigInt,
    /// `Δ(x+y)`
    pub dpp: BigInt,
    /// `Δ(x−y)`
    pub dmm: BigInt,
}

/// Which widths `(Δx, Δy, Δ(x+y), Δ(x−y))` each shear row picks up.
fn shear_image_widths<'a>(
    idx: usize,
    dx: &'a BigInt,
    dy: &'a BigInt,
    dpp: &'a BigInt,
    dmm: &'a BigInt,
) -> (&'a BigInt, &'a BigInt) {
    match idx {
        0 => (dx, dpp),
        1 => (dx, dmm),
        2 => (dy, dpp),
        _ => (dy, dmm),
    }
}

/// Picks the shear to apply, or `None` when `min(Δ(x±y)) ≥ max(Δx, Δy)`.
/// Among the four candidates the one minimizing `(e_□, Δx + Δy)` of the image
/// wins; earlier entries of [`SHEARS`] win ties.
pub fn choose_shear(dx: &BigInt, dy: &BigInt, dpp: &BigInt, dmm: &BigInt) -> Option<usize> {
    let top = dx.max(dy);
    if dpp.min(dmm) >= top {
        return None;
    }
    (0..SHEARS.len()).min_by_key(|&i| {
        let (a, b) = shear_image_widths(i, dx, dy, dpp, dmm);
        (a.max(b).clone(), a + b)
    })
}

impl Reduction2DState {
    /// Starting state for a polygon in `ℤ²` (translated to the origin).
    pub fn new(polygon: &LatticePolytope) -> Result<Self> {
        if polygon.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: polygon.dim(),
            });
        }
        let (moved, shift) = polygon.normalize_translation();
        Ok(Self::from_parts(
            moved,
            AffineUnimodularMap::translation_only(shift),
        ))
    }

    fn from_parts(polygon: LatticePolytope, map: AffineUnimodularMap) -> Self {
        let dx = polygon.coordinate_width(0);
        let dy = polygon.coordinate_width(1);
        let dpp = polygon.width_i64(&[1, 1]).expect("planar");
        let dmm = polygon.width_i64(&[1, -1]).expect("planar");
        Self {
            polygon,
            map,
            dx,
            dy,
            dpp,
            dmm,
        }
    }

    pub fn e_box(&self) -> &BigInt {
        (&self.dx).max(&self.dy)
    }

    /// `(e_□, Δx + Δy)`, which strictly decreases with every shear.
    pub fn potential(&self) -> (BigInt, BigInt) {
        (self.e_box().clone(), &self.dx + &self.dy)
    }

    pub fn is_terminal(&self) -> bool {
        choose_shear(&self.dx, &self.dy, &self.dpp, &self.dmm).is_none()
    }

    fn apply(&self, a: &IntMatrix) -> Self {
        let step = AffineUnimodularMap::linear(a.clone()).expect("shears are unimodular");
        let image = self.polygon.apply_map(&step).expect("planar");
        let (image, shift) = image.normalize_translation();
        let map = AffineUnimodularMap::translation_only(shift)
            .compose(&step)
            .and_then(|m| m.compose(&self.map))
            .expect("planar");
        Self::from_parts(image, map)
    }
}

pub(crate) fn shear_matrix(idx: usize) -> IntMatrix {
    IntMatrix::from_i64_rows(&SHEARS[idx]).expect("constant")
}

/// One reduction step; `None` if the state is already terminal.
pub fn shear_step(state: &Reduction2DState) -> Option<Reduction2DState> {
    let idx = choose_shear(&state.dx, &state.dy, &state.dpp, &state.dmm)?;
    Some(state.apply(&shear_matrix(idx)))
}

/// The terminal state of the shear loop and how it got there.
#[derive(Clone, Debug)]
pub struct Reduction2D {
    pub terminal: Reduction2DState,
    pub iterations: usize,
    /// Potential `(e_□, Δx + Δy)` of every visited state, starting with the input.
    pub potentials: Vec<(BigInt, BigInt)>,
}

/// Runs the shear loop on a full-dimensional polygon.
pub fn reduce_2d(polygon: &LatticePolytope) -> Result<Reduction2D> {
    let mut state = Reduction2DState::new(polygon)?;
    if let DimensionReduction::Lower(low) = reduce_dimension(polygon) {
        return Err(Error::Degenerate {
            affine_dim: low.affine_dim,
            dim: 2,
        });
    }
    let mut potentials = vec![state.potential()];
    let mut iterations = 0;
    while let Some(next) = shear_step(&state) {
        iterations += 1;
        potentials.push(next.potential());
        state = next;
    }
    Ok(Reduction2D {
        terminal: state,
        iterations,
        potentials,
    })
}

fn check_planar(polygon: &LatticePolytope) -> Result<()> {
    if polygon.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: polygon.dim(),
        });
    }
    Ok(())
}

/// `ls_□(P)` for a lattice polygon with a certifying map into `[0, ls]²`.
/// Segments and points are handled through dimension reduction.
pub fn lattice_size_2d(polygon: &LatticePolytope) -> Result<SizeCertificate> {
    check_planar(polygon)?;
    if let DimensionReduction::Lower(_) = reduce_dimension(polygon) {
        let b = crate::minimal_box(polygon)?;
        return SizeCertificate::from_map(polygon, b.map, 0);
    }
    let red = reduce_2d(polygon)?;
    let cert = SizeCertificate::from_map(polygon, red.terminal.map.clone(), red.iterations)?;
    debug_assert_eq!(&cert.value, red.terminal.e_box());
    Ok(cert)
}

/// Lattice width `w(P)` of a lattice polygon.
pub fn width_2d(polygon: &LatticePolytope) -> Result<BigInt> {
    Ok(minimal_rectangle_2d(polygon)?.shape[0].clone())
}

/// Map placing the polygon into `[0, w(P)] × [0, ls_□(P)]`.
pub fn minimal_rectangle_2d(polygon: &LatticePolytope) -> Result<BoxCertificate> {
    check_planar(polygon)?;
    if let DimensionReduction::Lower(low) = reduce_dimension(polygon) {
        let lower = crate::minimal_box(&low.polytope)?;
        return low.lift_box(polygon, &lower);
    }
    let red = reduce_2d(polygon)?;
    rectangle_from_terminal(polygon, &red.terminal)
}

pub(crate) fn rectangle_from_terminal(
    polygon: &LatticePolytope,
    terminal: &Reduction2DState,
) -> Result<BoxCertificate> {
    let map = if terminal.dx <= terminal.dy {
        terminal.map.clone()
    } else {
        let swap = IntMatrix::permutation(&[1, 0]);
        terminal.map.then_linear(&swap)?
    };
    BoxCertificate::from_map(polygon, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn poly(pts: &[[i64; 2]]) -> LatticePolytope {
        LatticePolytope::from_i64(pts).unwrap()
    }

    fn triangle() -> LatticePolytope {
        poly(&[[0, 0], [1, 0], [2, 3]])
    }

    #[test]
    fn triangle_needs_one_shear() {
        let s = Reduction2DState::new(&triangle()).unwrap();
        assert_eq!(s.dx, 2.into());
        assert_eq!(s.dy, 3.into());
        assert_eq!(s.dmm, 2.into());
        assert!(!s.is_terminal());
        let next = shear_step(&s).unwrap();
        assert_eq!(next.e_box(), &BigInt::from(2));
        assert!(next.potential() < s.potential());
    }

    #[test]
    fn unit_square_is_terminal() {
        let s = Reduction2DState::new(&poly(&[[0, 0], [1, 0], [0, 1], [1, 1]])).unwrap();
        assert!(s.is_terminal());
        assert!(shear_step(&s).is_none());
    }

    #[test]
    fn big_square_is_terminal() {
        let k = 5;
        let s = Reduction2DState::new(&poly(&[[0, 0], [k, k], [k, 0], [0, k]])).unwrap();
        assert_eq!(s.dpp, BigInt::from(2 * k));
        assert!(s.is_terminal());
    }

    #[test]
    fn touching_case_keeps_e_box() {
        // Δx = Δy = 4 but Δ(x−y) = 2: ls stays 4 through an equal-e_box shear
        let p = poly(&[[0, 0], [1, 0], [4, 3], [4, 4], [3, 4]]);
        let s = Reduction2DState::new(&p).unwrap();
        assert_eq!((s.dx.clone(), s.dy.clone()), (4.into(), 4.into()));
        let red = reduce_2d(&p).unwrap();
        assert_eq!(red.terminal.e_box(), &BigInt::from(4));
        assert_eq!(width_2d(&p).unwrap(), 2.into());
        for w in red.potentials.windows(2) {
            assert!(w[1] < w[0]);
        }
    }

    #[test]
    fn lattice_size_examples() {
        let cert = lattice_size_2d(&triangle()).unwrap();
        assert_eq!(cert.value, 2.into());
        assert!(cert.verify(&triangle()));

        let pt = poly(&[[3, 4]]);
        assert_eq!(lattice_size_2d(&pt).unwrap().value, BigInt::zero());
    }

    #[test]
    fn widths() {
        assert_eq!(width_2d(&triangle()).unwrap(), 2.into());
        assert_eq!(
            width_2d(&poly(&[[0, 0], [1, 0], [0, 1], [1, 1]])).unwrap(),
            1.into()
        );
        assert_eq!(width_2d(&poly(&[[0, 0], [3, 0]])).unwrap(), BigInt::zero());
    }

    #[test]
    fn segments_reduce_to_their_length() {
        let seg = poly(&[[1, 1], [7, 10]]);
        let cert = lattice_size_2d(&seg).unwrap();
        assert_eq!(cert.value, 3.into());
        assert!(cert.verify(&seg));
        let rect = minimal_rectangle_2d(&seg).unwrap();
        assert_eq!(rect.shape, vec![BigInt::zero(), BigInt::from(3)]);
        assert!(rect.verify(&seg));
        assert!(matches!(reduce_2d(&seg), Err(Error::Degenerate { .. })));
    }

    #[test]
    fn minimal_rectangle_examples() {
        let sq = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let r = minimal_rectangle_2d(&sq).unwrap();
        assert_eq!(r.shape, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(r.map.matrix(), &IntMatrix::identity(2));

        let r = minimal_rectangle_2d(&triangle()).unwrap();
        assert_eq!(r.shape, vec![BigInt::from(2), BigInt::from(2)]);
        assert!(r.verify(&triangle()));
    }

    #[test]
    fn rejects_other_dimensions() {
        let p = LatticePolytope::from_i64(&[[0, 0, 0]]).unwrap();
        assert!(matches!(
            lattice_size_2d(&p),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
