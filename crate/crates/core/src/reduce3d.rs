//! Lattice size, lattice width, `w₂` and the minimal box of 3D lattice
//! polytopes.
//!
//! Each round sorts the coordinates so that `Δx = l₁ ≤ Δy = l₂ ≤ Δz = l`,
//! shears the `(x, y)` plane until `Δ(x ± y) ≥ l₂`, and then scans the finite
//! set `S` of pairs `(a, b)` for which `Δ(ax + by + z)` could still fall
//! below `l`. If none does, `l` is the lattice size. Otherwise the best pair
//! `(m, n)` becomes the new third row and the round repeats; the sum
//! `l₁ + l₂ + l` strictly decreases each time.
//!
//! When the best width `l′` found in the scan is already at least `l₂`, the
//! shear by `(m, n, 1)` finishes the computation with value `l′`, so most
//! inputs need a single scan. [`Mode3D::Naive`] disables that shortcut.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    reduce_dimension, AffineUnimodularMap, BoxCertificate, DimensionReduction, LatticePolytope,
    SizeCertificate, WidthProfile,
};
use crate::matrix::IntMatrix;
use crate::reduce2d::{choose_shear, SHEARS};

/// Representatives (up to sign) of the directions `(±1, ±1, ±2)`.
pub const EXCEPTIONAL: [[i64; 3]; 4] = [[1, 1, 2], [1, -1, 2], [-1, 1, 2], [-1, -1, 2]];

/// The pairs `(a, b)` whose direction `(a, b, 1)` may have width below `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionSet {
    /// Lexicographically sorted.
    pub pairs: Vec<(BigInt, BigInt)>,
    pub bounds: (BigInt, BigInt, BigInt),
}

impl DirectionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: &BigInt, b: &BigInt) -> bool {
        in_direction_set(a, b, &self.bounds.0, &self.bounds.1, &self.bounds.2)
    }
}

/// Membership test: if `|a| ≥ |b|` then `|b| l₂ ≤ 2l − 1` and
/// `|a| l₁ ≤ 2l − 1 + |b| l₂`; if `|b| ≥ |a|` then `|a| l₁ ≤ 2l − 1` and
/// `|b| l₂ ≤ 2l − 1 + |a| l₁`. Both implications must hold.
pub fn in_direction_set(a: &BigInt, b: &BigInt, l1: &BigInt, l2: &BigInt, l: &BigInt) -> bool {
    let (aa, bb) = (a.abs(), b.abs());
    let slack: BigInt = l * 2 - 1;
    let a_side = &aa * l1;
    let b_side = &bb * l2;
    let when_a_dominates = b_side <= slack && a_side <= &slack + &b_side;
    let when_b_dominates = a_side <= slack && b_side <= &slack + &a_side;
    (aa < bb || when_a_dominates) && (bb < aa || when_b_dominates)
}

/// Enumerates the direction set for sorted widths `1 ≤ l₁ ≤ l₂ ≤ l`.
pub fn build_s(l1: &BigInt, l2: &BigInt, l: &BigInt) -> Result<DirectionSet> {
    if !(l1.is_positive() && l1 <= l2 && l2 <= l) {
        return Err(Error::InvalidBounds(format!(
            "need 1 <= l1 <= l2 <= l, got ({l1}, {l2}, {l})"
        )));
    }
    // every member has |a| l₁ ≤ 4l − 2 and |b| l₂ ≤ 4l − 2
    let reach: BigInt = l * 4 - 2;
    let a_max = &reach / l1;
    let b_max = &reach / l2;
    let mut pairs = Vec::new();
    let mut a = -a_max.clone();
    while a <= a_max {
        let mut b = -b_max.clone();
        while b <= b_max {
            if in_direction_set(&a, &b, l1, l2, l) {
                pairs.push((a.clone(), b.clone()));
            }
            b += 1;
        }
        a += 1;
    }
    Ok(DirectionSet {
        pairs,
        bounds: (l1.clone(), l2.clone(), l.clone()),
    })
}

/// Outcome of scanning a direction set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    /// Pair `(m, n)` minimizing `Δ(mx + ny + z)`; lexicographically first on ties.
    pub pair: (BigInt, BigInt),
    pub width: BigInt,
    pub scanned: usize,
}

/// Finds the pair of `set` with the smallest width in direction `(m, n, 1)`.
pub fn scan_s(polytope: &LatticePolytope, set: &DirectionSet) -> Result<ScanResult> {
    if polytope.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: polytope.dim(),
        });
    }
    let mut best: Option<(BigInt, &(BigInt, BigInt))> = None;
    for pair in &set.pairs {
        let w = polytope.width_unchecked(&[pair.0.clone(), pair.1.clone(), BigInt::one()]);
        if best.as_ref().is_none_or(|(bw, _)| &w < bw) {
            best = Some((w, pair));
        }
    }
    let (width, pair) = best.ok_or_else(|| Error::InvalidBounds("empty direction set".into()))?;
    Ok(ScanResult {
        pair: pair.clone(),
        width,
        scanned: set.len(),
    })
}

/// Whether to stop as soon as the scanned width `l′` reaches `l₂`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode3D {
    #[default]
    Refined,
    Naive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction3DState {
    /// Current polytope, translated so its coordinate minima are zero.
    pub polytope: LatticePolytope,
    /// Map from the original input to `polytope`.
    pub map: AffineUnimodularMap,
    pub profile: WidthProfile,
}

impl Reduction3DState {
    pub fn new(polytope: &LatticePolytope) -> Result<Self> {
        if polytope.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: polytope.dim(),
            });
        }
        let (moved, shift) = polytope.normalize_translation();
        Ok(Self::from_parts(
            moved,
            AffineUnimodularMap::translation_only(shift),
        ))
    }

    fn from_parts(polytope: LatticePolytope, map: AffineUnimodularMap) -> Self {
        let profile = polytope.width_profile();
        Self {
            polytope,
            map,
            profile,
        }
    }

    /// `(l₁, l₂, l)`; meaningful once the coordinates are sorted.
    pub fn widths(&self) -> (&BigInt, &BigInt, &BigInt) {
        let w = &self.profile.widths;
        (&w[0], &w[1], &w[2])
    }

    /// `l₁ + l₂ + l`
    pub fn potential(&self) -> BigInt {
        self.profile.widths.iter().sum()
    }

    pub fn is_sorted(&self) -> bool {
        self.profile.is_identity()
    }

    fn apply_linear(&self, a: &IntMatrix) -> Self {
        let step = AffineUnimodularMap::linear(a.clone()).expect("unimodular step");
        let image = self.polytope.apply_map(&step).expect("three-dimensional");
        let (image, shift) = image.normalize_translation();
        let map = AffineUnimodularMap::translation_only(shift)
            .compose(&step)
            .and_then(|m| m.compose(&self.map))
            .expect("three-dimensional");
        Self::from_parts(image, map)
    }

    /// Permutes coordinates so that `Δx ≤ Δy ≤ Δz` (stable on ties).
    pub fn sorted(&self) -> Self {
        if self.is_sorted() {
            return self.clone();
        }
        self.apply_linear(self.profile.perm.matrix())
    }

    /// Width in direction `(a, b, c)` of the current polytope.
    pub fn width(&self, dir: [&BigInt; 3]) -> BigInt {
        self.polytope
            .width_unchecked(&[dir[0].clone(), dir[1].clone(), dir[2].clone()])
    }

    fn diagonal_widths(&self) -> (BigInt, BigInt) {
        (
            self.polytope
                .width_i64(&[1, 1, 0])
                .expect("three-dimensional"),
            self.polytope
                .width_i64(&[1, -1, 0])
                .expect("three-dimensional"),
        )
    }
}

fn embedded_shear(idx: usize) -> IntMatrix {
    let s = SHEARS[idx];
    IntMatrix::from_i64_rows(&[[s[0][0], s[0][1], 0], [s[1][0], s[1][1], 0], [0, 0, 1]])
        .expect("constant")
}

/// Shears the `(x, y)` plane (fixing `z`) until `Δ(x ± y) ≥ max(Δx, Δy)`,
/// then restores `Δx ≤ Δy`. Expects sorted coordinates. Returns the new state
/// and the number of shears applied.
pub fn normalize_projection(state: &Reduction3DState) -> (Reduction3DState, usize) {
    let mut state = state.clone();
    let mut shears = 0;
    loop {
        let dx = state.polytope.coordinate_width(0);
        let dy = state.polytope.coordinate_width(1);
        let (dpp, dmm) = state.diagonal_widths();
        match choose_shear(&dx, &dy, &dpp, &dmm) {
            Some(idx) => {
                state = state.apply_linear(&embedded_shear(idx));
                shears += 1;
            }
            None => break,
        }
    }
    if state.polytope.coordinate_width(0) > state.polytope.coordinate_width(1) {
        state = state.apply_linear(&IntMatrix::permutation(&[1, 0, 2]));
    }
    debug_assert!(state.is_sorted());
    (state, shears)
}

/// One scan of the direction set during the main loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub bounds: (BigInt, BigInt, BigInt),
    pub set_size: usize,
    pub pair: (BigInt, BigInt),
    pub lprime: BigInt,
}

/// Terminal state of the main loop and its history.
#[derive(Clone, Debug)]
pub struct Reduction3D {
    /// Sorted, projection-normalized, and `Δ(ax + by + z) ≥ l` for all integers
    /// `a`, `b`.
    pub terminal: Reduction3DState,
    pub value: BigInt,
    /// Number of `(m, n, 1)` shears applied.
    pub iterations: usize,
    /// Number of planar shears applied while normalizing projections.
    pub planar_shears: usize,
    pub scans: Vec<ScanRecord>,
    /// `l₁ + l₂ + l` at the start of each round, after normalization.
    pub potentials: Vec<BigInt>,
}

/// Runs the main loop on a full-dimensional polytope.
pub fn reduce_3d(polytope: &LatticePolytope, mode: Mode3D) -> Result<Reduction3D> {
    let mut state = Reduction3DState::new(polytope)?;
    if let DimensionReduction::Lower(low) = reduce_dimension(polytope) {
        return Err(Error::Degenerate {
            affine_dim: low.affine_dim,
            dim: 3,
        });
    }
    let mut iterations = 0;
    let mut planar_shears = 0;
    let mut scans = Vec::new();
    let mut potentials = Vec::new();
    loop {
        let (normalized, shears) = normalize_projection(&state.sorted());
        state = normalized;
        planar_shears += shears;
        potentials.push(state.potential());

        let (l1, l2, l) = state.widths();
        let (l1, l2, l) = (l1.clone(), l2.clone(), l.clone());
        let set = build_s(&l1, &l2, &l)?;
        let scan = scan_s(&state.polytope, &set)?;
        scans.push(ScanRecord {
            bounds: set.bounds.clone(),
            set_size: set.len(),
            pair: scan.pair.clone(),
            lprime: scan.width.clone(),
        });
        if scan.width >= l {
            return Ok(Reduction3D {
                terminal: state,
                value: l,
                iterations,
                planar_shears,
                scans,
                potentials,
            });
        }

        let (m, n) = &scan.pair;
        let shear = IntMatrix::from_rows(vec![
            vec![BigInt::one(), BigInt::zero(), BigInt::zero()],
            vec![BigInt::zero(), BigInt::one(), BigInt::zero()],
            vec![m.clone(), n.clone(), BigInt::one()],
        ])
        .expect("square");
        state = state.apply_linear(&shear);
        iterations += 1;

        if mode == Mode3D::Refined && scan.width >= l2 {
            // x and y untouched, Δz = l′ ≥ l₂
            debug_assert!(state.is_sorted());
            return Ok(Reduction3D {
                terminal: state,
                value: scan.width,
                iterations,
                planar_shears,
                scans,
                potentials,
            });
        }
    }
}

fn check_3d(polytope: &LatticePolytope) -> Result<()> {
    if polytope.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: polytope.dim(),
        });
    }
    Ok(())
}

/// `ls_□(P)` for a 3D lattice polytope with a certifying map into `[0, ls]³`.
pub fn lattice_size_3d(polytope: &LatticePolytope) -> Result<SizeCertificate> {
    lattice_size_3d_with(polytope, Mode3D::Refined)
}

pub fn lattice_size_3d_with(polytope: &LatticePolytope, mode: Mode3D) -> Result<SizeCertificate> {
    check_3d(polytope)?;
    if let DimensionReduction::Lower(_) = reduce_dimension(polytope) {
        let b = crate::minimal_box(polytope)?;
        return SizeCertificate::from_map(polytope, b.map, 0);
    }
    let red = reduce_3d(polytope, mode)?;
    let cert = SizeCertificate::from_map(polytope, red.terminal.map.clone(), red.iterations)?;
    debug_assert_eq!(cert.value, red.value);
    Ok(cert)
}

/// Smallest width over the exceptional directions at a terminal state, with
/// the first direction attaining it.
pub fn exceptional_minimum(state: &Reduction3DState) -> (BigInt, [i64; 3]) {
    EXCEPTIONAL
        .iter()
        .map(|e| (state.polytope.width_i64(e).expect("three-dimensional"), *e))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("nonempty")
}

/// The three numbers `(w, w₂, ls)` read off a terminal state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalInvariants {
    pub width: BigInt,
    pub w2: BigInt,
    pub lattice_size: BigInt,
    /// `m`: smallest width over the exceptional directions.
    pub exceptional_width: BigInt,
    pub exceptional_direction: [i64; 3],
}

pub fn terminal_invariants(terminal: &Reduction3DState) -> TerminalInvariants {
    let (renormalized, shears) = normalize_projection(terminal);
    debug_assert_eq!(shears, 0, "terminal states are projection-normalized");
    let (l1, l2, l) = renormalized.widths();
    let (m, dir) = exceptional_minimum(&renormalized);
    let width = l1.min(&m).clone();
    let w2 = l2.min(l1.max(&m)).clone();
    TerminalInvariants {
        width,
        w2,
        lattice_size: l.clone(),
        exceptional_width: m,
        exceptional_direction: dir,
    }
}

/// Lattice width `w(P)` of a 3D lattice polytope.
pub fn width_3d(polytope: &LatticePolytope) -> Result<BigInt> {
    Ok(minimal_box_3d(polytope)?.shape[0].clone())
}

/// `w₂(P)`: the smallest `k` such that a unimodular copy of `P` fits in
/// `[0, k] × [0, k] × ℝ`.
pub fn w2_3d(polytope: &LatticePolytope) -> Result<BigInt> {
    Ok(minimal_box_3d(polytope)?.shape[1].clone())
}

/// Map placing the polytope into `[0, w] × [0, w₂] × [0, ls]`.
pub fn minimal_box_3d(polytope: &LatticePolytope) -> Result<BoxCertificate> {
    minimal_box_3d_with(polytope, Mode3D::Refined)
}

pub fn minimal_box_3d_with(polytope: &LatticePolytope, mode: Mode3D) -> Result<BoxCertificate> {
    check_3d(polytope)?;
    if let DimensionReduction::Lower(low) = reduce_dimension(polytope) {
        let lower = crate::minimal_box(&low.polytope)?;
        return low.lift_box(polytope, &lower);
    }
    let red = reduce_3d(polytope, mode)?;
    box_from_terminal(polytope, &red.terminal)
}

pub(crate) fn box_from_terminal(
    polytope: &LatticePolytope,
    terminal: &Reduction3DState,
) -> Result<BoxCertificate> {
    let inv = terminal_invariants(terminal);
    let (l1, l2, _) = terminal.widths();
    let [a, b, c] = inv.exceptional_direction;
    let map = if &inv.exceptional_width >= l2 {
        terminal.map.clone()
    } else if &inv.exceptional_width >= l1 {
        terminal.map.then_linear(&IntMatrix::from_i64_rows(&[
            [1, 0, 0],
            [a, b, c],
            [0, 0, 1],
        ])?)?
    } else {
        terminal.map.then_linear(&IntMatrix::from_i64_rows(&[
            [a, b, c],
            [1, 0, 0],
            [0, 0, 1],
        ])?)?
    };
    let cert = BoxCertificate::from_map(polytope, map)?;
    debug_assert_eq!(
        cert.shape,
        vec![inv.width, inv.w2, inv.lattice_size],
        "box map realizes the terminal invariants"
    );
    Ok(cert)
}

/// Convenience for reporting: scan sizes as machine integers.
pub fn scan_sizes(red: &Reduction3D) -> Vec<u64> {
    red.scans
        .iter()
        .map(|s| s.set_size.to_u64().unwrap_or(u64::MAX))
        .collect()
}
