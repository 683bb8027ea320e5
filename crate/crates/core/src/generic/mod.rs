//! Brute-force lattice size by the inscribed-ball bound: every direction of
//! width below `l` has norm at most `(l−1)/(2R)`, so a finite pool of
//! candidate rows suffices and a subset search over it finds an optimal
//! unimodular matrix. Slow, independent of the 2D and 3D reductions, and used
//! to check them.

mod ball;
mod hull;
mod search;

pub use ball::{inscribed_ball, InscribedBall};
pub use hull::{convex_hull, Facet, Hull};
pub use search::{
    candidate_directions, extendable_search, unimodular_search, within_bound, Candidate,
    CandidatePool, SearchResult,
};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{
    reduce_dimension, AffineUnimodularMap, DimensionReduction, LatticePolytope, SizeCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Cap on search nodes across one oracle call.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { budget: 50_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRun {
    /// Best certificate found. Optimal only when `conclusive`.
    pub certificate: SizeCertificate,
    pub conclusive: bool,
    pub nodes: u64,
    /// Successive values of `l`, strictly decreasing.
    pub bounds: Vec<BigInt>,
}

fn check_dim(polytope: &LatticePolytope) -> Result<()> {
    match polytope.dim() {
        1..=3 => Ok(()),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Hull vertices as a polytope; widths only depend on them.
fn vertex_polytope(hull: &Hull) -> LatticePolytope {
    LatticePolytope::new(hull.vertices()).expect("hull has vertices")
}

pub fn lattice_size_bruteforce(polytope: &LatticePolytope) -> Result<SizeCertificate> {
    let config = OracleConfig::default();
    let run = lattice_size_bruteforce_with(polytope, &config)?;
    if run.conclusive {
        Ok(run.certificate)
    } else {
        Err(Error::BudgetExhausted {
            budget: config.budget,
        })
    }
}

/// Like [`lattice_size_bruteforce`], but reports an exhausted budget as an
/// inconclusive run carrying the best map found so far.
pub fn lattice_size_bruteforce_with(
    polytope: &LatticePolytope,
    config: &OracleConfig,
) -> Result<OracleRun> {
    check_dim(polytope)?;
    let d = polytope.dim();
    if d == 1 {
        return Ok(OracleRun {
            certificate: SizeCertificate::from_map(polytope, AffineUnimodularMap::identity(1), 0)?,
            conclusive: true,
            nodes: 0,
            bounds: vec![polytope.e_box()],
        });
    }
    if let DimensionReduction::Lower(low) = reduce_dimension(polytope) {
        let inner = lattice_size_bruteforce_with(&low.polytope, config)?;
        let map = inner.certificate.map.extend_to(d)?.compose(&low.map)?;
        return Ok(OracleRun {
            certificate: SizeCertificate::from_map(polytope, map, inner.certificate.iterations)?,
            ..inner
        });
    }

    let hull = convex_hull(polytope)?;
    let ball = ball::ball_from_hull(&hull);
    let vertices = vertex_polytope(&hull);

    let mut map = AffineUnimodularMap::identity(d);
    let mut l = polytope.e_box();
    let mut bounds = vec![l.clone()];
    let mut nodes = 0u64;
    let mut rounds = 0;
    loop {
        rounds += 1;
        let pool = candidate_directions(&vertices, &l, &ball).filtered(&(&l - 1));
        let remaining = config.budget.saturating_sub(nodes);
        match unimodular_search(&pool, d, remaining) {
            Ok((None, used)) => {
                nodes += used;
                break;
            }
            Ok((Some((matrix, achieved)), used)) => {
                nodes += used;
                debug_assert!(achieved < l);
                map = AffineUnimodularMap::linear(matrix)?;
                l = achieved;
                bounds.push(l.clone());
            }
            Err(Error::BudgetExhausted { .. }) => {
                return Ok(OracleRun {
                    certificate: SizeCertificate::from_map(polytope, map, rounds)?,
                    conclusive: false,
                    nodes: config.budget,
                    bounds,
                });
            }
            Err(e) => return Err(e),
        }
    }
    let certificate = SizeCertificate::from_map(polytope, map, rounds)?;
    debug_assert_eq!(certificate.value, l);
    Ok(OracleRun {
        certificate,
        conclusive: true,
        nodes,
        bounds,
    })
}

/// Lattice width by enumerating every direction short enough to beat the
/// narrowest coordinate direction.
pub fn width_bruteforce(polytope: &LatticePolytope) -> Result<BigInt> {
    check_dim(polytope)?;
    if polytope.dim() == 1 {
        return Ok(polytope.e_box());
    }
    if let DimensionReduction::Lower(_) = reduce_dimension(polytope) {
        return Ok(BigInt::zero());
    }
    let hull = convex_hull(polytope)?;
    let ball = ball::ball_from_hull(&hull);
    let vertices = vertex_polytope(&hull);
    let best = polytope
        .coordinate_widths()
        .into_iter()
        .min()
        .expect("dimension is at least 1");
    let pool = candidate_directions(&vertices, &best, &ball);
    Ok(pool
        .directions
        .into_iter()
        .map(|c| c.width)
        .chain(std::iter::once(best))
        .min()
        .expect("nonempty"))
}

/// `μ_1 ≤ … ≤ μ_d` where `μ_k` is the least possible `k`-th smallest
/// coordinate width of `AP` over unimodular `A`. A box shape equal to this
/// vector cannot be improved in the product order.
pub fn box_shape_bruteforce(polytope: &LatticePolytope) -> Result<Vec<BigInt>> {
    box_shape_bruteforce_with(polytope, &OracleConfig::default())
}

pub fn box_shape_bruteforce_with(
    polytope: &LatticePolytope,
    config: &OracleConfig,
) -> Result<Vec<BigInt>> {
    check_dim(polytope)?;
    let d = polytope.dim();
    if d == 1 {
        return Ok(vec![polytope.e_box()]);
    }
    if let DimensionReduction::Lower(low) = reduce_dimension(polytope) {
        let inner = box_shape_bruteforce_with(&low.polytope, config)?;
        let mut shape = vec![BigInt::zero(); d - inner.len()];
        shape.extend(inner);
        return Ok(shape);
    }

    let hull = convex_hull(polytope)?;
    let ball = ball::ball_from_hull(&hull);
    let vertices = vertex_polytope(&hull);
    let mut profile = polytope.coordinate_widths();
    profile.sort();
    let mut nodes = 0u64;
    let mut shape = Vec::with_capacity(d);
    for (k, upper) in profile.iter().enumerate() {
        let pool = candidate_directions(&vertices, upper, &ball).filtered(&(upper - 1));
        let res = extendable_search(&pool, k + 1, config.budget.saturating_sub(nodes))?;
        nodes += res.nodes;
        shape.push(res.found.map_or_else(|| upper.clone(), |(_, w)| w));
    }
    Ok(shape)
}

/// Least possible second smallest coordinate width.
pub fn w2_bruteforce(polytope: &LatticePolytope) -> Result<BigInt> {
    if polytope.dim() < 2 {
        return Err(Error::UnsupportedDimension(polytope.dim()));
    }
    Ok(box_shape_bruteforce(polytope)?.swap_remove(1))
}
