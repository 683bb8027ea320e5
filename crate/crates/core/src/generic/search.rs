use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ball::InscribedBall;
use crate::error::{Error, Result};
use crate::lattice::{Direction, LatticePolytope};
use crate::matrix::{isqrt, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub direction: Direction,
    pub width: BigInt,
}

/// Every primitive vector `v` (one per sign pair) with `‖v‖ ≤ (l−1)/(2R)`,
/// sorted by width and then coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidatePool {
    pub directions: Vec<Candidate>,
    pub l: BigInt,
    /// `((l−1)/(2R))²`.
    pub bound_squared: BigRational,
}

impl CandidatePool {
    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    /// Keeps only directions of width at most `max_width`.
    pub fn filtered(&self, max_width: &BigInt) -> CandidatePool {
        CandidatePool {
            directions: self
                .directions
                .iter()
                .filter(|c| &c.width <= max_width)
                .cloned()
                .collect(),
            l: self.l.clone(),
            bound_squared: self.bound_squared.clone(),
        }
    }
}

/// `4R²‖v‖² ≤ (l−1)²`, evaluated exactly.
pub fn within_bound(v: &[BigInt], l: &BigInt, ball: &InscribedBall) -> bool {
    if !l.is_positive() {
        return false;
    }
    let norm: BigInt = v.iter().map(|x| x * x).sum();
    let lm1 = l - 1;
    BigRational::from_integer(norm * 4) * &ball.radius_squared
        <= BigRational::from_integer(&lm1 * &lm1)
}

pub fn candidate_directions(
    polytope: &LatticePolytope,
    l: &BigInt,
    ball: &InscribedBall,
) -> CandidatePool {
    let d = polytope.dim();
    let lm1 = if l.is_positive() {
        l - 1
    } else {
        BigInt::zero()
    };
    let bound_squared =
        BigRational::new(&lm1 * &lm1, BigInt::from(4)) / ball.radius_squared.clone();
    // every coordinate is at most the norm
    let k = isqrt(&bound_squared.floor().to_integer());
    let mut directions = Vec::new();
    if k.is_positive() {
        let lo = -k.clone();
        let mut v = vec![lo.clone(); d];
        loop {
            if is_canonical(&v) && crate::matrix::is_primitive(&v) && within_bound(&v, l, ball) {
                let width = polytope.width_unchecked(&v);
                directions.push(Candidate {
                    direction: Direction::new(v.clone()).expect("checked primitive"),
                    width,
                });
            }
            // odometer over [-k, k]^d
            let Some(i) = (0..d).rev().find(|&i| v[i] < k) else {
                break;
            };
            v[i] += 1;
            for x in &mut v[i + 1..] {
                *x = lo.clone();
            }
        }
    }
    directions
        .sort_by(|a, b| (&a.width, a.direction.coords()).cmp(&(&b.width, b.direction.coords())));
    CandidatePool {
        directions,
        l: l.clone(),
        bound_squared,
    }
}

fn is_canonical(v: &[BigInt]) -> bool {
    v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_positive())
}

/// Outcome of a bounded subset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Chosen pool indices, ascending, and their maximum width.
    pub found: Option<(Vec<usize>, BigInt)>,
    pub nodes: u64,
}

/// Finds `k` pool vectors that extend to a basis of `ℤ^d` (gcd of maximal
/// minors equal to 1), minimizing the largest width among them. Depth-first
/// over increasing width; partial choices that are not extendable are pruned.
pub fn extendable_search(pool: &CandidatePool, k: usize, budget: u64) -> Result<SearchResult> {
    let n = pool.len();
    let mut nodes = 0u64;
    if k == 0 {
        return Ok(SearchResult {
            found: Some((Vec::new(), BigInt::zero())),
            nodes,
        });
    }
    let rows: Vec<&[BigInt]> = pool
        .directions
        .iter()
        .map(|c| c.direction.coords())
        .collect();
    let mut chosen = Vec::with_capacity(k);
    for top in 0..n {
        chosen.clear();
        chosen.push(top);
        if extend(&rows, &mut chosen, top, k, &mut nodes, budget)? {
            chosen.sort_unstable();
            return Ok(SearchResult {
                found: Some((chosen, pool.directions[top].width.clone())),
                nodes,
            });
        }
    }
    Ok(SearchResult { found: None, nodes })
}

fn extend(
    rows: &[&[BigInt]],
    chosen: &mut Vec<usize>,
    below: usize,
    k: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExhausted { budget });
    }
    let m = IntMatrix::from_rows(chosen.iter().map(|&i| rows[i].to_vec()).collect())
        .expect("rows share a dimension");
    if !m.maximal_minor_gcd().is_one() {
        return Ok(false);
    }
    if chosen.len() == k {
        return Ok(true);
    }
    for j in 0..below {
        chosen.push(j);
        if extend(rows, chosen, j, k, nodes, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Unimodular matrix from `d` pool rows with the smallest maximal row width.
/// Rows are listed by increasing width.
pub fn unimodular_search(
    pool: &CandidatePool,
    d: usize,
    budget: u64,
) -> Result<(Option<(IntMatrix, BigInt)>, u64)> {
    let res = extendable_search(pool, d, budget)?;
    let found = res.found.map(|(idx, achieved)| {
        let rows = idx
            .iter()
            .map(|&i| pool.directions[i].direction.coords().to_vec())
            .collect();
        let m = IntMatrix::from_rows(rows).expect("rows share a dimension");
        debug_assert!(m.determinant().is_ok_and(|x| x.abs().is_one()));
        (m, achieved)
    });
    Ok((found, res.nodes))
}
