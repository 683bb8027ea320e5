//! Random inputs for tests and benchmarks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::lattice::{reduce_dimension, DimensionReduction, LatticePolytope, LatticeVector};
use crate::matrix::IntMatrix;

/// `n` points drawn uniformly from `[0, coord_max]^dim`, resampled until the
/// hull is full-dimensional. Needs `n > dim` and `coord_max ≥ 1`.
pub fn random_polytope<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    n: usize,
    coord_max: i64,
) -> LatticePolytope {
    assert!(
        n > dim && coord_max >= 1,
        "cannot sample a full-dimensional polytope"
    );
    loop {
        let points = (0..n)
            .map(|_| {
                LatticeVector::new(
                    (0..dim)
                        .map(|_| BigInt::from(rng.gen_range(0..=coord_max)))
                        .collect(),
                )
                .expect("dim is at least 1")
            })
            .collect();
        let p = LatticePolytope::new(points).expect("nonempty");
        if reduce_dimension(&p) == DimensionReduction::FullDimensional {
            return p;
        }
    }
}

/// Product of `steps` random elementary moves: shears by ±1, ±2, row swaps
/// and sign flips.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, d: usize, steps: usize) -> IntMatrix {
    let mut rows = IntMatrix::identity(d).into_rows();
    for _ in 0..steps {
        match rng.gen_range(0..4) {
            0 | 1 if d > 1 => {
                let mut pair: Vec<usize> = (0..d).collect();
                pair.shuffle(rng);
                let (i, j) = (pair[0], pair[1]);
                let c = BigInt::from(*[-2i64, -1, 1, 2].choose(rng).expect("nonempty"));
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(&src) {
                    *x += &c * y;
                }
            }
            2 if d > 1 => {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                rows.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..d);
                for x in &mut rows[i] {
                    *x = -x.clone();
                }
            }
        }
    }
    IntMatrix::from_rows(rows).expect("square")
}
