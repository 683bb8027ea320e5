#![allow(dead_code)]

use cubesize::LatticePolytope;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn triangle() -> LatticePolytope {
    LatticePolytope::from_i64(&[[0, 0], [1, 0], [2, 3]]).unwrap()
}

pub fn example_one() -> LatticePolytope {
    LatticePolytope::from_i64(&[
        [1, 0, 0],
        [1, 1, 0],
        [0, 4, 0],
        [2, 4, 0],
        [0, 1, 1],
        [0, 4, 1],
        [0, 1, 10],
    ])
    .unwrap()
}

pub fn example_two() -> LatticePolytope {
    LatticePolytope::from_i64(&[
        [0, 3, 1],
        [5, 2, 3],
        [4, 0, 4],
        [2, 5, 4],
        [1, 3, 0],
        [3, 4, 5],
    ])
    .unwrap()
}

pub fn cube(k: i64) -> LatticePolytope {
    let mut pts = Vec::new();
    for x in [0, k] {
        for y in [0, k] {
            for z in [0, k] {
                pts.push([x, y, z]);
            }
        }
    }
    LatticePolytope::from_i64(&pts).unwrap()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Point sets in `[0, c]^d` with between `d + 1` and `d + 6` points. May be
/// lower-dimensional.
pub fn point_set(d: usize, c: i64) -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::collection::vec(0..=c, d), d + 1..=d + 6)
        .prop_map(|pts| LatticePolytope::from_i64(&pts).unwrap())
}

/// Integer functional with entries in `[-r, r]`.
pub fn functional(d: usize, r: i64) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec(-r..=r, d).prop_map(|v| big(&v))
}

/// Primitive vectors of dimension `d` with entries in `[-r, r]`.
pub fn primitive_vectors(d: usize, r: i64) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut v = vec![-r; d];
    loop {
        let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        if g == 1 {
            out.push(big(&v));
        }
        let Some(i) = (0..d).rev().find(|&i| v[i] < r) else {
            return out;
        };
        v[i] += 1;
        for x in &mut v[i + 1..] {
            *x = -r;
        }
    }
}
