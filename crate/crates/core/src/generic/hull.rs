//! Exact convex hulls in dimensions 2 and 3.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{LatticePolytope, LatticeVector};
use crate::matrix::{self, content};

/// Supporting half-space `normal · x ≤ offset`, with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    fn new(normal: Vec<BigInt>, offset: BigInt) -> Self {
        let g = content(&normal);
        let normal = normal.into_iter().map(|x| x / &g).collect();
        // g divides the offset
        Self {
            normal,
            offset: offset / &g,
        }
    }

    /// `offset − normal · x`, nonnegative for points of the polytope.
    pub fn slack(&self, x: &[BigInt]) -> BigInt {
        &self.offset - matrix::dot(&self.normal, x)
    }
}

/// Boundary of a full-dimensional polytope: outward-oriented boundary
/// simplices (edges in 2D, triangles in 3D) plus the deduplicated facets.
#[derive(Clone, Debug)]
pub struct Hull {
    pub points: Vec<LatticeVector>,
    /// Indices into `points`; in 2D each entry is a counterclockwise edge, in
    /// 3D a triangle whose right-handed normal points outward.
    pub boundary: Vec<Vec<usize>>,
    pub facets: Vec<Facet>,
}

impl Hull {
    /// Points that appear on some boundary simplex.
    pub fn vertices(&self) -> Vec<LatticeVector> {
        let mut used: Vec<usize> = self.boundary.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.into_iter().map(|i| self.points[i].clone()).collect()
    }
}

pub fn convex_hull(polytope: &LatticePolytope) -> Result<Hull> {
    match polytope.dim() {
        2 => hull_2d(polytope),
        3 => hull_3d(polytope),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

fn sub(a: &LatticeVector, b: &LatticeVector) -> Vec<BigInt> {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x - y)
        .collect()
}

fn cross2(o: &LatticeVector, a: &LatticeVector, b: &LatticeVector) -> BigInt {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

fn cross3(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn degenerate(dim: usize, affine_dim: usize) -> Error {
    Error::Degenerate { affine_dim, dim }
}

/// Monotone chain; strictly convex output (collinear points dropped).
fn hull_2d(polytope: &LatticePolytope) -> Result<Hull> {
    let points = polytope.deduped().points().to_vec();
    if points.len() < 3 {
        return Err(degenerate(2, points.len().saturating_sub(1)));
    }
    let half = |order: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut h: Vec<usize> = Vec::new();
        for i in order {
            while h.len() >= 2
                && !cross2(&points[h[h.len() - 2]], &points[h[h.len() - 1]], &points[i])
                    .is_positive()
            {
                h.pop();
            }
            h.push(i);
        }
        h.pop();
        h
    };
    let n = points.len();
    // lower hull then upper hull, counterclockwise
    let mut chain = half(&mut (0..n));
    chain.extend(half(&mut (0..n).rev()));
    if chain.len() < 3 {
        return Err(degenerate(2, 1));
    }
    let m = chain.len();
    let boundary: Vec<Vec<usize>> = (0..m).map(|i| vec![chain[i], chain[(i + 1) % m]]).collect();
    let facets = boundary
        .iter()
        .map(|e| {
            let (a, b) = (&points[e[0]], &points[e[1]]);
            let normal = vec![&b[1] - &a[1], &a[0] - &b[0]];
            let offset = a.dot(&normal);
            Facet::new(normal, offset)
        })
        .collect();
    Ok(Hull {
        points,
        boundary,
        facets,
    })
}

/// Incremental hull with exact orientation tests. Points on the plane of a
/// face count as not seeing it, so coplanar facets may be split into several
/// triangles.
fn hull_3d(polytope: &LatticePolytope) -> Result<Hull> {
    let points = polytope.deduped().points().to_vec();
    let n = points.len();
    if n < 4 {
        return Err(degenerate(3, n.saturating_sub(1).min(2)));
    }

    let p0 = 0;
    let p1 = 1;
    let Some(p2) = (2..n).find(|&i| {
        cross3(
            &sub(&points[p1], &points[p0]),
            &sub(&points[i], &points[p0]),
        )
        .iter()
        .any(|x| !x.is_zero())
    }) else {
        return Err(degenerate(3, 1));
    };
    let normal = cross3(
        &sub(&points[p1], &points[p0]),
        &sub(&points[p2], &points[p0]),
    );
    let Some(p3) = (2..n).find(|&i| !matrix::dot(&normal, &sub(&points[i], &points[p0])).is_zero())
    else {
        return Err(degenerate(3, 2));
    };

    // four times an interior reference point
    let inner4: Vec<BigInt> = (0..3)
        .map(|k| &points[p0][k] + &points[p1][k] + &points[p2][k] + &points[p3][k])
        .collect();
    let outward = |face: [usize; 3]| -> [usize; 3] {
        let [a, b, c] = face;
        let n = cross3(&sub(&points[b], &points[a]), &sub(&points[c], &points[a]));
        let a4: Vec<BigInt> = points[a].coords().iter().map(|x| x * 4).collect();
        let to_inner: Vec<BigInt> = inner4.iter().zip(&a4).map(|(q, a)| q - a).collect();
        if matrix::dot(&n, &to_inner).is_negative() {
            [a, b, c]
        } else {
            [a, c, b]
        }
    };
    let mut faces: Vec<[usize; 3]> = vec![
        outward([p0, p1, p2]),
        outward([p0, p1, p3]),
        outward([p0, p2, p3]),
        outward([p1, p2, p3]),
    ];

    let sees = |face: &[usize; 3], p: &LatticeVector| -> bool {
        let [a, b, c] = *face;
        let n = cross3(&sub(&points[b], &points[a]), &sub(&points[c], &points[a]));
        matrix::dot(&n, &sub(p, &points[a])).is_positive()
    };

    for (i, p) in points.iter().enumerate() {
        if [p0, p1, p2, p3].contains(&i) {
            continue;
        }
        let visible: Vec<bool> = faces.iter().map(|f| sees(f, p)).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut visible_edges = Vec::new();
        for (f, _) in faces.iter().zip(&visible).filter(|(_, &v)| v) {
            visible_edges.extend([(f[0], f[1]), (f[1], f[2]), (f[2], f[0])]);
        }
        let horizon: Vec<(usize, usize)> = visible_edges
            .iter()
            .filter(|&&(a, b)| !visible_edges.contains(&(b, a)))
            .copied()
            .collect();
        let mut kept: Vec<[usize; 3]> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| *f)
            .collect();
        kept.extend(horizon.into_iter().map(|(a, b)| [a, b, i]));
        faces = kept;
    }

    let mut facets: Vec<Facet> = faces
        .iter()
        .map(|&[a, b, c]| {
            let normal = cross3(&sub(&points[b], &points[a]), &sub(&points[c], &points[a]));
            let offset = points[a].dot(&normal);
            Facet::new(normal, offset)
        })
        .collect();
    facets.sort();
    facets.dedup();

    Ok(Hull {
        points,
        boundary: faces.iter().map(|f| f.to_vec()).collect(),
        facets,
    })
}
