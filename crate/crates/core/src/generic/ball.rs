use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::hull::{convex_hull, Facet, Hull};
use crate::error::Result;
use crate::lattice::LatticePolytope;

/// A ball inside the polytope: centered at the solid centroid, with squared
/// radius equal to the squared distance to the nearest facet hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InscribedBall {
    pub center: Vec<BigRational>,
    pub radius_squared: BigRational,
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

fn rational_slack(facet: &Facet, point: &[BigRational]) -> BigRational {
    let dot: BigRational = facet
        .normal
        .iter()
        .zip(point)
        .map(|(n, x)| rat(n) * x)
        .sum();
    rat(&facet.offset) - dot
}

fn norm_squared(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x * x).sum()
}

/// Solid centroid via a fan of simplices from the first boundary vertex.
fn centroid(hull: &Hull) -> Vec<BigRational> {
    let d = hull.points[0].dim();
    let apex = &hull.points[hull.boundary[0][0]];
    let mut weight = BigInt::zero();
    let mut moment = vec![BigInt::zero(); d];
    for simplex in &hull.boundary {
        let rows: Vec<Vec<BigInt>> = simplex
            .iter()
            .map(|&i| {
                hull.points[i]
                    .coords()
                    .iter()
                    .zip(apex.coords())
                    .map(|(x, a)| x - a)
                    .collect()
            })
            .collect();
        // d! times the signed volume; nonnegative for outward simplices
        let vol = crate::matrix::IntMatrix::from_rows(rows)
            .and_then(|m| m.determinant())
            .expect("d simplex vertices of dimension d");
        for (k, m) in moment.iter_mut().enumerate() {
            let s: BigInt = simplex.iter().map(|&i| &hull.points[i][k]).sum::<BigInt>() + &apex[k];
            *m += &vol * s;
        }
        weight += vol;
    }
    let denom = weight * BigInt::from(d as u64 + 1);
    moment
        .into_iter()
        .map(|m| BigRational::new(m, denom.clone()))
        .collect()
}

pub fn inscribed_ball(polytope: &LatticePolytope) -> Result<InscribedBall> {
    let hull = convex_hull(polytope)?;
    Ok(ball_from_hull(&hull))
}

pub(crate) fn ball_from_hull(hull: &Hull) -> InscribedBall {
    let center = centroid(hull);
    let radius_squared = hull
        .facets
        .iter()
        .map(|f| {
            let s = rational_slack(f, &center);
            &s * &s / rat(&norm_squared(&f.normal))
        })
        .min()
        .expect("a full-dimensional hull has facets");
    InscribedBall {
        center,
        radius_squared,
    }
}

impl InscribedBall {
    /// Checks that the center is inside every facet and its distance to each
    /// facet hyperplane is at least the radius.
    pub fn fits_inside(&self, facets: &[Facet]) -> bool {
        facets.iter().all(|f| {
            let s = rational_slack(f, &self.center);
            !s.is_negative() && &s * &s >= &self.radius_squared * rat(&norm_squared(&f.normal))
        })
    }

    /// Whether `center + R u` lies in every facet half-space, for a rational
    /// unit vector `u`. Exact even though `R` itself may be irrational.
    pub fn sphere_point_inside(&self, unit: &[BigRational], facets: &[Facet]) -> bool {
        facets.iter().all(|f| {
            let s = rational_slack(f, &self.center);
            let t: BigRational = f.normal.iter().zip(unit).map(|(n, u)| rat(n) * u).sum();
            if s.is_negative() {
                return false;
            }
            !t.is_positive() || &self.radius_squared * &t * &t <= &s * &s
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn unit_square() {
        let p = LatticePolytope::from_i64(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        let b = inscribed_ball(&p).unwrap();
        assert_eq!(b.center, vec![q(1, 2), q(1, 2)]);
        assert_eq!(b.radius_squared, q(1, 4));
    }

    #[test]
    fn triangle() {
        let p = LatticePolytope::from_i64(&[[0, 0], [1, 0], [2, 3]]).unwrap();
        let b = inscribed_ball(&p).unwrap();
        assert_eq!(b.center, vec![BigRational::one(), BigRational::one()]);
        // nearest edge is 3x - 2y = 0 at distance 1/sqrt(13)
        assert_eq!(b.radius_squared, q(1, 13));
    }

    #[test]
    fn cubes() {
        for k in 1..=4 {
            let mut pts = Vec::new();
            for x in [0, k] {
                for y in [0, k] {
                    for z in [0, k] {
                        pts.push([x, y, z]);
                    }
                }
            }
            let p = LatticePolytope::from_i64(&pts).unwrap();
            let b = inscribed_ball(&p).unwrap();
            assert_eq!(b.center, vec![q(k, 2); 3]);
            assert_eq!(b.radius_squared, q(k * k, 4));
        }
    }

    #[test]
    fn tetrahedron_centroid_is_vertex_average() {
        let p = LatticePolytope::from_i64(&[[0, 0, 0], [4, 0, 0], [0, 4, 0], [0, 0, 4]]).unwrap();
        let b = inscribed_ball(&p).unwrap();
        assert_eq!(b.center, vec![BigRational::one(); 3]);
        // nearest facet is the slanted one, x + y + z = 4: (4 - 3)^2 / 3
        assert_eq!(b.radius_squared, q(1, 3));
        let hull = convex_hull(&p).unwrap();
        assert!(b.fits_inside(&hull.facets));
    }
}
