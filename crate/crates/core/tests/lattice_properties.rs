mod common;

use common::*;
use cubesize::sample::random_unimodular;
use cubesize::*;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn unimodular(seed: u64, d: usize) -> AffineUnimodularMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_unimodular(&mut rng, d, 10);
    let shift = (0..d)
        .map(|i| BigInt::from(seed as i64 % 7 - i as i64))
        .collect();
    AffineUnimodularMap::new(m, LatticeVector::new(shift).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn subadditive_and_homogeneous(
        p in point_set(3, 6),
        f in functional(3, 4),
        g in functional(3, 4),
        a in -5i64..=5,
    ) {
        let sum: Vec<BigInt> = f.iter().zip(&g).map(|(x, y)| x + y).collect();
        let diff: Vec<BigInt> = f.iter().zip(&g).map(|(x, y)| x - y).collect();
        let wf = p.width(&f).unwrap();
        let wg = p.width(&g).unwrap();
        prop_assert!(p.width(&sum).unwrap() <= &wf + &wg);
        prop_assert!(p.width(&diff).unwrap() <= &wf + &wg);
        let scaled: Vec<BigInt> = f.iter().map(|x| x * a).collect();
        prop_assert_eq!(p.width(&scaled).unwrap(), wf * BigInt::from(a.abs()));
    }

    #[test]
    fn pullback_identity(p in point_set(3, 5), seed in any::<u64>()) {
        let t = unimodular(seed, 3);
        let image = p.apply_map(&t).unwrap();
        for i in 0..3 {
            prop_assert_eq!(image.coordinate_width(i), p.width(t.matrix().row(i)).unwrap());
        }
    }

    #[test]
    fn translation_invariance(p in point_set(2, 6), f in functional(2, 5), s in functional(2, 20)) {
        prop_assert_eq!(p.translate(&s).unwrap().width(&f).unwrap(), p.width(&f).unwrap());
        let (q, shift) = p.normalize_translation();
        prop_assert_eq!(q.e_box(), p.e_box());
        prop_assert!(q.min_corner().coords().iter().all(Zero::is_zero));
        prop_assert_eq!(p.translate(shift.coords()).unwrap(), q);
    }

    #[test]
    fn monotone_under_inclusion(p in point_set(3, 5), f in functional(3, 4), keep in 1usize..4) {
        let sub = LatticePolytope::new(p.points()[..keep.min(p.len())].to_vec()).unwrap();
        prop_assert!(sub.width(&f).unwrap() <= p.width(&f).unwrap());
    }

    #[test]
    fn round_trip(p in point_set(3, 5), seed in any::<u64>()) {
        let t = unimodular(seed, 3);
        let back = p.apply_map(&t).unwrap().apply_map(&t.invert()).unwrap();
        prop_assert_eq!(back, p.clone());
        prop_assert!(t.invert().compose(&t).unwrap().is_identity());
        prop_assert!(t.compose(&t.invert()).unwrap().is_identity());
        prop_assert_eq!(AffineUnimodularMap::identity(3).compose(&t).unwrap(), t.clone());
    }

    #[test]
    fn hull_points_change_nothing(p in point_set(2, 6), f in functional(2, 5)) {
        let mut pts = p.points().to_vec();
        let (a, b) = (&p.points()[0], &p.points()[1]);
        let mid: Vec<BigInt> = a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect();
        if mid.iter().all(|x| x % 2 == BigInt::zero()) {
            pts.push(LatticeVector::new(mid.into_iter().map(|x| x / 2).collect()).unwrap());
        }
        pts.push(a.clone());
        let q = LatticePolytope::new(pts).unwrap();
        prop_assert_eq!(q.width(&f).unwrap(), p.width(&f).unwrap());
        prop_assert_eq!(lattice_size(&q).unwrap().value, lattice_size(&p).unwrap().value);
    }

    #[test]
    fn width_profile_is_sorted_and_realized(p in point_set(3, 6)) {
        let prof = p.width_profile();
        prop_assert!(prof.widths.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(prof.max(), &p.e_box());
        prop_assert_eq!(p.apply_map(&prof.perm).unwrap().coordinate_widths(), prof.widths.clone());
    }

    #[test]
    fn dimension_reduction_is_exact(p in point_set(3, 2)) {
        if let DimensionReduction::Lower(low) = reduce_dimension(&p) {
            let image = p.apply_map(&low.map).unwrap();
            prop_assert!(image.points().iter().all(|x| x.coords()[low.affine_dim.max(1)..].iter().all(Zero::is_zero)));
            prop_assert!(low.affine_dim < 3);
        }
    }
}

#[test]
fn normalize_translation_examples() {
    let p = LatticePolytope::from_i64(&[[2, 3], [4, 7]]).unwrap();
    let (_, shift) = p.normalize_translation();
    assert_eq!(shift.coords(), big(&[-2, -3]));
    let (q, shift) = triangle().normalize_translation();
    assert_eq!(q, triangle());
    assert!(shift.coords().iter().all(Zero::is_zero));
}

#[test]
fn non_unimodular_maps_are_rejected() {
    let m = IntMatrix::from_i64_rows(&[[2, 0], [0, 1]]).unwrap();
    assert!(matches!(
        AffineUnimodularMap::linear(m),
        Err(Error::NotUnimodular { .. })
    ));
}
