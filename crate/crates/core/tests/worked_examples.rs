mod common;

use common::*;
use cubesize::generic::{
    box_shape_bruteforce, lattice_size_bruteforce, w2_bruteforce, width_bruteforce,
};
use cubesize::reduce3d::{build_s, normalize_projection, scan_s, Reduction3DState};
use cubesize::*;
use num_bigint::BigInt;

fn ints(v: &[i64]) -> Vec<BigInt> {
    big(v)
}

#[test]
fn triangle_has_size_two() {
    let p = triangle();
    assert_eq!(p.e_box(), 3.into());
    let cert = lattice_size_2d(&p).unwrap();
    assert_eq!(cert.value, 2.into());
    assert!(cert.verify(&p));
    let image = p.apply_map(&cert.map).unwrap();
    assert!(image.fits_in_box(&ints(&[2, 2])));
    assert_eq!(width_2d(&p).unwrap(), 2.into());
    let rect = minimal_rectangle_2d(&p).unwrap();
    assert_eq!(rect.shape, ints(&[2, 2]));
    assert!(rect.verify(&p));
}

#[test]
fn triangle_oracle() {
    let p = triangle();
    assert_eq!(lattice_size_bruteforce(&p).unwrap().value, 2.into());
    assert_eq!(width_bruteforce(&p).unwrap(), 2.into());
}

#[test]
fn example_one_reduces_to_nine() {
    let p = example_one();
    assert_eq!(p.width_profile().widths, ints(&[2, 4, 10]));
    assert!(p.width_profile().is_identity());

    let state = Reduction3DState::new(&p).unwrap();
    let (_, shears) = normalize_projection(&state);
    assert_eq!(shears, 0);
    assert_eq!(p.width_i64(&[1, 1, 0]).unwrap(), 5.into());
    assert_eq!(p.width_i64(&[1, -1, 0]).unwrap(), 5.into());

    let set = build_s(&2.into(), &4.into(), &10.into()).unwrap();
    assert!(set.contains(&2.into(), &1.into()));
    let scan = scan_s(&state.polytope, &set).unwrap();
    assert!(scan.width <= 9.into());

    let a = AffineUnimodularMap::from_i64(&[[1, 0, 0], [0, 1, 0], [2, 1, 1]], &[0, 0, 0]).unwrap();
    assert_eq!(p.apply_map(&a).unwrap().e_box(), 9.into());

    // exact values come from the enumeration oracle
    let cert = lattice_size_3d(&p).unwrap();
    assert_eq!(cert.value, 9.into());
    assert!(cert.verify(&p));
    assert_eq!(
        lattice_size_3d_with(&p, Mode3D::Naive).unwrap().value,
        9.into()
    );
    let b = minimal_box_3d(&p).unwrap();
    assert_eq!(b.shape, ints(&[2, 4, 9]));
    assert!(b.verify(&p));
    assert_eq!(width_3d(&p).unwrap(), 2.into());
    assert_eq!(w2_3d(&p).unwrap(), 4.into());
}

#[test]
fn example_one_oracle() {
    let p = example_one();
    assert_eq!(lattice_size_bruteforce(&p).unwrap().value, 9.into());
    assert_eq!(box_shape_bruteforce(&p).unwrap(), ints(&[2, 4, 9]));
    assert_eq!(w2_bruteforce(&p).unwrap(), 4.into());
}

#[test]
fn example_two_drops_below_its_widths() {
    let p = example_two();
    assert_eq!(p.coordinate_widths(), ints(&[5, 5, 5]));
    let a =
        AffineUnimodularMap::from_i64(&[[1, 1, 0], [1, 0, -1], [1, 1, -1]], &[-3, 2, 0]).unwrap();
    assert_eq!(
        p.apply_map(&a).unwrap().coordinate_widths(),
        ints(&[4, 4, 4])
    );

    let cert = lattice_size_3d(&p).unwrap();
    assert_eq!(cert.value, 4.into());
    assert!(cert.verify(&p));
    let b = minimal_box_3d(&p).unwrap();
    assert_eq!(b.shape, ints(&[4, 4, 4]));
    assert!(b.verify(&p));
}

#[test]
fn example_two_oracle() {
    let p = example_two();
    assert_eq!(lattice_size_bruteforce(&p).unwrap().value, 4.into());
    assert_eq!(box_shape_bruteforce(&p).unwrap(), ints(&[4, 4, 4]));
    assert_eq!(width_bruteforce(&p).unwrap(), 4.into());
}

#[test]
fn cubes_and_squares() {
    for k in 1..=5 {
        let c = cube(k);
        assert_eq!(lattice_size_3d(&c).unwrap().value, k.into());
        let b = minimal_box_3d(&c).unwrap();
        assert_eq!(b.shape, ints(&[k, k, k]));
        assert!(b.map.matrix() == &IntMatrix::identity(3));
        let sq = LatticePolytope::from_i64(&[[0, 0], [k, 0], [0, k], [k, k]]).unwrap();
        assert_eq!(lattice_size_2d(&sq).unwrap().value, k.into());
        assert_eq!(minimal_rectangle_2d(&sq).unwrap().shape, ints(&[k, k]));
    }
}

#[test]
fn lower_dimensional_inputs() {
    let point = LatticePolytope::from_i64(&[[5, 5, 5]]).unwrap();
    assert_eq!(lattice_size(&point).unwrap().value, 0.into());
    assert_eq!(minimal_box(&point).unwrap().shape, ints(&[0, 0, 0]));

    let seg = LatticePolytope::from_i64(&[[1, 1], [7, 10]]).unwrap();
    assert_eq!(lattice_size_2d(&seg).unwrap().value, 3.into());
    assert_eq!(width_2d(&seg).unwrap(), 0.into());
    let flat = LatticePolytope::from_i64(&[[0, 0], [3, 0]]).unwrap();
    assert_eq!(width_2d(&flat).unwrap(), 0.into());

    // conv{(0,0,l), (l,0,0), (0,l,l), (l,l,0)} lies in x + z = l
    let quad = LatticePolytope::from_i64(&[[0, 0, 3], [3, 0, 0], [0, 3, 3], [3, 3, 0]]).unwrap();
    let DimensionReduction::Lower(low) = reduce_dimension(&quad) else {
        panic!("quadrilateral is planar");
    };
    assert_eq!(low.affine_dim, 2);
    let b = minimal_box_3d(&quad).unwrap();
    assert_eq!(b.shape, ints(&[0, 3, 3]));
    assert!(b.verify(&quad));
    assert_eq!(lattice_size_bruteforce(&quad).unwrap().value, 3.into());
}

#[test]
fn direction_set_sizes() {
    for l in 1..=30 {
        let set = build_s(&l.into(), &l.into(), &l.into()).unwrap();
        assert_eq!(set.len(), 17, "l = {l}");
    }
    // counted by a separate enumeration of the defining inequalities
    for (l1, l2, l, n) in [(2, 4, 10, 291), (1, 2, 7, 603), (2, 2, 3, 49)] {
        assert_eq!(build_s(&l1.into(), &l2.into(), &l.into()).unwrap().len(), n);
    }
}

#[test]
fn four_dimensions_are_unsupported() {
    let p = LatticePolytope::from_i64(&[[0, 0, 0, 0], [1, 2, 3, 4]]).unwrap();
    assert_eq!(lattice_size(&p), Err(Error::UnsupportedDimension(4)));
    assert_eq!(minimal_box(&p), Err(Error::UnsupportedDimension(4)));
}

#[test]
fn flat_along_an_exceptional_direction() {
    let p = LatticePolytope::from_i64(&[[1, 2, 0], [0, 2, 1], [2, 0, 1], [2, 2, 0], [0, 0, 2]])
        .unwrap();
    assert_eq!(p.coordinate_widths(), ints(&[2, 2, 2]));
    assert_eq!(p.width_i64(&[1, 1, 2]).unwrap(), 1.into());
    let red = cubesize::reduce3d::reduce_3d(&p, Mode3D::Refined).unwrap();
    assert_eq!(red.iterations, 0);
    assert_eq!(width_3d(&p).unwrap(), 1.into());
    assert_eq!(w2_3d(&p).unwrap(), 2.into());
    let b = minimal_box_3d(&p).unwrap();
    assert_eq!(b.shape, ints(&[1, 2, 2]));
    assert!(b.verify(&p));
    assert_eq!(width_bruteforce(&p).unwrap(), 1.into());
    assert_eq!(box_shape_bruteforce(&p).unwrap(), ints(&[1, 2, 2]));
}
