//! Cohomology dimensions checked against small projective resolutions
//! built independently of the bar-complex machinery.

use gerst::cochain::{cohomology, is_coboundary, Cochain, Coefficients};
use gerst::gerstenhaber::cup_trivial;
use gerst::hopf::{cyclic_group_table, group_algebra, taft_algebra};
use gerst::{Field, PrimeField, Rationals};

mod common;
use common::{cyclic_oracle, sweedler_oracle};

#[test]
fn f2_z2_matches_periodic_resolution() {
    let oracle = cyclic_oracle(2, 2, 4);
    assert_eq!(oracle, vec![1, 1, 1, 1, 1]);
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra(&cyclic_group_table(2), &f2, "z2").unwrap();
    assert_eq!(
        cohomology(&h, Coefficients::Trivial, 4).unwrap().dims(),
        oracle
    );
}

#[test]
fn f3_z3_matches_periodic_resolution() {
    let oracle = cyclic_oracle(3, 3, 4);
    assert_eq!(oracle, vec![1, 1, 1, 1, 1]);
    let f3 = PrimeField::new(3).unwrap();
    let h = group_algebra(&cyclic_group_table(3), &f3, "z3").unwrap();
    assert_eq!(
        cohomology(&h, Coefficients::Trivial, 4).unwrap().dims(),
        oracle
    );
}

#[test]
fn coprime_characteristic_has_no_higher_cohomology() {
    // Maschke: F_5[Z/3] is semisimple
    let oracle = cyclic_oracle(3, 5, 4);
    assert_eq!(oracle, vec![1, 0, 0, 0, 0]);
    let f5 = PrimeField::new(5).unwrap();
    let h = group_algebra(&cyclic_group_table(3), &f5, "z3").unwrap();
    assert_eq!(
        cohomology(&h, Coefficients::Trivial, 4).unwrap().dims(),
        oracle
    );
}

#[test]
fn sweedler_matches_invariant_resolution() {
    let oracle = sweedler_oracle(4);
    assert_eq!(oracle, vec![1, 0, 1, 0, 1]);
    let h = taft_algebra(2, &Rationals.from_i64(-1), &Rationals).unwrap();
    assert_eq!(
        cohomology(&h, Coefficients::Trivial, 4).unwrap().dims(),
        oracle
    );
}

#[test]
fn cup_square_of_z2_class_is_nonzero() {
    // H*(Z/2, F_2) is polynomial on the degree-1 class
    let f2 = PrimeField::new(2).unwrap();
    let h = group_algebra(&cyclic_group_table(2), &f2, "z2").unwrap();
    let x = Cochain::from_values(&h, 1, Coefficients::Trivial, vec![0, 1]).unwrap();
    let mut power = x.clone();
    for _ in 0..3 {
        power = cup_trivial(&h, &power, &x).unwrap();
        assert!(is_coboundary(&h, &power).unwrap().is_none());
    }
}
