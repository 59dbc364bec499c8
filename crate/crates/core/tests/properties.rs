//! Randomized invariants of the linear algebra, the structure constants
//! and the cochain operations.

use gerst::cochain::{cohomology, diff, differential_matrix, Cochain, Coefficients};
use gerst::gerstenhaber::{epsilon_push, hat};
use gerst::hopf::{cyclic_group_table, group_algebra, taft_algebra, HopfParts};
use gerst::linalg::{Matrix, SparseMatrix};
use gerst::{Field, HopfAlgebra, PrimeField, Rationals};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..7, 1usize..7)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..4, r * c)))
}

fn f7() -> PrimeField {
    PrimeField::new(7).unwrap()
}

fn sweedler() -> HopfAlgebra<Rationals> {
    taft_algebra(2, &Rationals.from_i64(-1), &Rationals).unwrap()
}

fn taft3() -> HopfAlgebra<PrimeField> {
    let f = f7();
    taft_algebra(3, &f.from_i64(2), &f).unwrap()
}

fn lift<K: Field>(field: &K, v: &[i64]) -> Vec<K::Elem> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

proptest! {
    #[test]
    fn rank_nullity_mod_p((r, c, data) in matrix_strategy()) {
        let f = f7();
        let m = Matrix::from_vec(&f, r, c, lift(&f, &data)).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), c);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| f.is_zero(x)));
        }
        prop_assert_eq!(m.to_sparse().rank(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rank_nullity_over_q((r, c, data) in matrix_strategy()) {
        let q = Rationals;
        let m = Matrix::from_vec(&q, r, c, lift(&q, &data)).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), c);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| q.is_zero(x)));
        }
    }

    #[test]
    fn solve_residual_is_zero((r, c, data) in matrix_strategy(), x in prop::collection::vec(-3i64..4, 6)) {
        let q = Rationals;
        let m = Matrix::from_vec(&q, r, c, lift(&q, &data)).unwrap();
        let x = lift(&q, &x[..c]);
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b.clone());
        let s: SparseMatrix<Rationals> = m.to_sparse();
        let z = s.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(s.mul_vec(&z).unwrap(), b);
    }

    #[test]
    fn sweedler_is_associative_on_vectors(v in prop::collection::vec(-3i64..4, 12)) {
        let h = sweedler();
        let q = Rationals;
        let (a, b, c) = (lift(&q, &v[0..4]), lift(&q, &v[4..8]), lift(&q, &v[8..12]));
        let ab_c = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        // S(ab) = S(b) S(a)
        let s_ab = h.antipode(&h.multiply(&a, &b).unwrap()).unwrap();
        let sb_sa = h.multiply(&h.antipode(&b).unwrap(), &h.antipode(&a).unwrap()).unwrap();
        prop_assert_eq!(s_ab, sb_sa);
    }

    #[test]
    fn taft_comultiplication_is_multiplicative(v in prop::collection::vec(0i64..7, 18)) {
        let h = taft3();
        let f = f7();
        let (a, b) = (lift(&f, &v[0..9]), lift(&f, &v[9..18]));
        let d = h.dim();
        let lhs = h.comultiply(&h.multiply(&a, &b).unwrap()).unwrap();
        let (da, db) = (h.comultiply(&a).unwrap(), h.comultiply(&b).unwrap());
        let mut rhs = vec![f.zero(); d * d];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                if f.is_zero(x) || f.is_zero(y) {
                    continue;
                }
                let c = f.mul(x, y);
                let left = h.multiply(&h.basis_vector(i / d), &h.basis_vector(j / d)).unwrap();
                let right = h.multiply(&h.basis_vector(i % d), &h.basis_vector(j % d)).unwrap();
                for (l, lv) in left.iter().enumerate() {
                    for (r, rv) in right.iter().enumerate() {
                        rhs[l * d + r] = f.add(&rhs[l * d + r], &f.mul(&c, &f.mul(lv, rv)));
                    }
                }
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn section_and_square_zero(seed in any::<u64>(), degree in 0usize..4) {
        let h = sweedler();
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Cochain::random(&h, degree, Coefficients::Trivial, &mut rng).unwrap();
        prop_assert_eq!(epsilon_push(&h, &hat(&h, &f).unwrap()).unwrap(), f.clone());
        prop_assert!(diff(&h, &diff(&h, &f).unwrap()).unwrap().is_zero(&q));
        let g = Cochain::random(&h, degree, Coefficients::Adjoint, &mut rng).unwrap();
        prop_assert!(diff(&h, &diff(&h, &g).unwrap()).unwrap().is_zero(&q));
    }

    #[test]
    fn differential_matrix_matches_formula(seed in any::<u64>(), degree in 0usize..3, adjoint in any::<bool>()) {
        let h = taft3();
        let coeff = if adjoint { Coefficients::Adjoint } else { Coefficients::Trivial };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = Cochain::random(&h, degree, coeff, &mut rng).unwrap();
        let m = differential_matrix(&h, degree, coeff).unwrap();
        prop_assert_eq!(m.mul_vec(f.values()).unwrap(), diff(&h, &f).unwrap().into_values());
    }
}

/// Relabels the basis of `h` by the permutation `perm` (old index -> new).
fn permuted(h: &HopfAlgebra<PrimeField>, perm: &[usize]) -> HopfAlgebra<PrimeField> {
    let f = h.field();
    let d = h.dim();
    let p = h.to_parts();
    let mut mult = vec![f.zero(); d * d * d];
    let mut comult = vec![f.zero(); d * d * d];
    let mut unit = vec![f.zero(); d];
    let mut counit = vec![f.zero(); d];
    let mut antipode = vec![f.zero(); d * d];
    for i in 0..d {
        unit[perm[i]] = p.unit[i];
        counit[perm[i]] = p.counit[i];
        for j in 0..d {
            antipode[perm[i] * d + perm[j]] = p.antipode[i * d + j];
            for k in 0..d {
                let (a, b, c) = (perm[i], perm[j], perm[k]);
                mult[a * d * d + b * d + c] = p.mult[i * d * d + j * d + k];
                comult[a * d * d + b * d + c] = p.comult[i * d * d + j * d + k];
            }
        }
    }
    let parts = HopfParts {
        name: format!("{} permuted", p.name),
        dim: d,
        mult,
        unit,
        comult,
        counit,
        antipode,
        provenance: None,
    };
    HopfAlgebra::from_parts(f, parts).unwrap()
}

#[test]
fn cohomology_is_invariant_under_basis_permutation() {
    let f3 = PrimeField::new(3).unwrap();
    let h = group_algebra(&cyclic_group_table(3), &f3, "z3").unwrap();
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for coeff in [Coefficients::Trivial, Coefficients::Adjoint] {
        let base = cohomology(&h, coeff, 3).unwrap().dims();
        for perm in &perms {
            let hp = permuted(&h, perm);
            assert_eq!(cohomology(&hp, coeff, 3).unwrap().dims(), base, "{perm:?}");
        }
    }
}
