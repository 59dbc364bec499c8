//! The Drinfeld double `D(H) = H*^cop ⋈ H`.
//!
//! Conventions: basis index `i*d + a` stands for `delta_i (x) e_a`;
//!
//! ```text
//! (f (x) a)(g (x) b) = sum f (a1 -> g <- S^-1(a3)) (x) a2 b,   (x -> g <- y)(h) = g(y h x)
//! Delta(f (x) a)     = sum (f2 (x) a1) (x) (f1 (x) a2)
//! eps(f (x) a)       = f(1) eps(a),   1 = eps (x) 1
//! ```
//!
//! The antipode is obtained by solving the linear system `S(x1) x2 = eps(x) 1`
//! and the result is run through the axiom checker before it is returned.

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfParts};
use crate::linalg::{Field, Matrix, SparseMatrix};

#[derive(Clone, Debug)]
pub struct DoubleData<K: Field> {
    pub underlying: HopfAlgebra<K>,
    /// `(dim H*, dim H)`
    pub factor_dims: (usize, usize),
    pub provenance: String,
}

pub fn antipode_inverse<K: Field>(h: &HopfAlgebra<K>) -> Result<Matrix<K>> {
    h.antipode_matrix().invert()
}

pub fn drinfeld_double<K: Field>(h: &HopfAlgebra<K>) -> Result<DoubleData<K>> {
    let f = h.field();
    let d = h.dim();
    let dd = d * d;
    let sinv = antipode_inverse(h)?;
    let sinv_col = |z: usize| -> Vec<(usize, K::Elem)> {
        (0..d)
            .filter(|&r| !f.is_zero(sinv.get(r, z)))
            .map(|r| (r, sinv.get(r, z).clone()))
            .collect()
    };
    let e = |i: usize| vec![(i, f.one())];

    // conj[(z*d + h)*d + x] = S^-1(e_z) e_h e_x
    let mut conj = Vec::with_capacity(d * d * d);
    for z in 0..d {
        let sz = sinv_col(z);
        for hh in 0..d {
            let szh = h.multiply_sparse(&sz, &e(hh));
            for x in 0..d {
                conj.push(h.multiply_sparse(&szh, &e(x)));
            }
        }
    }

    let comult_h = h.comult_tensor();
    let mult_h = h.mult_tensor();
    let idx3 = |a: usize, b: usize, c: usize| (a * dd + b) * dd + c;

    let mut mult = vec![f.zero(); dd * dd * dd];
    for a in 0..d {
        let t = h.iterated_comult(&h.basis_vector(a), 3)?;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let ta = &t[(x * d + y) * d + z];
                    if f.is_zero(ta) {
                        continue;
                    }
                    for hh in 0..d {
                        // a1 -> delta_j <- S^-1(a3) has coefficient
                        // <delta_j, S^-1(e_z) e_h e_x> on delta_h
                        for (j, cj) in &conj[(z * d + hh) * d + x] {
                            let w = f.mul(ta, cj);
                            for i in 0..d {
                                for k in 0..d {
                                    // delta_i delta_h = sum_k Delta_k[i][h] delta_k
                                    let cd = &comult_h[k * d * d + i * d + hh];
                                    if f.is_zero(cd) {
                                        continue;
                                    }
                                    let w2 = f.mul(&w, cd);
                                    for b in 0..d {
                                        for (c, cm) in h.product_terms(y, b) {
                                            let pos = idx3(i * d + a, *j * d + b, k * d + c);
                                            f.mul_add_assign(&mut mult[pos], &w2, cm);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let mut comult = vec![f.zero(); dd * dd * dd];
    for fi in 0..d {
        for j in 0..d {
            for k in 0..d {
                // Delta(delta_fi) has coefficient delta_fi(e_j e_k) on delta_j (x) delta_k
                let m = &mult_h[j * d * d + k * d + fi];
                if f.is_zero(m) {
                    continue;
                }
                for a in 0..d {
                    for (p, q, c) in h.coproduct_terms(a) {
                        let pos = idx3(fi * d + a, k * d + p, j * d + q);
                        f.mul_add_assign(&mut comult[pos], m, c);
                    }
                }
            }
        }
    }

    let mut unit = vec![f.zero(); dd];
    let mut counit = vec![f.zero(); dd];
    for i in 0..d {
        for a in 0..d {
            unit[i * d + a] = f.mul(&h.counit_vector()[i], &h.unit_vector()[a]);
            counit[i * d + a] = f.mul(&h.unit_vector()[i], &h.counit_vector()[a]);
        }
    }

    let antipode = solve_antipode(f, dd, &mult, &comult, &unit, &counit)?;
    let parts = HopfParts {
        name: format!("double:{}", h.name()),
        dim: dd,
        mult,
        unit,
        comult,
        counit,
        antipode,
        provenance: Some(format!("drinfeld double of {}", h.name())),
    };
    let underlying = HopfAlgebra::from_parts(f, parts)?;
    Ok(DoubleData {
        underlying,
        factor_dims: (d, d),
        provenance: h.name().to_string(),
    })
}

/// Solves `sum S(x1) x2 = eps(x) 1` for the matrix of `S`; unknown
/// `(w, y)` at `w*n + y` is the coefficient of `e_w` in `S(e_y)`.
fn solve_antipode<K: Field>(
    f: &K,
    n: usize,
    mult: &[K::Elem],
    comult: &[K::Elem],
    unit: &[K::Elem],
    counit: &[K::Elem],
) -> Result<Vec<K::Elem>> {
    let mut system = SparseMatrix::new(f, n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for x in 0..n {
        for out in 0..n {
            let mut row: Vec<Option<K::Elem>> = vec![None; n * n];
            for y in 0..n {
                for z in 0..n {
                    let c = &comult[(x * n + y) * n + z];
                    if f.is_zero(c) {
                        continue;
                    }
                    for w in 0..n {
                        let m = &mult[(w * n + z) * n + out];
                        if f.is_zero(m) {
                            continue;
                        }
                        let slot = &mut row[w * n + y];
                        match slot {
                            Some(v) => f.mul_add_assign(v, c, m),
                            None => *slot = Some(f.mul(c, m)),
                        }
                    }
                }
            }
            let row = row
                .into_iter()
                .enumerate()
                .filter_map(|(i, v)| v.filter(|v| !f.is_zero(v)).map(|v| (i, v)))
                .collect();
            system.push_row(row);
            rhs.push(f.mul(&counit[x], &unit[out]));
        }
    }
    system
        .solve(&rhs)?
        .ok_or(Error::Unsolvable("antipode of the double"))
}
