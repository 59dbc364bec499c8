//! Group algebras and Taft algebras.

use super::{HopfAlgebra, HopfParts};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// `table[a][b]` is the index of `a * b`.
pub type CayleyTable = Vec<Vec<usize>>;

pub fn cyclic_group_table(n: usize) -> CayleyTable {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

/// S_3 as permutations of {0,1,2} in lexicographic order (identity first),
/// composed as functions: `(s * t)(x) = s(t(x))`.
pub fn symmetric_group_s3_table() -> CayleyTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect()
}

fn validate_group(table: &CayleyTable) -> Result<(usize, Vec<usize>)> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!(
                "row {a} has length {}",
                row.len()
            )));
        }
        if let Some(b) = row.iter().position(|&c| c >= n) {
            return Err(Error::NotAGroup(format!(
                "{a}*{b} = {} is out of range",
                row[b]
            )));
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inverse = Vec::with_capacity(n);
    for g in 0..n {
        let inv = (0..n)
            .find(|&h| table[g][h] == identity && table[h][g] == identity)
            .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
        inverse.push(inv);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok((identity, inverse))
}

/// The group algebra k[G]: basis = group elements, `Delta(g) = g (x) g`,
/// `eps(g) = 1`, `S(g) = g^-1`.
pub fn group_algebra<K: Field>(
    table: &CayleyTable,
    field: &K,
    name: &str,
) -> Result<HopfAlgebra<K>> {
    let (identity, inverse) = validate_group(table)?;
    let n = table.len();
    let mut mult = vec![field.zero(); n * n * n];
    let mut comult = vec![field.zero(); n * n * n];
    let mut antipode = vec![field.zero(); n * n];
    for a in 0..n {
        for b in 0..n {
            mult[a * n * n + b * n + table[a][b]] = field.one();
        }
        comult[a * n * n + a * n + a] = field.one();
        antipode[inverse[a] * n + a] = field.one();
    }
    let mut unit = vec![field.zero(); n];
    unit[identity] = field.one();
    let parts = HopfParts {
        name: name.to_string(),
        dim: n,
        mult,
        unit,
        comult,
        counit: vec![field.one(); n],
        antipode,
        provenance: None,
    };
    HopfAlgebra::from_parts(field, parts)
}

fn is_primitive_root<K: Field>(field: &K, q: &K::Elem, n: usize) -> bool {
    field.is_one(&field.pow(q, n as u64)) && (1..n).all(|m| !field.is_one(&field.pow(q, m as u64)))
}

/// Taft algebra T_n(q) of dimension n^2 with basis `g^i x^j` at index
/// `i*n + j`: `g^n = 1`, `x^n = 0`, `x g = q g x`, `g` group-like and
/// `Delta(x) = x (x) 1 + g (x) x`. `taft_algebra(2, -1)` is Sweedler's
/// four-dimensional algebra.
pub fn taft_algebra<K: Field>(n: usize, q: &K::Elem, field: &K) -> Result<HopfAlgebra<K>> {
    if n < 2 || !is_primitive_root(field, q, n) {
        return Err(Error::NotPrimitiveRoot {
            q: field.format_elem(q),
            n,
        });
    }
    let d = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let mut mult = vec![field.zero(); d * d * d];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l >= n {
                        continue;
                    }
                    // g^i x^j g^k x^l = q^{jk} g^{i+k} x^{j+l}
                    let c = field.pow(q, (j * k) as u64);
                    mult[idx(i, j) * d * d + idx(k, l) * d + idx(i + k, j + l)] = c;
                }
            }
        }
    }

    // Multiplication alone determines the coproduct of g^i x^j as
    // Delta(g)^i Delta(x)^j in A (x) A.
    let mul = |a: &[K::Elem], b: &[K::Elem]| -> Vec<K::Elem> {
        let mut out = vec![field.zero(); d];
        for (s, ca) in a.iter().enumerate() {
            if field.is_zero(ca) {
                continue;
            }
            for (t, cb) in b.iter().enumerate() {
                if field.is_zero(cb) {
                    continue;
                }
                let ab = field.mul(ca, cb);
                for u in 0..d {
                    let m = &mult[s * d * d + t * d + u];
                    if !field.is_zero(m) {
                        field.mul_add_assign(&mut out[u], &ab, m);
                    }
                }
            }
        }
        out
    };
    let mul2 = |a: &[K::Elem], b: &[K::Elem]| -> Vec<K::Elem> {
        let mut out = vec![field.zero(); d * d];
        for p in 0..d {
            for q2 in 0..d {
                let ca = &a[p * d + q2];
                if field.is_zero(ca) {
                    continue;
                }
                for r in 0..d {
                    for s in 0..d {
                        let cb = &b[r * d + s];
                        if field.is_zero(cb) {
                            continue;
                        }
                        let left = mul(&unit_at(field, d, p), &unit_at(field, d, r));
                        let right = mul(&unit_at(field, d, q2), &unit_at(field, d, s));
                        let c = field.mul(ca, cb);
                        for (u, lu) in left.iter().enumerate() {
                            if field.is_zero(lu) {
                                continue;
                            }
                            for (v, rv) in right.iter().enumerate() {
                                if !field.is_zero(rv) {
                                    let t = field.mul(&c, lu);
                                    field.mul_add_assign(&mut out[u * d + v], &t, rv);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    };
    let g = idx(1, 0);
    let x = idx(0, 1);
    let mut delta_g = vec![field.zero(); d * d];
    delta_g[g * d + g] = field.one();
    let mut delta_x = vec![field.zero(); d * d];
    delta_x[x * d] = field.one();
    delta_x[g * d + x] = field.one();
    let mut one_one = vec![field.zero(); d * d];
    one_one[0] = field.one();

    let mut comult = vec![field.zero(); d * d * d];
    let mut counit = vec![field.zero(); d];
    let mut antipode = vec![field.zero(); d * d];

    // S(g) = g^{n-1}, S(x) = -g^{n-1} x; S(g^i x^j) = S(x)^j S(g)^i
    let s_g = unit_at(field, d, idx(n - 1, 0));
    let mut s_x = vec![field.zero(); d];
    s_x[idx(n - 1, 1)] = field.neg(&field.one());

    let mut delta_gi = one_one.clone();
    let mut s_gi = unit_at(field, d, 0);
    for i in 0..n {
        let mut delta = delta_gi.clone();
        let mut s_xj = unit_at(field, d, 0);
        for j in 0..n {
            let b = idx(i, j);
            comult[b * d * d..(b + 1) * d * d].clone_from_slice(&delta);
            counit[b] = if j == 0 { field.one() } else { field.zero() };
            let s_b = mul(&s_xj, &s_gi);
            for (r, c) in s_b.into_iter().enumerate() {
                antipode[r * d + b] = c;
            }
            delta = mul2(&delta, &delta_x);
            s_xj = mul(&s_xj, &s_x);
        }
        delta_gi = mul2(&delta_gi, &delta_g);
        s_gi = mul(&s_gi, &s_g);
    }

    let name = if n == 2 && field.is_one(&field.neg(q)) {
        "sweedler".to_string()
    } else {
        format!("taft({n},{})", field.format_elem(q))
    };
    let parts = HopfParts {
        name,
        dim: d,
        mult,
        unit: unit_at(field, d, 0),
        comult,
        counit,
        antipode,
        provenance: None,
    };
    HopfAlgebra::from_parts(field, parts)
}

fn unit_at<K: Field>(field: &K, d: usize, i: usize) -> Vec<K::Elem> {
    let mut v = vec![field.zero(); d];
    v[i] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::linalg::{PrimeField, Rationals};

    #[test]
    fn group_algebra_dimensions() {
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(
            group_algebra(&cyclic_group_table(2), &f2, "Z/2")
                .unwrap()
                .dim(),
            2
        );
        assert_eq!(
            group_algebra(&cyclic_group_table(3), &f3, "Z/3")
                .unwrap()
                .dim(),
            3
        );
    }

    #[test]
    fn s3_is_noncommutative() {
        let table = symmetric_group_s3_table();
        // transpositions (1 2) and (0 1) do not commute
        assert_ne!(table[1][2], table[2][1]);
        let h = group_algebra(&table, &Rationals, "S3").unwrap();
        assert_eq!(h.dim(), 6);
        let ab = h.multiply(&h.basis_vector(1), &h.basis_vector(2)).unwrap();
        let ba = h.multiply(&h.basis_vector(2), &h.basis_vector(1)).unwrap();
        assert_ne!(ab, ba);
    }

    #[test]
    fn rejects_non_groups() {
        let q = Rationals;
        // no inverse for 1 in the multiplicative monoid {0, 1} with 1*1 = 1, 0 absorbing
        let monoid = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(
            group_algebra(&monoid, &q, "m"),
            Err(Error::NotAGroup(_))
        ));
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(matches!(
            group_algebra(&ragged, &q, "r"),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn taft_constructor() {
        let q = Rationals;
        let h = taft_algebra(2, &q.from_i64(-1), &q).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.name(), "sweedler");
        assert!(check_hopf_axioms(&h).passed());

        // 2 is a primitive cube root of unity mod 7: 2, 4, 8 = 1
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!((f7.pow(&2, 1), f7.pow(&2, 2), f7.pow(&2, 3)), (2, 4, 1));
        let t = taft_algebra(3, &2, &f7).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(check_hopf_axioms(&t).passed());

        assert!(matches!(
            taft_algebra(3, &1, &f7),
            Err(Error::NotPrimitiveRoot { .. })
        ));
        assert!(taft_algebra(2, &q.from_i64(2), &q).is_err());
    }
}
