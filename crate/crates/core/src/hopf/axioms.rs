use super::HopfAlgebra;
use crate::linalg::Field;
use crate::report::{CheckItem, CheckParams, CheckReport, Counterexample, PassMode};

/// Records the first coordinate where `lhs` and `rhs` differ.
fn compare<K: Field>(
    field: &K,
    item: &mut CheckItem,
    tuple: &[usize],
    lhs: &[K::Elem],
    rhs: &[K::Elem],
) {
    item.cases += 1;
    if item.counterexample.is_some() {
        return;
    }
    if let Some(pos) = (0..lhs.len()).find(|&p| lhs[p] != rhs[p]) {
        let mut t = tuple.to_vec();
        t.push(pos);
        item.fail(Counterexample {
            inputs: Vec::new(),
            tuple: t,
            lhs: field.format_elem(&lhs[pos]),
            rhs: field.format_elem(&rhs[pos]),
        });
    }
}

fn to_dense<K: Field>(field: &K, n: usize, v: &[(usize, K::Elem)]) -> Vec<K::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Evaluates every Hopf axiom on basis elements. Witness tuples are the
/// basis indices of the failing evaluation followed by the first
/// mismatching output coordinate.
pub fn check_hopf_axioms<K: Field>(h: &HopfAlgebra<K>) -> CheckReport {
    let f = h.field();
    let d = h.dim();
    let mut report = CheckReport::new(
        "hopf_axioms",
        h.name(),
        f.spec().to_string(),
        CheckParams::default(),
    );
    let basis = |i: usize| vec![(i, f.one())];
    let unit: Vec<(usize, K::Elem)> = h
        .unit_vector()
        .iter()
        .cloned()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .collect();

    let mut assoc = CheckItem::new("associativity", PassMode::ExactIdentity);
    for i in 0..d {
        for j in 0..d {
            let ij = h.multiply_sparse(&basis(i), &basis(j));
            for k in 0..d {
                let jk = h.multiply_sparse(&basis(j), &basis(k));
                let lhs = h.multiply_sparse(&ij, &basis(k));
                let rhs = h.multiply_sparse(&basis(i), &jk);
                compare(
                    f,
                    &mut assoc,
                    &[i, j, k],
                    &to_dense(f, d, &lhs),
                    &to_dense(f, d, &rhs),
                );
            }
        }
    }
    report.push(assoc);

    let mut unit_item = CheckItem::new("unit", PassMode::ExactIdentity);
    for i in 0..d {
        let e = h.basis_vector(i);
        let left = to_dense(f, d, &h.multiply_sparse(&unit, &basis(i)));
        let right = to_dense(f, d, &h.multiply_sparse(&basis(i), &unit));
        compare(f, &mut unit_item, &[i, 0], &left, &e);
        compare(f, &mut unit_item, &[i, 1], &right, &e);
    }
    report.push(unit_item);

    let mut coassoc = CheckItem::new("coassociativity", PassMode::ExactIdentity);
    for i in 0..d {
        let mut left = vec![f.zero(); d * d * d];
        let mut right = vec![f.zero(); d * d * d];
        for (a, b, c) in h.coproduct_terms(i) {
            for (x, y, c2) in h.coproduct_terms(*a) {
                let t = f.mul(c, c2);
                f.add_assign(&mut left[(x * d + y) * d + b], &t);
            }
            for (x, y, c2) in h.coproduct_terms(*b) {
                let t = f.mul(c, c2);
                f.add_assign(&mut right[(a * d + x) * d + y], &t);
            }
        }
        compare(f, &mut coassoc, &[i], &left, &right);
    }
    report.push(coassoc);

    let mut counit = CheckItem::new("counit", PassMode::ExactIdentity);
    let eps = h.counit_vector();
    for i in 0..d {
        let mut left = vec![f.zero(); d];
        let mut right = vec![f.zero(); d];
        for (a, b, c) in h.coproduct_terms(i) {
            f.mul_add_assign(&mut left[*b], &eps[*a], c);
            f.mul_add_assign(&mut right[*a], &eps[*b], c);
        }
        let e = h.basis_vector(i);
        compare(f, &mut counit, &[i, 0], &left, &e);
        compare(f, &mut counit, &[i, 1], &right, &e);
    }
    report.push(counit);

    let mut bialg = CheckItem::new("comultiplication_multiplicative", PassMode::ExactIdentity);
    for i in 0..d {
        for j in 0..d {
            let mut left = vec![f.zero(); d * d];
            for (k, c) in h.product_terms(i, j) {
                for (a, b, c2) in h.coproduct_terms(*k) {
                    f.mul_add_assign(&mut left[a * d + b], c, c2);
                }
            }
            let mut right = vec![f.zero(); d * d];
            for (p, q, c1) in h.coproduct_terms(i) {
                for (r, s, c2) in h.coproduct_terms(j) {
                    let c12 = f.mul(c1, c2);
                    for (a, ca) in h.product_terms(*p, *r) {
                        let t = f.mul(&c12, ca);
                        for (b, cb) in h.product_terms(*q, *s) {
                            f.mul_add_assign(&mut right[a * d + b], &t, cb);
                        }
                    }
                }
            }
            compare(f, &mut bialg, &[i, j], &left, &right);
        }
    }
    report.push(bialg);

    let mut delta_unit = CheckItem::new("comultiplication_unital", PassMode::ExactIdentity);
    {
        let left = h.comultiply(h.unit_vector()).expect("unit has length dim");
        let mut right = vec![f.zero(); d * d];
        for (a, ca) in &unit {
            for (b, cb) in &unit {
                right[a * d + b] = f.mul(ca, cb);
            }
        }
        compare(f, &mut delta_unit, &[], &left, &right);
    }
    report.push(delta_unit);

    let mut eps_mult = CheckItem::new("counit_multiplicative", PassMode::ExactIdentity);
    for i in 0..d {
        for j in 0..d {
            let mut left = f.zero();
            for (k, c) in h.product_terms(i, j) {
                f.mul_add_assign(&mut left, c, &eps[*k]);
            }
            let right = f.mul(&eps[i], &eps[j]);
            compare(f, &mut eps_mult, &[i, j], &[left], &[right]);
        }
    }
    report.push(eps_mult);

    let mut eps_unit = CheckItem::new("counit_unital", PassMode::ExactIdentity);
    {
        let e1 = h.counit(h.unit_vector()).expect("unit has length dim");
        compare(f, &mut eps_unit, &[], &[e1], &[f.one()]);
    }
    report.push(eps_unit);

    let mut antipode = CheckItem::new("antipode", PassMode::ExactIdentity);
    let s = h.antipode_matrix();
    let s_col = |i: usize| -> Vec<(usize, K::Elem)> {
        (0..d)
            .filter(|&r| !f.is_zero(s.get(r, i)))
            .map(|r| (r, s.get(r, i).clone()))
            .collect()
    };
    let s_cols: Vec<_> = (0..d).map(s_col).collect();
    for i in 0..d {
        let mut left = vec![f.zero(); d];
        let mut right = vec![f.zero(); d];
        for (a, b, c) in h.coproduct_terms(i) {
            for (k, v) in h.multiply_sparse(&s_cols[*a], &basis(*b)) {
                f.mul_add_assign(&mut left[k], c, &v);
            }
            for (k, v) in h.multiply_sparse(&basis(*a), &s_cols[*b]) {
                f.mul_add_assign(&mut right[k], c, &v);
            }
        }
        let target: Vec<K::Elem> = h.unit_vector().iter().map(|u| f.mul(u, &eps[i])).collect();
        compare(f, &mut antipode, &[i, 0], &left, &target);
        compare(f, &mut antipode, &[i, 1], &right, &target);
    }
    report.push(antipode);

    report
}
