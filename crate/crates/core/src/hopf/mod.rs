//! Finite-dimensional Hopf algebras given by structure constants.

mod axioms;
mod builtins;
mod dual;

pub use axioms::check_hopf_axioms;
pub use builtins::{cyclic_group_table, group_algebra, symmetric_group_s3_table, taft_algebra};
pub use dual::dual_hopf;

use crate::error::{Error, Result};
use crate::linalg::{guard, Field, Matrix};

/// A Hopf algebra over `K` on the basis `e_0, ..., e_{d-1}`.
///
/// * `mult[i*d*d + j*d + k]`: coefficient of `e_k` in `e_i * e_j`
/// * `comult[i*d*d + j*d + k]`: coefficient of `e_j (x) e_k` in `Delta(e_i)`
/// * `antipode`: column `i` holds the coordinates of `S(e_i)`
#[derive(Clone, Debug)]
pub struct HopfAlgebra<K: Field> {
    field: K,
    name: String,
    dim: usize,
    mult: Vec<K::Elem>,
    unit: Vec<K::Elem>,
    comult: Vec<K::Elem>,
    counit: Vec<K::Elem>,
    antipode: Matrix<K>,
    provenance: Option<String>,
    mult_nz: Vec<Vec<(usize, K::Elem)>>,
    comult_nz: Vec<Vec<(usize, usize, K::Elem)>>,
}

/// Raw structure constants, before any axiom checking.
#[derive(Clone, Debug)]
pub struct HopfParts<K: Field> {
    pub name: String,
    pub dim: usize,
    pub mult: Vec<K::Elem>,
    pub unit: Vec<K::Elem>,
    pub comult: Vec<K::Elem>,
    pub counit: Vec<K::Elem>,
    pub antipode: Vec<K::Elem>,
    pub provenance: Option<String>,
}

fn expect_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        });
    }
    Ok(())
}

impl<K: Field> HopfAlgebra<K> {
    /// Builds the algebra without running the axiom checker.
    pub fn from_parts_unchecked(field: &K, parts: HopfParts<K>) -> Result<Self> {
        let d = parts.dim;
        if d == 0 {
            return Err(Error::DimensionMismatch {
                context: "Hopf algebra dimension",
                expected: 1,
                found: 0,
            });
        }
        let d3 = guard::checked_power(|| format!("structure tensor of dim {d}"), d, 3)?;
        expect_len("mult", d3, parts.mult.len())?;
        expect_len("comult", d3, parts.comult.len())?;
        expect_len("unit", d, parts.unit.len())?;
        expect_len("counit", d, parts.counit.len())?;
        let antipode = Matrix::from_vec(field, d, d, parts.antipode)?;

        let mut mult_nz = vec![Vec::new(); d * d];
        let mut comult_nz = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let idx = i * d * d + j * d + k;
                    if !field.is_zero(&parts.mult[idx]) {
                        mult_nz[i * d + j].push((k, parts.mult[idx].clone()));
                    }
                    if !field.is_zero(&parts.comult[idx]) {
                        comult_nz[i].push((j, k, parts.comult[idx].clone()));
                    }
                }
            }
        }
        Ok(HopfAlgebra {
            field: field.clone(),
            name: parts.name,
            dim: d,
            mult: parts.mult,
            unit: parts.unit,
            comult: parts.comult,
            counit: parts.counit,
            antipode,
            provenance: parts.provenance,
            mult_nz,
            comult_nz,
        })
    }

    /// Builds the algebra and rejects it unless every Hopf axiom holds.
    pub fn from_parts(field: &K, parts: HopfParts<K>) -> Result<Self> {
        Self::from_parts_unchecked(field, parts)?.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let report = check_hopf_axioms(&self);
        if let Some(item) = report.items.iter().find(|i| !i.passed()) {
            let witness = item
                .counterexample
                .as_ref()
                .map(|c| c.tuple.clone())
                .unwrap_or_default();
            return Err(Error::AxiomFailure {
                axiom: item.name.clone(),
                witness,
            });
        }
        Ok(self)
    }

    pub fn to_parts(&self) -> HopfParts<K> {
        HopfParts {
            name: self.name.clone(),
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.as_slice().to_vec(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult_tensor(&self) -> &[K::Elem] {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &[K::Elem] {
        &self.comult
    }

    pub fn unit_vector(&self) -> &[K::Elem] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[K::Elem] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix<K> {
        &self.antipode
    }

    /// Nonzero `(k, c)` with `e_i * e_j = sum c e_k`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, K::Elem)] {
        &self.mult_nz[i * self.dim + j]
    }

    /// Nonzero `(j, k, c)` with `Delta(e_i) = sum c e_j (x) e_k`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, K::Elem)] {
        &self.comult_nz[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<K::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    fn check_vec(&self, v: &[K::Elem], context: &'static str) -> Result<()> {
        expect_len(context, self.dim, v.len())
    }

    pub fn multiply(&self, v: &[K::Elem], w: &[K::Elem]) -> Result<Vec<K::Elem>> {
        self.check_vec(v, "left factor")?;
        self.check_vec(w, "right factor")?;
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in w.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.product_terms(i, j) {
                    f.mul_add_assign(&mut out[*k], &ab, c);
                }
            }
        }
        Ok(out)
    }

    /// `Delta(v)`, component `(j, k)` at position `j*dim + k`.
    pub fn comultiply(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        self.check_vec(v, "comultiply argument")?;
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![f.zero(); d * d];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, k, c) in self.coproduct_terms(i) {
                f.mul_add_assign(&mut out[j * d + k], a, c);
            }
        }
        Ok(out)
    }

    /// `Delta^(n-1)(v)` in `A^{(x) n}`, built by repeatedly applying
    /// `Delta (x) id^{(x)(k-1)}` to the leftmost tensor factor.
    pub fn iterated_comult(&self, v: &[K::Elem], n: usize) -> Result<Vec<K::Elem>> {
        self.check_vec(v, "iterated_comult argument")?;
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let f = &self.field;
        let d = self.dim;
        let mut cur = v.to_vec();
        for k in 1..n {
            // cur lives in A^{(x) k}; the tail has d^(k-1) components.
            let tail = d.pow(k as u32 - 1);
            let size = guard::checked_power(|| format!("A^(x){}", k + 1), d, k + 1)?;
            let mut next = vec![f.zero(); size];
            for i in 0..d {
                for t in 0..tail {
                    let a = &cur[i * tail + t];
                    if f.is_zero(a) {
                        continue;
                    }
                    for (j, l, c) in self.coproduct_terms(i) {
                        let idx = (j * d + l) * tail + t;
                        f.mul_add_assign(&mut next[idx], a, c);
                    }
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn counit(&self, v: &[K::Elem]) -> Result<K::Elem> {
        self.check_vec(v, "counit argument")?;
        let f = &self.field;
        let mut acc = f.zero();
        for (a, e) in v.iter().zip(&self.counit) {
            f.mul_add_assign(&mut acc, a, e);
        }
        Ok(acc)
    }

    pub fn antipode(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        self.check_vec(v, "antipode argument")?;
        self.antipode.mul_vec(v)
    }

    /// Multiplies basis-coordinate sparse vectors.
    pub(crate) fn multiply_sparse(
        &self,
        v: &[(usize, K::Elem)],
        w: &[(usize, K::Elem)],
    ) -> Vec<(usize, K::Elem)> {
        let f = &self.field;
        let mut acc: Vec<Option<K::Elem>> = vec![None; self.dim];
        for (i, a) in v {
            for (j, b) in w {
                let ab = f.mul(a, b);
                for (k, c) in self.product_terms(*i, *j) {
                    match &mut acc[*k] {
                        Some(x) => f.mul_add_assign(x, &ab, c),
                        slot @ None => *slot = Some(f.mul(&ab, c)),
                    }
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .filter_map(|(k, v)| v.filter(|x| !f.is_zero(x)).map(|x| (k, x)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn sweedler() -> HopfAlgebra<Rationals> {
        taft_algebra(2, &Rationals.from_i64(-1), &Rationals).unwrap()
    }

    #[test]
    fn z2_group_law() {
        let f2 = PrimeField::new(2).unwrap();
        let h = group_algebra(&cyclic_group_table(2), &f2, "Z/2").unwrap();
        let g = h.basis_vector(1);
        assert_eq!(h.multiply(&g, &g).unwrap(), h.basis_vector(0));
        let one = h.unit_vector().to_vec();
        assert_eq!(h.multiply(&one, &g).unwrap(), g);
    }

    #[test]
    fn sweedler_skew_commutation() {
        // basis g^i x^j at index 2i + j: 1, x, g, gx
        let h = sweedler();
        let q = Rationals;
        let x = h.basis_vector(1);
        let g = h.basis_vector(2);
        let xg = h.multiply(&x, &g).unwrap();
        let gx = h.multiply(&g, &x).unwrap();
        assert_eq!(xg, gx.iter().map(|c| q.neg(c)).collect::<Vec<_>>());
        assert_eq!(gx, h.basis_vector(3));
    }

    #[test]
    fn coproduct_examples() {
        let q = Rationals;
        let h = sweedler();
        let d = h.dim();
        let dx = h.comultiply(&h.basis_vector(1)).unwrap();
        let mut expected = vec![q.zero(); d * d];
        expected[d] = q.one(); // x (x) 1
        expected[2 * d + 1] = q.one(); // g (x) x
        assert_eq!(dx, expected);
        let one = h.unit_vector().to_vec();
        let mut one_one = vec![q.zero(); d * d];
        one_one[0] = q.one();
        assert_eq!(h.comultiply(&one).unwrap(), one_one);

        let f3 = PrimeField::new(3).unwrap();
        let z3 = group_algebra(&cyclic_group_table(3), &f3, "Z/3").unwrap();
        let dg = z3.comultiply(&z3.basis_vector(2)).unwrap();
        assert_eq!(dg, (0..9).map(|i| u32::from(i == 8)).collect::<Vec<_>>());
    }

    #[test]
    fn iterated_coproduct() {
        let f3 = PrimeField::new(3).unwrap();
        let z3 = group_algebra(&cyclic_group_table(3), &f3, "Z/3").unwrap();
        let g = z3.basis_vector(1);
        assert_eq!(z3.iterated_comult(&g, 1).unwrap(), g);
        let ggg = z3.iterated_comult(&g, 3).unwrap();
        assert_eq!(ggg.iter().filter(|&&c| c != 0).count(), 1);
        assert_eq!(ggg[9 + 3 + 1], 1);

        // contracting any slot of Delta^2 with the counit gives Delta
        let h = sweedler();
        let q = Rationals;
        let d = h.dim();
        for b in 0..d {
            let v = h.basis_vector(b);
            let t3 = h.iterated_comult(&v, 3).unwrap();
            let t2 = h.iterated_comult(&v, 2).unwrap();
            for slot in 0..3 {
                let mut contracted = vec![q.zero(); d * d];
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let c = &t3[(i * d + j) * d + k];
                            let (e, pos) = match slot {
                                0 => (i, j * d + k),
                                1 => (j, i * d + k),
                                _ => (k, i * d + j),
                            };
                            let t = q.mul(c, &h.counit_vector()[e]);
                            contracted[pos] = q.add(&contracted[pos], &t);
                        }
                    }
                }
                assert_eq!(contracted, t2, "basis {b} slot {slot}");
            }
        }
    }

    #[test]
    fn counit_and_antipode_examples() {
        let q = Rationals;
        let s3 = group_algebra(&symmetric_group_s3_table(), &q, "S3").unwrap();
        let v: Vec<_> = (0..6).map(|i| q.from_i64(i as i64 - 2)).collect();
        assert_eq!(s3.counit(&v).unwrap(), q.from_i64(3));
        let table = symmetric_group_s3_table();
        for g in 0..6 {
            let inv = (0..6).find(|&h| table[g][h] == 0).unwrap();
            assert_eq!(
                s3.antipode(&s3.basis_vector(g)).unwrap(),
                s3.basis_vector(inv)
            );
        }
        assert_eq!(
            sweedler().counit(&sweedler().basis_vector(1)).unwrap(),
            q.zero()
        );
    }

    #[test]
    fn dimension_errors() {
        let h = sweedler();
        let short = vec![Rationals.one(); 3];
        assert!(h.multiply(&short, &h.basis_vector(0)).is_err());
        assert!(h.comultiply(&short).is_err());
        assert!(h.counit(&short).is_err());
    }
}
