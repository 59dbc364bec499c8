//! Hochschild cochains `A^{(x) n} -> k` and `A^{(x) n} -> A`.
//!
//! A cochain is a flat coefficient tensor. Argument tuples `(i_1, ..., i_n)`
//! are flattened with the leftmost argument most significant; adjoint
//! cochains carry one more, least significant, index for the output
//! coordinate in `A`.

mod complex;

pub use complex::{
    cocycle_basis, cohomology, cohomology_uncapped, degree_cap, diff, diff_adjoint, diff_trivial,
    differential_matrix, is_coboundary, CoboundarySolver, CohomologyReport, DegreeSummary,
    Membership,
};

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{guard, random_elem, Field};
use crate::report::QuotedCochain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    /// `k`, with `A` acting through the counit on both sides.
    Trivial,
    /// The regular bimodule `A`.
    Adjoint,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Trivial => "trivial",
            Coefficients::Adjoint => "adjoint",
        })
    }
}

impl std::str::FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" | "k" => Ok(Coefficients::Trivial),
            "adjoint" | "A" => Ok(Coefficients::Adjoint),
            other => Err(Error::Malformed {
                location: "coefficients".into(),
                reason: format!("expected trivial or adjoint, got {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<K: Field> {
    dim: usize,
    degree: usize,
    coeff: Coefficients,
    values: Vec<K::Elem>,
}

/// Number of scalars in a cochain of this shape, checked against the guard.
pub fn cochain_len(dim: usize, degree: usize, coeff: Coefficients) -> Result<usize> {
    let exp = match coeff {
        Coefficients::Trivial => degree,
        Coefficients::Adjoint => degree + 1,
    };
    guard::checked_power(
        || format!("{coeff} cochain of degree {degree} over dim {dim}"),
        dim,
        exp,
    )
}

impl<K: Field> Cochain<K> {
    pub fn zeros(h: &HopfAlgebra<K>, degree: usize, coeff: Coefficients) -> Result<Self> {
        let n = cochain_len(h.dim(), degree, coeff)?;
        Ok(Cochain {
            dim: h.dim(),
            degree,
            coeff,
            values: vec![h.field().zero(); n],
        })
    }

    pub fn from_values(
        h: &HopfAlgebra<K>,
        degree: usize,
        coeff: Coefficients,
        values: Vec<K::Elem>,
    ) -> Result<Self> {
        let n = cochain_len(h.dim(), degree, coeff)?;
        if values.len() != n {
            return Err(Error::DimensionMismatch {
                context: "cochain tensor",
                expected: n,
                found: values.len(),
            });
        }
        Ok(Cochain {
            dim: h.dim(),
            degree,
            coeff,
            values,
        })
    }

    pub fn random<R: Rng + ?Sized>(
        h: &HopfAlgebra<K>,
        degree: usize,
        coeff: Coefficients,
        rng: &mut R,
    ) -> Result<Self> {
        let n = cochain_len(h.dim(), degree, coeff)?;
        let values = (0..n).map(|_| random_elem(h.field(), rng)).collect();
        Self::from_values(h, degree, coeff, values)
    }

    /// Degree-0 trivial cochain with value `c`.
    pub fn scalar(h: &HopfAlgebra<K>, c: K::Elem) -> Self {
        Cochain {
            dim: h.dim(),
            degree: 0,
            coeff: Coefficients::Trivial,
            values: vec![c],
        }
    }

    /// Degree-0 adjoint cochain `1_A`.
    pub fn unit(h: &HopfAlgebra<K>) -> Self {
        Cochain {
            dim: h.dim(),
            degree: 0,
            coeff: Coefficients::Adjoint,
            values: h.unit_vector().to_vec(),
        }
    }

    /// The counit as a trivial 1-cochain.
    pub fn counit(h: &HopfAlgebra<K>) -> Self {
        Cochain {
            dim: h.dim(),
            degree: 1,
            coeff: Coefficients::Trivial,
            values: h.counit_vector().to_vec(),
        }
    }

    /// `id_A` as an adjoint 1-cochain.
    pub fn identity(h: &HopfAlgebra<K>) -> Self {
        let d = h.dim();
        let f = h.field();
        let mut values = vec![f.zero(); d * d];
        for i in 0..d {
            values[i * d + i] = f.one();
        }
        Cochain {
            dim: d,
            degree: 1,
            coeff: Coefficients::Adjoint,
            values,
        }
    }

    /// The multiplication map as an adjoint 2-cochain.
    pub fn multiplication(h: &HopfAlgebra<K>) -> Self {
        Cochain {
            dim: h.dim(),
            degree: 2,
            coeff: Coefficients::Adjoint,
            values: h.mult_tensor().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coeff
    }

    pub fn values(&self) -> &[K::Elem] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [K::Elem] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<K::Elem> {
        self.values
    }

    /// Length of the output block: 1 for trivial, `dim` for adjoint.
    pub fn output_len(&self) -> usize {
        match self.coeff {
            Coefficients::Trivial => 1,
            Coefficients::Adjoint => self.dim,
        }
    }

    pub fn is_zero(&self, field: &K) -> bool {
        self.values.iter().all(|v| field.is_zero(v))
    }

    pub(crate) fn expect_algebra(&self, h: &HopfAlgebra<K>) -> Result<()> {
        if self.dim != h.dim() {
            return Err(Error::CochainMismatch(format!(
                "cochain over dimension {} used with algebra {} of dimension {}",
                self.dim,
                h.name(),
                h.dim()
            )));
        }
        Ok(())
    }

    pub(crate) fn expect_shape(&self, coeff: Coefficients, what: &str) -> Result<()> {
        if self.coeff != coeff {
            return Err(Error::CochainMismatch(format!(
                "{what} needs {coeff} coefficients, got {}",
                self.coeff
            )));
        }
        Ok(())
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.dim == other.dim && self.degree == other.degree && self.coeff == other.coeff
    }

    pub fn add(&self, field: &K, other: &Self) -> Result<Self> {
        self.combine(field, other, |a, b| field.add(a, b))
    }

    pub fn sub(&self, field: &K, other: &Self) -> Result<Self> {
        self.combine(field, other, |a, b| field.sub(a, b))
    }

    fn combine(
        &self,
        _field: &K,
        other: &Self,
        op: impl Fn(&K::Elem, &K::Elem) -> K::Elem,
    ) -> Result<Self> {
        if !self.same_shape(other) {
            return Err(Error::CochainMismatch(format!(
                "cannot combine degree {} {} with degree {} {}",
                self.degree, self.coeff, other.degree, other.coeff
            )));
        }
        Ok(Cochain {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
            ..self.clone()
        })
    }

    pub fn scale(&self, field: &K, c: &K::Elem) -> Self {
        Cochain {
            values: self.values.iter().map(|v| field.mul(v, c)).collect(),
            ..self.clone()
        }
    }

    /// Basis indices of the argument tuple (and output coordinate, for
    /// adjoint cochains) stored at flat position `pos`.
    pub fn unflatten(&self, mut pos: usize) -> Vec<usize> {
        let n = self.degree + usize::from(self.coeff == Coefficients::Adjoint);
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = pos % self.dim;
            pos /= self.dim;
        }
        out
    }

    /// Evaluates on arguments given as sparse coordinate vectors, adding the
    /// result into `out` (length [`Self::output_len`]).
    pub fn eval_into(&self, field: &K, args: &[&[(usize, K::Elem)]], out: &mut [K::Elem]) {
        debug_assert_eq!(args.len(), self.degree);
        let block = self.output_len();
        self.eval_rec(field, args, 0, &field.one(), out, block);
    }

    fn eval_rec(
        &self,
        field: &K,
        args: &[&[(usize, K::Elem)]],
        base: usize,
        coef: &K::Elem,
        out: &mut [K::Elem],
        block: usize,
    ) {
        match args.split_first() {
            None => {
                let vals = &self.values[base * block..(base + 1) * block];
                for (o, v) in out.iter_mut().zip(vals) {
                    if !field.is_zero(v) {
                        field.mul_add_assign(o, coef, v);
                    }
                }
            }
            Some((first, rest)) => {
                for (i, c) in first.iter() {
                    let c2 = field.mul(coef, c);
                    self.eval_rec(field, rest, base * self.dim + i, &c2, out, block);
                }
            }
        }
    }

    pub fn quote(&self, field: &K, label: &str) -> QuotedCochain {
        QuotedCochain {
            label: label.to_string(),
            degree: self.degree,
            coefficients: self.coeff.to_string(),
            values: self.values.iter().map(|v| field.format_elem(v)).collect(),
        }
    }
}
