//! Cochain-level structure maps: cup products, the hat lift
//! `H(A,k) -> H(A,A)`, the counit pushforward, brace operations, the
//! composition `F o G` and the Gerstenhaber bracket.
//!
//! Everything is a contraction of flat coefficient tensors over basis
//! indices; see [`crate::cochain`] for the index layout.

use crate::cochain::{Cochain, Coefficients};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::Field;

fn same_algebra<K: Field>(h: &HopfAlgebra<K>, cs: &[&Cochain<K>]) -> Result<()> {
    cs.iter().try_for_each(|c| c.expect_algebra(h))
}

/// `(f u g)(a1..a_{p+q}) = f(a1..ap) g(a_{p+1}..a_{p+q})`
pub fn cup_trivial<K: Field>(
    h: &HopfAlgebra<K>,
    f: &Cochain<K>,
    g: &Cochain<K>,
) -> Result<Cochain<K>> {
    same_algebra(h, &[f, g])?;
    f.expect_shape(Coefficients::Trivial, "cup_trivial")?;
    g.expect_shape(Coefficients::Trivial, "cup_trivial")?;
    let field = h.field();
    let mut values = Vec::with_capacity(f.values().len() * g.values().len());
    for a in f.values() {
        for b in g.values() {
            values.push(field.mul(a, b));
        }
    }
    Cochain::from_values(h, f.degree() + g.degree(), Coefficients::Trivial, values)
}

/// `(F u G)(a1..a_{p+q}) = F(a1..ap) * G(a_{p+1}..a_{p+q})`, product in `A`.
pub fn cup_adjoint<K: Field>(
    h: &HopfAlgebra<K>,
    f: &Cochain<K>,
    g: &Cochain<K>,
) -> Result<Cochain<K>> {
    same_algebra(h, &[f, g])?;
    f.expect_shape(Coefficients::Adjoint, "cup_adjoint")?;
    g.expect_shape(Coefficients::Adjoint, "cup_adjoint")?;
    let field = h.field();
    let d = h.dim();
    let mut out = Cochain::zeros(h, f.degree() + g.degree(), Coefficients::Adjoint)?;
    let fb = f.values().len() / d;
    let gb = g.values().len() / d;
    let vals = out.values_mut();
    for i in 0..fb {
        for x in 0..d {
            let a = &f.values()[i * d + x];
            if field.is_zero(a) {
                continue;
            }
            for j in 0..gb {
                let base = (i * gb + j) * d;
                for y in 0..d {
                    let b = &g.values()[j * d + y];
                    if field.is_zero(b) {
                        continue;
                    }
                    let ab = field.mul(a, b);
                    for (k, m) in h.product_terms(x, y) {
                        field.mul_add_assign(&mut vals[base + k], &ab, m);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The lift of a trivial-coefficient cochain to an adjoint one:
/// `F(a^1..a^p) = a^1_1 ... a^p_1 f(a^1_2, ..., a^p_2)`; in degree 0,
/// `c -> c 1_A`.
pub fn hat<K: Field>(h: &HopfAlgebra<K>, f: &Cochain<K>) -> Result<Cochain<K>> {
    f.expect_shape(Coefficients::Trivial, "hat")?;
    HatMap::new(h, f.degree())?.apply(h, f)
}

/// `(adjoint position, trivial position, coefficient)`
type Term<K> = (usize, usize, <K as Field>::Elem);

/// The hat lift in a fixed degree as a sparse linear map, for repeated use.
#[derive(Clone, Debug)]
pub struct HatMap<K: Field> {
    dim: usize,
    degree: usize,
    terms: Vec<Term<K>>,
}

impl<K: Field> HatMap<K> {
    pub fn new(h: &HopfAlgebra<K>, degree: usize) -> Result<Self> {
        let field = h.field();
        let d = h.dim();
        crate::cochain::cochain_len(d, degree, Coefficients::Adjoint)?;
        let mut terms = Vec::new();
        if degree == 0 {
            for (o, u) in h.unit_vector().iter().enumerate() {
                if !field.is_zero(u) {
                    terms.push((o, 0, u.clone()));
                }
            }
        } else {
            // depth-first over argument tuples; a state is (product so far
            // as a basis index, flat index of the right legs, coefficient)
            let mut stack: Vec<(usize, usize, Vec<Term<K>>)> = Vec::new();
            stack.push((0, 0, Vec::new()));
            while let Some((depth, prefix, states)) = stack.pop() {
                if depth == degree {
                    for (o, l, c) in states {
                        terms.push((prefix * d + o, l, c));
                    }
                    continue;
                }
                for a in (0..d).rev() {
                    let mut next = Vec::new();
                    for (j, l, c) in h.coproduct_terms(a) {
                        if depth == 0 {
                            next.push((*j, *l, c.clone()));
                            continue;
                        }
                        for (o, lf, sc) in &states {
                            let c2 = field.mul(sc, c);
                            for (o2, m) in h.product_terms(*o, *j) {
                                next.push((*o2, lf * d + l, field.mul(&c2, m)));
                            }
                        }
                    }
                    stack.push((depth + 1, prefix * d + a, next));
                }
            }
        }
        Ok(HatMap {
            dim: d,
            degree,
            terms,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn apply(&self, h: &HopfAlgebra<K>, f: &Cochain<K>) -> Result<Cochain<K>> {
        f.expect_algebra(h)?;
        f.expect_shape(Coefficients::Trivial, "hat")?;
        if f.degree() != self.degree || h.dim() != self.dim {
            return Err(Error::CochainMismatch(format!(
                "hat map of degree {} applied to a degree {} cochain",
                self.degree,
                f.degree()
            )));
        }
        let field = h.field();
        let mut out = Cochain::zeros(h, self.degree, Coefficients::Adjoint)?;
        let vals = out.values_mut();
        let fv = f.values();
        for (dst, src, c) in &self.terms {
            let v = &fv[*src];
            if !field.is_zero(v) {
                field.mul_add_assign(&mut vals[*dst], c, v);
            }
        }
        Ok(out)
    }
}

/// `(eps_* F)(a1..ap) = eps(F(a1..ap))`
pub fn epsilon_push<K: Field>(h: &HopfAlgebra<K>, f: &Cochain<K>) -> Result<Cochain<K>> {
    f.expect_algebra(h)?;
    f.expect_shape(Coefficients::Adjoint, "epsilon_push")?;
    let field = h.field();
    let d = h.dim();
    let eps = h.counit_vector();
    let values = f
        .values()
        .chunks(d)
        .map(|block| {
            let mut acc = field.zero();
            for (v, e) in block.iter().zip(eps) {
                if !field.is_zero(v) && !field.is_zero(e) {
                    field.mul_add_assign(&mut acc, v, e);
                }
            }
            acc
        })
        .collect();
    Cochain::from_values(h, f.degree(), Coefficients::Trivial, values)
}

/// Inserts `G`'s output into the `i`-th input slot (1-based) of the outer
/// cochain, which may have either coefficient type; `G` is adjoint.
fn insert<K: Field>(
    h: &HopfAlgebra<K>,
    outer: &Cochain<K>,
    g: &Cochain<K>,
    i: usize,
) -> Result<Cochain<K>> {
    same_algebra(h, &[outer, g])?;
    g.expect_shape(Coefficients::Adjoint, "inner cochain of a brace")?;
    let p = outer.degree();
    let q = g.degree();
    if i == 0 || i > p {
        return Err(Error::IndexOutOfRange { index: i, max: p });
    }
    let field = h.field();
    let d = h.dim();
    let block = outer.output_len();
    let pre = d.pow(i as u32 - 1);
    let post = d.pow((p - i) as u32);
    let inner = d.pow(q as u32);
    let mut out = Cochain::zeros(h, p + q - 1, outer.coefficients())?;
    let vals = out.values_mut();
    let fv = outer.values();
    let gv = g.values();
    let span = post * block;
    for a in 0..pre {
        for b in 0..inner {
            let dst = (a * inner + b) * span;
            for x in 0..d {
                let c = &gv[b * d + x];
                if field.is_zero(c) {
                    continue;
                }
                let src = (a * d + x) * span;
                for (o, v) in vals[dst..dst + span].iter_mut().zip(&fv[src..src + span]) {
                    if !field.is_zero(v) {
                        field.mul_add_assign(o, c, v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `F o_i G` for adjoint `F` (degree p) and `G` (degree q), `1 <= i <= p`:
/// `(F o_i G)(a1..a_{i-1}, b1..bq, a_{i+1}..ap) = F(a1..a_{i-1}, G(b1..bq), a_{i+1}..ap)`.
pub fn brace<K: Field>(
    h: &HopfAlgebra<K>,
    f: &Cochain<K>,
    g: &Cochain<K>,
    i: usize,
) -> Result<Cochain<K>> {
    f.expect_shape(Coefficients::Adjoint, "brace")?;
    insert(h, f, g, i)
}

/// `f o_i G` for a trivial-coefficient `f` and adjoint `G`.
pub fn brace_trivial<K: Field>(
    h: &HopfAlgebra<K>,
    f: &Cochain<K>,
    g: &Cochain<K>,
    i: usize,
) -> Result<Cochain<K>> {
    f.expect_shape(Coefficients::Trivial, "brace_trivial")?;
    insert(h, f, g, i)
}

/// Sign of `F o_i G` in the composition `F o G`, for `G` of degree `q`.
pub fn composition_sign(q: usize, i: usize) -> usize {
    (q + 1) * (i - 1)
}

/// `(p-1)(q-1)`, the exponent in `[F, G] = F o G - (-1)^{(p-1)(q-1)} G o F`.
pub fn bracket_sign(p: usize, q: usize) -> usize {
    // (p-1)(q-1) has the parity of (p+1)(q+1) and avoids underflow at 0.
    (p + 1) * (q + 1)
}

fn composition<K: Field>(
    h: &HopfAlgebra<K>,
    outer: &Cochain<K>,
    g: &Cochain<K>,
) -> Result<Cochain<K>> {
    same_algebra(h, &[outer, g])?;
    g.expect_shape(Coefficients::Adjoint, "inner cochain of a composition")?;
    let p = outer.degree();
    let q = g.degree();
    if p + q == 0 {
        return Err(Error::CochainMismatch(
            "composition of two degree-0 cochains has degree -1".into(),
        ));
    }
    let field = h.field();
    let mut acc = Cochain::zeros(h, p + q - 1, outer.coefficients())?;
    for i in 1..=p {
        let term = insert(h, outer, g, i)?;
        let s = field.sign(composition_sign(q, i));
        for (a, t) in acc.values_mut().iter_mut().zip(term.values()) {
            if !field.is_zero(t) {
                field.mul_add_assign(a, &s, t);
            }
        }
    }
    Ok(acc)
}

/// `F o G = sum_{i=1}^{p} (-1)^{(q-1)(i-1)} F o_i G`; zero when `p = 0`.
pub fn circ<K: Field>(h: &HopfAlgebra<K>, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
    f.expect_shape(Coefficients::Adjoint, "circ")?;
    composition(h, f, g)
}

/// The same signed sum with a trivial-coefficient outer cochain.
pub fn circ_trivial<K: Field>(
    h: &HopfAlgebra<K>,
    f: &Cochain<K>,
    g: &Cochain<K>,
) -> Result<Cochain<K>> {
    f.expect_shape(Coefficients::Trivial, "circ_trivial")?;
    composition(h, f, g)
}

/// `[F, G] = F o G - (-1)^{(p-1)(q-1)} G o F`
pub fn bracket<K: Field>(h: &HopfAlgebra<K>, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
    let field = h.field();
    let fg = circ(h, f, g)?;
    let gf = circ(h, g, f)?;
    let s = field.sign(bracket_sign(f.degree(), g.degree()));
    fg.sub(field, &gf.scale(field, &s))
}
