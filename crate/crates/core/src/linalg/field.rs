//! Exact base fields: prime fields F_p with machine-word residues and the
//! rationals with arbitrary-precision numerators and denominators.
//!
//! Fields are runtime objects (the modulus of F_p is not known at compile
//! time), so every algebraic operation goes through a [`Field`] value and the
//! element type is an associated type.

use std::fmt::{self, Debug};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Prime { p: u32 },
    Rational,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime { p: p as u32 })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime { p } => *p as u64,
            FieldSpec::Rational => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

/// Accepts `Q`, `7`, `F7` and `F_7`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix('F'))
            .unwrap_or(t);
        let p: u64 = digits.parse().map_err(|_| Error::ScalarParse {
            text: s.to_string(),
            reason: "expected Q or a prime".into(),
        })?;
        FieldSpec::prime(p)
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field. Elements are plain values; all arithmetic is routed
/// through the field object.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    /// Canonical decimal form; `parse_elem(format_elem(a)) == a`.
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        self.add_assign(acc, &t);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `(-1)^k`
    fn sign(&self, k: usize) -> Self::Elem {
        if k.is_multiple_of(2) {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }
}

/// F_p for a prime p < 2^31, residues stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match FieldSpec::prime(p)? {
            FieldSpec::Prime { p } => Ok(PrimeField { p }),
            FieldSpec::Rational => unreachable!(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p as u64 - 2))
    }

    #[inline]
    fn add_assign(&self, acc: &mut u32, b: &u32) {
        *acc = self.add(acc, b);
    }

    #[inline]
    fn mul_add_assign(&self, acc: &mut u32, a: &u32, b: &u32) {
        *acc = ((*acc as u64 + *a as u64 * *b as u64) % self.p as u64) as u32;
    }

    fn parse_elem(&self, s: &str) -> Result<u32> {
        // Fractions are accepted and reduced, so files written over Q with
        // small denominators can be read modulo p.
        let q = parse_rational(s)?;
        let num = q.numer().mod_floor(&BigInt::from(self.p)).to_u32().unwrap();
        let den = q.denom().mod_floor(&BigInt::from(self.p)).to_u32().unwrap();
        let den_inv = self.inv(&den).ok_or_else(|| Error::ScalarParse {
            text: s.to_string(),
            reason: format!("denominator vanishes mod {}", self.p),
        })?;
        Ok(self.mul(&num, &den_inv))
    }

    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }
}

/// The rational numbers, elements kept as reduced fractions with positive
/// denominator (the normal form maintained by `num_rational`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn add_assign(&self, acc: &mut BigRational, b: &BigRational) {
        if !b.is_zero() {
            *acc += b;
        }
    }

    fn mul_add_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            let n = acc.numer() + a.numer() * b.numer();
            *acc = BigRational::from_integer(n);
        } else {
            *acc += a * b;
        }
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let err = |reason: &str| Error::ScalarParse {
        text: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    if den.is_negative() {
        return Ok(BigRational::new(-num, -den));
    }
    Ok(BigRational::new(num, den))
}

/// Uniform residue over F_p; a small integer in `[-3, 3]` over Q.
pub fn random_elem<K: Field, R: rand::Rng + ?Sized>(field: &K, rng: &mut R) -> K::Elem {
    match field.spec() {
        FieldSpec::Prime { p } => field.from_i64(rng.gen_range(0..p as i64)),
        FieldSpec::Rational => field.from_i64(rng.gen_range(-3..=3)),
    }
}
