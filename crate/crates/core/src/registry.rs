//! Built-in algebras by name, and a field-erased handle for runtime
//! dispatch over the base field.
//!
//! Names: `z2`, `z3`, `z4`, `s3`, `sweedler`, `taft:<n>:<q>`, and the
//! recursive forms `dual:<name>` and `double:<name>`.

use crate::double::drinfeld_double;
use crate::error::{Error, Result};
use crate::hopf::{
    cyclic_group_table, dual_hopf, group_algebra, symmetric_group_s3_table, taft_algebra,
    HopfAlgebra,
};
use crate::linalg::field::is_prime;
use crate::linalg::{Field, FieldSpec, PrimeField, Rationals};

/// A Hopf algebra over a field chosen at run time.
#[derive(Clone, Debug)]
pub enum AnyHopf {
    Prime(HopfAlgebra<PrimeField>),
    Rational(HopfAlgebra<Rationals>),
}

/// Evaluates `$body` with `$h` bound to the typed algebra inside an
/// [`AnyHopf`].
#[macro_export]
macro_rules! with_hopf {
    ($any:expr, $h:ident => $body:expr) => {
        match $any {
            $crate::AnyHopf::Prime($h) => $body,
            $crate::AnyHopf::Rational($h) => $body,
        }
    };
}

impl AnyHopf {
    pub fn name(&self) -> &str {
        with_hopf!(self, h => h.name())
    }

    pub fn dim(&self) -> usize {
        with_hopf!(self, h => h.dim())
    }

    pub fn field_spec(&self) -> FieldSpec {
        with_hopf!(self, h => h.field().spec())
    }

    /// Canonical HopfFile text.
    pub fn to_json(&self) -> String {
        with_hopf!(self, h => crate::io::to_hopf_json(h))
    }

    pub fn dual(&self) -> Result<AnyHopf> {
        Ok(match self {
            AnyHopf::Prime(h) => AnyHopf::Prime(dual_hopf(h)?),
            AnyHopf::Rational(h) => AnyHopf::Rational(dual_hopf(h)?),
        })
    }

    pub fn double(&self) -> Result<AnyHopf> {
        Ok(match self {
            AnyHopf::Prime(h) => AnyHopf::Prime(drinfeld_double(h)?.underlying),
            AnyHopf::Rational(h) => AnyHopf::Rational(drinfeld_double(h)?.underlying),
        })
    }
}

/// One line per built-in family, for listings.
pub const BUILTINS: [(&str, &str); 8] = [
    ("z2", "group algebra of Z/2 (default field F_2)"),
    ("z3", "group algebra of Z/3 (default field F_3)"),
    ("z4", "group algebra of Z/4 (default field F_2)"),
    ("s3", "group algebra of S_3 (default field F_3)"),
    ("sweedler", "Sweedler's 4-dimensional algebra, taft:2:-1 (default field Q)"),
    (
        "taft:<n>:<q>",
        "Taft algebra of dim n^2 at a primitive n-th root q (default: Q for n <= 2, else the smallest prime where q has order n)",
    ),
    ("dual:<name>", "dual Hopf algebra (default field of <name>)"),
    ("double:<name>", "Drinfeld double D(<name>) (default field of <name>)"),
];

enum Family {
    Group(&'static str, fn() -> Vec<Vec<usize>>, FieldSpec),
    Taft(usize, i64),
    Dual(Box<Family>),
    Double(Box<Family>),
}

fn parse_family(name: &str) -> Result<Family> {
    let unknown = || Error::UnknownAlgebra(name.to_string());
    if let Some(inner) = name.strip_prefix("dual:") {
        return Ok(Family::Dual(Box::new(parse_family(inner)?)));
    }
    if let Some(inner) = name.strip_prefix("double:") {
        return Ok(Family::Double(Box::new(parse_family(inner)?)));
    }
    let f2 = FieldSpec::Prime { p: 2 };
    let f3 = FieldSpec::Prime { p: 3 };
    Ok(match name {
        "z2" => Family::Group("z2", || cyclic_group_table(2), f2),
        "z3" => Family::Group("z3", || cyclic_group_table(3), f3),
        "z4" => Family::Group("z4", || cyclic_group_table(4), f2),
        "s3" => Family::Group("s3", symmetric_group_s3_table, f3),
        "sweedler" => Family::Taft(2, -1),
        _ => {
            let rest = name.strip_prefix("taft:").ok_or_else(unknown)?;
            let (n, q) = rest.split_once(':').ok_or_else(unknown)?;
            let n: usize = n.parse().map_err(|_| unknown())?;
            let q: i64 = q.parse().map_err(|_| unknown())?;
            if n < 2 {
                return Err(unknown());
            }
            Family::Taft(n, q)
        }
    })
}

/// Multiplicative order of `q` modulo the prime `p`, if `q` is a unit.
fn order_mod(q: i64, p: u64) -> Option<usize> {
    let q = q.rem_euclid(p as i64) as u64;
    if q == 0 {
        return None;
    }
    let mut x = q;
    let mut k = 1;
    while x != 1 {
        x = x * q % p;
        k += 1;
    }
    Some(k)
}

fn default_field(f: &Family) -> FieldSpec {
    match f {
        Family::Group(_, _, spec) => *spec,
        Family::Taft(n, _) if *n <= 2 => FieldSpec::Rational,
        Family::Taft(n, q) => (2u64..10_000)
            .filter(|&p| is_prime(p))
            .find(|&p| order_mod(*q, p) == Some(*n))
            .map(|p| FieldSpec::Prime { p: p as u32 })
            .unwrap_or(FieldSpec::Rational),
        Family::Dual(inner) | Family::Double(inner) => default_field(inner),
    }
}

fn build<K: Field>(f: &Family, field: &K) -> Result<HopfAlgebra<K>> {
    match f {
        Family::Group(name, table, _) => group_algebra(&table(), field, name),
        Family::Taft(2, -1) => taft_algebra(2, &field.from_i64(-1), field),
        Family::Taft(n, q) => {
            Ok(taft_algebra(*n, &field.from_i64(*q), field)?.with_name(format!("taft:{n}:{q}")))
        }
        Family::Dual(inner) => dual_hopf(&build(inner, field)?),
        Family::Double(inner) => Ok(drinfeld_double(&build(inner, field)?)?.underlying),
    }
}

/// The built-in algebra `name` over `field`, or over its default field.
pub fn builtin(name: &str, field: Option<FieldSpec>) -> Result<AnyHopf> {
    let family = parse_family(name)?;
    match field.unwrap_or_else(|| default_field(&family)) {
        FieldSpec::Prime { p } => Ok(AnyHopf::Prime(build(&family, &PrimeField::new(p as u64)?)?)),
        FieldSpec::Rational => Ok(AnyHopf::Rational(build(&family, &Rationals)?)),
    }
}

/// Names of the concrete built-ins exercised by the test suites.
pub fn standard_builtins() -> Vec<&'static str> {
    vec!["z2", "z3", "z4", "s3", "sweedler", "taft:3:2"]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_defaults() {
        let h = builtin("z2", None).unwrap();
        assert_eq!((h.name(), h.dim()), ("z2", 2));
        assert_eq!(h.field_spec(), FieldSpec::Prime { p: 2 });
        let t = builtin("taft:3:2", None).unwrap();
        assert_eq!(t.field_spec(), FieldSpec::Prime { p: 7 });
        assert_eq!((t.name(), t.dim()), ("taft:3:2", 9));
        let s = builtin("sweedler", None).unwrap();
        assert_eq!(s.field_spec(), FieldSpec::Rational);
        let d = builtin("double:sweedler", None).unwrap();
        assert_eq!((d.name(), d.dim()), ("double:sweedler", 16));
        let du = builtin("dual:s3", None).unwrap();
        assert_eq!((du.name(), du.dim()), ("dual:s3", 6));
        assert_eq!(
            builtin("s3", Some(FieldSpec::Rational))
                .unwrap()
                .field_spec(),
            FieldSpec::Rational
        );
    }

    #[test]
    fn unknown_and_invalid() {
        assert!(matches!(builtin("z5", None), Err(Error::UnknownAlgebra(_))));
        assert!(matches!(
            builtin("taft:3", None),
            Err(Error::UnknownAlgebra(_))
        ));
        assert!(matches!(
            builtin("dual:", None),
            Err(Error::UnknownAlgebra(_))
        ));
        assert!(matches!(
            builtin("taft:3:2", Some(FieldSpec::Rational)),
            Err(Error::NotPrimitiveRoot { .. })
        ));
    }

    #[test]
    fn order_of_units() {
        assert_eq!(order_mod(2, 7), Some(3));
        assert_eq!(order_mod(-1, 5), Some(2));
        assert_eq!(order_mod(7, 7), None);
    }
}
