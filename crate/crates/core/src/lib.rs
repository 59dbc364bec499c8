//! Exact computation of Hochschild cohomology of finite-dimensional Hopf
//! algebras and verification of its cochain-level Gerstenhaber structure.
//!
//! Scalars are exact: prime fields [`PrimeField`] and the rationals
//! [`Rationals`]. Algorithms are generic over [`Field`]; the aliases below
//! name the two concrete instantiations.

// Index loops mirror the tensor formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod checks;
pub mod cochain;
pub mod double;
pub mod error;
pub mod gerstenhaber;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod registry;
pub mod report;

pub use error::{Error, Result};
pub use hopf::HopfAlgebra;
pub use linalg::{Field, FieldSpec, PrimeField, Rationals};
pub use registry::{builtin, AnyHopf};

/// A Hopf algebra over a prime field.
pub type ModpHopf = HopfAlgebra<PrimeField>;
/// A Hopf algebra over the rationals.
pub type RationalHopf = HopfAlgebra<Rationals>;
/// A cochain over a prime field.
pub type ModpCochain = cochain::Cochain<PrimeField>;
/// A cochain over the rationals.
pub type RationalCochain = cochain::Cochain<Rationals>;
/// An exact rational number.
pub type Rational = num_rational::BigRational;
