//! Exact scalar arithmetic and linear algebra over F_p and Q.

pub mod echelon;
pub mod field;
pub mod guard;
pub mod matrix;

pub use echelon::{Echelon, SparseRow};
pub use field::{random_elem, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Matrix, SparseMatrix};
