//! Exact arithmetic: coefficient fields, dense linear algebra, binary forms
//! and sparse multivariate forms.

pub mod binary;
pub mod field;
pub mod linalg;
pub mod multi;

pub use binary::{gcd_forms, is_coprime, BinaryForm};
pub use field::{Field, PrimeField, Rationals};
pub use linalg::{kernel_basis, Matrix};
pub use multi::{Grading, MultiForm};
