//! Exact linear algebra over `Q(i)` and over `Z`.

mod gaussian;
mod matrix;
mod smith;

pub use gaussian::{GaussianRational, ParseScalarError};
pub use matrix::{rref, solve_affine, Matrix, Rref};
pub use smith::{smith_normal_form, IntegerMatrix};
