//! Dense exact linear algebra over [`Field`](crate::field::Field).

mod echelon;
mod factor;
mod matrix;
mod poly;
mod split;

pub use echelon::RowReducer;
pub use factor::{factor_poly, Factorization};
pub use matrix::{kernel, rank, solve, Matrix, RowSpaceSolver};
pub use poly::Poly;
pub use split::{minimal_polynomial, split_commutative_algebra};
