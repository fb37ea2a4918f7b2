//! Exact polynomial kernel: sparse polynomials in `X0, X1, X2` over the
//! rationals, homogeneous wrappers, gcds, resultants and coordinate changes.

mod binary;
mod coord;
mod gcd;
mod hpoly;
pub mod linalg;
mod mpoly;
mod parse;
mod resultant;
pub mod ring;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use binary::BinaryForm;
pub use coord::{apply_coord_change, CoordChange, Matrix3};
pub use gcd::{gcd, is_squarefree, mgcd as mpoly_gcd};
pub(crate) use hpoly::fmt_rational;
pub use hpoly::HPoly;
pub use mpoly::{Exponent, MPoly};
pub use parse::parse_poly;
pub use resultant::{resultant_x2, resultant_x2_formal, univariate_resultant};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact quotient `q / p` when `p` divides `q`.
pub fn divides(p: &HPoly, q: &HPoly) -> Option<HPoly> {
    q.div_exact(p)
}
