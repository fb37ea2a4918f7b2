//! Homogeneous derivations (foliations of the plane), their Wronskians, and
//! projective equivalence modulo a curve.

mod derivation;
mod equiv;
mod family;

pub(crate) use derivation::binom2;
pub use derivation::{gcd_with_curve, jacobi_derivation, wronskian, Derivation};
pub use equiv::{
    poly_proj_equiv, proj_equiv_check, proj_equiv_witness, series_derivation_equiv,
    series_poly_equiv, series_rem, EquivWitness, SeriesEquiv,
};
pub use family::{
    is_f_derivation, jacobi_family, reduced_derivation, reduced_gradient, wronskian_family,
    DerivationFamily, FDerivationCheck,
};
