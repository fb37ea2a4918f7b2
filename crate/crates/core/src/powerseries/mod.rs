//! Truncated power series in `t` with form coefficients: families of curves,
//! families of linear systems, and projected cycles over `Q[[t]]`.

mod family;
mod series;

pub use family::{saturate_basis, VFamily};
pub use series::{
    divide_by_series, series_mul, t_valuation, FormSeries, Graded, HSeries, Series, Valuation,
};
