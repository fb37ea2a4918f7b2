//! A cuspidal cubic degenerating to a double line plus a line: the general
//! and quasi-general engines, and the adapted one.

use ramlimit::cycles::cycles_equal;
use ramlimit::limits::{limit_general_direction, limit_quasi_adapted, limit_quasi_general, Factorization};
use ramlimit::polyring::parse_poly;
use ramlimit::powerseries::{HSeries, VFamily};

fn main() -> ramlimit::Result<()> {
    let f = HSeries::from_family(&[parse_poly("X0^2*X1")?, parse_poly("X2^3")?], 32)?;
    let fac = Factorization::new(vec![(parse_poly("X0")?, 2), (parse_poly("X1")?, 1)])?;
    let v = VFamily::constant(&[parse_poly("X0 - 2*X2")?, parse_poly("X1 + 3*X2")?], 32)?;
    let g = limit_general_direction(&f, &fac, &v)?;
    let q = limit_quasi_general(&f, &fac, &v)?;
    let a = limit_quasi_adapted(&f, &fac, &v)?;
    println!("general: {} (degree {})", g.cycle, g.degree());
    println!("quasi:   {}", q.cycle);
    println!("adapted: {}", a.cycle);
    println!("equal: {}", cycles_equal(&g.cycle, &a.cycle, 3, 0)?);
    Ok(())
}
