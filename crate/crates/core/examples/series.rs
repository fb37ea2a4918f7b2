//! Truncated power series in t with form coefficients.

use ramlimit::polyring::parse_poly;
use ramlimit::powerseries::HSeries;

fn main() -> ramlimit::Result<()> {
    let f = HSeries::from_family(&[parse_poly("X0*X1")?, parse_poly("X2^2")?], 6)?;
    let g = HSeries::from_family(&[parse_poly("1")?, parse_poly("-1")?], 6)?;
    let fg = f.mul(&g);
    println!("F·(1 - t) = {:?}", fg.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("back: {}", fg.divide(&g)? == f);
    println!("valuation of t^2·F: {:?}", f.mul_t(2).valuation());
    Ok(())
}
