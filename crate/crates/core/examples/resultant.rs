//! Exact arithmetic: parse two curves, intersect them, project the points.

use ramlimit::polyring::{gcd, parse_poly, resultant_x2};

fn main() -> ramlimit::Result<()> {
    let p = parse_poly("X1^2*X2 - X0^3 - X0^2*X2 + X2^3")?;
    let q = parse_poly("X0 + X1 - 2*X2")?;
    println!("P = {p}\nQ = {q}");
    println!("gcd = {}", gcd(&p, &q));
    println!("Res_X2(P, Q) = {}", resultant_x2(&p, &q)?.to_hpoly());
    Ok(())
}
