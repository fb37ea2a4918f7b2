//! Wronskian of a linear system along the jacobian derivation of two curves.

use ramlimit::foliation::{gcd_with_curve, jacobi_derivation, wronskian};
use ramlimit::polyring::parse_poly;

fn main() -> ramlimit::Result<()> {
    let p = parse_poly("X0^2 + X1^2 - X2^2")?;
    let q = parse_poly("X0 + 2*X1 + 3*X2")?;
    let d = jacobi_derivation(&p, &q)?;
    println!("∂_(P,Q) = {d}");
    println!("gcd(∂, P) = {}", gcd_with_curve(&d, &p));
    let v = [parse_poly("X0")?, parse_poly("X1")?, parse_poly("X2")?];
    println!("W(X0, X1, X2) = {}", wronskian(&d, &v));
    Ok(())
}
