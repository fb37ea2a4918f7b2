//! Projective equivalence of derivations modulo a curve.

use ramlimit::foliation::{jacobi_derivation, proj_equiv_witness};
use ramlimit::polyring::parse_poly;

fn main() -> ramlimit::Result<()> {
    let p = parse_poly("X1^2*X2 - X0^3 - X0*X2^2")?;
    let q1 = parse_poly("X0 + X2")?;
    let q2 = parse_poly("X1 - X2")?;
    let d1 = jacobi_derivation(&p, &q1)?.mul_poly(&q2);
    let d2 = jacobi_derivation(&p, &q2)?.mul_poly(&q1);
    match proj_equiv_witness(&d1, &d2, &p) {
        Some(w) => println!("Q2·∂_(P,Q1) ≡ a·Q1·∂_(P,Q2) mod P with a = {}", w.a),
        None => println!("not equivalent"),
    }
    Ok(())
}
