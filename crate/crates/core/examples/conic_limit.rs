//! A smooth conic degenerating to two lines, checked against the oracle.

use ramlimit::limits::{limit_general_direction, Factorization};
use ramlimit::oracle::{verify, VerifyOptions};
use ramlimit::polyring::{parse_poly, rat};
use ramlimit::powerseries::{HSeries, VFamily};
use ramlimit::ramification::{dual_slice, pencil_through_point};

fn main() -> ramlimit::Result<()> {
    let f = HSeries::from_family(&[parse_poly("X0*X1")?, parse_poly("X2^2")?], 32)?;
    let fac = Factorization::new(vec![(parse_poly("X0")?, 1), (parse_poly("X1")?, 1)])?;
    let r = [rat(1), rat(2), rat(3)];
    let sys = pencil_through_point(&r, &[parse_poly("X0")?, parse_poly("X1")?], 0)?;
    let v = VFamily::constant(sys.basis(), 32)?;
    let out = limit_general_direction(&f, &fac, &v)?;
    println!("limit: {}", out.cycle);
    println!("dual slice: {}", dual_slice(&out.cycle, &r).render());
    println!("verify: {}", verify(&out.cycle, &f, &v, &VerifyOptions::default()).verdict.as_str());
    Ok(())
}
