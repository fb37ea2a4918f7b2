//! Zeuthen families of types 1, 2 and 3 over the double line X2 = 0.

use ramlimit::limits::{limit_zeuthen, Factorization, ZeuthenShape};
use ramlimit::oracle::{verify, VerifyOptions};
use ramlimit::polyring::{parse_poly, HPoly};
use ramlimit::powerseries::{HSeries, VFamily};

fn main() -> ramlimit::Result<()> {
    let shape = ZeuthenShape::new(Factorization::new(vec![(parse_poly("X2")?, 1)])?, parse_poly("X0")?)?;
    let v = VFamily::constant(&[parse_poly("X0 - 2*X2")?, parse_poly("X1 + 3*X2")?], 32)?;
    let families: [&[&str]; 3] = [
        &["X2^2*X0", "X1^3"],
        &["X2^2*X0", "X2*X1^2", "X1^3"],
        &["X0*X2^2", "2*X0*X1*X2", "X0*X1^2", "X1^3"],
    ];
    for fam in families {
        let polys = fam.iter().map(|s| parse_poly(s)).collect::<ramlimit::Result<Vec<HPoly>>>()?;
        let f = HSeries::from_family(&polys, 32)?;
        let out = limit_zeuthen(&f, &shape, &v, 16)?;
        let verdict = verify(&out.cycle, &f, &v, &VerifyOptions::default()).verdict;
        println!("type {}: {} [{}]", out.zeuthen[0].n, out.cycle, verdict.as_str());
    }
    Ok(())
}
