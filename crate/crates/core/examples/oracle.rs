//! The brute-force oracle on its own, and a perturbed cycle it rejects.

use ramlimit::cycles::CycleExpr;
use ramlimit::oracle::{oracle_limit_auto, verify, VerifyOptions};
use ramlimit::polyring::{parse_poly, rat, CoordChange};
use ramlimit::powerseries::{HSeries, VFamily};

fn main() -> ramlimit::Result<()> {
    let f = HSeries::from_family(&[parse_poly("X0*X1")?, parse_poly("X2^2")?], 16)?;
    let v = VFamily::constant(&[parse_poly("X0 - X2")?, parse_poly("X1 + 2*X2")?], 16)?;
    let m = CoordChange::random(3, 6);
    let o = oracle_limit_auto(&f, &v, &parse_poly("X0 + 3*X1 - X2")?, &m, 4, 64)?;
    println!("oracle chow {} at order {}, valuation {}", o.chow.form, o.used_order, o.valuation);
    let wrong = CycleExpr::intersection(&parse_poly("X0")?, &parse_poly("X1")?, rat(3))?;
    println!("3[X0·X1]: {}", verify(&wrong, &f, &v, &VerifyOptions::default()).verdict.as_str());
    Ok(())
}
