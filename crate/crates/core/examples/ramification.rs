//! Ramification cycle of a pencil of lines on a nodal cubic.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ramlimit::cycles::{cycle_degree, random_aux_linear, realize_chow};
use ramlimit::polyring::{parse_poly, CoordChange};
use ramlimit::ramification::{ramification_cycle, LinearSystem};

fn main() -> ramlimit::Result<()> {
    let p = parse_poly("X1^2*X2 - X0^3 - X0^2*X2")?;
    let v = LinearSystem::new(vec![parse_poly("X0 - X2")?, parse_poly("X1 + 2*X2")?])?;
    let r = ramification_cycle(&p, &v)?;
    println!("degree {}", cycle_degree(&r));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let q = random_aux_linear(&[p.clone()], &mut rng);
    let chow = realize_chow(&r, &CoordChange::random(7, 6), &q)?;
    println!("chow form {}", chow.form);
    Ok(())
}
