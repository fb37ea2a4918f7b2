use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cycle_degree, CycleExpr, Term};
use crate::error::{Error, Result};
use crate::foliation::{binom2, jacobi_derivation, wronskian};
use crate::polyring::{gcd, rat, resultant_x2_formal, BinaryForm, CoordChange, HPoly};

/// Projection of a cycle from `M·(0:0:1)`: the stored form is the
/// `clearing`-th power of the cycle's Chow form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowForm {
    pub form: BinaryForm,
    pub clearing: u32,
}

impl ChowForm {
    pub fn new(form: BinaryForm, clearing: u32) -> Self {
        assert!(clearing >= 1);
        ChowForm {
            form: form.normalized(),
            clearing,
        }
    }
}

fn passes_centre(p: &HPoly) -> bool {
    p.coeff(&[0, 0, p.degree()]).is_zero()
}

fn realize_term(term: &Term, m: &CoordChange, aux_q: &HPoly) -> Result<BinaryForm> {
    match term {
        Term::Intersection(p, q) => {
            let (p, q) = (m.apply(p), m.apply(q));
            if passes_centre(&p) && passes_centre(&q) {
                return Err(Error::DegenerateProjection(
                    "both curves pass through the projection centre".into(),
                ));
            }
            resultant_x2_formal(&p, &q)
        }
        Term::Ram(p, v) => {
            let p = m.apply(p);
            if passes_centre(&p) {
                return Err(Error::DegenerateProjection(format!(
                    "{p} passes through the projection centre"
                )));
            }
            let q = m.apply(aux_q);
            if gcd(&q, &p).degree() > 0 {
                return Err(Error::Invalid(format!(
                    "auxiliary form {aux_q} is not prime to the curve"
                )));
            }
            let v: Vec<HPoly> = v.iter().map(|b| m.apply(b)).collect();
            let d = jacobi_derivation(&p, &q)?;
            let w = wronskian(&d, &v);
            let a = resultant_x2_formal(&w, &p)?;
            let b = resultant_x2_formal(&q, &p)?.pow(binom2(v.len()) as u32);
            a.div_exact(&b).ok_or(Error::InexactDivision { order: 0 })
        }
    }
}

/// Realizes `C` through the projection from `M·(0:0:1)`; each term's form is
/// raised to `e·m` where `e` clears all denominators. `aux_q` is the
/// auxiliary curve of the ramification terms.
pub fn realize_chow(c: &CycleExpr, m: &CoordChange, aux_q: &HPoly) -> Result<ChowForm> {
    let c = c.canonical();
    let e = c.denominator_lcm();
    let mut num = BinaryForm::one();
    let mut den = BinaryForm::one();
    for (mult, term) in c.terms() {
        let n: BigInt = (mult * num_rational::BigRational::from_integer(e.clone())).to_integer();
        let k = n
            .abs()
            .to_u32()
            .ok_or_else(|| Error::Invalid("multiplicity too large to realize".into()))?;
        let f = realize_term(term, m, aux_q)?.normalized().pow(k);
        if n.is_negative() {
            den = &den * &f;
        } else {
            num = &num * &f;
        }
    }
    let form = num.div_exact(&den).ok_or(Error::InexactDivision { order: 0 })?;
    let clearing = e.to_u32().ok_or_else(|| Error::Invalid("denominators too large".into()))?;
    Ok(ChowForm::new(form, clearing))
}

/// Equality after raising both to the lcm of their clearing exponents.
pub fn chow_equal(a: &ChowForm, b: &ChowForm) -> bool {
    let l = a.clearing.lcm(&b.clearing);
    let fa = a.form.pow(l / a.clearing).normalized();
    let fb = b.form.pow(l / b.clearing).normalized();
    fa == fb
}

/// Random line with small integer coefficients prime to every curve.
pub fn random_aux_linear(curves: &[HPoly], rng: &mut impl Rng) -> HPoly {
    loop {
        let c: [i64; 3] = std::array::from_fn(|_| rng.gen_range(-5..=5));
        if c == [0, 0, 0] {
            continue;
        }
        let l = HPoly::linear(&c.map(rat));
        if curves.iter().all(|p| gcd(&l, p).degree() == 0) {
            return l;
        }
    }
}

fn ram_curves(c: &CycleExpr) -> Vec<HPoly> {
    c.terms()
        .iter()
        .filter_map(|(_, t)| match t {
            Term::Ram(p, _) => Some(p.clone()),
            Term::Intersection(..) => None,
        })
        .collect()
}

const RETRIES: usize = 25;

/// Realizes `c` with a fresh random projection, redrawing on degeneracy.
pub(crate) fn realize_random(
    c: &CycleExpr,
    others: &[&CycleExpr],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<ChowForm>> {
    let mut curves = ram_curves(c);
    for o in others {
        curves.extend(ram_curves(o));
    }
    for _ in 0..RETRIES {
        let m = CoordChange::random(rng.gen(), 6);
        let q = random_aux_linear(&curves, rng);
        let all: Vec<Result<ChowForm>> = std::iter::once(c)
            .chain(others.iter().copied())
            .map(|x| realize_chow(x, &m, &q))
            .collect();
        if all
            .iter()
            .any(|r| matches!(r, Err(Error::DegenerateProjection(_))))
        {
            continue;
        }
        return all.into_iter().collect();
    }
    Err(Error::Exhausted {
        attempts: RETRIES,
        context: "every projection was degenerate".into(),
    })
}

/// Degrees agree and the Chow forms agree under `trials` random projections.
pub fn cycles_equal(c1: &CycleExpr, c2: &CycleExpr, trials: usize, seed: u64) -> Result<bool> {
    assert!(trials >= 1, "at least one trial");
    if cycle_degree(c1) != cycle_degree(c2) {
        return Ok(false);
    }
    let (c1, c2) = (c1.canonical(), c2.canonical());
    if c1 == c2 {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let forms = realize_random(&c1, &[&c2], &mut rng)?;
        if !chow_equal(&forms[0], &forms[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::cycle_degree;
    use crate::polyring::parse_poly;

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    fn pt(a: &str, b: &str, m: i64) -> CycleExpr {
        CycleExpr::intersection(&h(a), &h(b), rat(m)).unwrap()
    }

    #[test]
    fn doubled_point() {
        let m = CoordChange::random(7, 4);
        let c = realize_chow(&pt("X0", "X1", 2), &m, &h("X0")).unwrap();
        assert_eq!(c.form.degree(), 2);
        let single = realize_chow(&pt("X0", "X1", 1), &m, &h("X0")).unwrap();
        assert_eq!(c.form, single.form.pow(2).normalized());
    }

    #[test]
    fn line_ramification_is_trivial() {
        let c = CycleExpr::ramification(&h("X0 + X1 + X2"), &[h("X0"), h("X1")], rat(1)).unwrap();
        let r = realize_chow(&c, &CoordChange::random(3, 4), &h("X0 - X1")).unwrap();
        assert_eq!(r.form, BinaryForm::one());
        // the term itself, kept before canonicalization, also realizes to a constant
        let t = &c.terms()[0].1;
        let f = realize_term(t, &CoordChange::random(3, 4), &h("X0 - X2")).unwrap();
        assert_eq!(f.degree(), 0);
    }

    #[test]
    fn aux_curve_does_not_matter() {
        let c = CycleExpr::ramification(&h("X0^3 + X1^3 + X2^3 - X0*X1*X2"), &[h("X0 - X2"), h("X1 + X2")], rat(1)).unwrap();
        let m = CoordChange::random(11, 5);
        let forms: Vec<ChowForm> = ["X0 + 2*X1 - X2", "3*X0 - X1", "X1 + 5*X2"]
            .iter()
            .map(|q| realize_chow(&c, &m, &h(q)).unwrap())
            .collect();
        assert_eq!(forms[0].form.degree(), 6);
        assert!(chow_equal(&forms[0], &forms[1]));
        assert!(chow_equal(&forms[0], &forms[2]));
    }

    #[test]
    fn compatible_powers() {
        let f = BinaryForm::linear(rat(1), rat(2));
        let a = ChowForm::new(f.clone(), 1);
        let b = ChowForm::new(f.pow(2), 2);
        assert!(chow_equal(&a, &a));
        assert!(chow_equal(&a, &b));
        let x0x1 = ChowForm::new(BinaryForm::new(vec![rat(0), rat(1), rat(0)]), 1);
        let x0sq = ChowForm::new(BinaryForm::new(vec![rat(0), rat(0), rat(1)]), 1);
        assert!(!chow_equal(&x0x1, &x0sq));
    }

    #[test]
    fn equality_of_cycles() {
        assert!(cycles_equal(&pt("X0", "X1", 1), &pt("X0", "X1", 1), 3, 1).unwrap());
        assert!(!cycles_equal(&pt("X0", "X1", 1), &pt("X0", "X2", 1), 3, 1).unwrap());
        assert!(cycles_equal(&pt("X0", "X1", 2), &pt("X0", "X1^2", 1), 3, 1).unwrap());
        // rational multiplicities and cancellation
        let half = CycleExpr::intersection(&h("X0"), &h("X1"), rat(1) / rat(2)).unwrap();
        let c = half.add(&half).add(&pt("X1", "X2", 1)).sub(&pt("X1", "X2", 1));
        assert!(cycles_equal(&c, &pt("X0", "X1", 1), 3, 5).unwrap());
    }

    #[test]
    fn degree_matches_form_degree() {
        let c = CycleExpr::ramification(&h("X0*X1 - X2^2"), &[h("X0^2"), h("X1^2"), h("X2^2")], rat(1)).unwrap();
        let r = realize_chow(&c, &CoordChange::random(5, 4), &h("X0 + X1 + 3*X2")).unwrap();
        assert_eq!(rat(r.form.degree() as i64), cycle_degree(&c));
    }

    #[test]
    fn conic_class_is_two_tangents() {
        // tangents from (0:0:1) to X0X1 = X2^2 touch at (1:0:0) and (0:1:0)
        let c = CycleExpr::ramification(&h("X0*X1 - X2^2"), &[h("X0"), h("X1")], rat(1)).unwrap();
        let expect = pt("X1", "X2", 1).add(&pt("X0", "X2", 1));
        assert!(cycles_equal(&c, &expect, 3, 9).unwrap());
    }
}
