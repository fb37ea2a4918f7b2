use super::{check_family, check_nondegenerate, degree_check, Check, Engine, Factorization, LimitOutcome};
use crate::cycles::CycleExpr;
use crate::error::{Error, Result};
use crate::foliation::binom2;
use crate::polyring::{gcd, rat};
use crate::powerseries::{HSeries, VFamily};

/// `Σ e_i R_{E_i}(V(0)) + C Σ_{i<j} (e_i+e_j)[E_i·E_j] + C Σ_i (e_i-1)[E_i·F_1]`.
fn closed_formula(f: &HSeries, fac: &Factorization, v: &VFamily) -> Result<CycleExpr> {
    let v0 = v.at_zero();
    let c = binom2(v.rank() + 1) as i64;
    let f1 = f.coeff(1);
    let factors = fac.factors();
    let mut out = CycleExpr::zero();
    for (e, m) in factors {
        out = out.add(&CycleExpr::ramification(e, &v0, rat(*m as i64))?);
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let (ei, mi) = &factors[i];
            let (ej, mj) = &factors[j];
            out = out.add(&CycleExpr::intersection(ei, ej, rat(c * (*mi + *mj) as i64))?);
        }
    }
    for (e, m) in factors {
        if *m > 1 && c != 0 {
            out = out.add(&CycleExpr::intersection(e, f1, rat(c * (*m as i64 - 1)))?);
        }
    }
    Ok(out.canonical())
}

fn run(
    engine: Engine,
    f: &HSeries,
    fac: &Factorization,
    v: &VFamily,
    hypotheses: impl FnOnce(&mut Vec<Check>) -> Result<()>,
) -> Result<LimitOutcome> {
    check_family(f)?;
    let mut transcript = Vec::new();
    let scalar = fac.validate(f.at_zero())?;
    transcript.push(Check::new(
        "declared factorization",
        true,
        format!("product of factors = {} · F(0)", crate::polyring::fmt_rational(&scalar)),
    ));
    hypotheses(&mut transcript)?;
    let comps: Vec<_> = fac.factors().iter().map(|(e, _)| e.clone()).collect();
    check_nondegenerate(&comps, v, &mut transcript)?;
    let cycle = closed_formula(f, fac, v)?;
    transcript.push(degree_check(&cycle, f.degree(), v));
    Ok(LimitOutcome {
        engine,
        cycle,
        transcript,
        zeuthen: Vec::new(),
        verified_order: None,
        warnings: fac.reducibility_warnings(),
    })
}

/// Limit along a general direction: requires `gcd(F(0), F_1) = 1`.
pub fn limit_general_direction(f: &HSeries, fac: &Factorization, v: &VFamily) -> Result<LimitOutcome> {
    run(Engine::General, f, fac, v, |tr| {
        let g = if f.coeff(1).is_zero() {
            f.at_zero().monic()
        } else {
            gcd(f.at_zero(), f.coeff(1))
        };
        let ok = g.degree() == 0;
        tr.push(Check::new("gcd(F0, F1) = 1", ok, format!("gcd = {g}")));
        if ok {
            Ok(())
        } else {
            Err(Error::Hypothesis(format!(
                "gcd(F0, F1) = 1 fails: gcd = {g}"
            )))
        }
    })
}

/// Limit along a quasi-general direction: requires `gcd(E_i, F_1) = 1` only
/// for the multiple factors.
pub fn limit_quasi_general(f: &HSeries, fac: &Factorization, v: &VFamily) -> Result<LimitOutcome> {
    run(Engine::Quasi, f, fac, v, |tr| {
        for (e, m) in fac.factors() {
            if *m < 2 {
                continue;
            }
            let f1 = f.coeff(1);
            let g = if f1.is_zero() { e.monic() } else { gcd(e, f1) };
            let ok = g.degree() == 0;
            tr.push(Check::new(
                format!("gcd({e}, F1) = 1 for the factor of multiplicity {m}"),
                ok,
                format!("gcd = {g}"),
            ));
            if !ok {
                return Err(Error::Hypothesis(format!(
                    "gcd(E, F1) = 1 fails for the multiple factor {e}: gcd = {g}"
                )));
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{cycle_degree, cycles_equal};
    use crate::polyring::{parse_poly, HPoly};

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    fn fam(ps: &[&str]) -> HSeries {
        HSeries::from_family(&ps.iter().map(|s| h(s)).collect::<Vec<_>>(), 6).unwrap()
    }

    fn pencil(a: &str, b: &str) -> VFamily {
        VFamily::constant(&[h(a), h(b)], 6).unwrap()
    }

    #[test]
    fn cuspidal_cubic() {
        let f = fam(&["X0^2*X1", "X2^3"]);
        let fac = Factorization::new(vec![(h("X0"), 2), (h("X1"), 1)]).unwrap();
        let v = pencil("X0 - 2*X2", "X1 + 3*X2");
        let out = limit_general_direction(&f, &fac, &v).unwrap();
        assert_eq!(cycle_degree(&out.cycle), rat(6));
        let expect = CycleExpr::intersection(&h("X0"), &h("X1"), rat(3))
            .unwrap()
            .add(&CycleExpr::intersection(&h("X0"), &h("X2^3"), rat(1)).unwrap());
        assert!(cycles_equal(&out.cycle, &expect, 3, 1).unwrap());
        let quasi = limit_quasi_general(&f, &fac, &v).unwrap();
        assert_eq!(quasi.cycle, out.cycle);
    }

    #[test]
    fn conic_degeneration() {
        let f = fam(&["X0*X1", "X2^2"]);
        let fac = Factorization::new(vec![(h("X0"), 1), (h("X1"), 1)]).unwrap();
        let out = limit_general_direction(&f, &fac, &pencil("X0 - X2", "X1 + 2*X2")).unwrap();
        let expect = CycleExpr::intersection(&h("X0"), &h("X1"), rat(2)).unwrap();
        assert!(cycles_equal(&out.cycle, &expect, 3, 2).unwrap());
    }

    #[test]
    fn hypothesis_hierarchy() {
        let fac = Factorization::new(vec![(h("X0"), 2), (h("X1"), 1)]).unwrap();
        let v = pencil("X0 - 2*X2", "X1 + 3*X2");
        let shared_simple = fam(&["X0^2*X1", "X1*X2^2"]);
        assert!(matches!(
            limit_general_direction(&shared_simple, &fac, &v),
            Err(Error::Hypothesis(_))
        ));
        assert!(limit_quasi_general(&shared_simple, &fac, &v).is_ok());
        let shared_multiple = fam(&["X0^2*X1", "X0*X2^2"]);
        assert!(matches!(
            limit_quasi_general(&shared_multiple, &fac, &v),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn smooth_special_fibre() {
        let f = fam(&["X0^2 + X1^2 - X2^2", "X0*X1"]);
        let fac = Factorization::new(vec![(h("X0^2 + X1^2 - X2^2"), 1)]).unwrap();
        let v = pencil("X0 - 2*X2", "X1 + 3*X2");
        let out = limit_general_direction(&f, &fac, &v).unwrap();
        assert_eq!(out.cycle.terms().len(), 1);
    }
}
