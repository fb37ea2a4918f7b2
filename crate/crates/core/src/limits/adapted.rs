use super::zeuthen::{all_discriminants, square_root_part, ZeuthenShape};
use super::{check_family, check_nondegenerate, degree_check, Check, Engine, Factorization, LimitOutcome, ZeuthenData};
use crate::cycles::CycleExpr;
use crate::error::{Error, Result};
use crate::foliation::{
    binom2, gcd_with_curve, is_f_derivation, jacobi_family, reduced_derivation,
    series_derivation_equiv, series_poly_equiv, wronskian, DerivationFamily,
};
use crate::polyring::{gcd, rat, HPoly, Rational};
use crate::powerseries::{HSeries, VFamily};
use crate::ramification::aux_line;

/// `(∂_i, H_i, K_i)` for one factor `E_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdaptationEntry {
    pub derivation: DerivationFamily,
    pub h: HSeries,
    pub k: HSeries,
}

/// A shared `F(t)`-derivation `∂`, an exponent `p`, and one entry per
/// declared factor (same order as the factorization).
#[derive(Clone, Debug, PartialEq)]
pub struct AdaptationData {
    pub derivation: DerivationFamily,
    pub p: u32,
    pub entries: Vec<AdaptationEntry>,
}

/// The limit of `(W_∂(V)·F)` given by an adaptation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedLimit {
    pub cycle: CycleExpr,
    pub transcript: Vec<Check>,
    pub verified_order: usize,
}

fn one_series(order: usize) -> HSeries {
    HSeries::from_poly(&HPoly::one(), order)
}

fn fail(transcript: &mut Vec<Check>, name: String, detail: String) -> Error {
    transcript.push(Check::new(name.clone(), false, detail.clone()));
    Error::Hypothesis(format!("{name}: {detail}"))
}

/// `Σ e_i [W_{∂_i(0)}(V(0))·E_i] - (1/p) C(r+1,2) Σ e_i [K_i(0)·E_i]`, after
/// checking adaptedness, `F`-derivations, the two equivalences to the
/// available order, and coprimality of `K_i(0)` with `E_i`.
pub fn limit_adapted(
    f: &HSeries,
    fac: &Factorization,
    v: &VFamily,
    ad: &AdaptationData,
) -> Result<AdaptedLimit> {
    check_family(f)?;
    let mut tr = Vec::new();
    fac.validate(f.at_zero())?;
    if ad.entries.len() != fac.factors().len() || ad.p == 0 {
        return Err(Error::Invalid(
            "adaptation data must have one entry per factor and p ≥ 1".into(),
        ));
    }
    let comps: Vec<HPoly> = fac.factors().iter().map(|(e, _)| e.clone()).collect();
    let v0 = check_nondegenerate(&comps, v, &mut tr)?;
    let c = binom2(v.rank() + 1) as i64;
    let mut depth = f.order();

    let base = is_f_derivation(&ad.derivation, f);
    tr.push(Check::new("∂ is an F(t)-derivation", base.holds, format!("to order {}", base.order)));
    if !base.holds {
        return Err(fail(&mut tr, "∂ is an F(t)-derivation".into(), format!("fails at t-order {:?}", base.failing_order)));
    }
    depth = depth.min(base.order);

    let mut out = CycleExpr::zero();
    for ((e, mult), entry) in fac.factors().iter().zip(&ad.entries) {
        let di = &entry.derivation;
        let check = is_f_derivation(di, f);
        if !check.holds {
            return Err(fail(&mut tr, format!("∂ for {e} is an F(t)-derivation"), format!("fails at t-order {:?}", check.failing_order)));
        }
        depth = depth.min(check.order);
        let d0 = di.at_zero();
        let g = gcd_with_curve(&d0, e);
        if g.degree() > 0 {
            return Err(fail(&mut tr, format!("∂ adapted to {e}"), format!("gcd of ∂(0) with the curve is {g}")));
        }
        tr.push(Check::new(format!("∂ adapted to {e}"), true, "gcd(∂(0), E) = 1"));
        let k0 = entry.k.at_zero();
        if k0.is_zero() || gcd(k0, e).degree() > 0 {
            return Err(fail(&mut tr, format!("K(0) prime to {e}"), format!("K(0) = {k0}")));
        }
        tr.push(Check::new(format!("K(0) prime to {e}"), true, String::new()));

        let target = ad.derivation.mul_series(&entry.h);
        let eq1 = series_derivation_equiv(di, &target, f);
        if !eq1.holds {
            return Err(fail(&mut tr, format!("∂_i ≡ H_i ∂ for {e}"), eq1.reason.unwrap_or_default()));
        }
        tr.push(Check::new(format!("∂_i ≡ H_i ∂ for {e}"), true, format!("verified to order {}", eq1.verified_order)));
        let hp = entry.h.pow(ad.p, &HPoly::one());
        let eq2 = series_poly_equiv(&hp, &entry.k, f);
        if !eq2.holds {
            return Err(fail(&mut tr, format!("H_i^p ≡ K_i for {e}"), eq2.reason.unwrap_or_default()));
        }
        tr.push(Check::new(format!("H_i^p ≡ K_i for {e}"), true, format!("verified to order {}", eq2.verified_order)));
        depth = depth.min(eq1.verified_order).min(eq2.verified_order);

        let w = wronskian(&d0, v0.basis());
        if w.is_zero() || gcd(&w, e).degree() > 0 {
            return Err(fail(&mut tr, format!("Wronskian of the adapted ∂ prime to {e}"), "degenerate Wronskian".into()));
        }
        let m = rat(*mult as i64);
        out = out.add(&CycleExpr::intersection(&w, e, m.clone())?);
        if c != 0 {
            let coeff = -(m * rat(c)) / rat(ad.p as i64);
            out = out.add(&CycleExpr::intersection(k0, e, coeff)?);
        }
    }
    Ok(AdaptedLimit {
        cycle: out.canonical(),
        transcript: tr,
        verified_order: depth,
    })
}

/// Adaptation for a quasi-general direction with auxiliary `H`:
/// `∂ = A_2 ∂_{F,H}`; the multiple factors use `H·∂_red` with
/// `H_i = K_i = A_1`, the simple ones `∂` itself with `H_i = K_i = 1`.
/// Also returns the auxiliary cycle `C([A_2·F_1] + [H·F_0])`.
pub fn quasi_adaptation(
    f: &HSeries,
    fac: &Factorization,
    h: &HPoly,
    rank: usize,
) -> Result<(AdaptationData, CycleExpr)> {
    let order = f.order();
    let d1 = jacobi_family(f, &HSeries::from_poly(h, order))?;
    let (mut a1, mut a2) = (HPoly::one(), HPoly::one());
    for (e, m) in fac.factors() {
        if *m > 1 {
            a2 = &a2 * e;
        } else {
            a1 = &a1 * e;
        }
    }
    let d = d1.mul_poly(&a2);
    let reduced = if a2.degree() > 0 {
        Some(reduced_derivation(f, fac)?.mul_poly(h))
    } else {
        None
    };
    let entries = fac
        .factors()
        .iter()
        .map(|(_, m)| {
            if *m > 1 {
                let a1s = HSeries::from_poly(&a1, order);
                AdaptationEntry {
                    derivation: reduced.clone().unwrap(),
                    h: a1s.clone(),
                    k: a1s,
                }
            } else {
                AdaptationEntry {
                    derivation: d.clone(),
                    h: one_series(order),
                    k: one_series(order),
                }
            }
        })
        .collect();
    let c = rat(binom2(rank + 1) as i64);
    let mut aux = CycleExpr::intersection(h, f.at_zero(), c.clone())?;
    for (e, m) in fac.factors() {
        if *m > 1 {
            aux = aux.add(&CycleExpr::intersection(e, f.coeff(1), c.clone())?);
        }
    }
    Ok((
        AdaptationData {
            derivation: d,
            p: 1,
            entries,
        },
        aux,
    ))
}

/// Quasi-general limit computed through the adaptation engine.
pub fn limit_quasi_adapted(f: &HSeries, fac: &Factorization, v: &VFamily) -> Result<LimitOutcome> {
    check_family(f)?;
    let mut transcript = Vec::new();
    for (e, m) in fac.factors() {
        if *m > 1 && (f.coeff(1).is_zero() || gcd(e, f.coeff(1)).degree() > 0) {
            return Err(Error::Hypothesis(format!(
                "gcd(E, F1) = 1 fails for the multiple factor {e}"
            )));
        }
    }
    let h = aux_line(&fac.radical());
    transcript.push(Check::new("auxiliary H prime to F(0)", true, format!("H = {h}")));
    let (ad, aux) = quasi_adaptation(f, fac, &h, v.rank())?;
    finish(f, fac, v, &ad, aux, transcript, Vec::new())
}

fn finish(
    f: &HSeries,
    fac: &Factorization,
    v: &VFamily,
    ad: &AdaptationData,
    aux: CycleExpr,
    mut transcript: Vec<Check>,
    zeuthen: Vec<ZeuthenData>,
) -> Result<LimitOutcome> {
    let lim = limit_adapted(f, fac, v, ad)?;
    transcript.extend(lim.transcript);
    let cycle = lim.cycle.sub(&aux).canonical();
    transcript.push(degree_check(&cycle, f.degree(), v));
    Ok(LimitOutcome {
        engine: Engine::Adapted,
        cycle,
        transcript,
        zeuthen,
        verified_order: Some(lim.verified_order),
        warnings: fac.reducibility_warnings(),
    })
}

/// Adaptation of `∂_{F,H}` to every factor of a Zeuthen family, `p = 2`.
/// `F` must be normalized to `F(0) = E²A`; entries follow the order of
/// `shape.fibre_factorization()`.
pub fn build_zeuthen_adaptation(
    f: &HSeries,
    shape: &ZeuthenShape,
    data: &[ZeuthenData],
    h: &HPoly,
) -> Result<AdaptationData> {
    let order = f.order();
    let f0 = f.at_zero();
    if gcd(h, f0).degree() > 0 {
        return Err(Error::Invalid(format!("auxiliary {h} is not prime to E²A")));
    }
    let hs = HSeries::from_poly(h, order);
    let d = jacobi_family(f, &hs)?;
    let dt = f.sub(&HSeries::from_poly(f0, order)).div_t(1)?;
    let mut entries = Vec::new();
    for z in data {
        let (e, b) = (&z.factor, &z.b);
        let entry = if z.n == 1 {
            let bd = dt.mul_poly(b);
            let eb = HSeries::from_poly(&(e * b), order);
            let dj = jacobi_family(&bd, &eb)?.mul_poly(b);
            AdaptationEntry {
                derivation: dj.mul_poly(h),
                h: HSeries::from_poly(&(&b.pow(3) * e), dt.order()),
                k: dt.mul_poly(&b.pow(5)),
            }
        } else {
            let m = z.n - 2;
            let q1 = square_root_part(e, b, &z.reduced, m, order);
            let bb = b.pow(2 * m as u32 + 1);
            let q2 = f
                .mul_poly(&bb)
                .sub(&q1.mul(&q1))
                .div_t(m + 2)
                .map_err(|_| Error::Construction(format!("Q2 is not a power series for {e}")))?;
            if q2.at_zero().divisible_by(e) {
                return Err(Error::Construction(format!(
                    "{e} divides Q2(0), contradicting the type {}",
                    z.n
                )));
            }
            let dj = jacobi_family(&q2, &q1.truncate(q2.order()))?.mul_poly(&bb);
            AdaptationEntry {
                derivation: dj.mul_poly(h),
                h: q1.mul_poly(&bb.pow(2)).truncate(q2.order()),
                k: q2.mul_poly(&bb.pow(4)),
            }
        };
        entries.push(entry);
    }
    if shape.a().degree() > 0 {
        entries.push(AdaptationEntry {
            derivation: d.clone(),
            h: one_series(order),
            k: one_series(order),
        });
    }
    Ok(AdaptationData {
        derivation: d,
        p: 2,
        entries,
    })
}

/// Zeuthen limit computed through the adaptation engine; subtracts the
/// auxiliary cycle `C [H·E²A]`.
pub fn limit_zeuthen_adapted(
    f: &HSeries,
    shape: &ZeuthenShape,
    v: &VFamily,
    max_order: usize,
) -> Result<LimitOutcome> {
    check_family(f)?;
    let f = shape.normalize(f)?;
    let mut transcript = Vec::new();
    let data = all_discriminants(&f, shape, max_order, &mut transcript)?;
    let fac = shape.fibre_factorization();
    let h = aux_line(&fac.radical());
    transcript.push(Check::new("auxiliary H prime to E²A", true, format!("H = {h}")));
    let ad = build_zeuthen_adaptation(&f, shape, &data, &h)?;
    let c: Rational = rat(binom2(v.rank() + 1) as i64);
    let aux = CycleExpr::intersection(&h, f.at_zero(), c)?;
    finish(&f, &fac, v, &ad, aux, transcript, data)
}
