//! Brute-force limits: the ramification cycle of the generic fibre is
//! projected over `Q[[t]]`, saturated by `t` and read at `t = 0`.

mod verify;

pub use verify::{verify, verify_all, TrialReport, Verdict, VerifyOptions, VerifyReport};

use num_traits::Zero;

use crate::cycles::ChowForm;
use crate::error::{Error, Result};
use crate::foliation::{binom2, jacobi_family, wronskian_family};
use crate::polyring::ring::determinant;
use crate::polyring::{gcd, BinaryForm, CoordChange, HPoly};
use crate::powerseries::{FormSeries, HSeries, Valuation, VFamily};

pub const DEFAULT_ORDER: usize = 8;
pub const ORDER_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub chow: ChowForm,
    pub used_order: usize,
    pub valuation: usize,
    pub coordinate_change: CoordChange,
    pub auxiliary: HPoly,
}

/// Coefficient of `X2^k` in `p`, as a binary form of degree `deg - k`;
/// `deg` is passed since zero coefficients carry no degree.
fn x2_coeff(p: &HPoly, deg: u32, k: u32) -> BinaryForm {
    let d = deg - k;
    let mut coeffs = vec![crate::polyring::Rational::zero(); d as usize + 1];
    for (e, c) in p.terms() {
        if e[2] == k {
            coeffs[e[0] as usize] = c.clone();
        }
    }
    BinaryForm::new(coeffs)
}

/// `[s_0, ..., s_deg]` with `s_k` the `X2^k` coefficient series.
fn x2_split(s: &HSeries) -> Vec<FormSeries> {
    let d = s.degree();
    (0..=d)
        .map(|k| {
            FormSeries::new(
                d - k,
                s.coeffs().iter().map(|c| x2_coeff(c, d, k)).collect(),
                s.order(),
            )
        })
        .collect()
}

/// Sylvester resultant in `X2` over `Q[[t]]`, with formal degrees `deg a`
/// and `deg b`. Entries are binary-form series; the determinant is
/// division-free, so truncation is harmless.
pub fn series_resultant_x2(a: &HSeries, b: &HSeries) -> FormSeries {
    let order = a.order().min(b.order());
    let (m, n) = (a.degree() as usize, b.degree() as usize);
    let sa = x2_split(&a.truncate(order));
    let sb = x2_split(&b.truncate(order));
    let size = m + n;
    let zero = FormSeries::zero(0, order);
    let mut rows = vec![vec![zero; size]; size];
    for i in 0..n {
        for j in 0..=m {
            rows[i][i + j] = sa[m - j].clone();
        }
    }
    for i in 0..m {
        for j in 0..=n {
            rows[n + i][i + j] = sb[n - j].clone();
        }
    }
    let one = FormSeries::constant(BinaryForm::one(), order);
    let r = determinant(&rows, &one);
    if r.is_zero() {
        FormSeries::zero((m * n) as u32, order)
    } else {
        r
    }
}

fn at_order(f: &HSeries, n: usize) -> HSeries {
    if f.order() >= n {
        f.truncate(n)
    } else {
        f.extend_by_zero(n)
    }
}

/// One oracle run at truncation order `n` after the substitution `M`.
/// Families shorter than `n` are taken to be polynomial in `t`.
pub fn oracle_limit(
    f: &HSeries,
    v: &VFamily,
    h: &HPoly,
    m: &CoordChange,
    n: usize,
) -> Result<OracleResult> {
    if h.degree() == 0 {
        return Err(Error::Invalid("the auxiliary form must be nonconstant".into()));
    }
    let g = gcd(h, f.at_zero());
    if g.degree() > 0 {
        return Err(Error::Hypothesis(format!(
            "auxiliary form {h} shares the component {g} with F(0)"
        )));
    }
    let fs = at_order(f, n).apply_coord_change(m);
    let p = fs.degree();
    if fs.at_zero().coeff(&[0, 0, p]).is_zero() {
        return Err(Error::DegenerateProjection(
            "the special fibre passes through the projection centre".into(),
        ));
    }
    let vs = if v.order() >= n { v.truncate(n) } else { v.extend_by_zero(n) }.apply_coord_change(m);
    let hs = HSeries::from_poly(&m.apply(h), n);
    let d = jacobi_family(&fs, &hs)?;
    let w = wronskian_family(&d, vs.basis());
    let a = series_resultant_x2(&w, &fs);
    let b = series_resultant_x2(&hs, &fs);
    let c = binom2(vs.rank() + 1) as u32;
    let q = a.divide(&b.pow(c, &BinaryForm::one()))?;
    let val = match q.valuation() {
        Valuation::Finite(val) => val,
        Valuation::AtLeast(k) => {
            return Err(Error::TruncationExhausted {
                order: n,
                context: format!("projected ramification vanishes to order {k}"),
            })
        }
    };
    Ok(OracleResult {
        chow: ChowForm::new(q.coeff(val).clone(), 1),
        used_order: n,
        valuation: val,
        coordinate_change: m.clone(),
        auxiliary: h.clone(),
    })
}

/// Doubles the order from `n0` until the saturation is visible or `cap` is
/// passed.
pub fn oracle_limit_auto(
    f: &HSeries,
    v: &VFamily,
    h: &HPoly,
    m: &CoordChange,
    n0: usize,
    cap: usize,
) -> Result<OracleResult> {
    let mut n = n0.max(1);
    loop {
        match oracle_limit(f, v, h, m, n) {
            Err(Error::TruncationExhausted { .. }) if n < cap => n = (2 * n).min(cap),
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{chow_equal, realize_chow, CycleExpr};
    use crate::polyring::{parse_poly, rat, resultant_x2_formal};

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    fn fam(ps: &[&str]) -> HSeries {
        HSeries::from_family(&ps.iter().map(|s| h(s)).collect::<Vec<_>>(), 4).unwrap()
    }

    #[test]
    fn series_resultant_matches_fibrewise() {
        let a = fam(&["X0^2 + X2^2 - X1*X2", "X0*X1"]);
        let b = fam(&["X0 + 2*X1 + X2", "X1"]);
        let r = series_resultant_x2(&a, &b);
        assert_eq!(r.degree(), 2);
        let r0 = resultant_x2_formal(a.at_zero(), b.at_zero()).unwrap();
        assert_eq!(r.at_zero(), &r0);
        let one = rat(1);
        let r1 = resultant_x2_formal(&a.eval_t(&one), &b.eval_t(&one)).unwrap();
        // the exact resultant is a polynomial in t of degree <= 3
        let mut acc = BinaryForm::zero(2);
        for c in r.coeffs() {
            acc = acc.add(c);
        }
        assert_eq!(acc, r1);
    }

    #[test]
    fn conic_degeneration_doubles_the_node() {
        let f = fam(&["X0*X1", "X2^2"]);
        let v = VFamily::constant(&[h("X0 - X2"), h("X1 + 2*X2")], 4).unwrap();
        let m = CoordChange::random(3, 5);
        let out = oracle_limit_auto(&f, &v, &h("X0 + 3*X1 - X2"), &m, DEFAULT_ORDER, ORDER_CAP).unwrap();
        assert_eq!(out.chow.form.degree(), 2);
        let node = CycleExpr::intersection(&h("X0"), &h("X1"), rat(2)).unwrap();
        let expect = realize_chow(&node, &m, &h("X2")).unwrap();
        assert!(chow_equal(&out.chow, &expect));
    }

    #[test]
    fn constant_family_has_valuation_zero() {
        let f = fam(&["X0^2 + X1^2 - X2^2"]);
        let basis = [h("X0 - 2*X2"), h("X1 + 3*X2")];
        let v = VFamily::constant(&basis, 4).unwrap();
        let m = CoordChange::random(11, 5);
        let out = oracle_limit(&f, &v, &h("X0 + X1 + 5*X2"), &m, 4).unwrap();
        assert_eq!(out.valuation, 0);
        let c = CycleExpr::ramification(f.at_zero(), &basis, rat(1)).unwrap();
        assert!(chow_equal(&out.chow, &realize_chow(&c, &m, &h("X0 - X1")).unwrap()));
    }

    #[test]
    fn auxiliary_form_must_be_prime_to_the_fibre() {
        let f = fam(&["X0*X1", "X2^2"]);
        let v = VFamily::constant(&[h("X0 - X2"), h("X1 + 2*X2")], 4).unwrap();
        let m = CoordChange::identity();
        assert!(matches!(
            oracle_limit(&f, &v, &h("X0"), &m, 4),
            Err(Error::Hypothesis(_))
        ));
        // X0*X1 vanishes at (0:0:1)
        assert!(matches!(
            oracle_limit(&f, &v, &h("X0 + X1 + X2"), &m, 4),
            Err(Error::DegenerateProjection(_))
        ));
    }

    #[test]
    fn orders_agree_once_saturated() {
        let f = fam(&["X0^2*X1", "X2^3"]);
        let v = VFamily::constant(&[h("X0 - 2*X2"), h("X1 + 3*X2")], 4).unwrap();
        let m = CoordChange::random(5, 5);
        let aux = h("X0 + 2*X1 - 3*X2");
        let a = oracle_limit_auto(&f, &v, &aux, &m, 8, 64).unwrap();
        let b = oracle_limit(&f, &v, &aux, &m, 2 * a.used_order).unwrap();
        assert_eq!(a.valuation, b.valuation);
        assert_eq!(a.chow, b.chow);
    }
}
