//! Resultants with respect to `X2`, i.e. projection from `(0:0:1)`.
//!
//! The bivariate resultant is obtained by evaluating at `(x, 1)` for
//! `deg P · deg Q + 1` integer values of `x`, taking univariate resultants
//! over the rationals there, and interpolating.

use num_traits::{One, Zero};

use super::{BinaryForm, HPoly, Rational};
use crate::error::{Error, Result};

fn lead_is_zero(v: &[Rational]) -> bool {
    v.last().map_or(true, Zero::is_zero)
}

fn actual_degree(v: &[Rational]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn pow(r: &Rational, n: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..n {
        out *= r;
    }
    out
}

/// Sylvester resultant of `a` and `b` with formal degrees `a.len() - 1` and
/// `b.len() - 1` (coefficient vectors start at the constant term). Vanishing
/// formal leading coefficients are allowed.
pub fn univariate_resultant(a: &[Rational], b: &[Rational]) -> Rational {
    assert!(!a.is_empty() && !b.is_empty());
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 {
        return pow(&a[0], n);
    }
    if n == 0 {
        return pow(&b[0], m);
    }
    if lead_is_zero(a) {
        if lead_is_zero(b) {
            return Rational::zero();
        }
        let r = univariate_resultant(b, a);
        return if (m * n) % 2 == 1 { -r } else { r };
    }
    // lc(a) != 0: Res(a, b) = lc(a)^n prod b(alpha), and b may be reduced mod a
    let lead = a[m].clone();
    let mut rem = b.to_vec();
    if rem.len() > m {
        let inv = lead.recip();
        for k in (m..rem.len()).rev() {
            let c = &rem[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, ai) in a.iter().enumerate() {
                rem[k - m + i] -= &c * ai;
            }
        }
        rem.truncate(m);
    }
    let Some(r) = actual_degree(&rem) else {
        return Rational::zero();
    };
    rem.truncate(r + 1);
    // Res_{m,n}(a,b) = lc(a)^(n-r) Res_{m,r}(a, rem) = lc(a)^(n-r) (-1)^(mr) Res_{r,m}(rem, a)
    let inner = univariate_resultant(&rem, a);
    let sign = if (m * r) % 2 == 1 { -Rational::one() } else { Rational::one() };
    pow(&lead, n - r) * sign * inner
}

/// Coefficients of `P(x, 1, X2)` as a polynomial in `X2` of formal degree `deg P`.
fn specialize(p: &HPoly, x: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.degree() as usize + 1];
    let mut powers = vec![Rational::one()];
    for (e, c) in p.terms() {
        while powers.len() <= e[0] as usize {
            let next = powers.last().unwrap() * x;
            powers.push(next);
        }
        out[e[2] as usize] += c * &powers[e[0] as usize];
    }
    out
}

/// Coefficients (constant term first) of the polynomial of degree `<= n`
/// through `(xs[i], ys[i])`, by Newton divided differences.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // Horner on the Newton form
    let mut coeffs = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![Rational::zero(); n];
        for i in 0..n {
            if coeffs[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// Resultant in `X2` with formal degrees; only requires the result to be
/// nonzero. At least one input should not vanish at `(0:0:1)` for the result
/// to realize the intersection cycle.
pub fn resultant_x2_formal(p: &HPoly, q: &HPoly) -> Result<BinaryForm> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::DegenerateProjection(
            "resultant of a zero polynomial".into(),
        ));
    }
    let d = (p.degree() * q.degree()) as usize;
    let xs: Vec<Rational> = (0..=d as i64).map(super::rat).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| univariate_resultant(&specialize(p, x), &specialize(q, x)))
        .collect();
    let coeffs = interpolate(&xs, &ys);
    let form = BinaryForm::new(coeffs);
    if form.is_zero() {
        return Err(Error::DegenerateProjection(format!(
            "resultant vanishes identically: {p} and {q} share a component or both pass through the projection centre"
        )));
    }
    Ok(form)
}

/// Sylvester resultant of `P` and `Q` in `X2`, a binary form of degree
/// `deg P · deg Q`. Both inputs must have a nonzero `X2^deg` coefficient.
pub fn resultant_x2(p: &HPoly, q: &HPoly) -> Result<BinaryForm> {
    for f in [p, q] {
        if f.coeff(&[0, 0, f.degree()]).is_zero() {
            return Err(Error::DegenerateProjection(format!(
                "{f} vanishes at the projection centre (0:0:1)"
            )));
        }
    }
    resultant_x2_formal(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, rat};

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn sylvester_examples() {
        let r = resultant_x2(&h("X0 + X2"), &h("X1 - X2")).unwrap();
        assert_eq!(r, BinaryForm::linear(rat(1), rat(1)));
        assert!(matches!(
            resultant_x2(&h("X2"), &h("X0")),
            Err(Error::DegenerateProjection(_))
        ));
    }

    #[test]
    fn conic_against_hand_expansion() {
        // Res_{X2}(X2^2 + X0X1, X2^2 + X0^2 + X1^2) = (X0^2 + X1^2 - X0X1)^2
        let r = resultant_x2(&h("X0*X1 + X2^2"), &h("X2^2 + X0^2 + X1^2")).unwrap();
        assert_eq!(r.degree(), 4);
        let s = BinaryForm::from_hpoly(&h("X0^2 - X0*X1 + X1^2")).unwrap();
        assert_eq!(r, s.pow(2));
    }

    #[test]
    fn formal_degree_with_vanishing_lead() {
        // a = 0*y^2 + y + 1, b = y - 2: Res_{2,1} = (-1)^2 Res_{1,2}(b, a) = lc(b)^2 a(2) = 3
        let a = vec![rat(1), rat(1), rat(0)];
        let b = vec![rat(-2), rat(1)];
        assert_eq!(univariate_resultant(&a, &b), rat(3));
        // common root
        let c = vec![rat(-2), rat(1), rat(1)]; // (y+2)(y-1)
        let d = vec![rat(-1), rat(1)];
        assert_eq!(univariate_resultant(&c, &d), rat(0));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let xs: Vec<Rational> = (0..4).map(rat).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| x * x * x - rat(2) * x + rat(5)).collect();
        assert_eq!(interpolate(&xs, &ys), vec![rat(5), rat(-2), rat(0), rat(1)]);
    }
}
