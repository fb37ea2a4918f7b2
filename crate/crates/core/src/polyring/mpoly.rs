//! Sparse polynomials in `X0, X1, X2` over the rationals, not necessarily
//! homogeneous. This is the working representation behind [`HPoly`] and the
//! gcd machinery.
//!
//! [`HPoly`]: super::HPoly

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::{CommRing, ExactDiv};
use super::Rational;

/// Exponent triple `(a0, a1, a2)`. Array ordering is lexicographic with
/// `X0 > X1 > X2`, so the last map entry is the lex-leading term.
pub type Exponent = [u32; 3];

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponent, Rational>,
}

fn divides_exp(d: &Exponent, e: &Exponent) -> bool {
    d[0] <= e[0] && d[1] <= e[1] && d[2] <= e[2]
}

fn exp_add(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn exp_sub(a: &Exponent, b: &Exponent) -> Exponent {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MPoly::monomial([0, 0, 0], c)
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        MPoly::monomial(e, Rational::one())
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(iter: I) -> Self {
        let mut p = MPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0, 0])
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    /// Common total degree of all terms, or `None` for mixed degrees. The
    /// zero polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> std::result::Result<u32, (u32, u32)> {
        let mut degrees = self.terms.keys().map(|e| e[0] + e[1] + e[2]);
        let Some(first) = degrees.next() else {
            return Ok(0);
        };
        let (lo, hi) = degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)));
        if lo == hi {
            Ok(lo)
        } else {
            Err((lo, hi))
        }
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &Exponent, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (exp_add(e, exp), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial(&self, v: usize) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[v] -= 1;
            out.add_term(ne, c * Rational::from_integer(e[v].into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &point[v];
                }
            }
            acc += term;
        }
        acc
    }

    /// Coefficients of `v^k` for `k = 0..=deg_v`, with `v` removed from the
    /// exponents.
    pub fn to_univariate(&self, v: usize) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = *e;
            let k = ne[v] as usize;
            ne[v] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    pub fn from_univariate(coeffs: &[MPoly], v: usize) -> Self {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, val) in &c.terms {
                let mut ne = *e;
                ne[v] += k as u32;
                out.add_term(ne, val.clone());
            }
        }
        out
    }

    /// Scale so the lex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Division with remainder by a single divisor in lex order. The
    /// remainder has no term divisible by the divisor's leading monomial,
    /// which makes it a canonical normal form modulo the principal ideal.
    pub fn div_rem(&self, d: &MPoly) -> (MPoly, MPoly) {
        let (lead_e, lead_c) = d.leading().expect("division by the zero polynomial");
        let lead_e = *lead_e;
        let lead_inv = lead_c.recip();
        let tail: Vec<(Exponent, Rational)> = d
            .terms
            .iter()
            .filter(|(e, _)| **e != lead_e)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        let mut work = self.clone();
        let mut quot = MPoly::zero();
        let mut rem = MPoly::zero();
        while let Some((e, c)) = work.terms.pop_last() {
            if divides_exp(&lead_e, &e) {
                let m = exp_sub(&e, &lead_e);
                let coef = &c * &lead_inv;
                for (te, tc) in &tail {
                    work.add_term(exp_add(te, &m), -(tc * &coef));
                }
                quot.add_term(m, coef);
            } else {
                rem.terms.insert(e, c);
            }
        }
        (quot, rem)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (lead_e, lead_c) = d.leading()?;
        let lead_e = *lead_e;
        let lead_inv = lead_c.recip();
        let tail: Vec<(Exponent, Rational)> = d
            .terms
            .iter()
            .filter(|(e, _)| **e != lead_e)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        let mut work = self.clone();
        let mut quot = MPoly::zero();
        while let Some((e, c)) = work.terms.pop_last() {
            if !divides_exp(&lead_e, &e) {
                return None;
            }
            let m = exp_sub(&e, &lead_e);
            let coef = &c * &lead_inv;
            for (te, tc) in &tail {
                work.add_term(exp_add(te, &m), -(tc * &coef));
            }
            quot.add_term(m, coef);
        }
        Some(quot)
    }

    /// `P(M·X)`: substitute `X_i ← Σ_j M[i][j] X_j`.
    pub fn substitute_linear(&self, m: &[[Rational; 3]; 3]) -> MPoly {
        let lin: Vec<MPoly> = (0..3)
            .map(|i| {
                MPoly::from_terms((0..3).map(|j| {
                    let mut e = [0; 3];
                    e[j] = 1;
                    (e, m[i][j].clone())
                }))
            })
            .collect();
        let max_deg = [self.degree_in(0), self.degree_in(1), self.degree_in(2)];
        let powers: Vec<Vec<MPoly>> = (0..3)
            .map(|i| {
                let mut pw = vec![MPoly::one()];
                for k in 1..=max_deg[i] as usize {
                    let next = &pw[k - 1] * &lin[i];
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let term = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize])
                * &powers[2][e[2] as usize];
            for (te, tc) in term.terms {
                out.add_term(te, tc * c);
            }
        }
        out
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (e, c) in &small.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(exp_add(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl CommRing for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero()
    }
    fn one_like(&self) -> Self {
        MPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        -self
    }
}

impl ExactDiv for MPoly {
    fn div_exact_elem(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}
