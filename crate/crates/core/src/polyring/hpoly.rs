use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mpoly::{Exponent, MPoly};
use super::ring::{CommRing, ExactDiv};
use super::{parse_poly, Rational};
use crate::error::{Error, Result};

/// Homogeneous polynomial in `X0, X1, X2`. The zero polynomial may carry any
/// degree and acts as the neutral element for sums of every degree.
#[derive(Clone, Debug)]
pub struct HPoly {
    degree: u32,
    poly: MPoly,
}

// zero forms of different nominal degree compare equal
impl PartialEq for HPoly {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && (self.degree == other.degree || self.poly.is_zero())
    }
}

impl Eq for HPoly {}

impl std::hash::Hash for HPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.poly.hash(state);
    }
}

impl HPoly {
    pub fn zero(degree: u32) -> Self {
        HPoly {
            degree,
            poly: MPoly::zero(),
        }
    }

    pub fn one() -> Self {
        HPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        HPoly {
            degree: 0,
            poly: MPoly::constant(c),
        }
    }

    pub fn var(i: usize) -> Self {
        HPoly {
            degree: 1,
            poly: MPoly::var(i),
        }
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        HPoly {
            degree: exp[0] + exp[1] + exp[2],
            poly: MPoly::monomial(exp, c),
        }
    }

    /// Linear form `a0 X0 + a1 X1 + a2 X2`.
    pub fn linear(a: &[Rational; 3]) -> Self {
        HPoly {
            degree: 1,
            poly: MPoly::from_terms([
                ([1, 0, 0], a[0].clone()),
                ([0, 1, 0], a[1].clone()),
                ([0, 0, 1], a[2].clone()),
            ]),
        }
    }

    pub fn from_mpoly(poly: MPoly) -> Result<Self> {
        match poly.homogeneous_degree() {
            Ok(degree) => Ok(HPoly { degree, poly }),
            Err((first, second)) => Err(Error::NonHomogeneous { first, second }),
        }
    }

    /// Build from a polynomial already known to be homogeneous of `degree`
    /// (or zero).
    pub fn from_mpoly_with_degree(poly: MPoly, degree: u32) -> Self {
        debug_assert!(poly.is_zero() || poly.homogeneous_degree() == Ok(degree));
        HPoly { degree, poly }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(
        degree: u32,
        terms: I,
    ) -> Self {
        let poly = MPoly::from_terms(terms);
        assert!(
            poly.is_zero() || poly.homogeneous_degree() == Ok(degree),
            "terms do not match the declared degree"
        );
        HPoly { degree, poly }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.degree == 0
    }

    pub fn as_mpoly(&self) -> &MPoly {
        &self.poly
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.poly.terms()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.poly.coeff(e)
    }

    /// Re-label the degree of the zero polynomial.
    pub fn with_degree(mut self, degree: u32) -> Self {
        if self.is_zero() {
            self.degree = degree;
        }
        assert_eq!(self.degree, degree, "nonzero form has a fixed degree");
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        HPoly {
            degree: self.degree,
            poly: self.poly.scale(c),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        HPoly {
            degree: self.degree * n,
            poly: self.poly.pow(n),
        }
    }

    pub fn partial(&self, v: usize) -> Self {
        HPoly {
            degree: self.degree.saturating_sub(1),
            poly: self.poly.partial(v),
        }
    }

    pub fn gradient(&self) -> [HPoly; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        self.poly.eval(point)
    }

    /// Scaled so the lex-leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        HPoly {
            degree: self.degree,
            poly: self.poly.monic(),
        }
    }

    pub fn leading_coeff(&self) -> Option<Rational> {
        self.poly.leading().map(|(_, c)| c.clone())
    }

    /// Exact quotient `self / d`.
    pub fn div_exact(&self, d: &HPoly) -> Option<HPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return (self.degree >= d.degree).then(|| HPoly::zero(self.degree - d.degree));
        }
        if d.degree > self.degree {
            return None;
        }
        let q = self.poly.div_exact(&d.poly)?;
        Some(HPoly {
            degree: self.degree - d.degree,
            poly: q,
        })
    }

    pub fn divisible_by(&self, d: &HPoly) -> bool {
        self.div_exact(d).is_some()
    }

    /// Canonical remainder modulo `d` (lex division by a single divisor); zero
    /// iff `d` divides `self`. The remainder keeps the degree of `self`.
    pub fn rem(&self, d: &HPoly) -> HPoly {
        let (_, r) = self.poly.div_rem(&d.poly);
        HPoly {
            degree: self.degree,
            poly: r,
        }
    }

    pub fn div_rem(&self, d: &HPoly) -> (HPoly, HPoly) {
        let (q, r) = self.poly.div_rem(&d.poly);
        let qdeg = self.degree.saturating_sub(d.degree);
        (
            HPoly {
                degree: qdeg,
                poly: q,
            },
            HPoly {
                degree: self.degree,
                poly: r,
            },
        )
    }

    /// `P(M·X)` for a 3×3 matrix `M`.
    pub fn substitute_linear(&self, m: &[[Rational; 3]; 3]) -> HPoly {
        HPoly {
            degree: self.degree,
            poly: self.poly.substitute_linear(m),
        }
    }

    /// Every monomial of the given degree, lex descending.
    pub fn monomials(degree: u32) -> Vec<Exponent> {
        let mut out = Vec::new();
        for a0 in (0..=degree).rev() {
            for a1 in (0..=degree - a0).rev() {
                out.push([a0, a1, degree - a0 - a1]);
            }
        }
        out
    }

    /// Coefficient vector on [`HPoly::monomials`] of this degree.
    pub fn coeff_vector(&self) -> Vec<Rational> {
        HPoly::monomials(self.degree)
            .iter()
            .map(|e| self.coeff(e))
            .collect()
    }

    pub fn from_coeff_vector(degree: u32, v: &[Rational]) -> HPoly {
        HPoly::from_terms(
            degree,
            HPoly::monomials(degree)
                .into_iter()
                .zip(v.iter().cloned()),
        )
    }

    fn check_sum(&self, rhs: &HPoly) -> u32 {
        if self.is_zero() && rhs.is_zero() {
            self.degree.max(rhs.degree)
        } else if self.is_zero() {
            rhs.degree
        } else if rhs.is_zero() {
            self.degree
        } else {
            assert_eq!(
                self.degree, rhs.degree,
                "adding forms of different degrees"
            );
            self.degree
        }
    }
}

impl<'a> Add<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let degree = self.check_sum(rhs);
        HPoly {
            degree,
            poly: &self.poly + &rhs.poly,
        }
    }
}

impl<'a> Sub<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        let degree = self.check_sum(rhs);
        HPoly {
            degree,
            poly: &self.poly - &rhs.poly,
        }
    }
}

impl<'a> Mul<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        HPoly {
            degree: self.degree + rhs.degree,
            poly: &self.poly * &rhs.poly,
        }
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            degree: self.degree,
            poly: -&self.poly,
        }
    }
}

impl Add for HPoly {
    type Output = HPoly;
    fn add(self, rhs: HPoly) -> HPoly {
        &self + &rhs
    }
}

impl Sub for HPoly {
    type Output = HPoly;
    fn sub(self, rhs: HPoly) -> HPoly {
        &self - &rhs
    }
}

impl Mul for HPoly {
    type Output = HPoly;
    fn mul(self, rhs: HPoly) -> HPoly {
        &self * &rhs
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

impl CommRing for HPoly {
    fn zero_like(&self) -> Self {
        HPoly::zero(0)
    }
    fn one_like(&self) -> Self {
        HPoly::one()
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

impl ExactDiv for HPoly {
    fn div_exact_elem(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Prints in the input grammar, lex-leading term first, so output re-parses.
impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for (v, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(format!("X{v}")),
                    _ => factors.push(format!("X{v}^{p}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for HPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn display_round_trips() {
        for s in ["X0^2 - X1^2", "3/2*X0*X1*X2", "-X2^3 + 7*X0*X1^2", "5", "0"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
        assert_eq!(parse_poly("X1^2 - X0^2").unwrap().to_string(), "-X0^2 + X1^2");
    }

    #[test]
    fn divides_examples() {
        let p = |s: &str| parse_poly(s).unwrap();
        assert_eq!(p("X2^2*X0").div_exact(&p("X2")), Some(p("X2*X0")));
        assert_eq!(p("X0^2 - X1^2").div_exact(&p("X0 - X1")), Some(p("X0 + X1")));
        assert_eq!(p("X1^3").div_exact(&p("X2")), None);
    }

    #[test]
    fn coefficient_vectors_round_trip() {
        let p = parse_poly("X0^2 - 3*X1*X2 + 1/2*X2^2").unwrap();
        let v = p.coeff_vector();
        assert_eq!(v.len(), 6);
        assert_eq!(HPoly::from_coeff_vector(2, &v), p);
        assert_eq!(v[0], rat(1));
    }
}
