use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::ring::{CommRing, ExactDiv};
use crate::polyring::{BinaryForm, CoordChange, HPoly, Rational};

/// Coefficient rings of truncated series: graded, with exact division.
pub trait Graded: CommRing + ExactDiv + PartialEq + fmt::Debug {
    fn zero_of_degree(d: u32) -> Self;
    fn grade(&self) -> u32;
    fn scale_by(&self, c: &Rational) -> Self;
}

impl Graded for HPoly {
    fn zero_of_degree(d: u32) -> Self {
        HPoly::zero(d)
    }
    fn grade(&self) -> u32 {
        self.degree()
    }
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Graded for BinaryForm {
    fn zero_of_degree(d: u32) -> Self {
        BinaryForm::zero(d)
    }
    fn grade(&self) -> u32 {
        self.degree()
    }
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// `t`-adic valuation of a truncated series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(usize),
    /// Every stored coefficient vanishes; the true valuation is at least this.
    AtLeast(usize),
}

impl Valuation {
    pub fn finite(self) -> Option<usize> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

/// `Σ c_i t^i` known modulo `t^order`; every coefficient has one degree.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<T> {
    degree: u32,
    coeffs: Vec<T>,
}

/// Families of ternary forms.
pub type HSeries = Series<HPoly>;
/// Families of binary forms (projected cycles over `Q[[t]]`).
pub type FormSeries = Series<BinaryForm>;

impl<T: Graded> Series<T> {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(degree: u32, mut coeffs: Vec<T>, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        coeffs.truncate(order);
        for c in &coeffs {
            assert!(
                c.is_zero_elem() || c.grade() == degree,
                "series coefficient of degree {} in a series of degree {degree}",
                c.grade()
            );
        }
        coeffs.resize_with(order, || T::zero_of_degree(degree));
        Series { degree, coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let d = c.grade();
        Series::new(d, vec![c], order)
    }

    pub fn zero(degree: u32, order: usize) -> Self {
        Series::new(degree, Vec::new(), order)
    }

    pub fn one_like_order(one: T, order: usize) -> Self {
        Series::constant(one, order)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    /// Constant coefficient, the fibre at `t = 0`.
    pub fn at_zero(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CommRing::is_zero_elem)
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero_elem()) {
            Some(v) => Valuation::Finite(v),
            None => Valuation::AtLeast(self.order()),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order());
        Series {
            degree: self.degree,
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// Raise the order by padding with zeros. Valid for families that are
    /// polynomial in `t` (the input convention).
    pub fn extend_by_zero(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order);
        Series::new(self.degree, coeffs, order)
    }

    /// Multiply by `t^k`; the result is known to `order + k`.
    pub fn mul_t(&self, k: usize) -> Self {
        let mut coeffs: Vec<T> = (0..k).map(|_| T::zero_of_degree(self.degree)).collect();
        coeffs.extend(self.coeffs.iter().cloned());
        Series {
            degree: self.degree,
            coeffs,
        }
    }

    /// Divide by `t^k`; the first `k` coefficients must vanish.
    pub fn div_t(&self, k: usize) -> Result<Self> {
        if let Some(i) = self.coeffs.iter().take(k).position(|c| !c.is_zero_elem()) {
            return Err(Error::InexactDivision { order: i });
        }
        if k >= self.order() {
            return Err(Error::TruncationExhausted {
                order: self.order(),
                context: format!("dividing by t^{k}"),
            });
        }
        Ok(Series {
            degree: self.degree,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn map<U: Graded>(&self, degree: u32, f: impl Fn(&T) -> U) -> Series<U> {
        Series::new(degree, self.coeffs.iter().map(f).collect(), self.order())
    }

    fn mixed_degree(&self, other: &Self) -> u32 {
        if self.is_zero() {
            other.degree
        } else if other.is_zero() {
            self.degree
        } else {
            assert_eq!(self.degree, other.degree, "adding series of different degrees");
            self.degree
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let degree = self.mixed_degree(other);
        Series {
            degree,
            coeffs: (0..n)
                .map(|i| self.coeffs[i].add_elem(&other.coeffs[i]))
                .map(|c| if c.is_zero_elem() { T::zero_of_degree(degree) } else { c })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Series {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(CommRing::neg_elem).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x.scale_by(c)).collect(),
        }
    }

    /// Multiply every coefficient by a fixed form.
    pub fn mul_coeff(&self, p: &T) -> Self {
        Series {
            degree: self.degree + p.grade(),
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    let y = x.mul_elem(p);
                    if y.is_zero_elem() {
                        T::zero_of_degree(self.degree + p.grade())
                    } else {
                        y
                    }
                })
                .collect(),
        }
    }

    /// Truncated Cauchy product; the order is the smaller one.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let degree = self.degree + other.degree;
        let mut coeffs: Vec<T> = (0..n).map(|_| T::zero_of_degree(degree)).collect();
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero_elem() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_elem(&a.mul_elem(b));
            }
        }
        for c in coeffs.iter_mut() {
            if c.is_zero_elem() {
                *c = T::zero_of_degree(degree);
            }
        }
        Series { degree, coeffs }
    }

    pub fn pow(&self, k: u32, one: &T) -> Self {
        let mut out = Series::constant(one.clone(), self.order());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `Q` with `B·Q = A`, computed order by order. With `v = val(B)` the
    /// first `v` coefficients of `A` must vanish and the result is known to
    /// `min(ord A, ord B) - v`.
    pub fn divide(&self, b: &Self) -> Result<Self> {
        let v = match b.valuation() {
            Valuation::Finite(v) => v,
            Valuation::AtLeast(n) => {
                return Err(Error::TruncationExhausted {
                    order: n,
                    context: "divisor series vanishes to the stored order".into(),
                })
            }
        };
        let n = self.order().min(b.order());
        if let Some(i) = self.coeffs.iter().take(v).position(|c| !c.is_zero_elem()) {
            return Err(Error::InexactDivision { order: i });
        }
        if self.degree < b.degree && !self.is_zero() {
            return Err(Error::InexactDivision { order: v });
        }
        let qdeg = self.degree.saturating_sub(b.degree);
        let lead = &b.coeffs[v];
        let mut q: Vec<T> = Vec::with_capacity(n - v);
        for k in 0..n - v {
            let mut acc = self.coeffs[k + v].clone();
            for i in 1..=k {
                let bi = &b.coeffs[v + i];
                if bi.is_zero_elem() || q[k - i].is_zero_elem() {
                    continue;
                }
                acc = acc.sub_elem(&bi.mul_elem(&q[k - i]));
            }
            let qk = if acc.is_zero_elem() {
                T::zero_of_degree(qdeg)
            } else {
                acc.div_exact_elem(lead)
                    .ok_or(Error::InexactDivision { order: k + v })?
            };
            q.push(qk);
        }
        if q.is_empty() {
            return Err(Error::TruncationExhausted {
                order: n,
                context: "quotient has no known coefficient".into(),
            });
        }
        Ok(Series {
            degree: qdeg,
            coeffs: q,
        })
    }
}

impl<T: Graded> CommRing for Series<T> {
    fn zero_like(&self) -> Self {
        Series::zero(0, self.order())
    }
    fn one_like(&self) -> Self {
        Series::constant(self.coeffs[0].one_like(), self.order())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
}

impl HSeries {
    /// Polynomial family `F_0 + F_1 t + ...`, zero-padded to `order`.
    pub fn from_family(polys: &[HPoly], order: usize) -> Result<Self> {
        let Some(first) = polys.iter().find(|p| !p.is_zero()) else {
            return Ok(HSeries::zero(polys.first().map_or(0, HPoly::degree), order));
        };
        let d = first.degree();
        for p in polys {
            if !p.is_zero() && p.degree() != d {
                return Err(Error::Invalid(format!(
                    "family members have degrees {d} and {}",
                    p.degree()
                )));
            }
        }
        Ok(HSeries::new(d, polys.to_vec(), order))
    }

    pub fn from_poly(p: &HPoly, order: usize) -> Self {
        HSeries::constant(p.clone(), order)
    }

    pub fn partial(&self, v: usize) -> Self {
        let d = self.degree.saturating_sub(1);
        Series::new(d, self.coeffs.iter().map(|c| c.partial(v)).collect(), self.order())
    }

    pub fn mul_poly(&self, p: &HPoly) -> Self {
        self.mul_coeff(p)
    }

    pub fn apply_coord_change(&self, m: &CoordChange) -> Self {
        Series::new(
            self.degree,
            self.coeffs.iter().map(|c| m.apply(c)).collect(),
            self.order(),
        )
    }

    /// Polynomial in `t` given by the stored coefficients, evaluated at
    /// `t = c`.
    pub fn eval_t(&self, c: &Rational) -> HPoly {
        let mut acc = HPoly::zero(self.degree);
        for coeff in self.coeffs.iter().rev() {
            acc = &acc.scale(c) + coeff;
        }
        acc
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

/// Series multiplication with the minimum order.
pub fn series_mul<T: Graded>(a: &Series<T>, b: &Series<T>) -> Series<T> {
    a.mul(b)
}

pub fn t_valuation<T: Graded>(a: &Series<T>) -> Valuation {
    a.valuation()
}

pub fn divide_by_series<T: Graded>(a: &Series<T>, b: &Series<T>) -> Result<Series<T>> {
    a.divide(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, rat};

    fn fam(ps: &[&str], order: usize) -> HSeries {
        let polys: Vec<HPoly> = ps.iter().map(|s| parse_poly(s).unwrap()).collect();
        HSeries::from_family(&polys, order).unwrap()
    }

    #[test]
    fn products() {
        let a = fam(&["X0"], 3);
        let b = fam(&["X1", "X2"], 3);
        assert_eq!(a.mul(&b), fam(&["X0*X1", "X0*X2"], 3));
        assert!(a.mul(&HSeries::zero(2, 3)).is_zero());
        let c = fam(&["X0", "X1"], 2);
        assert_eq!(c.mul(&c), fam(&["X0^2", "2*X0*X1"], 2));
        assert_eq!(a.mul(&c).order(), 2);
    }

    #[test]
    fn valuations() {
        assert_eq!(fam(&["0", "X0^2", "X1^2"], 4).valuation(), Valuation::Finite(1));
        assert_eq!(HSeries::zero(2, 5).valuation(), Valuation::AtLeast(5));
        assert_eq!(fam(&["X2^3"], 2).valuation(), Valuation::Finite(0));
    }

    #[test]
    fn division() {
        let a = fam(&["X2^2*X0", "X2^2*X1"], 4);
        let b = fam(&["X2^2"], 4);
        assert_eq!(a.divide(&b).unwrap(), fam(&["X0", "X1"], 4));
        let bad = fam(&["0", "X0^3"], 3);
        assert_eq!(
            bad.divide(&fam(&["X1"], 3)),
            Err(Error::InexactDivision { order: 1 })
        );
        let f = fam(&["X0*X1", "X2^2", "X0^2"], 5);
        let g = fam(&["X0 + X1", "X2", "0", "X1"], 5);
        assert_eq!(f.mul(&g).divide(&f).unwrap(), g);
    }

    #[test]
    fn division_by_a_non_unit_shifts() {
        let b = fam(&["0", "X0"], 5);
        let q = fam(&["X1", "X2"], 5);
        let a = b.mul(&q);
        let got = a.divide(&b).unwrap();
        assert_eq!(got.order(), 4);
        assert_eq!(got, q.truncate(4));
    }

    #[test]
    fn eval_at_t() {
        let f = fam(&["X0^2", "X1^2", "X2^2"], 3);
        assert_eq!(f.eval_t(&rat(2)), parse_poly("X0^2 + 2*X1^2 + 4*X2^2").unwrap());
    }
}
