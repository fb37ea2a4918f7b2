use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::ring::{CommRing, ExactDiv};
use super::{HPoly, Rational};

/// Binary form in `X0, X1`; `coeffs[i]` multiplies `X0^i X1^(degree-i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree+1 coefficients");
        BinaryForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm::new(vec![c])
    }

    pub fn one() -> Self {
        BinaryForm::constant(Rational::one())
    }

    /// `a X0 + b X1`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm::new(vec![b, a])
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Form with no `X2`, read off a ternary form.
    pub fn from_hpoly(p: &HPoly) -> Option<Self> {
        let mut out = BinaryForm::zero(p.degree());
        for (e, c) in p.terms() {
            if e[2] != 0 {
                return None;
            }
            out.coeffs[e[0] as usize] = c.clone();
        }
        Some(out)
    }

    pub fn to_hpoly(&self) -> HPoly {
        HPoly::from_terms(
            self.degree,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ([i as u32, self.degree - i as u32, 0], c.clone())),
        )
    }

    /// Value at `(x, 1)`.
    pub fn eval_dehom(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "adding binary forms of different degrees");
        BinaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = BinaryForm::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Scaled so the coefficient of the highest power of `X0` is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().rev().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Exact quotient `self / d`, or `None`.
    pub fn div_exact(&self, d: &BinaryForm) -> Option<BinaryForm> {
        if d.is_zero() || d.degree > self.degree {
            return None;
        }
        let qdeg = self.degree - d.degree;
        if self.is_zero() {
            return Some(BinaryForm::zero(qdeg));
        }
        // divide the dehomogenized polynomials in x = X0/X1
        let db = d.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let lead_inv = d.coeffs[db].recip();
        let mut rem = self.coeffs.clone();
        let top = rem.iter().rposition(|c| !c.is_zero()).unwrap();
        if top < db {
            return None;
        }
        let mut q = vec![Rational::zero(); top - db + 1];
        for k in (0..=top - db).rev() {
            let c = &rem[k + db] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs[..=db].iter().enumerate() {
                rem[k + i] -= &c * di;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) || q.len() > qdeg as usize + 1 {
            return None;
        }
        q.resize(qdeg as usize + 1, Rational::zero());
        Some(BinaryForm {
            degree: qdeg,
            coeffs: q,
        })
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![Rational::zero(); (self.degree + rhs.degree) as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        BinaryForm {
            degree: self.degree + rhs.degree,
            coeffs,
        }
    }
}

impl CommRing for BinaryForm {
    fn zero_like(&self) -> Self {
        BinaryForm::zero(0)
    }
    fn one_like(&self) -> Self {
        BinaryForm::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
}

impl ExactDiv for BinaryForm {
    fn div_exact_elem(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hpoly())
    }
}
