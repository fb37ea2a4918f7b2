use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::ring::determinant;
use crate::polyring::{gcd, HPoly, Rational};

/// Homogeneous derivation `G0 ∂0 + G1 ∂1 + G2 ∂2` with all `G_i` of degree `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    degree: u32,
    g: [HPoly; 3],
}

pub(crate) fn cross(a: &[HPoly; 3], b: &[HPoly; 3]) -> [HPoly; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub(crate) fn coords() -> [HPoly; 3] {
    [HPoly::var(0), HPoly::var(1), HPoly::var(2)]
}

impl Derivation {
    /// Rejects the zero derivation and coefficients of mixed degrees.
    pub fn new(g: [HPoly; 3]) -> Result<Self> {
        let d = Derivation::raw(g)?;
        if d.is_zero() {
            return Err(Error::DegenerateDerivation("zero derivation".into()));
        }
        Ok(d)
    }

    /// Like [`Derivation::new`] but allows the zero derivation.
    pub fn raw(g: [HPoly; 3]) -> Result<Self> {
        let mut degree = None;
        for c in g.iter().filter(|c| !c.is_zero()) {
            match degree {
                None => degree = Some(c.degree()),
                Some(d) if d != c.degree() => {
                    return Err(Error::NonHomogeneous {
                        first: d,
                        second: c.degree(),
                    })
                }
                _ => {}
            }
        }
        let degree = degree.unwrap_or_else(|| g.iter().map(HPoly::degree).max().unwrap());
        let g = g.map(|c| c.with_degree(degree));
        Ok(Derivation { degree, g })
    }

    pub(crate) fn raw_unchecked(degree: u32, g: [HPoly; 3]) -> Self {
        Derivation {
            degree,
            g: g.map(|c| c.with_degree(degree)),
        }
    }

    /// `ε = X0 ∂0 + X1 ∂1 + X2 ∂2`.
    pub fn euler() -> Self {
        Derivation {
            degree: 1,
            g: coords(),
        }
    }

    /// `∂_{X_i}`.
    pub fn coordinate(i: usize) -> Self {
        let mut g = [HPoly::zero(0), HPoly::zero(0), HPoly::zero(0)];
        g[i] = HPoly::one();
        Derivation { degree: 0, g }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[HPoly; 3] {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().all(HPoly::is_zero)
    }

    pub fn apply(&self, p: &HPoly) -> HPoly {
        let target = (p.degree() + self.degree).saturating_sub(1);
        let mut acc = HPoly::zero(target);
        for i in 0..3 {
            if self.g[i].is_zero() {
                continue;
            }
            let d = p.partial(i);
            if !d.is_zero() {
                acc = &acc + &(&self.g[i] * &d);
            }
        }
        acc.with_degree(target)
    }

    pub fn mul_poly(&self, c: &HPoly) -> Derivation {
        Derivation::raw_unchecked(self.degree + c.degree(), self.g.clone().map(|x| &x * c))
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation::raw_unchecked(self.degree, self.g.clone().map(|x| x.scale(c)))
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        let degree = if self.is_zero() { other.degree } else { self.degree };
        Derivation::raw_unchecked(
            degree,
            std::array::from_fn(|i| &self.g[i] - &other.g[i]),
        )
    }

    /// The maximal minors of `[X0 X1 X2; G0 G1 G2]`, as the vector `X × G`.
    pub fn minors(&self) -> [HPoly; 3] {
        let m = cross(&coords(), &self.g);
        m.map(|x| x.with_degree(self.degree + 1))
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.g[0], self.g[1], self.g[2])
    }
}

/// `∂_{P,Q} = det [∇P; ∇Q; ∇]`, i.e. coefficients `∇P × ∇Q`.
pub fn jacobi_derivation(p: &HPoly, q: &HPoly) -> Result<Derivation> {
    if p.degree() == 0 || q.degree() == 0 {
        return Err(Error::Invalid(
            "jacobi derivation needs nonconstant polynomials".into(),
        ));
    }
    let degree = p.degree() + q.degree() - 2;
    let g = cross(&p.gradient(), &q.gradient());
    let d = Derivation::raw_unchecked(degree, g);
    if d.is_zero() {
        return Err(Error::DegenerateDerivation(format!(
            "the jacobi derivation of {p} and {q} vanishes"
        )));
    }
    Ok(d)
}

pub(crate) fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `det (∂^i(a_j))`, rows built by the recurrence `row_{i+1} = ∂(row_i)`.
pub fn wronskian(d: &Derivation, basis: &[HPoly]) -> HPoly {
    assert!(!basis.is_empty(), "wronskian of an empty basis");
    let deg = basis.iter().find(|p| !p.is_zero()).map_or(0, HPoly::degree);
    let n = basis.len();
    let mut rows: Vec<Vec<HPoly>> = vec![basis.to_vec()];
    for i in 1..n {
        let next: Vec<HPoly> = rows[i - 1].iter().map(|p| d.apply(p)).collect();
        rows.push(next);
    }
    let w = determinant(&rows, &HPoly::one());
    let target = n as i64 * deg as i64 + binom2(n) as i64 * (d.degree() as i64 - 1);
    if w.is_zero() {
        HPoly::zero(target.max(0) as u32)
    } else {
        w
    }
}

/// `gcd(F, minors of [X; G])`; it is 1 exactly when `∂` is prime to `F`.
pub fn gcd_with_curve(d: &Derivation, f: &HPoly) -> HPoly {
    d.minors()
        .iter()
        .fold(f.monic(), |acc, m| if m.is_zero() { acc } else { gcd(&acc, m) })
}
