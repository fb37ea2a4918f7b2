use super::derivation::{binom2, Derivation};
use crate::error::{Error, Result};
use crate::limits::Factorization;
use crate::polyring::ring::determinant;
use crate::polyring::{HPoly, Rational};
use crate::powerseries::HSeries;

/// Derivation with power-series coefficients, `∂(t) = Σ G_i(t) ∂_i`.
#[derive(Clone, PartialEq, Debug)]
pub struct DerivationFamily {
    degree: u32,
    g: [HSeries; 3],
}

fn series_cross(a: &[HSeries; 3], b: &[HSeries; 3]) -> [HSeries; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

fn grad(f: &HSeries) -> [HSeries; 3] {
    [f.partial(0), f.partial(1), f.partial(2)]
}

impl DerivationFamily {
    pub fn new(degree: u32, g: [HSeries; 3]) -> Result<Self> {
        for c in &g {
            if !c.is_zero() && c.degree() != degree {
                return Err(Error::NonHomogeneous {
                    first: degree,
                    second: c.degree(),
                });
            }
        }
        let fam = DerivationFamily { degree, g };
        if fam.is_zero() {
            return Err(Error::DegenerateDerivation("zero derivation family".into()));
        }
        Ok(fam)
    }

    pub fn constant(d: &Derivation, order: usize) -> Self {
        DerivationFamily {
            degree: d.degree(),
            g: d.coeffs().clone().map(|c| HSeries::from_poly(&c, order)),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.g.iter().map(HSeries::order).min().unwrap()
    }

    pub fn coeffs(&self) -> &[HSeries; 3] {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().all(HSeries::is_zero)
    }

    /// `∂(0)`; may be the zero derivation.
    pub fn at_zero(&self) -> Derivation {
        Derivation::raw_unchecked(self.degree, self.g.clone().map(|s| s.at_zero().clone()))
    }

    pub fn apply(&self, f: &HSeries) -> HSeries {
        let target = (f.degree() + self.degree).saturating_sub(1);
        let order = self.order().min(f.order());
        let mut acc = HSeries::zero(target, order);
        for i in 0..3 {
            if self.g[i].is_zero() {
                continue;
            }
            acc = acc.add(&self.g[i].mul(&f.partial(i)));
        }
        acc
    }

    pub fn mul_poly(&self, c: &HPoly) -> Self {
        DerivationFamily {
            degree: self.degree + c.degree(),
            g: self.g.clone().map(|s| s.mul_poly(c)),
        }
    }

    pub fn mul_series(&self, c: &HSeries) -> Self {
        DerivationFamily {
            degree: self.degree + c.degree(),
            g: self.g.clone().map(|s| s.mul(c)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DerivationFamily {
            degree: self.degree,
            g: self.g.clone().map(|s| s.scale(c)),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        DerivationFamily {
            degree: self.degree,
            g: self.g.clone().map(|s| s.truncate(order)),
        }
    }

    /// `X × G(t)`.
    pub fn minors(&self) -> [HSeries; 3] {
        let order = self.order();
        let x = std::array::from_fn(|i| HSeries::from_poly(&HPoly::var(i), order));
        series_cross(&x, &self.g)
    }
}

/// `∂_{F(t),H(t)}` with coefficients `∇F(t) × ∇H(t)`.
pub fn jacobi_family(f: &HSeries, h: &HSeries) -> Result<DerivationFamily> {
    let degree = (f.degree() + h.degree()).saturating_sub(2);
    DerivationFamily::new(degree, series_cross(&grad(f), &grad(h)))
}

/// Wronskian over the series ring: `det (∂(t)^i (v_j(t)))`.
pub fn wronskian_family(d: &DerivationFamily, basis: &[HSeries]) -> HSeries {
    assert!(!basis.is_empty());
    let n = basis.len();
    let order = basis
        .iter()
        .map(HSeries::order)
        .min()
        .unwrap()
        .min(d.order());
    let deg = basis[0].degree();
    let mut rows: Vec<Vec<HSeries>> = vec![basis.iter().map(|b| b.truncate(order)).collect()];
    for i in 1..n {
        let next: Vec<HSeries> = rows[i - 1].iter().map(|p| d.apply(p)).collect();
        rows.push(next);
    }
    let one = HSeries::from_poly(&HPoly::one(), order);
    let w = determinant(&rows, &one);
    let target = n as i64 * deg as i64 + binom2(n) as i64 * (d.degree() as i64 - 1);
    if w.is_zero() {
        HSeries::zero(target.max(0) as u32, order)
    } else {
        w
    }
}

/// Outcome of the `F(t) | ∂(t)(F(t))` test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDerivationCheck {
    pub holds: bool,
    /// First `t`-order where the division failed.
    pub failing_order: Option<usize>,
    /// Order to which the test was carried out.
    pub order: usize,
}

pub fn is_f_derivation(d: &DerivationFamily, f: &HSeries) -> FDerivationCheck {
    let image = d.apply(f);
    let order = image.order().min(f.order());
    match image.divide(f) {
        Ok(_) => FDerivationCheck {
            holds: true,
            failing_order: None,
            order,
        },
        Err(Error::InexactDivision { order: k }) => FDerivationCheck {
            holds: false,
            failing_order: Some(k),
            order,
        },
        Err(_) => FDerivationCheck {
            holds: false,
            failing_order: Some(0),
            order,
        },
    }
}

/// `∇̄(F0) = Σ e_i (Π_{j≠i} E_j) ∇E_i`, which is `(Π E_i) ∇(F0) / F0` up to
/// the scalar of the factorization.
pub fn reduced_gradient(fac: &Factorization) -> [HPoly; 3] {
    let factors = fac.factors();
    let total: u32 = factors.iter().map(|(e, _)| e.degree()).sum();
    let mut out: [HPoly; 3] = std::array::from_fn(|_| HPoly::zero(total.saturating_sub(1)));
    for (i, (ei, mult)) in factors.iter().enumerate() {
        let others = factors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(HPoly::one(), |acc, (_, (ej, _))| &acc * ej);
        let w = others.scale(&Rational::from_integer((*mult).into()));
        let g = ei.gradient();
        for v in 0..3 {
            out[v] = &out[v] + &(&w * &g[v]);
        }
    }
    out
}

/// The reduced `F(t)`-derivation `det [∇̄F0; ∇H(t); ∇]` with
/// `H(t) = (F(t) - F0)/t`.
pub fn reduced_derivation(f: &HSeries, fac: &Factorization) -> Result<DerivationFamily> {
    if f.at_zero().is_zero() {
        return Err(Error::Invalid("the special fibre F(0) is zero".into()));
    }
    fac.validate(f.at_zero())?;
    if f.order() < 2 {
        return Err(Error::TruncationExhausted {
            order: f.order(),
            context: "the reduced derivation needs F(t) to order 2".into(),
        });
    }
    let h = f
        .sub(&HSeries::from_poly(f.at_zero(), f.order()))
        .div_t(1)?;
    let order = h.order();
    let bar = reduced_gradient(fac).map(|c| HSeries::from_poly(&c, order));
    let degree = (bar[0].degree() + h.degree()).saturating_sub(1);
    let g = series_cross(&bar, &grad(&h));
    DerivationFamily::new(degree, g).map_err(|e| match e {
        Error::DegenerateDerivation(_) => Error::DegenerateDerivation(
            "reduced derivation vanishes (is the family constant?)".into(),
        ),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::gcd_with_curve;
    use crate::polyring::parse_poly;

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    fn fam(ps: &[&str], order: usize) -> HSeries {
        let polys: Vec<HPoly> = ps.iter().map(|s| h(s)).collect();
        HSeries::from_family(&polys, order).unwrap()
    }

    #[test]
    fn reduced_derivation_of_the_cuspidal_family() {
        let f = fam(&["X0^2*X1", "X2^3"], 6);
        let fac = Factorization::new(vec![(h("X0"), 2), (h("X1"), 1)]).unwrap();
        let d = reduced_derivation(&f, &fac).unwrap();
        let d0 = d.at_zero();
        assert_eq!(
            d0.coeffs(),
            &[h("3*X0*X2^2"), h("-6*X1*X2^2"), HPoly::zero(2)]
        );
        assert!(is_f_derivation(&d, &f).holds);
        assert_eq!(gcd_with_curve(&d0, &h("X0^2*X1")), HPoly::one());
    }

    #[test]
    fn jacobi_families_are_f_derivations() {
        let f = fam(&["X0*X1*X2", "X2^3 - X0^3", "X1^2*X0"], 5);
        let hh = fam(&["X0 + 2*X1 - X2"], 5);
        let d = jacobi_family(&f, &hh).unwrap();
        assert!(d.apply(&f).is_zero());
        assert!(is_f_derivation(&d, &f).holds);
    }

    #[test]
    fn non_derivation_is_reported() {
        let d = DerivationFamily::constant(
            &Derivation::raw([HPoly::zero(0), HPoly::zero(0), HPoly::one()]).unwrap(),
            3,
        );
        let check = is_f_derivation(&d, &fam(&["X2^2"], 3));
        assert!(!check.holds);
        assert_eq!(check.failing_order, Some(0));
    }

    #[test]
    fn constant_family_has_no_reduced_derivation() {
        let f = fam(&["X0*X1 - X2^2"], 4);
        let fac = Factorization::new(vec![(h("X0*X1 - X2^2"), 1)]).unwrap();
        assert!(matches!(
            reduced_derivation(&f, &fac),
            Err(Error::DegenerateDerivation(_))
        ));
    }
}
