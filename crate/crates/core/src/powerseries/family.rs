use num_traits::Zero;

use super::HSeries;
use crate::error::{Error, Result};
use crate::polyring::{linalg, CoordChange, HPoly};

/// A family of linear systems `V(t) ⊂ S_d[[t]]` given by a saturated basis:
/// the constant coefficients are linearly independent.
#[derive(Clone, Debug, PartialEq)]
pub struct VFamily {
    degree: u32,
    basis: Vec<HSeries>,
}

fn constant_matrix(cols: &[HSeries], degree: u32) -> Vec<Vec<crate::polyring::Rational>> {
    // rows = monomials, columns = basis elements
    let vecs: Vec<Vec<_>> = cols
        .iter()
        .map(|c| c.at_zero().clone().with_degree(degree).coeff_vector())
        .collect();
    let n = HPoly::monomials(degree).len();
    (0..n)
        .map(|i| vecs.iter().map(|v| v[i].clone()).collect())
        .collect()
}

impl VFamily {
    /// Wrap a constant linear system.
    pub fn constant(basis: &[HPoly], order: usize) -> Result<Self> {
        let raw: Vec<HSeries> = basis.iter().map(|p| HSeries::from_poly(p, order)).collect();
        saturate_basis(&raw)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `r` in "rank r": one less than the basis size.
    pub fn rank(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn order(&self) -> usize {
        self.basis.iter().map(HSeries::order).min().unwrap_or(0)
    }

    pub fn basis(&self) -> &[HSeries] {
        &self.basis
    }

    /// `V(0)`.
    pub fn at_zero(&self) -> Vec<HPoly> {
        self.basis.iter().map(|s| s.at_zero().clone()).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        VFamily {
            degree: self.degree,
            basis: self.basis.iter().map(|s| s.truncate(order)).collect(),
        }
    }

    pub fn extend_by_zero(&self, order: usize) -> Self {
        VFamily {
            degree: self.degree,
            basis: self.basis.iter().map(|s| s.extend_by_zero(order)).collect(),
        }
    }

    pub fn apply_coord_change(&self, m: &CoordChange) -> Self {
        VFamily {
            degree: self.degree,
            basis: self.basis.iter().map(|s| s.apply_coord_change(m)).collect(),
        }
    }
}

/// Column operations over the rationals and divisions by `t` until the
/// constant coefficients are independent. The output spans the saturation of
/// the `Q[[t]]`-module generated by the input.
pub fn saturate_basis(raw: &[HSeries]) -> Result<VFamily> {
    if raw.is_empty() {
        return Err(Error::Invalid("empty linear system".into()));
    }
    let degree = raw
        .iter()
        .find(|s| !s.is_zero())
        .map(HSeries::degree)
        .ok_or_else(|| Error::DependentInput("every basis element is zero".into()))?;
    for s in raw {
        if !s.is_zero() && s.degree() != degree {
            return Err(Error::Invalid(format!(
                "basis elements have degrees {degree} and {}",
                s.degree()
            )));
        }
    }
    let mut basis: Vec<HSeries> = raw.to_vec();
    loop {
        if let Some(k) = basis.iter().position(HSeries::is_zero) {
            return Err(Error::TruncationExhausted {
                order: basis[k].order(),
                context: format!("basis element {k} vanishes to the stored order; the input may be dependent over Q((t))"),
            });
        }
        let m = constant_matrix(&basis, degree);
        let ker = linalg::nullspace(&m, basis.len());
        let Some(lambda) = ker.first() else {
            return Ok(VFamily { degree, basis });
        };
        let k = lambda.iter().rposition(|c| !c.is_zero()).unwrap();
        let mut comb = HSeries::zero(degree, basis.iter().map(HSeries::order).min().unwrap());
        for (j, l) in lambda.iter().enumerate() {
            if !l.is_zero() {
                comb = comb.add(&basis[j].scale(l));
            }
        }
        if comb.is_zero() {
            return Err(Error::TruncationExhausted {
                order: comb.order(),
                context: "basis is dependent to the stored order".into(),
            });
        }
        basis[k] = comb.div_t(1)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn fam(ps: &[&str], order: usize) -> HSeries {
        let polys: Vec<HPoly> = ps.iter().map(|s| parse_poly(s).unwrap()).collect();
        HSeries::from_family(&polys, order).unwrap()
    }

    #[test]
    fn saturation_examples() {
        let v = saturate_basis(&[fam(&["X0"], 4), fam(&["0", "X0 + X1"], 4)]).unwrap();
        assert_eq!(v.at_zero(), vec![parse_poly("X0").unwrap(), parse_poly("X0 + X1").unwrap()]);

        let w = saturate_basis(&[fam(&["X0"], 4), fam(&["X1"], 4)]).unwrap();
        assert_eq!(w.at_zero(), vec![parse_poly("X0").unwrap(), parse_poly("X1").unwrap()]);

        let bad = saturate_basis(&[fam(&["X0"], 4), fam(&["0", "X0"], 4)]);
        assert!(matches!(
            bad,
            Err(Error::TruncationExhausted { .. }) | Err(Error::DependentInput(_))
        ));
    }

    #[test]
    fn saturation_combines_before_dividing() {
        // [X0 + t X1, X0]: the difference is t X1
        let v = saturate_basis(&[fam(&["X0", "X1"], 4), fam(&["X0"], 4)]).unwrap();
        let v0 = v.at_zero();
        assert_eq!(v0.len(), 2);
        let ranks = linalg::rank(&constant_matrix(v.basis(), 1));
        assert_eq!(ranks, 2);
    }
}
