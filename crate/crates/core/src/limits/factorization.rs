use crate::error::{Error, Result};
use crate::polyring::{gcd, is_squarefree, HPoly, MPoly, Rational};

/// Declared factorization `Π E_i^{e_i}` of a special fibre, with pairwise
/// coprime, square-free, nonconstant `E_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(HPoly, u32)>,
}

impl Factorization {
    pub fn new(factors: Vec<(HPoly, u32)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidFactorization("no factors declared".into()));
        }
        for (i, (e, m)) in factors.iter().enumerate() {
            if *m == 0 {
                return Err(Error::InvalidFactorization(format!(
                    "factor {e} has multiplicity 0"
                )));
            }
            if e.degree() == 0 || e.is_zero() {
                return Err(Error::InvalidFactorization(format!("factor {e} is constant")));
            }
            if !is_squarefree(e) {
                return Err(Error::InvalidFactorization(format!(
                    "factor {e} is not square-free"
                )));
            }
            for (f, _) in &factors[..i] {
                if gcd(e, f).degree() > 0 {
                    return Err(Error::InvalidFactorization(format!(
                        "factors {f} and {e} are not coprime"
                    )));
                }
            }
        }
        Ok(Factorization { factors })
    }

    pub fn factors(&self) -> &[(HPoly, u32)] {
        &self.factors
    }

    pub fn product(&self) -> HPoly {
        self.factors
            .iter()
            .fold(HPoly::one(), |acc, (e, m)| &acc * &e.pow(*m))
    }

    /// `Π E_i`, the reduced polynomial.
    pub fn radical(&self) -> HPoly {
        self.factors.iter().fold(HPoly::one(), |acc, (e, _)| &acc * e)
    }

    /// Checks `Π E_i^{e_i} = c · target` and returns `c`.
    pub fn validate(&self, target: &HPoly) -> Result<Rational> {
        let prod = self.product();
        if target.is_zero() || prod.degree() != target.degree() {
            return Err(Error::InvalidFactorization(format!(
                "declared product has degree {} but the target {target} has degree {}",
                prod.degree(),
                target.degree()
            )));
        }
        let c = prod.leading_coeff().unwrap() / target.leading_coeff().unwrap();
        if prod != target.scale(&c) {
            return Err(Error::InvalidFactorization(format!(
                "product of the declared factors is not a multiple of {target}"
            )));
        }
        Ok(c)
    }

    /// Factors that are visibly reducible over the rationals. Type detection
    /// assumes each declared block is irreducible.
    pub fn reducibility_warnings(&self) -> Vec<String> {
        let w: Vec<String> = self
            .factors
            .iter()
            .filter_map(|(e, _)| visible_split(e).map(|why| format!("factor {e} is reducible over Q ({why})")))
            .collect();
        for m in &w {
            log::warn!("{m}");
        }
        w
    }
}

/// A cheap reducibility witness: a variable or a content factor.
fn visible_split(e: &HPoly) -> Option<String> {
    if e.degree() <= 1 {
        return None;
    }
    let p = e.as_mpoly();
    for v in 0..3 {
        if p.terms().all(|(x, _)| x[v] > 0) {
            return Some(format!("divisible by X{v}"));
        }
    }
    for v in 0..3 {
        if p.degree_in(v) == 0 {
            continue;
        }
        let content = p
            .to_univariate(v)
            .iter()
            .filter(|c| !c.is_zero())
            .fold(MPoly::zero(), |acc, c| crate::polyring::mpoly_gcd(&acc, c));
        if !content.is_constant() {
            return Some(format!("content in X{v} is nonconstant"));
        }
    }
    None
}
