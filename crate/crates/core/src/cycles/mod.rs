//! Formal 0-cycles on the plane and their realization as Chow binary forms.
//!
//! A cycle is a rational combination of intersection terms `[P·Q]` and
//! ramification terms `R_P(V)`. Equality is decided by projecting from a
//! generic point: the cycle over `Q̄` becomes a binary form over `Q`.

mod chow;
mod report;

pub use chow::{chow_equal, cycles_equal, random_aux_linear, realize_chow, ChowForm};
pub use report::{CycleReport, TermReport};

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::foliation::binom2;
use crate::polyring::{gcd, linalg, rat, HPoly, Rational};
use crate::ramification::{is_finite_ramification, LinearSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    /// `[P·Q]` with `gcd(P, Q) = 1`.
    Intersection(HPoly, HPoly),
    /// `R_P(V)` with `P` square-free and `V` nondegenerate on `P = 0`.
    Ram(HPoly, Vec<HPoly>),
}

impl Term {
    pub fn degree(&self) -> Rational {
        match self {
            Term::Intersection(p, q) => rat((p.degree() * q.degree()) as i64),
            Term::Ram(p, v) => {
                let p_deg = p.degree() as i64;
                let d = v[0].degree() as i64;
                let n = v.len() as i64;
                let c = binom2(v.len()) as i64;
                rat(p_deg * n * d + c * p_deg * (p_deg - 3))
            }
        }
    }

    /// Sort key: equal keys mean equal terms after normalization.
    fn key(&self) -> String {
        match self {
            Term::Intersection(p, q) => format!("I|{p}|{q}"),
            Term::Ram(p, v) => {
                let basis: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("R|{p}|{}", basis.join(";"))
            }
        }
    }

    fn normalized(&self) -> Term {
        match self {
            Term::Intersection(p, q) => {
                let (p, q) = (p.monic(), q.monic());
                if p.to_string() <= q.to_string() {
                    Term::Intersection(p, q)
                } else {
                    Term::Intersection(q, p)
                }
            }
            Term::Ram(p, v) => Term::Ram(p.monic(), echelon_basis(v)),
        }
    }
}

/// Reduced row echelon basis of the span, a canonical representative.
pub(crate) fn echelon_basis(v: &[HPoly]) -> Vec<HPoly> {
    let d = v[0].degree();
    let mut rows: Vec<Vec<Rational>> = v.iter().map(|p| p.clone().with_degree(d).coeff_vector()).collect();
    let piv = linalg::rref(&mut rows);
    rows.truncate(piv.len());
    rows.iter().map(|r| HPoly::from_coeff_vector(d, r)).collect()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Intersection(p, q) => write!(f, "[({p})·({q})]"),
            Term::Ram(p, v) => {
                let basis: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "R_({p})<{}>", basis.join(", "))
            }
        }
    }
}

/// Formal rational combination of terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleExpr {
    terms: Vec<(Rational, Term)>,
}

impl CycleExpr {
    pub fn zero() -> Self {
        CycleExpr::default()
    }

    /// `m·[P·Q]`; requires `gcd(P, Q) = 1`.
    pub fn intersection(p: &HPoly, q: &HPoly, m: Rational) -> Result<Self> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::Invalid("intersection with the zero polynomial".into()));
        }
        if gcd(p, q).degree() > 0 {
            return Err(Error::Hypothesis(format!(
                "intersection [{p}·{q}] is not finite: gcd = {}",
                gcd(p, q)
            )));
        }
        Ok(CycleExpr {
            terms: vec![(m, Term::Intersection(p.clone(), q.clone()))],
        })
    }

    /// `m·R_P(V)`; requires finite ramification.
    pub fn ramification(p: &HPoly, basis: &[HPoly], m: Rational) -> Result<Self> {
        let v = LinearSystem::new(basis.to_vec())?;
        if !is_finite_ramification(p, &v) {
            return Err(Error::InfiniteRamification(format!(
                "the ramification of the system on {p} is not finite"
            )));
        }
        Ok(CycleExpr {
            terms: vec![(m, Term::Ram(p.clone(), basis.to_vec()))],
        })
    }

    pub fn terms(&self) -> &[(Rational, Term)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CycleExpr) -> CycleExpr {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        CycleExpr { terms }
    }

    pub fn scale(&self, c: &Rational) -> CycleExpr {
        CycleExpr {
            terms: self
                .terms
                .iter()
                .map(|(m, t)| (m * c, t.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycleExpr) -> CycleExpr {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Merge equal terms, normalize each term, drop zero multiplicities and
    /// terms of degree 0 (empty cycles), and sort.
    pub fn canonical(&self) -> CycleExpr {
        let mut merged: BTreeMap<String, (Rational, Term)> = BTreeMap::new();
        for (m, t) in &self.terms {
            if t.degree().is_zero() {
                continue;
            }
            let t = t.normalized();
            let entry = merged
                .entry(t.key())
                .or_insert_with(|| (Rational::zero(), t.clone()));
            entry.0 += m;
        }
        CycleExpr {
            terms: merged
                .into_values()
                .filter(|(m, _)| !m.is_zero())
                .collect(),
        }
    }

    /// Multiplicity `m_k` changed to `m_k + delta`.
    pub fn perturbed(&self, k: usize, delta: &Rational) -> CycleExpr {
        let mut c = self.clone();
        c.terms[k].0 += delta;
        c
    }

    /// Least common denominator of the multiplicities.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        self.terms
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, (m, _)| acc.lcm(m.denom()))
    }
}

impl fmt::Display for CycleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, t)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "({})·{t}", crate::polyring::fmt_rational(m))?;
            }
        }
        Ok(())
    }
}

/// `Σ m·deg(term)`.
pub fn cycle_degree(c: &CycleExpr) -> Rational {
    c.terms.iter().map(|(m, t)| m * t.degree()).sum()
}
