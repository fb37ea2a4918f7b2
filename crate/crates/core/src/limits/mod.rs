//! Closed-form limits of ramification cycles for one-parameter families of
//! plane curves, and the adaptation machinery behind them.

mod adapted;
mod factorization;
mod general;
mod zeuthen;

pub use adapted::{
    build_zeuthen_adaptation, limit_adapted, limit_quasi_adapted, limit_zeuthen_adapted,
    quasi_adaptation, AdaptationData, AdaptationEntry, AdaptedLimit,
};
pub use factorization::Factorization;
pub use general::{limit_general_direction, limit_quasi_general};
pub use zeuthen::{
    limit_zeuthen, zeuthen_congruence_holds, zeuthen_discriminants, ZeuthenData, ZeuthenShape,
};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cycles::{cycle_degree, CycleExpr, CycleReport};
use crate::error::{Error, Result};
use crate::foliation::binom2;
use crate::polyring::{fmt_rational, rat, HPoly, Rational};
use crate::powerseries::{HSeries, VFamily};
use crate::ramification::{is_finite_ramification, LinearSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    General,
    Quasi,
    Zeuthen,
    Adapted,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Engine::General => "general",
            Engine::Quasi => "quasi",
            Engine::Zeuthen => "zeuthen",
            Engine::Adapted => "adapted",
        };
        f.write_str(s)
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Engine::General),
            "quasi" => Ok(Engine::Quasi),
            "zeuthen" => Ok(Engine::Zeuthen),
            "adapted" => Ok(Engine::Adapted),
            other => Err(Error::Invalid(format!("unknown engine {other:?}"))),
        }
    }
}

/// One hypothesis or consistency check of an engine run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Result of an engine: the limit cycle and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitOutcome {
    pub engine: Engine,
    pub cycle: CycleExpr,
    pub transcript: Vec<Check>,
    pub zeuthen: Vec<ZeuthenData>,
    /// Depth to which series-level hypotheses were checked.
    pub verified_order: Option<usize>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    engine: Engine,
    transcript: &'a [Check],
    #[serde(skip_serializing_if = "Vec::is_empty")]
    zeuthen: Vec<serde_json::Value>,
    cycle: CycleReport,
    degree: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified_order: Option<usize>,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    warnings: &'a [String],
}

impl LimitOutcome {
    pub fn degree(&self) -> Rational {
        cycle_degree(&self.cycle)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = OutcomeJson {
            engine: self.engine,
            transcript: &self.transcript,
            zeuthen: self.zeuthen.iter().map(ZeuthenData::to_json).collect(),
            cycle: CycleReport::from_cycle(&self.cycle),
            degree: fmt_rational(&self.degree()),
            verified_order: self.verified_order,
            warnings: &self.warnings,
        };
        serde_json::to_value(j).expect("outcome serializes")
    }
}

/// `p(r+1)d + C(r+1,2) p(p-3)`, the degree of the ramification cycle of a
/// rank `r` system of degree `d` forms on a degree `p` curve.
pub fn generic_ramification_degree(p: u32, r: usize, d: u32) -> Rational {
    let p = p as i64;
    rat(p * (r as i64 + 1) * d as i64 + binom2(r + 1) as i64 * p * (p - 3))
}

/// Requires `F(t)` to be known through `t^1` with `F(0) ≠ 0`.
pub(crate) fn check_family(f: &HSeries) -> Result<()> {
    if f.at_zero().is_zero() {
        return Err(Error::Invalid("the special fibre F(0) is zero".into()));
    }
    if f.degree() == 0 {
        return Err(Error::Invalid("the family has degree 0".into()));
    }
    if f.order() < 2 {
        return Err(Error::TruncationExhausted {
            order: f.order(),
            context: "the family must be known to order 2".into(),
        });
    }
    Ok(())
}

/// `V(0)` must be nondegenerate on every declared component.
pub(crate) fn check_nondegenerate(
    components: &[HPoly],
    v: &VFamily,
    transcript: &mut Vec<Check>,
) -> Result<LinearSystem> {
    let v0 = LinearSystem::new(v.at_zero())?;
    for e in components {
        let ok = is_finite_ramification(e, &v0);
        transcript.push(Check::new(
            format!("V(0) nondegenerate on {e}"),
            ok,
            if ok { "finite ramification" } else { "some member of V(0) vanishes on a component" },
        ));
        if !ok {
            return Err(Error::Hypothesis(format!(
                "V(0) is degenerate on the component {e}"
            )));
        }
    }
    Ok(v0)
}

pub(crate) fn degree_check(cycle: &CycleExpr, p: u32, v: &VFamily) -> Check {
    let expect = generic_ramification_degree(p, v.rank(), v.degree());
    let got = cycle_degree(cycle);
    Check::new(
        "degree conservation",
        got == expect,
        format!("cycle degree {} vs p(r+1)d + C(r+1,2)p(p-3) = {}", fmt_rational(&got), fmt_rational(&expect)),
    )
}
