//! Job files: one JSON document per run, polynomials as strings.
//!
//! ```json
//! {
//!   "family": ["X0*X1", "X2^2"],
//!   "factorization": [{"factor": "X0", "multiplicity": 1}, {"factor": "X1"}],
//!   "zeuthen": {"e": [{"factor": "X2"}], "a": "X0"},
//!   "system": {"pencil": [1, 2, "1/3"]},
//!   "options": {"order": 16, "trials": 3, "seed": 0, "engine": "general"}
//! }
//! ```
//!
//! `options.perturb = {"term": k, "delta": d}` shifts the multiplicity of the
//! `k`-th term of the engine output by `d`; it exists to exercise the
//! mismatch path of `--verify` and is flagged in every report.
//!
//! `system` is `{"basis": [...]}`, `{"pencil": [x0, x1, x2]}` or
//! `{"pencil": "random"}`. Equivalence checks use `family` for the curve and
//! `derivations` for two coefficient triples.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::limits::{Engine, Factorization, ZeuthenShape};
use crate::polyring::{parse_poly, HPoly, Rational};

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub factor: String,
    #[serde(default = "one")]
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeuthenSpec {
    pub e: Vec<FactorSpec>,
    pub a: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Coordinate {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PencilSpec {
    Point([Coordinate; 3]),
    Keyword(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    #[serde(default)]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub pencil: Option<PencilSpec>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    pub order: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub engine: Option<String>,
    /// Self-test of the verifier: shift one multiplicity of the engine
    /// output before it is reported and verified.
    pub perturb: Option<PerturbSpec>,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PerturbSpec {
    pub term: usize,
    pub delta: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub family: Vec<String>,
    #[serde(default)]
    pub factorization: Option<Vec<FactorSpec>>,
    #[serde(default)]
    pub zeuthen: Option<ZeuthenSpec>,
    #[serde(default)]
    pub system: Option<SystemSpec>,
    #[serde(default)]
    pub options: OptionsSpec,
    #[serde(default)]
    pub derivations: Option<Vec<[String; 3]>>,
}

/// The requested linear system before it is placed relative to the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum System {
    Basis(Vec<HPoly>),
    PencilAt([Rational; 3]),
    RandomPencil,
}

/// A parsed and validated job.
#[derive(Clone, Debug)]
pub struct Job {
    pub family: Vec<HPoly>,
    pub factorization: Option<Factorization>,
    pub zeuthen: Option<ZeuthenShape>,
    pub system: Option<System>,
    pub options: OptionsSpec,
    pub engine: Option<Engine>,
    pub derivations: Option<Vec<[HPoly; 3]>>,
}

/// Prefixes the field name to syntax errors, keeping the position.
fn poly(field: &str, text: &str) -> Result<HPoly> {
    parse_poly(text).map_err(|e| match e {
        Error::Syntax { pos, msg } => Error::Syntax {
            pos,
            msg: format!("{msg} (in {field}: {text:?})"),
        },
        other => other,
    })
}

fn coordinate(c: &Coordinate) -> Result<Rational> {
    let p = match c {
        Coordinate::Int(n) => return Ok(crate::polyring::rat(*n)),
        Coordinate::Text(s) => poly("pencil", s)?,
    };
    if p.degree() != 0 {
        return Err(Error::Invalid(format!("pencil coordinate {p} is not a number")));
    }
    Ok(p.coeff(&[0, 0, 0]))
}

fn factors(field: &str, specs: &[FactorSpec]) -> Result<Factorization> {
    let fs = specs
        .iter()
        .map(|s| Ok((poly(field, &s.factor)?, s.multiplicity)))
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(fs)
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: format!("job file line {}: {e}", e.line()),
        })
    }

    pub fn resolve(&self) -> Result<Job> {
        if self.family.is_empty() {
            return Err(Error::Invalid("the family is empty".into()));
        }
        let family = self
            .family
            .iter()
            .enumerate()
            .map(|(i, s)| poly(&format!("family[{i}]"), s))
            .collect::<Result<Vec<_>>>()?;
        let factorization = self
            .factorization
            .as_deref()
            .map(|f| factors("factorization", f))
            .transpose()?;
        let zeuthen = self
            .zeuthen
            .as_ref()
            .map(|z| ZeuthenShape::new(factors("zeuthen.e", &z.e)?, poly("zeuthen.a", &z.a)?))
            .transpose()?;
        let system = self.system.as_ref().map(system).transpose()?;
        let engine = self.options.engine.as_deref().map(str::parse).transpose()?;
        let derivations = self
            .derivations
            .as_ref()
            .map(|ds| {
                ds.iter()
                    .enumerate()
                    .map(|(i, d)| {
                        let f = |k: usize| poly(&format!("derivations[{i}][{k}]"), &d[k]);
                        Ok([f(0)?, f(1)?, f(2)?])
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(Job {
            family,
            factorization,
            zeuthen,
            system,
            options: self.options.clone(),
            engine,
            derivations,
        })
    }
}

fn system(s: &SystemSpec) -> Result<System> {
    match (&s.basis, &s.pencil) {
        (Some(b), None) => Ok(System::Basis(
            b.iter()
                .enumerate()
                .map(|(i, p)| poly(&format!("system.basis[{i}]"), p))
                .collect::<Result<_>>()?,
        )),
        (None, Some(PencilSpec::Point(c))) => Ok(System::PencilAt([
            coordinate(&c[0])?,
            coordinate(&c[1])?,
            coordinate(&c[2])?,
        ])),
        (None, Some(PencilSpec::Keyword(k))) if k == "random" => Ok(System::RandomPencil),
        (None, Some(PencilSpec::Keyword(k))) => Err(Error::Invalid(format!(
            "pencil must be a point or \"random\", got {k:?}"
        ))),
        _ => Err(Error::Invalid("system needs exactly one of basis or pencil".into())),
    }
}
