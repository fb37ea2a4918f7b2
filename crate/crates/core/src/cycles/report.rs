use serde::{Deserialize, Serialize};

use super::{cycle_degree, CycleExpr, Term};
use crate::error::{Error, Result};
use crate::polyring::{fmt_rational, parse_poly, HPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub mult: String,
    pub kind: String,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none", default)]
    pub q: Option<String>,
    #[serde(rename = "V", skip_serializing_if = "Option::is_none", default)]
    pub v: Option<Vec<String>>,
}

/// Serializable view of a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub terms: Vec<TermReport>,
    pub degree: String,
}

impl CycleReport {
    pub fn from_cycle(c: &CycleExpr) -> Self {
        let terms = c
            .terms()
            .iter()
            .map(|(m, t)| match t {
                Term::Intersection(p, q) => TermReport {
                    mult: fmt_rational(m),
                    kind: "intersection".into(),
                    p: p.to_string(),
                    q: Some(q.to_string()),
                    v: None,
                },
                Term::Ram(p, v) => TermReport {
                    mult: fmt_rational(m),
                    kind: "ramification".into(),
                    p: p.to_string(),
                    q: None,
                    v: Some(v.iter().map(ToString::to_string).collect()),
                },
            })
            .collect();
        CycleReport {
            terms,
            degree: fmt_rational(&cycle_degree(c)),
        }
    }

    /// Rebuilds and revalidates the cycle.
    pub fn to_cycle(&self) -> Result<CycleExpr> {
        let mut c = CycleExpr::zero();
        for t in &self.terms {
            let m: Rational = t
                .mult
                .parse()
                .map_err(|_| Error::Invalid(format!("bad multiplicity {:?}", t.mult)))?;
            let p = parse_poly(&t.p)?;
            let term = match t.kind.as_str() {
                "intersection" => {
                    let q = t
                        .q
                        .as_deref()
                        .ok_or_else(|| Error::Invalid("intersection term without Q".into()))?;
                    CycleExpr::intersection(&p, &parse_poly(q)?, m)?
                }
                "ramification" => {
                    let v = t
                        .v
                        .as_ref()
                        .ok_or_else(|| Error::Invalid("ramification term without V".into()))?;
                    let basis = v.iter().map(|s| parse_poly(s)).collect::<Result<Vec<HPoly>>>()?;
                    CycleExpr::ramification(&p, &basis, m)?
                }
                other => return Err(Error::Invalid(format!("unknown term kind {other:?}"))),
            };
            c = c.add(&term);
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    #[test]
    fn round_trip() {
        let c = CycleExpr::intersection(&parse_poly("X0").unwrap(), &parse_poly("X1").unwrap(), rat(3))
            .unwrap()
            .add(
                &CycleExpr::ramification(
                    &parse_poly("X0*X1 - X2^2").unwrap(),
                    &[parse_poly("X0").unwrap(), parse_poly("X1").unwrap()],
                    rat(-1) / rat(2),
                )
                .unwrap(),
            );
        let r = CycleReport::from_cycle(&c);
        assert_eq!(r.degree, "2");
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"kind\":\"intersection\""));
        let back: CycleReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_cycle().unwrap(), c);
    }
}
