use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{oracle_limit_auto, OracleResult, DEFAULT_ORDER, ORDER_CAP};
use crate::cycles::{chow_equal, cycle_degree, random_aux_linear, realize_chow, ChowForm, CycleExpr, Term};
use crate::error::Error;
use crate::limits::generic_ramification_degree;
use crate::polyring::{fmt_rational, CoordChange, HPoly};
use crate::powerseries::{HSeries, VFamily};

const REDRAWS: usize = 25;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub n0: usize,
    pub cap: usize,
    /// Used for the first trials in place of random draws.
    pub forced: Vec<CoordChange>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            trials: 3,
            seed: 0,
            n0: DEFAULT_ORDER,
            cap: ORDER_CAP,
            forced: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AllMatch,
    Mismatch,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::AllMatch => "all-match",
            Verdict::Mismatch => "mismatch",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::AllMatch => 0,
            Verdict::Mismatch => 3,
            Verdict::Inconclusive => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub order_used: Option<usize>,
    pub valuation: Option<usize>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    /// Projections discarded as degenerate before this trial's draw.
    #[serde(skip_serializing_if = "is_zero")]
    pub redraws: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub trials: Vec<TrialReport>,
    pub engine_degree: String,
    pub expected_degree: String,
}

impl VerifyReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdict serializes")
    }
}

fn ram_curves(c: &CycleExpr) -> Vec<HPoly> {
    c.terms()
        .iter()
        .filter_map(|(_, t)| match t {
            Term::Ram(p, _) => Some(p.clone()),
            Term::Intersection(..) => None,
        })
        .collect()
}

enum Realized {
    Form(ChowForm),
    NotEffective,
}

/// Compares one engine output against the oracle on `trials` draws of
/// `(M, H)`.
pub fn verify(engine_output: &CycleExpr, f: &HSeries, v: &VFamily, opts: &VerifyOptions) -> VerifyReport {
    verify_all(&[engine_output], f, v, opts).pop().expect("one report")
}

/// Like [`verify`] for several candidate cycles of the same family: each
/// oracle run is shared by all candidates.
pub fn verify_all(
    outputs: &[&CycleExpr],
    f: &HSeries,
    v: &VFamily,
    opts: &VerifyOptions,
) -> Vec<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut curves = vec![f.at_zero().clone()];
    for c in outputs {
        curves.extend(ram_curves(c));
    }
    let mut trials: Vec<Vec<TrialReport>> = vec![Vec::new(); outputs.len()];
    for i in 0..opts.trials {
        let mut redraws = 0;
        let mut forced = opts.forced.get(i).cloned();
        loop {
            let m = forced.take().unwrap_or_else(|| CoordChange::random(rng.gen(), 6));
            let h = random_aux_linear(&curves, &mut rng);
            let failed = |witness: String, redraws| TrialReport {
                order_used: None,
                valuation: None,
                matched: None,
                redraws,
                witness: Some(witness),
            };
            let oracle: OracleResult = match oracle_limit_auto(f, v, &h, &m, opts.n0, opts.cap) {
                Ok(o) => o,
                Err(Error::DegenerateProjection(_)) if redraws < REDRAWS => {
                    redraws += 1;
                    continue;
                }
                Err(e) => {
                    for t in trials.iter_mut() {
                        t.push(failed(format!("oracle: {e}"), redraws));
                    }
                    break;
                }
            };
            let mut forms = Vec::with_capacity(outputs.len());
            let mut degenerate = false;
            for c in outputs {
                match realize_chow(c, &m, &h) {
                    Ok(form) => forms.push(Realized::Form(form)),
                    Err(Error::DegenerateProjection(_)) => degenerate = true,
                    Err(_) => forms.push(Realized::NotEffective),
                }
            }
            if degenerate && redraws < REDRAWS {
                redraws += 1;
                continue;
            }
            if degenerate {
                for t in trials.iter_mut() {
                    t.push(failed("every projection was degenerate".into(), redraws));
                }
                break;
            }
            for (t, form) in trials.iter_mut().zip(forms) {
                let (matched, witness) = match form {
                    Realized::Form(g) if chow_equal(&g, &oracle.chow) => (true, None),
                    Realized::Form(g) => (
                        false,
                        Some(format!(
                            "engine chow {} (power {}) vs oracle chow {}",
                            g.form, g.clearing, oracle.chow.form
                        )),
                    ),
                    Realized::NotEffective => {
                        (false, Some("engine cycle does not realize to a polynomial form".into()))
                    }
                };
                t.push(TrialReport {
                    order_used: Some(oracle.used_order),
                    valuation: Some(oracle.valuation),
                    matched: Some(matched),
                    redraws,
                    witness,
                });
            }
            break;
        }
    }
    let expected = generic_ramification_degree(f.degree(), v.rank(), v.degree());
    outputs
        .iter()
        .zip(trials)
        .map(|(c, trials)| {
            let verdict = if trials.iter().any(|t| t.matched == Some(false)) {
                Verdict::Mismatch
            } else if trials.iter().all(|t| t.matched == Some(true)) {
                Verdict::AllMatch
            } else {
                Verdict::Inconclusive
            };
            VerifyReport {
                verdict,
                trials,
                engine_degree: fmt_rational(&cycle_degree(c)),
                expected_degree: fmt_rational(&expected),
            }
        })
        .collect()
}
