use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::job::{Job, System};
use crate::cycles::{random_aux_linear, realize_chow, CycleExpr, CycleReport};
use crate::error::{Error, Result};
use crate::foliation::{proj_equiv_witness, Derivation};
use crate::limits::{
    limit_general_direction, limit_quasi_adapted, limit_quasi_general, limit_zeuthen,
    limit_zeuthen_adapted, Engine, Factorization, LimitOutcome,
};
use crate::oracle::{verify, Verdict, VerifyOptions};
use crate::polyring::{fmt_rational, gcd, is_squarefree, CoordChange, HPoly, Rational};
use crate::powerseries::{HSeries, VFamily};
use crate::ramification::{
    dual_slice, fmt_point, general_point, line_intersection_point, pencil_through_point,
    ramification_cycle, LinearSystem,
};

pub const DEFAULT_ORDER: usize = 16;
pub const DEFAULT_TRIALS: usize = 3;

/// Flag values that override the job's `options`.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub engine: Option<Engine>,
    pub order: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub verify: bool,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub engine: Option<Engine>,
    pub order: usize,
    pub trials: usize,
    pub seed: u64,
    pub verify: bool,
}

impl Settings {
    pub fn new(job: &Job, o: &Overrides) -> Self {
        Settings {
            engine: o.engine.or(job.engine),
            order: o.order.or(job.options.order).unwrap_or(DEFAULT_ORDER).max(2),
            trials: o.trials.or(job.options.trials).unwrap_or(DEFAULT_TRIALS).max(1),
            seed: o.seed.or(job.options.seed).unwrap_or(0),
            verify: o.verify,
        }
    }
}

/// Human text, JSON document and exit code of one command.
#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

fn basis_strings(v: &[HPoly]) -> Vec<String> {
    v.iter().map(HPoly::to_string).collect()
}

/// Places the requested system; pencils avoid the components in `avoid`.
fn linear_system(job: &Job, avoid: &[HPoly], seed: u64) -> Result<(LinearSystem, Option<[Rational; 3]>)> {
    match job.system.as_ref().unwrap_or(&System::RandomPencil) {
        System::Basis(b) => {
            let v = LinearSystem::new(b.clone())?;
            let point = match b.as_slice() {
                [l1, l2] => line_intersection_point(l1, l2),
                _ => None,
            };
            Ok((v, point))
        }
        System::PencilAt(r) => Ok((pencil_through_point(r, avoid, seed)?, Some(r.clone()))),
        System::RandomPencil => {
            let r = general_point(avoid, seed)?;
            Ok((pencil_through_point(&r, avoid, seed)?, Some(r)))
        }
    }
}

const REDRAWS: usize = 25;

/// Chow form of `c` under a seeded random projection, redrawn on degeneracy.
fn chow_report(c: &CycleExpr, curves: &[HPoly], seed: u64) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..REDRAWS {
        let m = CoordChange::random(seed.wrapping_add(attempt as u64), 6);
        let q = random_aux_linear(curves, &mut rng);
        match realize_chow(c, &m, &q) {
            Ok(chow) => {
                return Ok(json!({
                    "coordinate_change": m.rows_as_strings(),
                    "auxiliary": q.to_string(),
                    "form": chow.form.to_string(),
                    "power": chow.clearing,
                }))
            }
            Err(Error::DegenerateProjection(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Exhausted {
        attempts: REDRAWS,
        context: "every projection was degenerate".into(),
    })
}

pub fn cmd_ramification(job: &Job, s: &Settings) -> Result<Report> {
    if job.family.len() != 1 {
        return Err(Error::Invalid(format!(
            "ramification takes a single curve, the family has {} members",
            job.family.len()
        )));
    }
    let p = &job.family[0];
    if p.degree() == 0 {
        return Err(Error::Invalid("the curve is constant".into()));
    }
    if !is_squarefree(p) {
        return Err(Error::Hypothesis(format!("{p} is not square-free")));
    }
    let (v, point) = linear_system(job, &[p.clone()], s.seed)?;
    let cycle = ramification_cycle(p, &v)?;
    let degree = crate::cycles::cycle_degree(&cycle);
    let chow = chow_report(&cycle, &[p.clone()], s.seed)?;
    let mut text = String::new();
    writeln!(text, "curve: {p}").unwrap();
    writeln!(text, "system: <{}>", basis_strings(v.basis()).join(", ")).unwrap();
    writeln!(text, "ramification: {cycle}").unwrap();
    writeln!(text, "degree: {}", fmt_rational(&degree)).unwrap();
    writeln!(text, "chow form: {} (power {})", chow["form"].as_str().unwrap(), chow["power"]).unwrap();
    let json = json!({
        "command": "ramification",
        "curve": p.to_string(),
        "system": basis_strings(v.basis()),
        "pencil_point": point.map(|r| r.iter().map(fmt_rational).collect::<Vec<_>>()),
        "cycle": CycleReport::from_cycle(&cycle),
        "degree": fmt_rational(&degree),
        "chow": chow,
    });
    Ok(Report { text, json, exit: 0 })
}

struct LimitRun {
    family: HSeries,
    v: VFamily,
    system: Vec<HPoly>,
    point: Option<[Rational; 3]>,
    outcome: LimitOutcome,
}

fn default_factorization(job: &Job) -> Result<Factorization> {
    if let Some(f) = &job.factorization {
        return Ok(f.clone());
    }
    if let Some(z) = &job.zeuthen {
        return Ok(z.fibre_factorization());
    }
    let f0 = &job.family[0];
    if is_squarefree(f0) {
        return Factorization::new(vec![(f0.clone(), 1)]);
    }
    Err(Error::Invalid(
        "the special fibre is not square-free: declare a factorization".into(),
    ))
}

fn auto_engine(job: &Job) -> Engine {
    if job.zeuthen.is_some() {
        return Engine::Zeuthen;
    }
    let f1 = job.family.get(1);
    match f1 {
        Some(f1) if !f1.is_zero() && gcd(&job.family[0], f1).degree() == 0 => Engine::General,
        _ => Engine::Quasi,
    }
}

fn run_limit(job: &Job, s: &Settings) -> Result<LimitRun> {
    let engine = s.engine.unwrap_or_else(|| auto_engine(job));
    if job.family.len() < 2 && s.engine.is_none() {
        return Err(Error::Invalid(
            "a limit needs at least F0 and F1, or an explicit --engine for a constant family".into(),
        ));
    }
    let order = (2 * s.order).max(job.family.len());
    let family = HSeries::from_family(&job.family, order)?;
    let fac = default_factorization(job)?;
    let comps: Vec<HPoly> = fac.factors().iter().map(|(e, _)| e.clone()).collect();
    let (v0, point) = linear_system(job, &comps, s.seed)?;
    let v = VFamily::constant(v0.basis(), order)?;
    let zeuthen = || {
        job.zeuthen
            .as_ref()
            .ok_or_else(|| Error::Invalid("the zeuthen engine needs an E/A split (\"zeuthen\")".into()))
    };
    let outcome = match engine {
        Engine::General => limit_general_direction(&family, &fac, &v)?,
        Engine::Quasi => limit_quasi_general(&family, &fac, &v)?,
        Engine::Zeuthen => limit_zeuthen(&family, zeuthen()?, &v, s.order)?,
        Engine::Adapted => match &job.zeuthen {
            Some(z) => limit_zeuthen_adapted(&family, z, &v, s.order)?,
            None => limit_quasi_adapted(&family, &fac, &v)?,
        },
    };
    let mut outcome = outcome;
    if let Some(pt) = job.options.perturb {
        let n = outcome.cycle.canonical().terms().len();
        if pt.term >= n {
            return Err(Error::Invalid(format!(
                "perturb.term = {} but the limit has {n} terms",
                pt.term
            )));
        }
        outcome.cycle = outcome.cycle.canonical().perturbed(pt.term, &crate::polyring::rat(pt.delta));
        outcome.warnings.push(format!(
            "output perturbed for self-test: term {} shifted by {}",
            pt.term, pt.delta
        ));
    }
    Ok(LimitRun {
        family,
        v,
        system: v0.basis().to_vec(),
        point,
        outcome,
    })
}

fn family_string(job: &Job) -> String {
    let mut parts = Vec::new();
    for (i, p) in job.family.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        parts.push(match i {
            0 => format!("({p})"),
            1 => format!("({p})*t"),
            _ => format!("({p})*t^{i}"),
        });
    }
    parts.join(" + ")
}

fn verification(run: &LimitRun, s: &Settings, text: &mut String) -> Option<(Value, i32)> {
    if !s.verify {
        return None;
    }
    let opts = VerifyOptions {
        trials: s.trials,
        seed: s.seed,
        ..VerifyOptions::default()
    };
    let r = verify(&run.outcome.cycle, &run.family, &run.v, &opts);
    writeln!(text, "verification: {} ({} trials)", r.verdict.as_str(), r.trials.len()).unwrap();
    for (i, t) in r.trials.iter().enumerate() {
        if let Some(w) = &t.witness {
            writeln!(text, "  trial {}: {w}", i + 1).unwrap();
        }
    }
    if r.verdict == Verdict::Inconclusive {
        writeln!(text, "  the oracle hit its truncation cap; the result is unverified").unwrap();
    }
    Some((r.to_json(), r.verdict.exit_code()))
}

fn limit_text(job: &Job, run: &LimitRun) -> String {
    let o = &run.outcome;
    let mut text = String::new();
    writeln!(text, "engine: {}", o.engine).unwrap();
    writeln!(text, "family: F(t) = {}", family_string(job)).unwrap();
    writeln!(text, "system: <{}>", basis_strings(&run.system).join(", ")).unwrap();
    if let Some(r) = &run.point {
        writeln!(text, "pencil point: {}", fmt_point(r)).unwrap();
    }
    writeln!(text, "checks:").unwrap();
    for c in &o.transcript {
        let mark = if c.passed { "ok" } else { "FAIL" };
        writeln!(text, "  [{mark}] {} ({})", c.name, c.detail).unwrap();
    }
    for z in &o.zeuthen {
        let deltas: Vec<String> = z.deltas.iter().map(|d| d.to_string()).collect();
        writeln!(text, "zeuthen: factor {} has type {}; Δ = [{}]", z.factor, z.n, deltas.join(", ")).unwrap();
    }
    for w in &o.warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    writeln!(text, "limit: {}", o.cycle).unwrap();
    writeln!(text, "degree: {}", fmt_rational(&o.degree())).unwrap();
    text
}

fn limit_json(command: &str, job: &Job, run: &LimitRun) -> Value {
    let mut j = run.outcome.to_json();
    let obj = j.as_object_mut().expect("outcome is an object");
    obj.insert("command".into(), json!(command));
    obj.insert("family".into(), json!(basis_strings(&job.family)));
    obj.insert("system".into(), json!(basis_strings(&run.system)));
    if let Some(r) = &run.point {
        obj.insert("pencil_point".into(), json!(r.iter().map(fmt_rational).collect::<Vec<_>>()));
    }
    j
}

pub fn cmd_limit(job: &Job, s: &Settings) -> Result<Report> {
    let run = run_limit(job, s)?;
    let mut text = limit_text(job, &run);
    let mut json = limit_json("limit", job, &run);
    let mut exit = 0;
    if let Some((v, code)) = verification(&run, s, &mut text) {
        json["verification"] = v;
        exit = code;
    }
    Ok(Report { text, json, exit })
}

pub fn cmd_dual_limit(job: &Job, s: &Settings) -> Result<Report> {
    let run = run_limit(job, s)?;
    let point = match (&run.point, run.v.rank(), run.v.degree()) {
        (Some(r), 1, 1) => r.clone(),
        _ => {
            return Err(Error::Invalid(
                "dual-limit needs a pencil of lines through a point".into(),
            ))
        }
    };
    let slice = dual_slice(&run.outcome.cycle, &point);
    let mut text = limit_text(job, &run);
    writeln!(text, "lim dual · {}^∨ = {}", fmt_point(&point), slice.render()).unwrap();
    let mut json = limit_json("dual-limit", job, &run);
    json["dual_slice"] = slice.to_json();
    let mut exit = 0;
    if let Some((v, code)) = verification(&run, s, &mut text) {
        json["verification"] = v;
        exit = code;
    }
    Ok(Report { text, json, exit })
}

pub fn cmd_equiv_check(job: &Job, _s: &Settings) -> Result<Report> {
    let f = &job.family[0];
    let ds = job
        .derivations
        .as_ref()
        .filter(|d| d.len() == 2)
        .ok_or_else(|| Error::Invalid("equiv-check needs \"derivations\": two coefficient triples".into()))?;
    let d1 = Derivation::raw(ds[0].clone())?;
    let d2 = Derivation::raw(ds[1].clone())?;
    let w = proj_equiv_witness(&d1, &d2, f);
    let text = match &w {
        Some(w) => format!("equivalent modulo {f}: a = {}\n", fmt_rational(&w.a)),
        None => format!("not equivalent modulo {f}\n"),
    };
    let json = json!({
        "command": "equiv-check",
        "curve": f.to_string(),
        "equivalent": w.is_some(),
        "a": w.as_ref().map(|w| fmt_rational(&w.a)),
        "n": w.as_ref().map(|w| basis_strings(&w.n)),
    });
    Ok(Report { text, json, exit: 0 })
}
