#![allow(dead_code)]

use rand::Rng;
use ramlimit::limits::{
    limit_general_direction, limit_quasi_adapted, limit_quasi_general, limit_zeuthen,
    limit_zeuthen_adapted, Factorization, LimitOutcome, ZeuthenShape,
};
use ramlimit::polyring::{parse_poly, rat, HPoly};
use ramlimit::powerseries::{HSeries, VFamily};
use ramlimit::Error;

pub fn h(s: &str) -> HPoly {
    parse_poly(s).unwrap()
}

/// Random form with small integer coefficients; never zero.
pub fn random_form(rng: &mut impl Rng, degree: u32) -> HPoly {
    loop {
        let mut terms = Vec::new();
        for e in HPoly::monomials(degree) {
            if rng.gen_bool(0.7) {
                terms.push((e, rat(rng.gen_range(-4..=4))));
            }
        }
        let p = HPoly::from_terms(degree, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub struct Case {
    pub name: &'static str,
    pub family: Vec<HPoly>,
    pub fac: Factorization,
    pub zeuthen: Option<ZeuthenShape>,
    pub basis: Vec<HPoly>,
}

pub const ORDER: usize = 16;

impl Case {
    pub fn f(&self) -> HSeries {
        HSeries::from_family(&self.family, 2 * ORDER).unwrap()
    }

    pub fn v(&self) -> VFamily {
        VFamily::constant(&self.basis, 2 * ORDER).unwrap()
    }

    /// Every engine whose hypotheses hold, labelled.
    pub fn outcomes(&self) -> Vec<(&'static str, LimitOutcome)> {
        let (f, v) = (self.f(), self.v());
        let mut runs: Vec<(&'static str, Result<LimitOutcome, Error>)> = vec![
            ("general", limit_general_direction(&f, &self.fac, &v)),
            ("quasi", limit_quasi_general(&f, &self.fac, &v)),
            ("quasi-adapted", limit_quasi_adapted(&f, &self.fac, &v)),
        ];
        if let Some(z) = &self.zeuthen {
            runs.push(("zeuthen", limit_zeuthen(&f, z, &v, ORDER)));
            runs.push(("zeuthen-adapted", limit_zeuthen_adapted(&f, z, &v, ORDER)));
        }
        let out: Vec<_> = runs
            .into_iter()
            .filter_map(|(name, r)| match r {
                Ok(o) => Some((name, o)),
                Err(Error::Hypothesis(_)) => None,
                Err(e) => panic!("{}: engine {name} failed: {e}", self.name),
            })
            .collect();
        assert!(!out.is_empty(), "{}: no engine applies", self.name);
        out
    }
}

fn case(name: &'static str, family: &[&str], fac: &[(&str, u32)], basis: &[&str]) -> Case {
    Case {
        name,
        family: family.iter().map(|s| h(s)).collect(),
        fac: Factorization::new(fac.iter().map(|(e, m)| (h(e), *m)).collect()).unwrap(),
        zeuthen: None,
        basis: basis.iter().map(|s| h(s)).collect(),
    }
}

fn zeuthen_case(name: &'static str, family: &[&str], e: &str, a: &str, basis: &[&str]) -> Case {
    let shape = ZeuthenShape::new(Factorization::new(vec![(h(e), 1)]).unwrap(), h(a)).unwrap();
    Case {
        name,
        family: family.iter().map(|s| h(s)).collect(),
        fac: shape.fibre_factorization(),
        zeuthen: Some(shape),
        basis: basis.iter().map(|s| h(s)).collect(),
    }
}

const PENCIL: [&str; 2] = ["X0 - 2*X2", "X1 + 3*X2"];

/// The degeneration corpus shared by the acceptance criteria.
pub fn corpus() -> Vec<Case> {
    vec![
        case("conic to line pair", &["X0*X1", "X2^2"], &[("X0", 1), ("X1", 1)], &["X0 - X2", "X1 + 2*X2"]),
        case("cuspidal cubic", &["X0^2*X1", "X2^3"], &[("X0", 2), ("X1", 1)], &PENCIL),
        case(
            "quasi-general cubic",
            &["X0^2*X1", "X1*X2^2 + X0*X1^2"],
            &[("X0", 2), ("X1", 1)],
            &PENCIL,
        ),
        case(
            "three concurrent lines, one doubled",
            &["X0^2*X1*(X0 + X1)", "X2^4"],
            &[("X0", 2), ("X1", 1), ("X0 + X1", 1)],
            &PENCIL,
        ),
        case(
            "smooth constant conic",
            &["X0^2 + X1^2 - X2^2", "0"],
            &[("X0^2 + X1^2 - X2^2", 1)],
            &PENCIL,
        ),
        case(
            "cuspidal cubic, net of conics",
            &["X0^2*X1", "X2^3"],
            &[("X0", 2), ("X1", 1)],
            &["X0^2 + X1*X2", "X1^2 - X2^2", "X0*X2 + X1^2 + X2^2"],
        ),
        case(
            "conic and line, net of conics",
            &["X0*(X1^2 - X0*X2)", "X2^3"],
            &[("X0", 1), ("X1^2 - X0*X2", 1)],
            &["X0^2 + X1*X2", "X1^2 - X2^2", "X0*X2 + X1^2 + X2^2"],
        ),
        zeuthen_case("zeuthen type 1", &["X2^2*X0", "X1^3"], "X2", "X0", &PENCIL),
        zeuthen_case("zeuthen type 2", &["X2^2*X0", "X2*X1^2", "X1^3"], "X2", "X0", &PENCIL),
        zeuthen_case(
            "zeuthen type 3",
            &["X0*X2^2", "2*X0*X1*X2", "X0*X1^2", "X1^3"],
            "X2",
            "X0",
            &PENCIL,
        ),
        zeuthen_case(
            "zeuthen type 1, quartic with two lines",
            &["X2^2*X0*X1", "X0^4 + X1^4 + X0*X1*X2^2"],
            "X2",
            "X0*X1",
            &PENCIL,
        ),
    ]
}
