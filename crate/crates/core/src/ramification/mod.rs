//! Ramification of linear systems on plane curves: finiteness, the cycle
//! `R_P(V)`, pencils of lines through a point and the dual-curve slice.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cycles::{cycle_degree, CycleExpr, CycleReport, Term};
use crate::error::{Error, Result};
use crate::foliation::{jacobi_derivation, wronskian};
use crate::polyring::{gcd, is_squarefree, linalg, rat, HPoly, Rational};

/// `V ⊂ S_d` of projective rank `r`, given by an independent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    degree: u32,
    basis: Vec<HPoly>,
}

impl LinearSystem {
    pub fn new(basis: Vec<HPoly>) -> Result<Self> {
        let first = basis
            .first()
            .ok_or_else(|| Error::Invalid("empty linear system".into()))?;
        let degree = first.degree();
        for b in &basis {
            if b.is_zero() {
                return Err(Error::DependentInput("basis contains the zero form".into()));
            }
            if b.degree() != degree {
                return Err(Error::NonHomogeneous {
                    first: degree,
                    second: b.degree(),
                });
            }
        }
        let rows: Vec<Vec<Rational>> = basis.iter().map(HPoly::coeff_vector).collect();
        if linalg::rank(&rows) < basis.len() {
            return Err(Error::DependentInput(
                "basis of the linear system is linearly dependent".into(),
            ));
        }
        Ok(LinearSystem { degree, basis })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Projective rank `r` (the basis has `r + 1` elements).
    pub fn rank(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn basis(&self) -> &[HPoly] {
        &self.basis
    }
}

/// Does some nonzero member of `V` vanish on the whole curve `E = 0`?
/// Solves `Σ c_k V_k = E·G` exactly in the unknowns `c` and `G`.
pub fn is_degenerate_on(e: &HPoly, v: &LinearSystem) -> bool {
    let d = v.degree();
    if e.degree() > d {
        return false;
    }
    let mons = HPoly::monomials(d);
    let mut cols: Vec<Vec<Rational>> = v.basis().iter().map(HPoly::coeff_vector).collect();
    for m in HPoly::monomials(d - e.degree()) {
        cols.push((e * &HPoly::monomial(m, rat(1))).coeff_vector());
    }
    // rows are monomials of degree d, columns are unknowns
    let matrix: Vec<Vec<Rational>> = (0..mons.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    !linalg::nullspace(&matrix, cols.len()).is_empty()
}

/// Finiteness of `R_P(V)`: `P` square-free and `V` nondegenerate on every
/// component. Uses the linear-algebra test on `P` and on each supplied
/// factor, plus the Wronskian criterion `gcd(W_{∂_{P,Q}}(V), P) = 1`, which
/// also sees components that are not defined over the rationals.
pub fn is_finite_ramification(p: &HPoly, v: &LinearSystem) -> bool {
    is_finite_ramification_with(p, v, &[])
}

pub fn is_finite_ramification_with(p: &HPoly, v: &LinearSystem, factors: &[HPoly]) -> bool {
    if p.is_zero() || p.degree() == 0 || !is_squarefree(p) {
        return false;
    }
    if is_degenerate_on(p, v) || factors.iter().any(|e| is_degenerate_on(e, v)) {
        return false;
    }
    wronskian_criterion(p, v)
}

/// `gcd(W_{∂_{P,Q}}(V), P) = 1` for a linear form `Q` prime to `P`.
pub fn wronskian_criterion(p: &HPoly, v: &LinearSystem) -> bool {
    let q = aux_line(p);
    let Ok(d) = jacobi_derivation(p, &q) else {
        return false;
    };
    let w = wronskian(&d, v.basis());
    !w.is_zero() && gcd(&w, p).degree() == 0
}

/// First of a fixed list of lines that is prime to `P`.
pub(crate) fn aux_line(p: &HPoly) -> HPoly {
    let candidates = [[1, 2, 3], [1, -1, 2], [2, 1, -1], [1, 3, -2], [3, -2, 1], [1, 0, 0]];
    for c in candidates {
        let l = HPoly::linear(&c.map(rat));
        if gcd(&l, p).degree() == 0 {
            return l;
        }
    }
    HPoly::var(0)
}

/// `R_P(V)` as a one-term cycle.
pub fn ramification_cycle(p: &HPoly, v: &LinearSystem) -> Result<CycleExpr> {
    CycleExpr::ramification(p, v.basis(), rat(1))
}

fn kernel_of_point(r: &[Rational; 3]) -> Result<[HPoly; 2]> {
    if r.iter().all(Zero::is_zero) {
        return Err(Error::Invalid("the point (0:0:0) is not projective".into()));
    }
    let ker = linalg::nullspace(&[r.to_vec()], 3);
    let lines: Vec<HPoly> = ker
        .iter()
        .map(|k| HPoly::linear(&[k[0].clone(), k[1].clone(), k[2].clone()]))
        .collect();
    Ok([lines[0].clone(), lines[1].clone()])
}

/// Pencil of lines through `R`. The first attempt is the echelon basis of
/// the lines through `R`; later attempts take pseudorandom bases. A basis is
/// rejected when one of its lines divides a polynomial in `avoid`.
pub fn pencil_through_point(r: &[Rational; 3], avoid: &[HPoly], seed: u64) -> Result<LinearSystem> {
    let [l1, l2] = kernel_of_point(r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 200;
    for attempt in 0..ATTEMPTS {
        let (a, b) = if attempt == 0 {
            (l1.clone(), l2.clone())
        } else {
            let mut draw = || rat(rng.gen_range(-4..=4));
            let (c11, c12, c21, c22) = (draw(), draw(), draw(), draw());
            if (&c11 * &c22 - &c12 * &c21).is_zero() {
                continue;
            }
            (
                &l1.scale(&c11) + &l2.scale(&c12),
                &l1.scale(&c21) + &l2.scale(&c22),
            )
        };
        let bad = |l: &HPoly| avoid.iter().any(|f| !f.is_zero() && f.divisible_by(l));
        if bad(&a) || bad(&b) {
            continue;
        }
        return LinearSystem::new(vec![a, b]);
    }
    Err(Error::Exhausted {
        attempts: ATTEMPTS,
        context: "no pencil basis through the point avoids the given curves".into(),
    })
}

/// Pseudorandom rational point off every curve in `avoid`.
pub fn general_point(avoid: &[HPoly], seed: u64) -> Result<[Rational; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 500;
    for _ in 0..ATTEMPTS {
        let pt: [Rational; 3] = std::array::from_fn(|_| rat(rng.gen_range(-9..=9)));
        if pt.iter().all(Zero::is_zero) {
            continue;
        }
        if avoid.iter().all(|f| f.is_zero() || !f.eval(&pt).is_zero()) {
            return Ok(pt);
        }
    }
    Err(Error::Exhausted {
        attempts: ATTEMPTS,
        context: "no rational point off the given curves".into(),
    })
}

/// The limit ramification cycle of a pencil through `R`, read as the slice
/// of the limit dual curve by the dual line `R^∨`: each `m·R_E` term stands
/// for `m·E^∨`, each point `P` of the rest for `P^∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSliceReport {
    pub point_cycle: CycleExpr,
    pub component_duals: Vec<(HPoly, Rational)>,
    pub pencil_point: [Rational; 3],
}

#[derive(Serialize)]
struct DualSliceJson {
    pencil_point: Vec<String>,
    component_duals: Vec<ComponentDualJson>,
    point_cycle: CycleReport,
    points: Vec<PointJson>,
    slice_degree: String,
}

#[derive(Serialize)]
struct ComponentDualJson {
    curve: String,
    multiplicity: String,
}

#[derive(Serialize)]
struct PointJson {
    multiplicity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    intersection: [String; 2],
}

/// `(x0:x1:x2)` with the last nonzero coordinate 1, for two distinct lines.
pub fn line_intersection_point(l1: &HPoly, l2: &HPoly) -> Option<[Rational; 3]> {
    if l1.degree() != 1 || l2.degree() != 1 {
        return None;
    }
    let a: [Rational; 3] = std::array::from_fn(|i| l1.coeff(&unit(i)));
    let b: [Rational; 3] = std::array::from_fn(|i| l2.coeff(&unit(i)));
    let p: [Rational; 3] = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    let k = p.iter().rposition(|c| !c.is_zero())?;
    let s = p[k].clone();
    Some(p.map(|c| c / &s))
}

fn unit(i: usize) -> [u32; 3] {
    let mut e = [0; 3];
    e[i] = 1;
    e
}

pub fn fmt_point(p: &[Rational; 3]) -> String {
    let c: Vec<String> = p.iter().map(crate::polyring::fmt_rational).collect();
    format!("({})", c.join(":"))
}

impl DualSliceReport {
    /// Degree of the point part, the intersection number with `R^∨`
    /// contributed by dual lines of points.
    pub fn slice_degree(&self) -> Rational {
        cycle_degree(&self.point_cycle)
    }

    /// `Σ m·E^∨ + Σ m·P^∨`, with explicit points where both curves are lines.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = self
            .component_duals
            .iter()
            .map(|(c, m)| format!("{}·({c})^∨", crate::polyring::fmt_rational(m)))
            .collect();
        for (m, t) in self.point_cycle.terms() {
            let m = crate::polyring::fmt_rational(m);
            match t {
                Term::Intersection(p, q) => match line_intersection_point(p, q) {
                    Some(pt) => parts.push(format!("{m}·{}^∨", fmt_point(&pt))),
                    None => parts.push(format!("{m}·[{p}·{q}]^∨")),
                },
                Term::Ram(p, _) => parts.push(format!("{m}·R({p})^∨")),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fr = crate::polyring::fmt_rational;
        let points = self
            .point_cycle
            .terms()
            .iter()
            .filter_map(|(m, t)| match t {
                Term::Intersection(p, q) => Some(PointJson {
                    multiplicity: fr(m),
                    point: line_intersection_point(p, q).map(|pt| pt.iter().map(fr).collect()),
                    intersection: [p.to_string(), q.to_string()],
                }),
                Term::Ram(..) => None,
            })
            .collect();
        let j = DualSliceJson {
            pencil_point: self.pencil_point.iter().map(fr).collect(),
            component_duals: self
                .component_duals
                .iter()
                .map(|(c, m)| ComponentDualJson {
                    curve: c.to_string(),
                    multiplicity: fr(m),
                })
                .collect(),
            point_cycle: CycleReport::from_cycle(&self.point_cycle),
            points,
            slice_degree: fr(&self.slice_degree()),
        };
        serde_json::to_value(j).expect("slice report serializes")
    }
}

/// Splits a limit cycle of the pencil through `r` into component duals and
/// dual lines of points.
pub fn dual_slice(limit_cycle: &CycleExpr, r: &[Rational; 3]) -> DualSliceReport {
    let mut comps = Vec::new();
    let mut points = CycleExpr::zero();
    for (m, t) in limit_cycle.canonical().terms() {
        match t {
            Term::Ram(p, _) => comps.push((p.clone(), m.clone())),
            Term::Intersection(p, q) => {
                points = points.add(&CycleExpr::intersection(p, q, m.clone()).expect("canonical terms are finite"))
            }
        }
    }
    DualSliceReport {
        point_cycle: points.canonical(),
        component_duals: comps,
        pencil_point: r.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    fn sys(ps: &[&str]) -> LinearSystem {
        LinearSystem::new(ps.iter().map(|s| h(s)).collect()).unwrap()
    }

    #[test]
    fn finiteness_examples() {
        assert!(is_finite_ramification(&h("X0*X1"), &sys(&["X0 + X1", "X0 - X1 + X2"])));
        assert!(!is_finite_ramification(&h("X0^2"), &sys(&["X0 + X1", "X2"])));
        assert!(!is_finite_ramification(&h("X0*X1"), &sys(&["X0", "X2"])));
        assert!(is_degenerate_on(&h("X0"), &sys(&["X0", "X2"])));
    }

    #[test]
    fn both_finiteness_routes_agree() {
        let cases = [
            ("X0*X1 - X2^2", vec!["X0", "X1"], vec![]),
            ("X0*X1 - X2^2", vec!["X0*X1 - X2^2", "X0^2"], vec![]),
            ("X0^3 + X1^3 + X2^3", vec!["X0", "X1", "X2"], vec![]),
            ("X0*X1*X2", vec!["X0 + X1 + X2", "X0 - X2"], vec!["X0", "X1", "X2"]),
            ("X0*X1*X2", vec!["X1*X2", "X0^2"], vec!["X0", "X1", "X2"]),
            ("X0*X1*X2", vec!["X1*X2 + X0^2", "X0^2 - X1*X0"], vec!["X0", "X1", "X2"]),
        ];
        for (p, v, comps) in cases {
            let (p, v) = (h(p), sys(&v));
            let comps: Vec<HPoly> = comps.iter().map(|s| h(s)).collect();
            let linear = is_squarefree(&p)
                && !is_degenerate_on(&p, &v)
                && !comps.iter().any(|e| is_degenerate_on(e, &v));
            assert_eq!(wronskian_criterion(&p, &v), linear, "{p} {:?}", v.basis());
            assert_eq!(is_finite_ramification_with(&p, &v, &comps), linear);
        }
        // a degenerate component over Q(i): X0^2 + X1^2 = (X0 + iX1)(X0 - iX1)
        let p = h("(X0^2 + X1^2)*X2");
        let v = sys(&["X0^2 + X1^2", "X2^2"]);
        assert!(!wronskian_criterion(&p, &v));
        assert!(!is_finite_ramification(&p, &v));
    }

    #[test]
    fn dependent_basis_is_rejected() {
        assert!(matches!(
            LinearSystem::new(vec![h("X0"), h("2*X0")]),
            Err(Error::DependentInput(_))
        ));
    }

    #[test]
    fn pencils() {
        let o = [rat(0), rat(0), rat(1)];
        let p = pencil_through_point(&o, &[], 1).unwrap();
        assert_eq!(p.basis(), &[h("X0"), h("X1")]);
        let q = pencil_through_point(&o, &[h("X0")], 1).unwrap();
        for l in q.basis() {
            assert!(l.eval(&o).is_zero());
            assert!(!h("X0").divisible_by(l));
        }
        let one = [rat(1), rat(1), rat(1)];
        for l in pencil_through_point(&one, &[], 3).unwrap().basis() {
            assert!(l.eval(&one).is_zero());
        }
    }

    #[test]
    fn cycle_degrees_match_the_class() {
        let conic = ramification_cycle(&h("X0*X1 - X2^2"), &sys(&["X0 + X2", "X1 - 3*X2"])).unwrap();
        assert_eq!(cycle_degree(&conic), rat(2));
        let cubic = ramification_cycle(&h("X0^3 + X1^3 + X2^3"), &sys(&["X0 - X2", "X1 + 2*X2"])).unwrap();
        assert_eq!(cycle_degree(&cubic), rat(6));
    }

    #[test]
    fn dual_slice_of_the_degenerate_conic() {
        let c = CycleExpr::intersection(&h("X0"), &h("X1"), rat(2)).unwrap();
        let r = [rat(1), rat(2), rat(3)];
        let d = dual_slice(&c, &r);
        assert_eq!(d.render(), "2·(0:0:1)^∨");
        assert_eq!(d.slice_degree(), rat(2));
        let j = d.to_json();
        assert_eq!(j["points"][0]["point"][2], "1");
        let cubic = ramification_cycle(&h("X0^3 + X1^3 + X2^3"), &sys(&["X0 - X2", "X1 + 2*X2"])).unwrap();
        let d = dual_slice(&cubic, &r);
        assert_eq!(d.component_duals.len(), 1);
        assert!(d.point_cycle.is_empty());
    }
}
