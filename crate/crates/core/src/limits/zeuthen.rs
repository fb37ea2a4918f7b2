use serde_json::json;

use super::{check_family, check_nondegenerate, degree_check, Check, Engine, Factorization, LimitOutcome};
use crate::cycles::CycleExpr;
use crate::error::{Error, Result};
use crate::foliation::binom2;
use crate::polyring::{gcd, is_squarefree, rat, rat_frac, HPoly};
use crate::powerseries::{HSeries, VFamily};

/// Declared split `F(0) = E²A` with `E = Π E_j` and `A` square-free,
/// coprime to `E` (possibly constant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeuthenShape {
    e: Factorization,
    a: HPoly,
}

impl ZeuthenShape {
    pub fn new(e: Factorization, a: HPoly) -> Result<Self> {
        if e.factors().iter().any(|(_, m)| *m != 1) {
            return Err(Error::InvalidFactorization(
                "the factors of E are declared with multiplicity 1".into(),
            ));
        }
        if a.is_zero() {
            return Err(Error::InvalidFactorization("A is zero".into()));
        }
        if a.degree() > 0 {
            if !is_squarefree(&a) {
                return Err(Error::InvalidFactorization(format!("A = {a} is not square-free")));
            }
            let g = gcd(&e.radical(), &a);
            if g.degree() > 0 {
                return Err(Error::InvalidFactorization(format!(
                    "E and A are not coprime: gcd = {g}"
                )));
            }
        }
        Ok(ZeuthenShape { e, a })
    }

    pub fn e_factors(&self) -> &Factorization {
        &self.e
    }

    pub fn a(&self) -> &HPoly {
        &self.a
    }

    pub fn e(&self) -> HPoly {
        self.e.radical()
    }

    /// `E²A`.
    pub fn special_fibre(&self) -> HPoly {
        &self.e().pow(2) * &self.a
    }

    /// `Π E_j² · A` as a factorization (`A` dropped when constant).
    pub fn fibre_factorization(&self) -> Factorization {
        let mut f: Vec<(HPoly, u32)> = self.e.factors().iter().map(|(e, _)| (e.clone(), 2)).collect();
        if self.a.degree() > 0 {
            f.push((self.a.clone(), 1));
        }
        Factorization::new(f).expect("validated blocks")
    }

    /// `B_j = E²A / E_j²`.
    pub fn b(&self, e_j: &HPoly) -> HPoly {
        self.special_fibre()
            .div_exact(&e_j.pow(2))
            .expect("E_j is a factor of E")
    }

    /// Scale `F(t)` so that `F(0) = E²A` exactly.
    pub fn normalize(&self, f: &HSeries) -> Result<HSeries> {
        let c = self.fibre_factorization().validate(f.at_zero())?;
        Ok(f.scale(&c))
    }
}

/// Discriminants of `F(t)` for one factor `E_j` and the resulting type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeuthenData {
    pub factor: HPoly,
    pub b: HPoly,
    pub n: usize,
    /// `Δ_1, ..., Δ_n`.
    pub deltas: Vec<HPoly>,
    /// `Δ'_i = Δ_i / E_j` for `i < n`.
    pub reduced: Vec<HPoly>,
}

impl ZeuthenData {
    /// `Δ_{n_j}`.
    pub fn last(&self) -> &HPoly {
        self.deltas.last().unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "factor": self.factor.to_string(),
            "B": self.b.to_string(),
            "type": self.n,
            "discriminants": self.deltas.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "reduced": self.reduced.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Type search: `Δ_1 = F_1` and
/// `Δ_k = B^{k-1} F_k - Σ_{i+r=k} (Δ'_i/2)(Δ'_r/2)`, stopping at the first
/// `Δ_n` not divisible by `E_j`. `F` must satisfy `F(0) = E²A`.
pub fn zeuthen_discriminants(
    f: &HSeries,
    e_j: &HPoly,
    shape: &ZeuthenShape,
    max_order: usize,
) -> Result<ZeuthenData> {
    if *f.at_zero() != shape.special_fibre() {
        return Err(Error::Invalid("F(0) must equal E²A exactly".into()));
    }
    let b = shape.b(e_j);
    let no_type = || Error::NoType {
        factor: e_j.to_string(),
        max_order,
    };
    let quarter = rat_frac(1, 4);
    let mut deltas = vec![f.coeff(1).clone()];
    let mut reduced: Vec<HPoly> = Vec::new();
    loop {
        let n = deltas.len();
        let Some(q) = deltas[n - 1].div_exact(e_j) else {
            return Ok(ZeuthenData {
                factor: e_j.clone(),
                b,
                n,
                deltas,
                reduced,
            });
        };
        reduced.push(q);
        let k = n + 1;
        if k > max_order || k >= f.order() {
            return Err(no_type());
        }
        let mut next = &b.pow(k as u32 - 1) * f.coeff(k);
        for i in 1..k {
            let prod = &reduced[i - 1] * &reduced[k - i - 1];
            next = &next - &prod.scale(&quarter);
        }
        deltas.push(next);
    }
}

/// Checks `B^{2n+1} F ≡ (E B^{n+1} + Σ_{i≤n+1} Δ'_i B^{n+1-i} t^i / 2)²
/// + B^n Δ_{n+2} t^{n+2}  (mod t^{n+3})`, for `n + 2 ≤ n_j`.
pub fn zeuthen_congruence_holds(f: &HSeries, data: &ZeuthenData, n: usize) -> bool {
    assert!(n + 2 <= data.n, "congruence needs Δ_(n+2)");
    let order = n + 3;
    if f.order() < order {
        return false;
    }
    let b = &data.b;
    let s = square_root_part(&data.factor, b, &data.reduced, n, order);
    let lhs = f.truncate(order).mul_poly(&b.pow(2 * n as u32 + 1));
    let tail = HSeries::from_poly(&(&b.pow(n as u32) * &data.deltas[n + 1]), order).mul_t(n + 2);
    lhs.sub(&s.mul(&s)).sub(&tail).is_zero()
}

/// `E B^{n+1} + Σ_{i=1}^{n+1} Δ'_i B^{n+1-i} t^i / 2`.
pub(crate) fn square_root_part(
    e: &HPoly,
    b: &HPoly,
    reduced: &[HPoly],
    n: usize,
    order: usize,
) -> HSeries {
    let half = rat_frac(1, 2);
    let lead = e * &b.pow(n as u32 + 1);
    let mut coeffs = vec![lead.clone()];
    for i in 1..=n + 1 {
        coeffs.push((&reduced[i - 1] * &b.pow((n + 1 - i) as u32)).scale(&half).with_degree(lead.degree()));
    }
    HSeries::new(lead.degree(), coeffs, order)
}

/// Per-factor discriminant data, with the congruence checks logged.
pub(crate) fn all_discriminants(
    f: &HSeries,
    shape: &ZeuthenShape,
    max_order: usize,
    transcript: &mut Vec<Check>,
) -> Result<Vec<ZeuthenData>> {
    let mut out = Vec::new();
    for (e_j, _) in shape.e_factors().factors() {
        let data = zeuthen_discriminants(f, e_j, shape, max_order)?;
        transcript.push(Check::new(
            format!("type of F(t) for {e_j}"),
            true,
            format!("n = {}, Δ_n = {}", data.n, data.last()),
        ));
        for n in 0..data.n.saturating_sub(1) {
            let ok = zeuthen_congruence_holds(f, &data, n);
            transcript.push(Check::new(
                format!("discriminant congruence for {e_j} mod t^{}", n + 3),
                ok,
                if ok { "exact" } else { "fails" },
            ));
            if !ok {
                return Err(Error::Construction(format!(
                    "discriminant congruence fails for {e_j} at n = {n}"
                )));
            }
        }
        out.push(data);
    }
    Ok(out)
}

/// Limit ramification cycle of a family `E²A + F_1 t + ...`:
/// `2 Σ R_{E_j} + R_A + C·2[E·A] + C Σ [Δ_{n_j}·E_j] - C Σ (n_j-2)[B_j·E_j]`.
pub fn limit_zeuthen(
    f: &HSeries,
    shape: &ZeuthenShape,
    v: &VFamily,
    max_order: usize,
) -> Result<LimitOutcome> {
    check_family(f)?;
    let mut transcript = Vec::new();
    let f = shape.normalize(f)?;
    transcript.push(Check::new("F(0) = E²A", true, format!("E = {}, A = {}", shape.e(), shape.a())));
    let data = all_discriminants(&f, shape, max_order, &mut transcript)?;

    let a = shape.a();
    let mut comps: Vec<HPoly> = shape.e_factors().factors().iter().map(|(e, _)| e.clone()).collect();
    if a.degree() > 0 {
        comps.push(a.clone());
    }
    check_nondegenerate(&comps, v, &mut transcript)?;

    let v0 = v.at_zero();
    let c = binom2(v.rank() + 1) as i64;
    let mut out = CycleExpr::zero();
    for d in &data {
        out = out.add(&CycleExpr::ramification(&d.factor, &v0, rat(2))?);
    }
    if a.degree() > 0 {
        out = out.add(&CycleExpr::ramification(a, &v0, rat(1))?);
        out = out.add(&CycleExpr::intersection(&shape.e(), a, rat(2 * c))?);
    }
    if c != 0 {
        for d in &data {
            out = out.add(&CycleExpr::intersection(d.last(), &d.factor, rat(c))?);
            let k = d.n as i64 - 2;
            if k != 0 {
                out = out.add(&CycleExpr::intersection(&d.b, &d.factor, rat(-c * k))?);
            }
        }
    }
    let cycle = out.canonical();
    transcript.push(degree_check(&cycle, f.degree(), v));
    Ok(LimitOutcome {
        engine: Engine::Zeuthen,
        cycle,
        transcript,
        zeuthen: data,
        verified_order: None,
        warnings: shape.e_factors().reducibility_warnings(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{cycle_degree, cycles_equal};
    use crate::polyring::parse_poly;

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    fn fam(ps: &[&str], order: usize) -> HSeries {
        HSeries::from_family(&ps.iter().map(|s| h(s)).collect::<Vec<_>>(), order).unwrap()
    }

    fn shape() -> ZeuthenShape {
        ZeuthenShape::new(Factorization::new(vec![(h("X2"), 1)]).unwrap(), h("X0")).unwrap()
    }

    #[test]
    fn types_one_two_three() {
        let s = shape();
        let t1 = zeuthen_discriminants(&fam(&["X2^2*X0", "X1^3"], 8), &h("X2"), &s, 8).unwrap();
        assert_eq!(t1.n, 1);
        let f2 = fam(&["X2^2*X0", "X2*X1^2", "X1^3"], 8);
        let t2 = zeuthen_discriminants(&f2, &h("X2"), &s, 8).unwrap();
        assert_eq!(t2.n, 2);
        assert_eq!(t2.reduced, vec![h("X1^2")]);
        assert_eq!(*t2.last(), h("X0*X1^3 - 1/4*X1^4"));
        assert!(zeuthen_congruence_holds(&f2, &t2, 0));
        let f3 = fam(&["X0*X2^2", "2*X0*X1*X2", "X0*X1^2", "X1^3"], 8);
        let t3 = zeuthen_discriminants(&f3, &h("X2"), &s, 8).unwrap();
        assert_eq!(t3.n, 3);
        assert_eq!(*t3.last(), h("X0^2*X1^3"));
        assert!(zeuthen_congruence_holds(&f3, &t3, 0));
        assert!(zeuthen_congruence_holds(&f3, &t3, 1));
    }

    #[test]
    fn no_type_is_reported() {
        // (X2 + t X1)^2 X0 is a square over every order
        let f = fam(&["X0*X2^2", "2*X0*X1*X2", "X0*X1^2"], 10);
        assert!(matches!(
            zeuthen_discriminants(&f, &h("X2"), &shape(), 6),
            Err(Error::NoType { .. })
        ));
    }

    #[test]
    fn congruence_fails_on_wrong_discriminant() {
        let f2 = fam(&["X2^2*X0", "X2*X1^2", "X1^3"], 8);
        let mut t2 = zeuthen_discriminants(&f2, &h("X2"), &shape(), 8).unwrap();
        t2.deltas[1] = h("X0*X1^3");
        assert!(!zeuthen_congruence_holds(&f2, &t2, 0));
    }

    #[test]
    fn type_one_cycle() {
        let f = fam(&["X2^2*X0", "X1^3"], 8);
        let v = VFamily::constant(&[h("X0 + 2*X2"), h("X1 - X2")], 8).unwrap();
        let out = limit_zeuthen(&f, &shape(), &v, 8).unwrap();
        assert_eq!(cycle_degree(&out.cycle), rat(6));
        let expect = CycleExpr::intersection(&h("X0"), &h("X2"), rat(3))
            .unwrap()
            .add(&CycleExpr::intersection(&h("X1"), &h("X2"), rat(3)).unwrap());
        assert!(cycles_equal(&out.cycle, &expect, 3, 4).unwrap());
    }

    #[test]
    fn scaled_special_fibre_is_normalized() {
        let f = fam(&["3*X2^2*X0", "3*X1^3"], 8);
        let v = VFamily::constant(&[h("X0 + 2*X2"), h("X1 - X2")], 8).unwrap();
        let a = limit_zeuthen(&f, &shape(), &v, 8).unwrap();
        let b = limit_zeuthen(&fam(&["X2^2*X0", "X1^3"], 8), &shape(), &v, 8).unwrap();
        assert_eq!(a.cycle, b.cycle);
    }
}
