//! Projective equivalence modulo a curve, for polynomials and derivations,
//! over the rationals and over truncated Laurent series in `t`.
//!
//! For `δ = ∂1 - a ∂2` with coefficient vector `G` one has the identity
//! `X_i δ = G_i ε + Σ_j (X_i G_j - X_j G_i) ∂_j`. Hence `L δ ∈ F·Der + S·ε`
//! for every linear form `L` iff `F` divides the three minors of `[X; G]`.
//! Minors are linear in `a`, so the search for `a` reduces to comparing
//! canonical remainders modulo `F`.

use num_traits::Zero;

use super::derivation::Derivation;
use super::family::DerivationFamily;
use crate::polyring::{HPoly, Rational};
use crate::powerseries::HSeries;

/// Explicit data for `L(∂1 - a∂2) = F ∂_L + N_L ε`, `L = X0, X1, X2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivWitness {
    pub a: Rational,
    pub n: [HPoly; 3],
    /// `None` when the `F ∂_L` summand is absent (its degree would be negative).
    pub partials: [Option<Derivation>; 3],
}

fn flatten(polys: &[HPoly]) -> Vec<Rational> {
    polys.iter().flat_map(HPoly::coeff_vector).collect()
}

/// Smallest nonzero `a` with `u = a w`, or `Some(1)` when both vanish.
fn proportion(u: &[Rational], w: &[Rational]) -> Option<Rational> {
    let pivot = w.iter().position(|x| !x.is_zero());
    match pivot {
        None => u.iter().all(Zero::is_zero).then(|| crate::polyring::rat(1)),
        Some(j) => {
            let a = &u[j] / &w[j];
            if a.is_zero() {
                return None;
            }
            u.iter().zip(w).all(|(x, y)| *x == &a * y).then_some(a)
        }
    }
}

/// `G ≡ a H (mod F)` with `a ≠ 0`; returns `a`.
pub fn poly_proj_equiv(g: &HPoly, h: &HPoly, f: &HPoly) -> Option<Rational> {
    if !g.is_zero() && !h.is_zero() && g.degree() != h.degree() {
        return None;
    }
    let d = if g.is_zero() { h.degree() } else { g.degree() };
    let rg = g.rem(f).with_degree(d);
    let rh = h.rem(f).with_degree(d);
    proportion(&flatten(&[rg]), &flatten(&[rh]))
}

/// Scalar `a ≠ 0` with `∂1 ≡_F a ∂2`, if any.
pub fn proj_equiv_check(d1: &Derivation, d2: &Derivation, f: &HPoly) -> Option<Rational> {
    proj_equiv_witness(d1, d2, f).map(|w| w.a)
}

pub fn proj_equiv_witness(d1: &Derivation, d2: &Derivation, f: &HPoly) -> Option<EquivWitness> {
    if !d1.is_zero() && !d2.is_zero() && d1.degree() != d2.degree() {
        return None;
    }
    let m = if d1.is_zero() { d2.degree() } else { d1.degree() };
    let r1: Vec<HPoly> = d1.minors().iter().map(|x| x.rem(f).with_degree(m + 1)).collect();
    let r2: Vec<HPoly> = d2.minors().iter().map(|x| x.rem(f).with_degree(m + 1)).collect();
    let a = proportion(&flatten(&r1), &flatten(&r2))?;
    let delta = d1.sub(&d2.scale(&a));
    let g = delta.coeffs();
    let x: [HPoly; 3] = std::array::from_fn(HPoly::var);
    let mut partials: [Option<Derivation>; 3] = [None, None, None];
    let mut ns: [HPoly; 3] = std::array::from_fn(|_| HPoly::zero(m));
    for i in 0..3 {
        let n_l = g[i].clone().with_degree(m);
        let has_partial = m + 1 >= f.degree();
        let mut rest: [HPoly; 3] = std::array::from_fn(|_| HPoly::zero(m + 1));
        if has_partial {
            let qdeg = m + 1 - f.degree();
            let mut q: [HPoly; 3] = std::array::from_fn(|_| HPoly::zero(qdeg));
            for j in 0..3 {
                let minor = &(&x[i] * &g[j]) - &(&x[j] * &g[i]);
                q[j] = minor.with_degree(m + 1).div_exact(f)?.with_degree(qdeg);
            }
            let part = Derivation::raw_unchecked(qdeg, q);
            for j in 0..3 {
                rest[j] = (f * &part.coeffs()[j]).with_degree(m + 1);
            }
            partials[i] = Some(part);
        }
        // verify L δ = F ∂_L + N_L ε coefficientwise
        for j in 0..3 {
            let lhs = (&x[i] * &g[j]).with_degree(m + 1);
            let rhs = &rest[j] + &(&n_l * &x[j]).with_degree(m + 1);
            if lhs != rhs {
                return None;
            }
        }
        ns[i] = n_l;
    }
    Some(EquivWitness {
        a,
        n: ns,
        partials,
    })
}

/// Canonical remainder of `P(t)` modulo `F(t)` in `S[[t]]`, computed order by
/// order from division by `F(0)`. Zero iff `F(t) | P(t)` to the order.
pub fn series_rem(p: &HSeries, f: &HSeries) -> HSeries {
    let n = p.order().min(f.order());
    let f0 = f.at_zero();
    assert!(!f0.is_zero(), "remainder modulo a series with F(0) = 0");
    let qdeg = p.degree().saturating_sub(f.degree());
    let mut q: Vec<HPoly> = Vec::with_capacity(n);
    let mut r: Vec<HPoly> = Vec::with_capacity(n);
    for k in 0..n {
        let mut lhs = p.coeff(k).clone();
        for i in 1..=k {
            let fi = f.coeff(i);
            if fi.is_zero() || q[k - i].is_zero() {
                continue;
            }
            lhs = &lhs - &(fi * &q[k - i]);
        }
        let (qk, rk) = lhs.div_rem(f0);
        q.push(qk.with_degree(qdeg));
        r.push(rk.with_degree(p.degree()));
    }
    HSeries::new(p.degree(), r, n)
}

/// Result of testing `U(t) = a(t) W(t)` for some `a(t) ∈ Q((t))^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesEquiv {
    pub holds: bool,
    /// Number of `t`-orders compared.
    pub verified_order: usize,
    /// `t`-valuation of `a(t)`, when determined.
    pub scalar_valuation: Option<i64>,
    pub scalar_leading: Option<Rational>,
    pub reason: Option<String>,
}

impl SeriesEquiv {
    fn fail(reason: impl Into<String>, verified_order: usize) -> Self {
        SeriesEquiv {
            holds: false,
            verified_order,
            scalar_valuation: None,
            scalar_leading: None,
            reason: Some(reason.into()),
        }
    }
}

fn vector_series(parts: &[HSeries]) -> Vec<Vec<Rational>> {
    let n = parts.iter().map(HSeries::order).min().unwrap();
    (0..n)
        .map(|k| parts.iter().flat_map(|s| s.coeff(k).coeff_vector()).collect())
        .collect()
}

fn series_proportion(u: &[Vec<Rational>], w: &[Vec<Rational>]) -> SeriesEquiv {
    let val = |s: &[Vec<Rational>]| s.iter().position(|v| v.iter().any(|x| !x.is_zero()));
    let n = u.len().min(w.len());
    match (val(u), val(w)) {
        (None, None) => SeriesEquiv {
            holds: true,
            verified_order: n,
            scalar_valuation: None,
            scalar_leading: None,
            reason: None,
        },
        (Some(_), None) | (None, Some(_)) => {
            SeriesEquiv::fail("exactly one remainder vanishes to the stored order", n)
        }
        (Some(v1), Some(v2)) => {
            let uu = &u[v1..];
            let ww = &w[v2..];
            let len = uu.len().min(ww.len());
            let j = ww[0].iter().position(|x| !x.is_zero()).unwrap();
            let mut b: Vec<Rational> = Vec::with_capacity(len);
            for k in 0..len {
                let mut acc = uu[k][j].clone();
                for i in 1..=k {
                    acc -= &b[k - i] * &ww[i][j];
                }
                b.push(acc / &ww[0][j]);
            }
            if b[0].is_zero() {
                return SeriesEquiv::fail("proportionality scalar vanishes", 0);
            }
            for k in 0..len {
                for c in 0..uu[k].len() {
                    let mut s = Rational::zero();
                    for i in 0..=k {
                        if !b[k - i].is_zero() && !ww[i][c].is_zero() {
                            s += &b[k - i] * &ww[i][c];
                        }
                    }
                    if s != uu[k][c] {
                        return SeriesEquiv::fail(format!("remainders not proportional at relative order {k}"), k);
                    }
                }
            }
            SeriesEquiv {
                holds: true,
                verified_order: len,
                scalar_valuation: Some(v1 as i64 - v2 as i64),
                scalar_leading: Some(b[0].clone()),
                reason: None,
            }
        }
    }
}

/// `G(t) ≡ a(t) H(t) (mod F(t))` in `S((t))`, to the available order.
pub fn series_poly_equiv(g: &HSeries, h: &HSeries, f: &HSeries) -> SeriesEquiv {
    if !g.is_zero() && !h.is_zero() && g.degree() != h.degree() {
        return SeriesEquiv::fail("degrees differ", 0);
    }
    let rg = series_rem(g, f);
    let rh = series_rem(h, f);
    series_proportion(&vector_series(&[rg]), &vector_series(&[rh]))
}

/// `∂1(t) ≡_{F(t)} a(t) ∂2(t)` in `S((t))`, to the available order.
pub fn series_derivation_equiv(
    d1: &DerivationFamily,
    d2: &DerivationFamily,
    f: &HSeries,
) -> SeriesEquiv {
    if d1.degree() != d2.degree() {
        return SeriesEquiv::fail("derivation degrees differ", 0);
    }
    let r1: Vec<HSeries> = d1.minors().iter().map(|m| series_rem(m, f)).collect();
    let r2: Vec<HSeries> = d2.minors().iter().map(|m| series_rem(m, f)).collect();
    series_proportion(&vector_series(&r1), &vector_series(&r2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foliation::jacobi_derivation;
    use crate::polyring::{linalg, parse_poly, rat};

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    /// Dense solve of `L(∂1 - a∂2) = F ∂_L + N_L ε` for `L = X0, X1, X2`
    /// jointly in `(a, N_L, ∂_L)`; returns whether it is solvable and the
    /// value of `a` if it is determined by the system.
    fn dense_solve(d1: &Derivation, d2: &Derivation, f: &HPoly) -> (bool, Option<Rational>) {
        let m = d1.degree();
        let nmon = HPoly::monomials(m).len();
        let pdeg = (m + 1) as i64 - f.degree() as i64;
        let pmon = if pdeg >= 0 { HPoly::monomials(pdeg as u32).len() } else { 0 };
        let eq_mon = HPoly::monomials(m + 1);
        // unknowns: a, then for each L: N_L (nmon), ∂_L (3*pmon)
        let per_l = nmon + 3 * pmon;
        let cols = 1 + 3 * per_l;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for l in 0..3 {
            let x = HPoly::var(l);
            for j in 0..3 {
                let lhs1 = (&x * &d1.coeffs()[j]).with_degree(m + 1);
                let lhs2 = (&x * &d2.coeffs()[j]).with_degree(m + 1);
                for e in &eq_mon {
                    // lhs1 - a lhs2 - F ∂_L[j] - N_L X_j = 0
                    let mut row = vec![Rational::zero(); cols];
                    row[0] = lhs2.coeff(e);
                    let base = 1 + l * per_l;
                    for (k, nm) in HPoly::monomials(m).iter().enumerate() {
                        let mono = HPoly::monomial(*nm, rat(1));
                        row[base + k] = (&mono * &HPoly::var(j)).coeff(e);
                    }
                    if pdeg >= 0 {
                        for (k, pm) in HPoly::monomials(pdeg as u32).iter().enumerate() {
                            let mono = HPoly::monomial(*pm, rat(1));
                            row[base + nmon + j * pmon + k] = (&mono * f).coeff(e);
                        }
                    }
                    rows.push(row);
                    rhs.push(lhs1.coeff(e));
                }
            }
        }
        match linalg::solve(&rows, &rhs) {
            None => (false, None),
            Some(sol) => {
                // a is determined iff e_0 is not in the row space's kernel
                let ker = linalg::nullspace(&rows, cols);
                let determined = ker.iter().all(|v| v[0].is_zero());
                (true, determined.then(|| sol[0].clone()))
            }
        }
    }

    #[test]
    fn jacobi_pairs_differ_by_the_degree_ratio() {
        let p = h("X0^2*X1 - X2^3 + X0*X1*X2");
        let q1 = h("X0 + 2*X1 - X2");
        let q2 = h("X1 - 3*X2 + X0");
        let d1 = jacobi_derivation(&p, &q1).unwrap().mul_poly(&q2);
        let d2 = jacobi_derivation(&p, &q2).unwrap().mul_poly(&q1);
        let w = proj_equiv_witness(&d1, &d2, &p).unwrap();
        assert_eq!(w.a, rat(1));
        let (ok, a) = dense_solve(&d1, &d2, &p);
        assert!(ok);
        assert_eq!(a, Some(rat(1)));
    }

    #[test]
    fn unequal_degrees_give_the_degree_ratio() {
        let p = h("X0*X1 - X2^2");
        let q1 = h("X0 + X1 + X2");
        let q2 = h("X0^2 - X1*X2 + 2*X1^2");
        let d1 = jacobi_derivation(&p, &q1).unwrap().mul_poly(&q2);
        let d2 = jacobi_derivation(&p, &q2).unwrap().mul_poly(&q1);
        assert_eq!(proj_equiv_check(&d1, &d2, &p), Some(rat_frac(1, 2)));
        let (ok, a) = dense_solve(&d1, &d2, &p);
        assert!(ok);
        assert_eq!(a, Some(rat_frac(1, 2)));
    }

    use crate::polyring::rat_frac;

    #[test]
    fn trivial_and_infeasible_cases() {
        let f = h("X0^2 + X1*X2");
        let d = jacobi_derivation(&f, &h("X1")).unwrap();
        assert_eq!(proj_equiv_check(&d, &d, &f), Some(rat(1)));
        assert_eq!(
            proj_equiv_check(&Derivation::coordinate(2), &Derivation::euler(), &h("X0")),
            None
        );
        // same degree, no solution
        let e = Derivation::raw([h("X1"), h("X2"), h("X0")]).unwrap();
        let g = Derivation::raw([h("X2"), h("0"), h("X1")]).unwrap();
        assert_eq!(proj_equiv_check(&e, &g, &h("X0")), None);
        assert_eq!(dense_solve(&e, &g, &h("X0")).0, false);
    }

    #[test]
    fn polynomial_equivalence() {
        let f = h("X0*X1 - X2^2");
        let g = &h("3*X0^2 + X1*X2") + &f.scale(&rat(5));
        assert_eq!(poly_proj_equiv(&g, &h("X0^2 + 1/3*X1*X2"), &f), Some(rat(3)));
        assert_eq!(poly_proj_equiv(&h("X0^2"), &h("X1^2"), &f), None);
    }

    #[test]
    fn series_remainders_detect_divisibility() {
        let f = HSeries::from_family(&[h("X0*X1"), h("X2^2")], 5).unwrap();
        let a = HSeries::from_family(&[h("X0 + X2"), h("X1")], 5).unwrap();
        assert!(series_rem(&f.mul(&a), &f).is_zero());
        let g = f.mul(&a).add(&HSeries::from_poly(&h("X2^3"), 5).mul_t(1).truncate(5));
        assert!(!series_rem(&g, &f).is_zero());
        // G = t·H + F·A is proportional to H with a(t) = t
        let hh = HSeries::from_poly(&h("X1^3 + X0*X2^2"), 5);
        let g2 = hh.mul_t(1).truncate(5).add(&f.mul(&a));
        let eq = series_poly_equiv(&g2, &hh, &f);
        assert!(eq.holds);
        assert_eq!(eq.scalar_valuation, Some(1));
    }
}
