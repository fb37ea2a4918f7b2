//! Multivariate gcd over the rationals by recursive content/primitive-part
//! splitting and a subresultant remainder sequence in the main variable.

use super::mpoly::MPoly;
use super::HPoly;

/// Univariate view: `c[k]` is the coefficient of `v^k`, no trailing zeros.
struct UPoly {
    c: Vec<MPoly>,
}

impl UPoly {
    fn from(p: &MPoly, v: usize) -> Self {
        let mut u = UPoly {
            c: p.to_univariate(v),
        };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(MPoly::is_zero) {
            self.c.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lc(&self) -> &MPoly {
        self.c.last().expect("leading coefficient of zero")
    }

    fn scale(&self, s: &MPoly) -> UPoly {
        let mut u = UPoly {
            c: self.c.iter().map(|x| x * s).collect(),
        };
        u.trim();
        u
    }

    fn div_scalar(&self, s: &MPoly) -> UPoly {
        UPoly {
            c: self
                .c
                .iter()
                .map(|x| x.div_exact(s).expect("subresultant division is exact"))
                .collect(),
        }
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn prem(&self, b: &UPoly) -> UPoly {
        let db = b.deg();
        let lb = b.lc().clone();
        let mut r = UPoly { c: self.c.clone() };
        let mut e = self.deg() as i64 - db as i64 + 1;
        while !r.is_zero() && r.deg() >= db {
            let shift = r.deg() - db;
            let lr = r.lc().clone();
            let mut next: Vec<MPoly> = r.c.iter().map(|x| x * &lb).collect();
            for (k, bk) in b.c.iter().enumerate() {
                let sub = bk * &lr;
                next[k + shift] = &next[k + shift] - &sub;
            }
            r = UPoly { c: next };
            r.trim();
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&lb.pow(e as u32));
        }
        r
    }

    fn content(&self) -> MPoly {
        self.c
            .iter()
            .fold(MPoly::zero(), |acc, x| mgcd(&acc, x))
    }
}

/// Monic gcd of two sparse polynomials (the zero polynomial only when both
/// inputs are zero).
pub fn mgcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    // strip the common monomial factor first, it keeps the PRS small
    let ma = min_exponent(a);
    let mb = min_exponent(b);
    let common = [ma[0].min(mb[0]), ma[1].min(mb[1]), ma[2].min(mb[2])];
    if ma != [0, 0, 0] || mb != [0, 0, 0] {
        let one = super::rat(1);
        let a2 = a.div_exact(&MPoly::monomial(ma, one.clone())).unwrap();
        let b2 = b.div_exact(&MPoly::monomial(mb, one.clone())).unwrap();
        let g = mgcd(&a2, &b2);
        return g.mul_monomial(&common, &one).monic();
    }

    let v = (0..3)
        .max_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), std::cmp::Reverse(v)))
        .unwrap();
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    if da == 0 {
        return mgcd(a, &UPoly::from(b, v).content());
    }
    if db == 0 {
        return mgcd(b, &UPoly::from(a, v).content());
    }
    let ua = UPoly::from(a, v);
    let ub = UPoly::from(b, v);
    let ca = ua.content();
    let cb = ub.content();
    let cont = mgcd(&ca, &cb);
    let pa = ua.div_scalar(&ca);
    let pb = ub.div_scalar(&cb);
    let (mut f, mut g) = if pa.deg() >= pb.deg() { (pa, pb) } else { (pb, pa) };

    let mut gg = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let delta = (f.deg() - g.deg()) as u32;
        let r = f.prem(&g);
        if r.is_zero() {
            break;
        }
        if r.deg() == 0 {
            return cont.monic();
        }
        let divisor = &gg * &h.pow(delta);
        f = g;
        g = r.div_scalar(&divisor);
        gg = f.lc().clone();
        h = if delta == 0 {
            h
        } else {
            gg.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
    }
    let cg = g.content();
    let prim = g.div_scalar(&cg);
    let prim = MPoly::from_univariate(&prim.c, v);
    (&prim * &cont).monic()
}

fn min_exponent(p: &MPoly) -> [u32; 3] {
    let mut m = [u32::MAX; 3];
    for (e, _) in p.terms() {
        for i in 0..3 {
            m[i] = m[i].min(e[i]);
        }
    }
    m
}

/// Gcd of homogeneous polynomials, scaled so its lex-leading coefficient is 1.
/// `gcd(P, 0)` is the normalized `P`.
pub fn gcd(p: &HPoly, q: &HPoly) -> HPoly {
    assert!(
        !(p.is_zero() && q.is_zero()),
        "gcd of two zero polynomials"
    );
    HPoly::from_mpoly(mgcd(p.as_mpoly(), q.as_mpoly())).expect("gcd of forms is a form")
}

/// True iff `P` has no repeated factor: the gcd of `P` with all its partial
/// derivatives is constant. (Checking one partial at a time is not enough,
/// e.g. `gcd(X0X1, X1) = X1`.)
pub fn is_squarefree(p: &HPoly) -> bool {
    let mut g = p.as_mpoly().clone();
    for v in 0..3 {
        let d = p.as_mpoly().partial(v);
        g = mgcd(&g, &d);
        if g.is_constant() {
            return true;
        }
    }
    g.is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn h(s: &str) -> HPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&h("X0^2 - X1^2"), &h("X0^2 + 2*X0*X1 + X1^2")), h("X0 + X1"));
        assert_eq!(gcd(&h("X0^2*X1"), &h("X2^3")), h("1"));
        assert_eq!(gcd(&h("3*X0*X1 - X2^2"), &HPoly::zero(2)), h("X0*X1 - 1/3*X2^2"));
        assert_eq!(gcd(&h("X0*X1*X2"), &h("X1^2*X2")), h("X1*X2"));
    }

    #[test]
    fn gcd_with_hidden_common_factor() {
        let c = h("X0^2 + X1*X2 - 2*X2^2");
        let a = &c * &h("X0 - 3*X1");
        let b = &c * &h("X1^2 + X0*X2");
        assert_eq!(gcd(&a, &b), c.monic());
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&h("X0*X1")));
        assert!(!is_squarefree(&h("X0^2*X1")));
        assert!(is_squarefree(&h("X0^2 + X1^2")));
        assert!(!is_squarefree(&h("(X0 + X1 - X2)^2*(X0*X2 - X1^2)")));
    }
}
