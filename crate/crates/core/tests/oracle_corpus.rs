//! Engine outputs against the brute-force oracle on small degenerations.

use ramlimit::limits::{
    limit_general_direction, limit_quasi_general, limit_zeuthen, limit_zeuthen_adapted,
    Factorization, ZeuthenShape,
};
use ramlimit::oracle::{verify, Verdict, VerifyOptions};
use ramlimit::polyring::{parse_poly, HPoly};
use ramlimit::powerseries::{HSeries, VFamily};

fn h(s: &str) -> HPoly {
    parse_poly(s).unwrap()
}

fn fam(ps: &[&str], order: usize) -> HSeries {
    HSeries::from_family(&ps.iter().map(|s| h(s)).collect::<Vec<_>>(), order).unwrap()
}

fn pencil() -> VFamily {
    VFamily::constant(&[h("X0 - 2*X2"), h("X1 + 3*X2")], 16).unwrap()
}

fn zshape() -> ZeuthenShape {
    ZeuthenShape::new(Factorization::new(vec![(h("X2"), 1)]).unwrap(), h("X0")).unwrap()
}

fn assert_all_match(c: &ramlimit::cycles::CycleExpr, f: &HSeries, v: &VFamily, seed: u64) {
    let opts = VerifyOptions {
        seed,
        ..VerifyOptions::default()
    };
    let r = verify(c, f, v, &opts);
    assert_eq!(r.verdict, Verdict::AllMatch, "{}", r.to_json());
}

#[test]
fn zeuthen_types_match_the_oracle() {
    let families: [&[&str]; 3] = [
        &["X2^2*X0", "X1^3"],
        &["X2^2*X0", "X2*X1^2", "X1^3"],
        &["X0*X2^2", "2*X0*X1*X2", "X0*X1^2", "X1^3"],
    ];
    for (i, ps) in families.iter().enumerate() {
        let f = fam(ps, 16);
        let v = pencil();
        let out = limit_zeuthen(&f, &zshape(), &v, 16).unwrap();
        assert_eq!(out.zeuthen[0].n, i + 1);
        assert_all_match(&out.cycle, &f, &v, i as u64);
        let adapted = limit_zeuthen_adapted(&f, &zshape(), &v, 16).unwrap();
        assert_all_match(&adapted.cycle, &f, &v, 10 + i as u64);
    }
}

#[test]
fn mixed_and_quasi_general_families() {
    let v = pencil();
    // quasi-general: F1 shares the simple component X1
    let f = fam(&["X0^2*X1", "X1*X2^2 + X0*X1^2"], 16);
    let fac = Factorization::new(vec![(h("X0"), 2), (h("X1"), 1)]).unwrap();
    let out = limit_quasi_general(&f, &fac, &v).unwrap();
    assert_all_match(&out.cycle, &f, &v, 1);
    // three concurrent lines, one doubled
    let f = fam(&["X0^2*X1*(X0 + X1)", "X2^4"], 16);
    let fac = Factorization::new(vec![(h("X0"), 2), (h("X1"), 1), (h("X0 + X1"), 1)]).unwrap();
    let out = limit_general_direction(&f, &fac, &v).unwrap();
    assert_all_match(&out.cycle, &f, &v, 2);
}
