//! Closed-form sphere moments against numerical integration of the
//! weight `prod |x_i|^{2 mu_i}`.

mod common;

use common::moment_deviation;
use dunkl_core::algebra::{Monomial, ParameterSet, Rational};
use dunkl_core::monogenics::moment;

const TOL: f64 = 1e-8;

fn two(a: &str, b: &str) -> ParameterSet {
    ParameterSet::general(vec![a.parse().unwrap(), b.parse().unwrap()]).unwrap()
}

#[test]
fn circle_moments_match_quadrature() {
    for p in [two("1/2", "1/3"), two("7/4", "1/9")] {
        assert!(moment_deviation(&p, 4) < TOL, "{:?}", p.to_strings());
    }
    for p in ParameterSet::sample_many(3, 11, 3).unwrap() {
        let p = p.truncated(2).unwrap();
        assert!(moment_deviation(&p, 3) < TOL, "{:?}", p.to_strings());
    }
}

#[test]
fn sphere_moments_match_quadrature() {
    let mut sets = vec![ParameterSet::from_strs(&["1/2", "1/3", "1/4"]).unwrap()];
    sets.extend(ParameterSet::sample_many(3, 5, 2).unwrap());
    for p in sets {
        assert!(moment_deviation(&p, 3) < TOL, "{:?}", p.to_strings());
    }
}

#[test]
fn quadrature_separates_wrong_parameters() {
    // the oracle must notice a perturbed weight
    let p = two("1/2", "1/3");
    let mu = [0.5, 1.0 / 3.0 + 1e-3];
    let exps = [2, 0];
    let exact = moment(&p, &Monomial::from_exponents(&exps).unwrap()).to_f64();
    let off = common::circle(&mu, &exps) / common::circle(&mu, &[0, 0]);
    assert!((exact - off).abs() > 1e-6);
}

#[test]
fn odd_moments_vanish() {
    let p = ParameterSet::from_strs(&["1/2", "1/3", "1/4"]).unwrap();
    for k in 1..=5 {
        for m in Monomial::all_of_degree(3, k) {
            assert_eq!(moment(&p, &m) == Rational::ZERO, !m.is_even(), "{m}");
        }
    }
}
