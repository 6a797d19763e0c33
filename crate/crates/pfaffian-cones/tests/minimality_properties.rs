//! Cross-checks of the minimality machinery beyond the per-module unit
//! tests: the two independent pipelines for the cubic identity, the
//! dual-route verification of the first genuinely new case (l = 4), and
//! exactness of the zero-set sampler at larger sizes.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pfaffian_cones::minimality::{
    cubic_form, cubic_form_via_traces, verify_minimality, Mode, PfaffianCone,
};
use pfaffian_cones::ring::{Polynomial, Rational};

#[test]
fn cubic_form_pipelines_agree_up_to_ell_4() {
    // x-coordinate expansion vs (1/12) * P_l * Tr[S^2] in matrix indices.
    for ell in 2..=4usize {
        assert_eq!(cubic_form(ell), cubic_form_via_traces(ell).unwrap(), "l = {ell}");
    }
}

#[test]
fn ell_4_certificate_cross_checked_by_randomized_evaluation() {
    // The symbolic pipeline is the primary route for l = 4; 1000 exact
    // evaluations at random integer points check the same identity
    // independently of the division machinery.
    let symbolic = verify_minimality(4, Mode::Symbolic).unwrap();
    assert!(symbolic.pass());
    let randomized = verify_minimality(4, Mode::Randomized { trials: 1000, seed: 404 }).unwrap();
    assert!(randomized.pass(), "witness: {:?}", randomized.witness);
}

#[test]
fn rho_for_ell_4_is_even_quartic() {
    let rho = verify_minimality(4, Mode::Symbolic).unwrap().rho.unwrap();
    assert!(rho.is_homogeneous());
    assert_eq!(rho.degree(), Some(4));
    let n = rho.nvars();
    let mut flip = BTreeMap::new();
    for v in 1..=n {
        flip.insert(v, Polynomial::<Rational>::var(n, v).unwrap().negated());
    }
    assert_eq!(rho.substitute(&flip), rho);
}

#[test]
fn sampler_produces_exact_zeros_for_ell_5() {
    let cone = PfaffianCone::new(5);
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..25 {
        let pt = cone.sample_zero_point(&mut rng).unwrap();
        assert!(pt.residual == Rational::from_integer(0.into()));
        assert!(cone.u().evaluate(&pt.coords).unwrap() == Rational::from_integer(0.into()));
    }
}
