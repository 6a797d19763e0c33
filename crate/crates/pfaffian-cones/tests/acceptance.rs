//! Acceptance suite: one test per criterion, each asserting its identities
//! at the stated tolerance and finishing inside its time budget. The final
//! test repeats the whole battery uncached to time the full run.

use std::time::Instant;

use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pfaffian_cones::minimality::{
    quadric_congruence, symmetric_counterexample, unconstrained_determinant_check,
    verify_minimality, Mode, PfaffianCone,
};
use pfaffian_cones::ring::{parse, rat, ratio, Monomial, Polynomial, Rational};
use pfaffian_cones::skew::{double_factorial_odd, pfaffian, trace_s2, trace_s3, SkewSymbolicMatrix};
use pfaffian_cones::{hsiang, singular};

const P2_REFERENCE: &str = "x1*x6 - x2*x5 + x3*x4";
const P3_REFERENCE: &str = "x1*x10*x15 - x1*x11*x14 + x1*x12*x13 - x2*x7*x15 + x2*x8*x14 - \
     x2*x9*x13 + x3*x6*x15 - x3*x8*x12 + x3*x9*x11 - x4*x6*x14 + x4*x7*x12 - x4*x9*x10 + \
     x5*x6*x13 - x5*x7*x11 + x5*x8*x10";

fn conclude(n: usize, name: &str, start: Instant, budget_secs: f64) {
    let secs = start.elapsed().as_secs_f64();
    println!("[acceptance] criterion {n:2} ({name}): PASS in {secs:.2}s (budget {budget_secs}s)");
    assert!(
        secs < budget_secs,
        "criterion {n} exceeded its time budget: {secs:.2}s >= {budget_secs}s"
    );
}

fn rational_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=2))).collect()
}

fn criterion_1_body() {
    for ell in 1..=6usize {
        let p = pfaffian(ell);
        assert_eq!(p.term_count() as u64, double_factorial_odd(ell), "term count, l = {ell}");
        assert!(p.terms().all(|(_, c)| c.abs() == rat(1)), "unit coefficients, l = {ell}");
    }
    let p2 = pfaffian(2);
    assert_eq!(p2, parse(P2_REFERENCE, 6).unwrap());
    assert_eq!(p2.to_string(), P2_REFERENCE);
    let p3 = pfaffian(3);
    assert_eq!(p3, parse(P3_REFERENCE, 15).unwrap());
    assert_eq!(p3.to_string(), P3_REFERENCE.split_whitespace().collect::<Vec<_>>().join(" "));
}

#[test]
fn criterion_01_pfaffian_term_counts_and_reference_forms() {
    let start = Instant::now();
    criterion_1_body();
    conclude(1, "pfaffian term counts and reference forms", start, 10.0);
}

fn criterion_2_body() {
    for ell in 1..=4usize {
        let m = SkewSymbolicMatrix::new(ell);
        let p = m.pfaffian();
        assert_eq!(m.determinant(), p.times(&p), "symbolic p^2 = det, l = {ell}");
    }
    for ell in 5..=6usize {
        let m = SkewSymbolicMatrix::new(ell);
        let p = m.pfaffian();
        let mut rng = ChaCha8Rng::seed_from_u64(42 + ell as u64);
        for trial in 0..100 {
            let point = rational_point(&mut rng, m.nvars());
            let pv = p.evaluate(&point).unwrap();
            assert_eq!(
                m.determinant_at(&point).unwrap(),
                &pv * &pv,
                "p^2 = det at point, l = {ell}, trial {trial}"
            );
        }
    }
}

#[test]
fn criterion_02_pfaffian_squared_equals_determinant() {
    let start = Instant::now();
    criterion_2_body();
    conclude(2, "p^2 = det", start, 60.0);
}

fn criterion_3_body() {
    let sym_start = Instant::now();
    for ell in 2..=4usize {
        let cert = verify_minimality(ell, Mode::Symbolic).unwrap();
        assert!(cert.laplacian_zero, "laplacian zero, l = {ell}");
        assert!(cert.cubic_identity_holds, "exact division, l = {ell}");
        assert!(cert.rho_matches_trace, "rho = Tr[S^2]/12, l = {ell}");
        assert_eq!(cert.rho_homogeneous, Some(true), "rho degree, l = {ell}");
    }
    assert!(sym_start.elapsed().as_secs_f64() < 300.0, "symbolic l = 4 over 5 minutes");

    let rand_start = Instant::now();
    let cert = verify_minimality(5, Mode::Randomized { trials: 1000, seed: 31 }).unwrap();
    assert!(cert.pass(), "randomized l = 5 verification failed: {:?}", cert.witness);
    assert!(rand_start.elapsed().as_secs_f64() < 300.0, "randomized l = 5 over 5 minutes");
}

#[test]
fn criterion_03_minimality_identity() {
    let start = Instant::now();
    criterion_3_body();
    conclude(3, "minimality identity", start, 600.0);
}

fn criterion_4_body() {
    let expected_s2 =
        Polynomial::from_terms(15, (1..=15).map(|v| (Monomial::var_pow(v, 2), rat(24))));
    assert_eq!(trace_s2(3).unwrap(), expected_s2, "Tr[S^2] = 24 sum of squares");
    assert_eq!(trace_s3(3).unwrap(), pfaffian(3).scale(&rat(48)), "Tr[S^3] = 48 P_3");
}

#[test]
fn criterion_04_trace_closed_forms() {
    let start = Instant::now();
    criterion_4_body();
    conclude(4, "trace closed forms", start, 30.0);
}

fn criterion_5_body() {
    let z = hsiang::build_z();
    assert!(z.trace().is_zero(), "Z traceless");
    assert!(hsiang::verify_anti_hermitian(&z), "Z anti-hermitian");
    assert!(hsiang::verify_trace_cubed_identity(), "(i/3) Tr[Z^3] = P_3");
    for x in hsiang::simple_root_matrices() {
        assert!(hsiang::check_l_membership(&x).unwrap().is_member(), "simple root in L");
    }
    for (i, x) in hsiang::random_l_members(100, 8).iter().enumerate() {
        assert!(hsiang::check_l_membership(x).unwrap().is_member(), "member {i}");
        assert!(hsiang::map_x_to_y(x).unwrap().is_antisymmetric(), "image {i} antisymmetric");
    }
}

#[test]
fn criterion_05_su4_correspondence() {
    let start = Instant::now();
    criterion_5_body();
    conclude(5, "su(4) correspondence", start, 10.0);
}

fn criterion_6_body() {
    let a = singular::quartic_via_charpoly().unwrap().quartic;
    let b = singular::quartic_via_subpfaffians().unwrap().quartic;
    let c = singular::quartic_via_gradient().quartic;
    assert_eq!(a, b, "char-poly pipeline = sub-Pfaffian pipeline");
    assert_eq!(b, c, "sub-Pfaffian pipeline = gradient pipeline");

    let reference = singular::quartic_reference().unwrap().quartic;
    assert_eq!(a, reference, "computed quartic matches the transcribed fixture");
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for _ in 0..200 {
        let point: Vec<Rational> = (0..15).map(|_| rat(rng.gen_range(-9..=9))).collect();
        assert_eq!(a.evaluate(&point).unwrap(), reference.evaluate(&point).unwrap());
    }

    for seed in 0..100u64 {
        let (_, d) = singular::witness_singular_stratum(seed).unwrap();
        assert!(d.pfaffian_value.is_zero(), "witness {seed}: P_3 = 0");
        assert!(d.quartic_value.is_zero(), "witness {seed}: quartic = 0");
        assert_eq!(d.gradient_is_zero, Some(true), "witness {seed}: grad P_3 = 0");
    }
}

#[test]
fn criterion_06_singular_quartic() {
    let start = Instant::now();
    criterion_6_body();
    conclude(6, "singular quartic", start, 60.0);
}

fn criterion_7_body() {
    for ell in 2..=4usize {
        let cone = PfaffianCone::new(ell);
        let mut rng = ChaCha8Rng::seed_from_u64(700 + ell as u64);
        let mut checked = 0usize;
        let mut max_normalized: f64 = 0.0;
        while checked < 1000 {
            let pt = cone.sample_zero_point(&mut rng).unwrap();
            if pt.singular {
                continue;
            }
            let sample = cone.mean_curvature_at(&pt).unwrap();
            max_normalized = max_normalized.max(sample.normalized_mean_curvature.abs());
            checked += 1;
        }
        assert!(
            max_normalized < 1e-9,
            "l = {ell}: max |normalized mean curvature| = {max_normalized:e}"
        );
        if ell == 2 {
            // The quadratic cone evaluates with almost no float work, so a
            // much tighter bound holds there.
            assert!(
                max_normalized < 1e-12,
                "l = 2: max |normalized mean curvature| = {max_normalized:e}"
            );
        }
    }
}

#[test]
fn criterion_07_numeric_mean_curvature() {
    let start = Instant::now();
    criterion_7_body();
    conclude(7, "numeric mean curvature", start, 120.0);
}

fn criterion_8_body() {
    let (lap2, rem2) = symmetric_counterexample(2).unwrap();
    assert_eq!(lap2, Polynomial::constant(3, rat(-2)), "2x2 laplacian is -2");
    assert_eq!(
        rem2,
        Polynomial::from_terms(3, [(Monomial::var_pow(2, 2), rat(-6))]),
        "2x2 remainder is -6 z^2"
    );
    let (lap3, rem3) = symmetric_counterexample(3).unwrap();
    assert!(!lap3.is_zero(), "3x3 laplacian nonzero");
    assert!(!rem3.is_zero(), "3x3 remainder nonzero");
}

#[test]
fn criterion_08_symmetric_negative_control() {
    let start = Instant::now();
    criterion_8_body();
    conclude(8, "symmetric determinant negative control", start, 5.0);
}

fn criterion_9_body() {
    let c2 = unconstrained_determinant_check(2).unwrap();
    assert!(c2.pass());
    assert_eq!(c2.rho, Polynomial::constant(4, rat(2)));
    let c3 = unconstrained_determinant_check(3).unwrap();
    assert!(c3.pass());
    assert!(c3.rho.is_homogeneous() && c3.rho.degree() == Some(2));
}

#[test]
fn criterion_09_unconstrained_positive_control() {
    let start = Instant::now();
    criterion_9_body();
    conclude(9, "unconstrained determinant positive control", start, 10.0);
}

fn criterion_10_body() {
    let q = quadric_congruence();
    assert!(q.diagonal, "no cross terms");
    assert_eq!((q.positive_squares, q.negative_squares), (3, 3), "signature (3,3)");
}

#[test]
fn criterion_10_quadric_congruence() {
    let start = Instant::now();
    criterion_10_body();
    conclude(10, "quadric congruence", start, 1.0);
}

#[test]
fn criterion_11_performance() {
    // Explicit expansion targets.
    let start = Instant::now();
    let p5 = pfaffian(5);
    let pf5 = start.elapsed().as_secs_f64();
    assert_eq!(p5.term_count(), 945);
    assert!(pf5 < 1.0, "pfaffian(5) took {pf5:.3}s (budget 1s)");

    let start = Instant::now();
    let p6 = pfaffian(6);
    let pf6 = start.elapsed().as_secs_f64();
    assert_eq!(p6.term_count(), 10395);
    assert!(pf6 < 30.0, "pfaffian(6) took {pf6:.3}s (budget 30s)");

    // The full battery, rerun back to back without caching.
    let start = Instant::now();
    criterion_1_body();
    criterion_2_body();
    criterion_3_body();
    criterion_4_body();
    criterion_5_body();
    criterion_6_body();
    criterion_7_body();
    criterion_8_body();
    criterion_9_body();
    criterion_10_body();
    let total = start.elapsed().as_secs_f64();
    assert!(total < 900.0, "criteria 1-10 took {total:.1}s (budget 900s)");
    println!(
        "[acceptance] criterion 11 (performance): PASS — pfaffian(5) {pf5:.3}s, \
         pfaffian(6) {pf6:.3}s, criteria 1-10 in {total:.1}s"
    );
}
