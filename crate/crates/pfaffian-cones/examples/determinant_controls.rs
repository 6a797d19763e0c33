//! The comparison cases around the minimality argument: symmetric
//! determinants fail both checks, unconstrained determinants pass, and the
//! l = 2 Pfaffian diagonalizes to a signature-(3,3) quadratic cone.

use pfaffian_cones::minimality::{
    quadric_congruence, symmetric_counterexample, unconstrained_determinant_check,
};

fn main() {
    for n in 2..=3 {
        let (laplacian, remainder) = symmetric_counterexample(n).unwrap();
        println!(
            "symmetric {n}x{n}: laplacian = {} (nonzero: {}), division remainder nonzero: {}",
            laplacian,
            !laplacian.is_zero(),
            !remainder.is_zero()
        );
    }

    for n in 2..=3 {
        let cert = unconstrained_determinant_check(n).unwrap();
        println!(
            "unconstrained {n}x{n}: harmonic = {}, identity holds = {}, rho degree = {:?}",
            cert.harmonic,
            cert.cubic_identity_holds,
            cert.rho.degree()
        );
        assert!(cert.pass());
    }

    let q = quadric_congruence();
    println!(
        "45-degree rotations send P_2 to {} (diagonal: {}, signature ({}, {}))",
        q.substituted, q.diagonal, q.positive_squares, q.negative_squares
    );
    assert!(q.pass());
}
