//! Produce minimality certificates: harmonicity plus the exact identity
//! u_i u_j u_ij = rho * u, with rho cross-checked against Tr[S^2]/12.
//!
//! l = 2, 3, 4 run fully symbolically; l = 5 uses randomized exact
//! evaluation at integer points.

use pfaffian_cones::minimality::{verify_minimality, Mode};

fn main() {
    for ell in 2..=4 {
        let cert = verify_minimality(ell, Mode::Symbolic).expect("within symbolic bound");
        println!(
            "l = {ell} (H_{}): laplacian zero = {}, division exact = {}, rho = Tr[S^2]/12 = {}",
            ell - 1,
            cert.laplacian_zero,
            cert.cubic_identity_holds,
            cert.rho_matches_trace,
        );
        if let Some(rho) = &cert.rho {
            let text = rho.to_string();
            if text.len() <= 120 {
                println!("    rho = {text}");
            } else {
                println!(
                    "    rho: homogeneous of degree {}, {} terms",
                    rho.degree().unwrap(),
                    rho.term_count()
                );
            }
        }
        assert!(cert.pass());
    }

    let trials = 200;
    let cert = verify_minimality(5, Mode::Randomized { trials, seed: 7 }).unwrap();
    println!(
        "l = 5 (H_4): randomized over {trials} integer points: identity holds = {}",
        cert.cubic_identity_holds
    );
    assert!(cert.pass());
}
