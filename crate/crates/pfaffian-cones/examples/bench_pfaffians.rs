//! Time Pfaffian expansion and identity verification across sizes.

use std::time::Instant;

use pfaffian_cones::minimality::{verify_minimality, Mode, SYMBOLIC_BOUND};
use pfaffian_cones::skew::{nvars, pfaffian};

fn main() {
    println!("{:>3} {:>6} {:>7} {:>13} {:>11}  mode", "l", "nvars", "terms", "pfaffian_ms", "verify_ms");
    for ell in 2..=6 {
        let start = Instant::now();
        let p = pfaffian(ell);
        let pf_ms = start.elapsed().as_millis();

        let mode = if ell <= SYMBOLIC_BOUND {
            Mode::Symbolic
        } else {
            Mode::Randomized { trials: 20, seed: 5 }
        };
        let start = Instant::now();
        let cert = verify_minimality(ell, mode).unwrap();
        let vf_ms = start.elapsed().as_millis();
        assert!(cert.pass());

        println!(
            "{ell:>3} {:>6} {:>7} {pf_ms:>13} {vf_ms:>11}  {mode}",
            nvars(ell),
            p.term_count()
        );
    }
}
