//! Construct the Pfaffians P_2..P_5, show their shapes, and round-trip the
//! canonical text form.

use pfaffian_cones::ring::parse;
use pfaffian_cones::skew::{double_factorial_odd, nvars, pfaffian};

fn main() {
    for ell in 1..=5 {
        let p = pfaffian(ell);
        println!(
            "P_{ell}: degree {ell}, n = {} variables, {} terms (expected (2l-1)!! = {})",
            nvars(ell),
            p.term_count(),
            double_factorial_odd(ell)
        );
    }

    let p2 = pfaffian(2);
    println!("\nP_2 = {p2}");
    let p3 = pfaffian(3);
    println!("P_3 = {p3}");

    // The canonical text form round-trips exactly.
    let text = p3.to_string();
    let back = parse(&text, p3.nvars()).expect("canonical text parses");
    assert_eq!(back, p3);
    println!("\ncanonical text form round-trips: ok");

    // Every variable appears linearly, so any second derivative in a single
    // variable vanishes.
    let p4 = pfaffian(4);
    let all_multilinear =
        (1..=p4.nvars()).all(|i| p4.partial(i).unwrap().partial(i).unwrap().is_zero());
    println!("P_4 is multilinear in every variable: {all_multilinear}");
}
