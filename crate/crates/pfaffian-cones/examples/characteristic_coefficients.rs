//! Characteristic-polynomial coefficients of the symbolic matrix via the
//! Faddeev-LeVerrier recurrence: only even powers of lambda survive,
//! the constant term is the squared Pfaffian, and the top nontrivial
//! coefficient is the sum of squared variables.

use pfaffian_cones::skew::{char_poly, nvars, pfaffian};

fn main() {
    for ell in 1..=3 {
        let coeffs = char_poly(ell).expect("odd coefficients vanish");
        println!("l = {ell}: det(lambda*I - M) = lambda^{}", 2 * ell);
        for m in (0..ell).rev() {
            let c = coeffs.coeff(m);
            let text = c.to_string();
            if text.len() <= 100 {
                println!("    + ({text}) * lambda^{}", 2 * m);
            } else {
                println!(
                    "    + (degree {} polynomial, {} terms) * lambda^{}",
                    c.degree().unwrap(),
                    c.term_count(),
                    2 * m
                );
            }
        }
        let p = pfaffian(ell);
        assert_eq!(coeffs.coeff(0), &p.times(&p), "constant term is Pf^2");
        println!("    constant term equals Pf^2 over {} variables: ok", nvars(ell));
    }
}
