//! The singular stratum of the l = 3 cone: one quartic, three independent
//! computations, and exact rank-2 witnesses.

use num_traits::Zero;
use pfaffian_cones::ring::{rat, Rational};
use pfaffian_cones::singular::{
    diagnose_point, quartic_via_charpoly, quartic_via_gradient, quartic_via_subpfaffians,
    witness_singular_stratum,
};

fn main() {
    let a = quartic_via_charpoly().unwrap().quartic;
    let b = quartic_via_subpfaffians().unwrap().quartic;
    let c = quartic_via_gradient().quartic;
    println!(
        "coefficient of lambda^2 == sum of sub-Pfaffian squares == |grad P_3|^2: {}",
        a == b && b == c
    );
    println!("the quartic has {} terms", a.term_count());

    // A rank-6 point: three orthogonal 2x2 blocks.
    let mut point = vec![Rational::zero(); 15];
    point[0] = rat(1);
    point[9] = rat(1);
    point[14] = rat(1);
    let d = diagnose_point(&point).unwrap();
    println!(
        "block-diagonal point: pfaffian = {:?}, quartic = {:?}, rank = {}, |lambda| = {:?}",
        d.pfaffian_value.to_f64(),
        d.quartic_value.to_f64(),
        d.numeric_rank,
        d.eigenvalue_magnitudes
    );

    // Random rank-2 witnesses land exactly on the singular stratum.
    for seed in 0..5 {
        let (_, d) = witness_singular_stratum(seed).unwrap();
        println!(
            "witness seed {seed}: pfaffian zero = {}, quartic zero = {}, rank = {}, grad P_3 zero = {:?}",
            d.pfaffian_value.is_zero(),
            d.quartic_value.is_zero(),
            d.numeric_rank,
            d.gradient_is_zero.unwrap()
        );
    }
}
