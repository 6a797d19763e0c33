//! Sample exact zero-set points and confirm numerically that the mean
//! curvature of the level set vanishes there.

use pfaffian_cones::minimality::PfaffianCone;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for ell in 2..=4 {
        let cone = PfaffianCone::new(ell);
        let mut rng = ChaCha8Rng::seed_from_u64(2024 + ell as u64);
        let samples = 200;
        let mut max_normalized: f64 = 0.0;
        let mut singular = 0;
        for _ in 0..samples {
            let pt = cone.sample_zero_point(&mut rng).expect("sampler converges");
            assert!(pt.residual == num_traits::Zero::zero(), "points are exact zeros");
            if pt.singular {
                singular += 1;
                continue;
            }
            let c = cone.mean_curvature_at(&pt).expect("nonsingular point");
            max_normalized = max_normalized.max(c.normalized_mean_curvature.abs());
        }
        println!(
            "l = {ell}: {samples} zero-set samples, {singular} singular skipped, \
             max |normalized mean curvature| = {max_normalized:.3e}"
        );
    }
}
