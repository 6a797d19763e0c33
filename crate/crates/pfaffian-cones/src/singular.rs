//! The singular locus of the `l = 3` cone: where the 6x6 matrix drops to
//! rank <= 2, four of its eigenvalues `(+-l1, +-l2, +-l3)` vanish, and the
//! gradient of `P_3` vanishes. That locus is cut out (inside the cone) by a
//! single quartic: the coefficient of `lambda^2` in the characteristic
//! polynomial, equal both to the sum of squared 4x4 sub-Pfaffians and to
//! the squared gradient norm of `P_3`.

use nalgebra::Matrix6;
use num_traits::Zero;
use serde::Serialize;

use crate::ring::{parse, rational_to_f64, Polynomial, Rational};
use crate::rng::{small_rational, trial_rng};
use crate::skew::{self, SkewSymbolicMatrix};
use crate::Result;

const NV: usize = 15;

/// Relative threshold for the numeric rank: singular values below
/// `RANK_THRESHOLD * (largest singular value)` count as zero.
pub const RANK_THRESHOLD: f64 = 1e-10;

/// Transcription of the displayed 90-term quartic, used as a fixture; the
/// three computational pipelines establish the same polynomial
/// independently.
const REFERENCE_QUARTIC: &str = include_str!("../fixtures/h2_singular_quartic.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    CharPoly,
    SubPfaffianSum,
    GradientNorm,
    Reference,
}

/// The quartic cutting out the singular stratum, tagged with how it was
/// obtained. All provenances must yield the identical polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct SingularLocusQuartic {
    pub quartic: Polynomial,
    pub provenance: Provenance,
}

/// The coefficient of `lambda^2` in the characteristic polynomial.
pub fn quartic_via_charpoly() -> Result<SingularLocusQuartic> {
    let coeffs = skew::char_poly(3)?;
    Ok(SingularLocusQuartic { quartic: coeffs.coeff(1).clone(), provenance: Provenance::CharPoly })
}

/// The sum of the squared Pfaffians of all fifteen principal 4x4
/// submatrices.
pub fn quartic_via_subpfaffians() -> Result<SingularLocusQuartic> {
    let m = SkewSymbolicMatrix::new(3);
    let mut acc = Polynomial::zero(NV);
    for mask in 0u32..64 {
        if mask.count_ones() != 4 {
            continue;
        }
        let rows: Vec<usize> = (0..6).filter(|&b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        let pf = m.sub_pfaffian(&rows)?;
        acc.add_assign(&pf.times(&pf));
    }
    Ok(SingularLocusQuartic { quartic: acc, provenance: Provenance::SubPfaffianSum })
}

/// The squared gradient norm `sum_i (dP_3/dx_i)^2`.
pub fn quartic_via_gradient() -> SingularLocusQuartic {
    let p3 = skew::pfaffian(3);
    let mut acc = Polynomial::zero(NV);
    for i in 1..=NV {
        let g = p3.partial(i).expect("in range");
        acc.add_assign(&g.times(&g));
    }
    SingularLocusQuartic { quartic: acc, provenance: Provenance::GradientNorm }
}

/// The transcribed fixture, parsed from its canonical text form.
pub fn quartic_reference() -> Result<SingularLocusQuartic> {
    Ok(SingularLocusQuartic {
        quartic: parse(REFERENCE_QUARTIC, NV)?,
        provenance: Provenance::Reference,
    })
}

/// An exactly- or approximately-known scalar.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Exact(#[serde(with = "crate::ring::serde_rational")] Rational),
    Approx(f64),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_zero(),
            Value::Approx(v) => *v == 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rational_to_f64(r),
            Value::Approx(v) => *v,
        }
    }
}

/// Rank and eigenvalue diagnostics at one point of the variable space.
#[derive(Debug, Clone, Serialize)]
pub struct SingularDiagnosis {
    pub point: Vec<f64>,
    pub pfaffian_value: Value,
    pub quartic_value: Value,
    pub numeric_rank: usize,
    /// The three magnitudes `l1 >= l2 >= l3 >= 0` of the spectrum
    /// `(+-i*l1, +-i*l2, +-i*l3)`.
    pub eigenvalue_magnitudes: [f64; 3],
    /// Whether `grad P_3` vanishes exactly; only known for exact inputs.
    pub gradient_is_zero: Option<bool>,
}

fn spectrum_diagnostics(mf: &Matrix6<f64>) -> (usize, [f64; 3]) {
    // Rank from the singular values proper; their noise floor is machine
    // epsilon relative to the largest one.
    let mut sv: Vec<f64> = mf.svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    let largest = sv[0];
    let rank = if largest == 0.0 {
        0
    } else {
        sv.iter().filter(|&&s| s > RANK_THRESHOLD * largest).count()
    };
    // The eigenvalue magnitudes squared are the eigenvalues of the
    // symmetric positive-semidefinite matrix -M^2 (the squared singular
    // values), so a symmetric eigensolver suffices for the spectrum; the
    // square root amplifies eigenvalue noise to ~1e-8 relative, which is
    // why the rank does not reuse these.
    let neg_m2 = -(mf * mf);
    let eig = neg_m2.symmetric_eigen();
    let mut lam: Vec<f64> = eig.eigenvalues.iter().map(|&v| v.max(0.0).sqrt()).collect();
    lam.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    (rank, [lam[0], lam[2], lam[4]])
}

/// Diagnose an exact rational point: the Pfaffian, the quartic and the
/// gradient are evaluated exactly; rank and eigenvalues numerically.
pub fn diagnose_point(point: &[Rational]) -> Result<SingularDiagnosis> {
    let m = SkewSymbolicMatrix::new(3);
    let p3 = m.pfaffian();
    let quartic = quartic_via_gradient().quartic;
    let pf = p3.evaluate(point)?;
    let q = quartic.evaluate(point)?;
    let grad_zero = (1..=NV).try_fold(true, |acc, i| -> Result<bool> {
        Ok(acc && p3.partial(i)?.evaluate(point)?.is_zero())
    })?;
    let rows = m.evaluate(point)?;
    let mf = Matrix6::from_fn(|i, j| rational_to_f64(&rows[i][j]));
    let (numeric_rank, eigenvalue_magnitudes) = spectrum_diagnostics(&mf);
    Ok(SingularDiagnosis {
        point: point.iter().map(rational_to_f64).collect(),
        pfaffian_value: Value::Exact(pf),
        quartic_value: Value::Exact(q),
        numeric_rank,
        eigenvalue_magnitudes,
        gradient_is_zero: Some(grad_zero),
    })
}

/// Diagnose a floating-point point; all values are approximate.
pub fn diagnose_point_f64(point: &[f64]) -> Result<SingularDiagnosis> {
    let p3 = skew::pfaffian(3);
    let quartic = quartic_via_gradient().quartic;
    let pf = p3.evaluate_f64(point)?;
    let q = quartic.evaluate_f64(point)?;
    let map = SkewSymbolicMatrix::new(3).pair_index();
    let mut mf = Matrix6::zeros();
    for a in 1..=6usize {
        for b in (a + 1)..=6 {
            let v = map.forward(a, b)?;
            mf[(a - 1, b - 1)] = point[v - 1];
            mf[(b - 1, a - 1)] = -point[v - 1];
        }
    }
    let (numeric_rank, eigenvalue_magnitudes) = spectrum_diagnostics(&mf);
    Ok(SingularDiagnosis {
        point: point.to_vec(),
        pfaffian_value: Value::Approx(pf),
        quartic_value: Value::Approx(q),
        numeric_rank,
        eigenvalue_magnitudes,
        gradient_is_zero: None,
    })
}

/// Construct a random rank-<=2 antisymmetric matrix `a b^T - b a^T` from
/// two random rational 6-vectors, read off its coordinates, and diagnose
/// the point. Exactly on such points the Pfaffian, the quartic and the
/// whole gradient of `P_3` vanish.
pub fn witness_singular_stratum(seed: u64) -> Result<(Vec<Rational>, SingularDiagnosis)> {
    let mut rng = trial_rng(seed, 0);
    let a: Vec<Rational> = (0..6).map(|_| small_rational(&mut rng)).collect();
    let b: Vec<Rational> = (0..6).map(|_| small_rational(&mut rng)).collect();
    let map = SkewSymbolicMatrix::new(3).pair_index();
    let mut coords = vec![Rational::zero(); NV];
    for r in 1..=6usize {
        for c in (r + 1)..=6 {
            let v = map.forward(r, c)?;
            coords[v - 1] = &a[r - 1] * &b[c - 1] - &b[r - 1] * &a[c - 1];
        }
    }
    let diagnosis = diagnose_point(&coords)?;
    Ok((coords, diagnosis))
}

/// Sample a random point and pair the quartic's exact sign with the
/// numeric rank (used by property checks: rank 6 iff quartic positive).
pub fn random_generic_diagnosis(seed: u64) -> Result<SingularDiagnosis> {
    let mut rng = trial_rng(seed, 1);
    let coords: Vec<Rational> = (0..NV).map(|_| small_rational(&mut rng)).collect();
    diagnose_point(&coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Monomial};
    use num_traits::Signed;

    #[test]
    fn pipelines_agree_symbolically() {
        let a = quartic_via_charpoly().unwrap().quartic;
        let b = quartic_via_subpfaffians().unwrap().quartic;
        let c = quartic_via_gradient().quartic;
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.term_count(), 90);
    }

    #[test]
    fn reference_transcription_matches() {
        let reference = quartic_reference().unwrap().quartic;
        assert_eq!(reference, quartic_via_charpoly().unwrap().quartic);
    }

    #[test]
    fn displayed_terms_present() {
        let q = quartic_via_charpoly().unwrap().quartic;
        let m = |vars: &[(usize, u16)]| Monomial::from_pairs(vars.iter().copied());
        assert_eq!(q.coefficient(&m(&[(3, 2), (6, 2)])), rat(1));
        assert_eq!(q.coefficient(&m(&[(2, 1), (3, 1), (6, 1), (7, 1)])), rat(-2));
        assert_eq!(q.coefficient(&m(&[(1, 1), (4, 1), (6, 1), (11, 1)])), rat(2));
    }

    #[test]
    fn subset_3456_summand() {
        let m = SkewSymbolicMatrix::new(3);
        let pf = m.sub_pfaffian(&[3, 4, 5, 6]).unwrap();
        assert_eq!(pf.to_string(), "x10*x15 - x11*x14 + x12*x13");
        let square = pf.times(&pf);
        assert_eq!(square.term_count(), 6);
        assert_eq!(square.degree(), Some(4));
    }

    #[test]
    fn diagnose_rank_two_basis_point() {
        let mut point = vec![Rational::zero(); NV];
        point[0] = rat(1); // x1 = 1: the matrix e1 e2^T - e2 e1^T
        let d = diagnose_point(&point).unwrap();
        assert!(d.pfaffian_value.is_zero());
        assert!(d.quartic_value.is_zero());
        assert_eq!(d.numeric_rank, 2);
        assert!((d.eigenvalue_magnitudes[0] - 1.0).abs() < 1e-12);
        assert!(d.eigenvalue_magnitudes[1].abs() < 1e-12);
        assert!(d.eigenvalue_magnitudes[2].abs() < 1e-12);
        assert_eq!(d.gradient_is_zero, Some(true));
    }

    #[test]
    fn diagnose_origin() {
        let point = vec![Rational::zero(); NV];
        let d = diagnose_point(&point).unwrap();
        assert_eq!(d.numeric_rank, 0);
        assert!(d.pfaffian_value.is_zero());
        assert!(d.quartic_value.is_zero());
        assert_eq!(d.eigenvalue_magnitudes, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn diagnose_block_diagonal_full_rank() {
        let mut point = vec![Rational::zero(); NV];
        point[0] = rat(1); // x1
        point[9] = rat(1); // x10
        point[14] = rat(1); // x15
        let d = diagnose_point(&point).unwrap();
        assert_eq!(d.pfaffian_value.to_f64(), 1.0);
        assert_eq!(d.quartic_value.to_f64(), 3.0);
        assert_eq!(d.numeric_rank, 6);
        for lam in d.eigenvalue_magnitudes {
            assert!((lam - 1.0).abs() < 1e-12);
        }
        assert_eq!(d.gradient_is_zero, Some(false));
    }

    #[test]
    fn witnesses_lie_on_the_singular_stratum() {
        for seed in 0..10u64 {
            let (coords, d) = witness_singular_stratum(seed).unwrap();
            assert!(d.pfaffian_value.is_zero());
            assert!(d.quartic_value.is_zero());
            assert!(d.numeric_rank <= 2, "seed {seed}: rank {}", d.numeric_rank);
            assert_eq!(d.gradient_is_zero, Some(true));
            assert_eq!(coords.len(), NV);
        }
    }

    #[test]
    fn quartic_is_nonnegative_on_samples() {
        let q = quartic_via_gradient().quartic;
        for seed in 0..50u64 {
            let mut rng = trial_rng(seed, 2);
            let pt: Vec<Rational> = (0..NV).map(|_| small_rational(&mut rng)).collect();
            assert!(!q.evaluate(&pt).unwrap().is_negative());
        }
    }

    #[test]
    fn quartic_nonnegative_at_float_points() {
        // Sum-of-squares structure: nonnegative on all of R^15.
        let q = quartic_via_gradient().quartic;
        let mut state = 0x5EED_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 20.0 - 10.0
        };
        for _ in 0..1000 {
            let pt: Vec<f64> = (0..NV).map(|_| next()).collect();
            let v = q.evaluate_f64(&pt).unwrap();
            assert!(v >= -1e-6, "quartic evaluated to {v}");
        }
    }

    #[test]
    fn generic_points_have_full_rank_iff_quartic_positive() {
        for seed in 0..100u64 {
            let d = random_generic_diagnosis(seed).unwrap();
            let positive = match &d.quartic_value {
                Value::Exact(r) => r.is_positive(),
                Value::Approx(v) => *v > 0.0,
            };
            assert_eq!(positive, d.numeric_rank == 6, "seed {seed}");
        }
    }

    #[test]
    fn float_diagnosis_matches_exact_on_integer_points() {
        let mut exact = vec![Rational::zero(); NV];
        exact[0] = rat(2);
        exact[9] = rat(3);
        let floats: Vec<f64> = exact.iter().map(rational_to_f64).collect();
        let de = diagnose_point(&exact).unwrap();
        let df = diagnose_point_f64(&floats).unwrap();
        assert_eq!(de.numeric_rank, df.numeric_rank);
        assert!((de.quartic_value.to_f64() - df.quartic_value.to_f64()).abs() < 1e-9);
    }
}
