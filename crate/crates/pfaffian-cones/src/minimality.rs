//! Minimality of the Pfaffian cones: harmonicity, the cubic identity
//! `u_i u_j u_ij = rho * u`, extraction of `rho` and its cross-check against
//! `Tr[S^2]/12`, numeric mean-curvature sampling on the zero set, and the
//! determinant comparison cases (symmetric matrices fail, matrices with
//! unconstrained entries work, and the `l = 2` cone is congruent to the
//! standard quadratic cone).

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::matrix::PolyMatrix;
use crate::ring::{rat, rational_to_f64, ratio, Monomial, Polynomial, Rational};
use crate::rng::{integer_point, small_rational_point, trial_rng};
use crate::skew::{self, HessianTensor, SkewSymbolicMatrix};
use crate::{Error, Result};

/// Largest `l` for which the fully symbolic certificate is attempted.
/// Above it the cubic form multiplies polynomials with ~10^5 intermediate
/// terms; randomized exact evaluation keeps desk-scale runtimes.
pub const SYMBOLIC_BOUND: usize = 4;

/// `|grad u| <= SINGULAR_TOLERANCE_FACTOR * |x|^(l-1)` marks a zero-set
/// point singular. The gradient is homogeneous of degree `l - 1`, so the
/// threshold must scale with the point to classify scale-freely on a cone.
pub const SINGULAR_TOLERANCE_FACTOR: f64 = 1e-8;

const SAMPLER_RETRY_BUDGET: usize = 64;

/// How an identity was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Symbolic,
    Randomized { trials: u64, seed: u64 },
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Symbolic => write!(f, "symbolic"),
            Mode::Randomized { trials, seed } => {
                write!(f, "randomized(trials={trials}, seed={seed})")
            }
        }
    }
}

/// Outcome of the minimality verification for one `l`.
///
/// In symbolic mode every boolean reflects an exact polynomial identity and
/// `rho` is the extracted quotient. In randomized mode the cubic identity
/// and the trace cross-check are established by exact evaluation at sampled
/// integer points, and no symbolic `rho` is produced.
#[derive(Debug, Clone, Serialize)]
pub struct MinimalityCertificate {
    pub ell: usize,
    pub laplacian_zero: bool,
    pub cubic_identity_holds: bool,
    pub rho: Option<Polynomial>,
    pub rho_matches_trace: bool,
    /// `rho` homogeneous of degree `2l - 4`; `None` when not established
    /// (randomized mode).
    pub rho_homogeneous: Option<bool>,
    pub method: Mode,
    /// First failing point, if any.
    pub witness: Option<String>,
}

impl MinimalityCertificate {
    pub fn pass(&self) -> bool {
        self.laplacian_zero
            && self.cubic_identity_holds
            && self.rho_matches_trace
            && self.rho_homogeneous.unwrap_or(true)
    }
}

/// A point on `{u = 0}` with exact coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroSetPoint {
    #[serde(with = "crate::ring::serde_rational_vec")]
    pub coords: Vec<Rational>,
    /// `u` evaluated at `coords`; exactly zero by construction.
    #[serde(with = "crate::ring::serde_rational")]
    pub residual: Rational,
    pub gradient_norm: f64,
    pub singular: bool,
}

/// Numeric mean-curvature data at a nonsingular zero-set point.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureSample {
    pub point: ZeroSetPoint,
    pub gradient_norm: f64,
    /// `(grad u)^2 * lap u - u_i u_j u_ij` at the point.
    pub mean_curvature_numerator: f64,
    /// The numerator divided by `|grad u|^3`.
    pub normalized_mean_curvature: f64,
}

/// The hypersurface `{P_l = 0}` with cached derivative data.
pub struct PfaffianCone {
    ell: usize,
    u: Polynomial,
    grad: Vec<Polynomial>,
    /// Upper-triangle second partials, keyed by `(i, j)` with `i <= j`,
    /// zero entries omitted.
    hess: BTreeMap<(usize, usize), Polynomial>,
    laplacian: Polynomial,
}

impl PfaffianCone {
    pub fn new(ell: usize) -> Self {
        let u = skew::pfaffian(ell);
        Self::for_polynomial(ell, u)
    }

    fn for_polynomial(ell: usize, u: Polynomial) -> Self {
        let n = u.nvars();
        let grad: Vec<Polynomial> = (1..=n).map(|i| u.partial(i).expect("in range")).collect();
        let mut hess = BTreeMap::new();
        for i in 1..=n {
            for j in i..=n {
                let uij = grad[i - 1].partial(j).expect("in range");
                if !uij.is_zero() {
                    hess.insert((i, j), uij);
                }
            }
        }
        let laplacian = u.laplacian();
        Self { ell, u, grad, hess, laplacian }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn nvars(&self) -> usize {
        self.u.nvars()
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn gradient(&self, i: usize) -> &Polynomial {
        &self.grad[i - 1]
    }

    /// `sum_ij u_i u_j u_ij`, expanded symbolically in x-coordinates.
    pub fn cubic_form(&self) -> Polynomial {
        let n = self.nvars();
        let mut acc = Polynomial::zero(n);
        for i in 1..=n {
            if self.grad[i - 1].is_zero() {
                continue;
            }
            for j in i..=n {
                let Some(uij) = self.hess.get(&(i, j)) else { continue };
                let prod = self.grad[i - 1].times(&self.grad[j - 1]).times(uij);
                if i == j {
                    acc.add_assign(&prod);
                } else {
                    acc.add_assign(&prod.scale(&rat(2)));
                }
            }
        }
        acc
    }

    /// `sum_ij u_i u_j u_ij` evaluated exactly at a rational point.
    pub fn cubic_form_at(&self, point: &[Rational]) -> Result<Rational> {
        let n = self.nvars();
        let grad_vals: Vec<Rational> =
            self.grad.iter().map(|g| g.evaluate(point)).collect::<Result<_>>()?;
        let mut acc = Rational::zero();
        for i in 1..=n {
            if grad_vals[i - 1].is_zero() {
                continue;
            }
            for j in i..=n {
                let Some(uij) = self.hess.get(&(i, j)) else { continue };
                let v = uij.evaluate(point)?;
                if v.is_zero() {
                    continue;
                }
                let prod = &grad_vals[i - 1] * &grad_vals[j - 1] * v;
                if i == j {
                    acc += prod;
                } else {
                    acc += prod * rat(2);
                }
            }
        }
        Ok(acc)
    }

    fn classify(&self, coords: Vec<Rational>, residual: Rational) -> ZeroSetPoint {
        let xf: Vec<f64> = coords.iter().map(rational_to_f64).collect();
        let grad_sq: f64 = self
            .grad
            .iter()
            .map(|g| {
                let v = g.evaluate_f64(&xf).expect("length checked");
                v * v
            })
            .sum();
        let gradient_norm = grad_sq.sqrt();
        let point_norm = xf.iter().map(|v| v * v).sum::<f64>().sqrt();
        let tol = SINGULAR_TOLERANCE_FACTOR * point_norm.powi(self.ell as i32 - 1);
        ZeroSetPoint { coords, residual, gradient_norm, singular: gradient_norm <= tol }
    }

    /// Solve `u = A*x_j + B = 0` for `x_j`, holding the other coordinates
    /// of `coords` fixed (`u` is multilinear, so `A` never involves `x_j`).
    /// Returns `None` when `A = 0` with `B != 0`; when `A = 0` and `B = 0`
    /// the slice satisfies `u = 0` identically and `coords` is returned
    /// unchanged.
    pub fn complete_zero_point(&self, mut coords: Vec<Rational>, j: usize) -> Result<Option<ZeroSetPoint>> {
        let n = self.nvars();
        if coords.len() != n {
            return Err(Error::PointLength { got: coords.len(), expected: n });
        }
        if j == 0 || j > n {
            return Err(Error::VariableIndex { index: j, nvars: n });
        }
        let a = self.grad[j - 1].evaluate(&coords)?;
        if a.is_zero() {
            let residual = self.u.evaluate(&coords)?;
            if residual.is_zero() {
                return Ok(Some(self.classify(coords, residual)));
            }
            return Ok(None);
        }
        let mut slice = coords.clone();
        slice[j - 1] = Rational::zero();
        let b = self.u.evaluate(&slice)?;
        coords[j - 1] = -(b / &a);
        // Valid because u is multilinear, so u = A*x_j + B exactly.
        let residual = self.u.evaluate(&coords)?;
        if !residual.is_zero() {
            return Err(Error::ContractViolation(format!(
                "solved coordinate x{j} left residual {residual}"
            )));
        }
        Ok(Some(self.classify(coords, residual)))
    }

    /// Draw random small-rational coordinates and solve one coordinate so
    /// the point lies on `{u = 0}` exactly. Degenerate draws (every linear
    /// coefficient zero) trigger a full redraw rather than accepting the
    /// `u = 0` slice, so returned points are generic.
    pub fn sample_zero_point(&self, rng: &mut impl Rng) -> Result<ZeroSetPoint> {
        let n = self.nvars();
        for _ in 0..SAMPLER_RETRY_BUDGET {
            let coords = small_rational_point(rng, n);
            let start = rng.gen_range(1..=n);
            for offset in 0..n {
                let j = (start - 1 + offset) % n + 1;
                let a = self.grad[j - 1].evaluate(&coords)?;
                if a.is_zero() {
                    continue;
                }
                return Ok(self
                    .complete_zero_point(coords, j)?
                    .expect("nonzero linear coefficient"));
            }
        }
        Err(Error::SamplerExhausted)
    }

    /// Evaluate the mean-curvature expression `(grad u)^2 lap u - u_i u_j u_ij`
    /// at a nonsingular zero-set point, in floating point.
    pub fn mean_curvature_at(&self, point: &ZeroSetPoint) -> Result<CurvatureSample> {
        let n = self.nvars();
        if point.coords.len() != n {
            return Err(Error::PointLength { got: point.coords.len(), expected: n });
        }
        let xf: Vec<f64> = point.coords.iter().map(rational_to_f64).collect();
        let grad_vals: Vec<f64> =
            self.grad.iter().map(|g| g.evaluate_f64(&xf)).collect::<Result<_>>()?;
        let grad_sq: f64 = grad_vals.iter().map(|v| v * v).sum();
        let gradient_norm = grad_sq.sqrt();
        let point_norm = xf.iter().map(|v| v * v).sum::<f64>().sqrt();
        let tol = SINGULAR_TOLERANCE_FACTOR * point_norm.powi(self.ell as i32 - 1);
        if gradient_norm <= tol {
            return Err(Error::SingularPoint { norm: gradient_norm, tol });
        }
        let lap = self.laplacian.evaluate_f64(&xf)?;
        let mut contraction = 0.0;
        for (&(i, j), uij) in &self.hess {
            let v = uij.evaluate_f64(&xf)?;
            let w = grad_vals[i - 1] * grad_vals[j - 1] * v;
            contraction += if i == j { w } else { 2.0 * w };
        }
        let numerator = grad_sq * lap - contraction;
        Ok(CurvatureSample {
            point: point.clone(),
            gradient_norm,
            mean_curvature_numerator: numerator,
            normalized_mean_curvature: numerator / (gradient_norm * grad_sq),
        })
    }
}

/// `sum_ij u_i u_j u_ij` for `u = P_l`, computed entirely in x-coordinates.
pub fn cubic_form(ell: usize) -> Polynomial {
    PfaffianCone::new(ell).cubic_form()
}

/// Verify harmonicity and the cubic identity for `P_l`, extracting `rho`
/// and cross-checking it against `Tr[S^2]/12`.
pub fn verify_minimality(ell: usize, mode: Mode) -> Result<MinimalityCertificate> {
    if ell < 2 {
        return Err(Error::HessianSize(ell));
    }
    match mode {
        Mode::Symbolic => {
            if ell > SYMBOLIC_BOUND {
                return Err(Error::SymbolicInfeasible { ell, bound: SYMBOLIC_BOUND });
            }
            let cone = PfaffianCone::new(ell);
            let laplacian_zero = cone.laplacian.is_zero();
            let cubic = cone.cubic_form();
            let (rho, remainder) = cubic.divide_exact(&cone.u)?;
            let cubic_identity_holds = remainder.is_zero();
            let trace = skew::trace_s2(ell)?.scale(&ratio(1, 12));
            let rho_matches_trace = rho == trace;
            let rho_homogeneous =
                rho.is_homogeneous() && rho.degree() == Some(2 * ell as u32 - 4);
            Ok(MinimalityCertificate {
                ell,
                laplacian_zero,
                cubic_identity_holds,
                rho: Some(rho),
                rho_matches_trace,
                rho_homogeneous: Some(rho_homogeneous),
                method: mode,
                witness: None,
            })
        }
        Mode::Randomized { trials, seed } => {
            let cone = PfaffianCone::new(ell);
            let laplacian_zero = cone.laplacian.is_zero();
            let tensor = HessianTensor::new(ell)?;
            let mut witness = None;
            for trial in 0..trials {
                let mut rng = trial_rng(seed, trial);
                let point = integer_point(&mut rng, cone.nvars());
                let lhs = cone.cubic_form_at(&point)?;
                let trace = tensor.evaluate(&point)?.trace_s2();
                let rhs = trace * ratio(1, 12) * cone.u.evaluate(&point)?;
                if lhs != rhs {
                    witness = Some(format!(
                        "trial {trial}: point {:?}",
                        point.iter().map(ToString::to_string).collect::<Vec<_>>()
                    ));
                    break;
                }
            }
            let ok = witness.is_none();
            Ok(MinimalityCertificate {
                ell,
                laplacian_zero,
                cubic_identity_holds: ok,
                rho: None,
                rho_matches_trace: ok,
                rho_homogeneous: None,
                method: mode,
                witness,
            })
        }
    }
}

/// Sample one exact zero-set point of `P_l`.
pub fn sample_zero_point(ell: usize, seed: u64) -> Result<ZeroSetPoint> {
    let cone = PfaffianCone::new(ell);
    let mut rng = trial_rng(seed, 0);
    cone.sample_zero_point(&mut rng)
}

/// Mean curvature at a given zero-set point of `P_l`.
pub fn mean_curvature_at(ell: usize, point: &ZeroSetPoint) -> Result<CurvatureSample> {
    PfaffianCone::new(ell).mean_curvature_at(point)
}

/// The symmetric symbolic matrix with `n(n+1)/2` independent variables,
/// upper triangle (including the diagonal) numbered row-major.
pub fn symmetric_symbolic_matrix(n: usize) -> PolyMatrix<Rational> {
    let nv = n * (n + 1) / 2;
    let idx = |a: usize, b: usize| -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        (a - 1) * n - (a - 1) * a / 2 + (b - a) + a
    };
    let rows = (1..=n)
        .map(|a| {
            (1..=n)
                .map(|b| {
                    Polynomial::from_terms(nv, [(Monomial::var(idx(a, b)), rat(1))])
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("square by construction")
}

/// The `n x n` matrix of `n^2` independent variables, row-major.
pub fn unconstrained_symbolic_matrix(n: usize) -> PolyMatrix<Rational> {
    let nv = n * n;
    let rows = (1..=n)
        .map(|a| {
            (1..=n)
                .map(|b| {
                    Polynomial::from_terms(nv, [(Monomial::var((a - 1) * n + b), rat(1))])
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("square by construction")
}

/// Negative control: for the determinant of a symmetric matrix, both the
/// Laplacian and the remainder of `u_i u_j u_ij / u` are nonzero.
/// Returns `(laplacian, remainder)`.
pub fn symmetric_counterexample(n: usize) -> Result<(Polynomial, Polynomial)> {
    if n < 2 {
        return Err(Error::Dimension(format!("need n >= 2, got {n}")));
    }
    let u = symmetric_symbolic_matrix(n).determinant();
    let cone = PfaffianCone::for_polynomial(n, u.clone());
    let (_, remainder) = cone.cubic_form().divide_exact(&u)?;
    Ok((u.laplacian(), remainder))
}

/// Certificate for the determinant of a matrix with unconstrained entries.
#[derive(Debug, Clone, Serialize)]
pub struct DeterminantCertificate {
    pub n: usize,
    pub harmonic: bool,
    pub cubic_identity_holds: bool,
    pub rho: Polynomial,
    pub rho_homogeneous: bool,
}

impl DeterminantCertificate {
    pub fn pass(&self) -> bool {
        self.harmonic && self.cubic_identity_holds && self.rho_homogeneous
    }
}

/// Positive control: the determinant of the fully independent `n x n`
/// matrix is harmonic and satisfies the cubic identity with polynomial rho.
pub fn unconstrained_determinant_check(n: usize) -> Result<DeterminantCertificate> {
    if n < 2 {
        return Err(Error::Dimension(format!("need n >= 2, got {n}")));
    }
    let u = unconstrained_symbolic_matrix(n).determinant();
    let cone = PfaffianCone::for_polynomial(n, u.clone());
    let (rho, remainder) = cone.cubic_form().divide_exact(&u)?;
    let rho_homogeneous = rho.is_homogeneous() && rho.degree() == Some(2 * n as u32 - 4);
    Ok(DeterminantCertificate {
        n,
        harmonic: u.laplacian().is_zero(),
        cubic_identity_holds: remainder.is_zero(),
        rho,
        rho_homogeneous,
    })
}

/// The `l = 2` Pfaffian after the unnormalized 45-degree plane rotations
/// `(x_a, x_b) -> (x_a + x_b, x_b - x_a)` in the (1,6), (2,5), (3,4) planes.
#[derive(Debug, Clone, Serialize)]
pub struct QuadricCongruence {
    pub substituted: Polynomial,
    pub diagonal: bool,
    pub positive_squares: usize,
    pub negative_squares: usize,
}

impl QuadricCongruence {
    /// Diagonal quadratic form of signature (3, 3).
    pub fn pass(&self) -> bool {
        self.diagonal && self.positive_squares == 3 && self.negative_squares == 3
    }
}

pub fn quadric_congruence() -> QuadricCongruence {
    let p2 = skew::pfaffian(2);
    let var = |v: usize| Polynomial::<Rational>::var(6, v).expect("in range");
    let mut map = BTreeMap::new();
    for (a, b) in [(1usize, 6usize), (2, 5), (3, 4)] {
        map.insert(a, var(a).plus(&var(b)));
        map.insert(b, var(b).minus(&var(a)));
    }
    let substituted = p2.substitute(&map);
    let mut diagonal = true;
    let mut positive_squares = 0;
    let mut negative_squares = 0;
    for (m, c) in substituted.terms() {
        let is_square = m.degree() == 2 && m.iter().count() == 1;
        if !is_square {
            diagonal = false;
            continue;
        }
        if c.is_positive() {
            positive_squares += 1;
        } else {
            negative_squares += 1;
        }
    }
    QuadricCongruence { substituted, diagonal, positive_squares, negative_squares }
}

/// Boolean surface of [`quadric_congruence`].
pub fn quadric_congruence_check() -> bool {
    quadric_congruence().pass()
}

/// Cross-check used by property tests: the cubic form computed in
/// x-coordinates must equal `(1/12) * P_l * Tr[S^2]` computed purely in
/// matrix-index form.
pub fn cubic_form_via_traces(ell: usize) -> Result<Polynomial> {
    let p = SkewSymbolicMatrix::new(ell).pfaffian();
    Ok(skew::trace_s2(ell)?.times(&p).scale(&ratio(1, 12)))
}
