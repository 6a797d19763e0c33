//! Exact construction and machine verification of the minimal hypersurfaces
//! cut out by Pfaffians of antisymmetric matrices of independent variables.
//!
//! The zero set of the degree-`l` Pfaffian `P_l` in `n = l(2l-1)` variables
//! is a cone with vanishing mean curvature. This crate builds `P_l` exactly,
//! proves the defining identities by exact polynomial arithmetic (harmonicity,
//! `u_i u_j u_ij = rho * u`, the trace formulas, the su(4) cubic for `l = 3`,
//! the quartic singular locus of the `l = 3` cone), and samples the zero set
//! numerically to confirm the curvature vanishes.
//!
//! Entry points:
//! - [`skew`]: the symbolic matrix, Pfaffians, sub-Pfaffians, the Hessian
//!   tensor and its traces, characteristic-polynomial coefficients.
//! - [`minimality`]: minimality certificates, zero-set sampling, curvature,
//!   and the determinant comparison cases.
//! - [`hsiang`]: the explicit correspondence with su(4) for `l = 3`.
//! - [`singular`]: the quartic singular locus of the `l = 3` cone.
//! - [`cli`]: the verification command line; see also `examples/`.

pub mod cli;
pub mod hsiang;
pub mod matrix;
pub mod minimality;
pub mod report;
pub mod ring;
mod rng;
pub mod singular;
pub mod skew;

pub use ring::{GaussianRational, Monomial, Polynomial, Rational};

/// Library version string echoed in every run report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("variable index {index} out of range 1..={nvars}")]
    VariableIndex { index: usize, nvars: usize },

    #[error("evaluation point has length {got}, expected {expected}")]
    PointLength { got: usize, expected: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("matrix index ({a},{b}) out of range for dimension {dim}")]
    MatrixIndex { a: usize, b: usize, dim: usize },

    #[error("row subset must have even size and distinct in-range entries: {0}")]
    BadSubset(String),

    #[error("hessian tensor requires l >= 2, got {0}")]
    HessianSize(usize),

    #[error("symbolic mode is infeasible for l = {ell}; the bound is l <= {bound}")]
    SymbolicInfeasible { ell: usize, bound: usize },

    #[error("zero-set sampler exhausted its retry budget; check the RNG configuration")]
    SamplerExhausted,

    #[error("singular point: |grad u| = {norm:.3e} is at or below the tolerance {tol:.3e}")]
    SingularPoint { norm: f64, tol: f64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("cannot parse polynomial text: {0}")]
    Parse(String),

    #[error("exact-arithmetic contract violated: {0}")]
    ContractViolation(String),

    #[error("P_{ell} has {terms} terms, over the emission size guard; pass --force to expand")]
    SizeGuard { ell: usize, terms: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
