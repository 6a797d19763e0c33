//! The explicit correspondence between the 6x6 antisymmetric variable
//! matrix and su(4): the anti-hermitian 4x4 matrix `Z` in the fifteen real
//! variables, the conjugation map between the `X^T = -MXM` realization of
//! complexified so(6) and antisymmetric matrices, and the headline identity
//! `(i/3) Tr[Z^3] = P_3`.

use rand::Rng;

use crate::matrix::{ComplexMatrix, PolyMatrix};
use crate::ring::{rat, ratio, GaussianRational, Monomial, Polynomial, Rational};
use crate::rng::{small_rational, trial_rng};
use crate::skew;
use crate::{Error, Result};

const NV: usize = 15;

fn linear(terms: &[(usize, i64)]) -> Polynomial<Rational> {
    Polynomial::from_terms(NV, terms.iter().map(|&(v, s)| (Monomial::var(v), rat(s))))
}

/// The symmetric real part of `2 Z / i` (upper triangle; mirrored below).
fn symmetric_part() -> [[Vec<(usize, i64)>; 4]; 4] {
    let mut a: [[Vec<(usize, i64)>; 4]; 4] = Default::default();
    a[0][0] = vec![(3, 1), (8, 1), (12, -1)];
    a[0][1] = vec![(9, 1), (11, 1)];
    a[0][2] = vec![(5, -1), (10, -1)];
    a[0][3] = vec![(7, 1), (4, -1)];
    a[1][1] = vec![(3, 1), (12, 1), (8, -1)];
    a[1][2] = vec![(4, 1), (7, 1)];
    a[1][3] = vec![(10, 1), (5, -1)];
    a[2][2] = vec![(8, 1), (12, 1), (3, -1)];
    a[2][3] = vec![(11, 1), (9, -1)];
    a[3][3] = vec![(3, -1), (8, -1), (12, -1)];
    mirror(&mut a, false);
    a
}

fn mirror(m: &mut [[Vec<(usize, i64)>; 4]; 4], negate: bool) {
    for (i, j) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
        m[i][j] = if negate {
            m[j][i].iter().map(|&(v, s)| (v, -s)).collect()
        } else {
            m[j][i].clone()
        };
    }
}

/// The antisymmetric real part of `2 Z` (upper triangle; negated below).
fn antisymmetric_part() -> [[Vec<(usize, i64)>; 4]; 4] {
    let mut b: [[Vec<(usize, i64)>; 4]; 4] = Default::default();
    b[0][1] = vec![(15, 1), (6, 1)];
    b[0][2] = vec![(14, -1), (2, -1)];
    b[0][3] = vec![(1, 1), (13, -1)];
    b[1][2] = vec![(1, 1), (13, 1)];
    b[1][3] = vec![(2, 1), (14, -1)];
    b[2][3] = vec![(6, 1), (15, -1)];
    mirror(&mut b, true);
    b
}

/// The anti-hermitian element of su(4) carrying the fifteen variables:
/// `Z = (i/2) * (symmetric part) + (1/2) * (antisymmetric part)`.
pub fn build_z() -> ComplexMatrix {
    let a = symmetric_part();
    let b = antisymmetric_part();
    let half_i = GaussianRational::new(Rational::from(rat(0)), ratio(1, 2));
    let half = GaussianRational::new(ratio(1, 2), rat(0));
    let rows = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let re = linear(&b[i][j]).to_gaussian().scale(&half);
                    let im = linear(&a[i][j]).to_gaussian().scale(&half_i);
                    re.plus(&im)
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("square by construction")
}

/// `Z^dagger = -Z` as an exact polynomial identity.
pub fn verify_anti_hermitian(z: &ComplexMatrix) -> bool {
    z.is_anti_hermitian()
}

/// `Tr[Z^2]`; a real polynomial, pinned to `-(x1^2 + ... + x15^2)`.
pub fn trace_z_squared() -> Polynomial<GaussianRational> {
    let z = build_z();
    z.mul(&z).expect("same dimension").trace()
}

/// `(i/3) Tr[Z^3]` as a Gaussian-rational polynomial.
pub fn trace_z_cubed_over_3i() -> Polynomial<GaussianRational> {
    let z = build_z();
    let z3 = z.mul(&z).expect("same dimension").mul(&z).expect("same dimension");
    let third_i = GaussianRational::new(rat(0), ratio(1, 3));
    z3.trace().scale(&third_i)
}

/// The headline identity: `(i/3) Tr[Z^3]` has vanishing imaginary part and
/// real part equal to the degree-3 Pfaffian, term for term.
pub fn verify_trace_cubed_identity() -> bool {
    let lhs = trace_z_cubed_over_3i();
    lhs.imag_part().is_zero() && lhs.real_part() == skew::pfaffian(3)
}

/// The block-swap matrix `[[0, 1], [1, 0]]` defining the realization `L`.
pub fn block_swap_matrix(nvars: usize) -> ComplexMatrix {
    let mut m = PolyMatrix::zero(6, nvars);
    for i in 0..3 {
        *m.at_mut(i, i + 3) = Polynomial::one(nvars);
        *m.at_mut(i + 3, i) = Polynomial::one(nvars);
    }
    m
}

/// Membership test for `L = { X : X^T = -M X M }` with block-swap `M`.
/// The defect `X^T + M X M` vanishes exactly on members.
#[derive(Debug, Clone)]
pub struct LMembershipWitness {
    pub candidate: ComplexMatrix,
    pub defect: ComplexMatrix,
}

impl LMembershipWitness {
    pub fn is_member(&self) -> bool {
        self.defect.is_zero()
    }
}

pub fn check_l_membership(x: &ComplexMatrix) -> Result<LMembershipWitness> {
    if x.dim() != 6 {
        return Err(Error::Dimension(format!("L lives in gl(6), got dimension {}", x.dim())));
    }
    let swap = block_swap_matrix(x.nvars());
    let defect = x.transpose().add(&swap.mul(x)?.mul(&swap)?)?;
    Ok(LMembershipWitness { candidate: x.clone(), defect })
}

/// The conjugation `X -> Y = (1/2) D K X K' D'` carrying `L` to complex
/// antisymmetric 6x6 matrices, with 3x3 blocks
/// `D = [[1,0],[0,-i]]`, `K = [[1,1],[-1,1]]`, `K' = [[1,-1],[1,1]]`,
/// `D' = [[1,0],[0,i]]`.
pub fn map_x_to_y(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    if x.dim() != 6 {
        return Err(Error::Dimension(format!("the map acts on gl(6), got dimension {}", x.dim())));
    }
    let nv = x.nvars();
    let gauss = |re: i64, im: i64| GaussianRational::new(rat(re), rat(im));
    let block = |cells: [[GaussianRational; 2]; 2]| -> ComplexMatrix {
        let mut m = PolyMatrix::zero(6, nv);
        for (bi, row) in cells.iter().enumerate() {
            for (bj, c) in row.iter().enumerate() {
                for k in 0..3 {
                    *m.at_mut(3 * bi + k, 3 * bj + k) = Polynomial::constant(nv, c.clone());
                }
            }
        }
        m
    };
    let d1 = block([[gauss(1, 0), gauss(0, 0)], [gauss(0, 0), gauss(0, -1)]]);
    let k1 = block([[gauss(1, 0), gauss(1, 0)], [gauss(-1, 0), gauss(1, 0)]]);
    let k2 = block([[gauss(1, 0), gauss(-1, 0)], [gauss(1, 0), gauss(1, 0)]]);
    let d2 = block([[gauss(1, 0), gauss(0, 0)], [gauss(0, 0), gauss(0, 1)]]);
    let half = GaussianRational::new(ratio(1, 2), rat(0));
    Ok(d1.mul(&k1)?.mul(x)?.mul(&k2)?.mul(&d2)?.scale(&half))
}

/// Elementary matrix `E_ab` (1-based) over constant Gaussian rationals.
pub fn elementary(a: usize, b: usize, nvars: usize) -> ComplexMatrix {
    let mut m = PolyMatrix::zero(6, nvars);
    *m.at_mut(a - 1, b - 1) = Polynomial::one(nvars);
    m
}

/// The three matrices taken as the positive simple roots of `L`:
/// `E23 - E65`, `E12 - E54`, `E26 - E35`.
pub fn simple_root_matrices() -> [ComplexMatrix; 3] {
    let e = |a, b| elementary(a, b, 0);
    [
        e(2, 3).sub(&e(6, 5)).expect("same dimension"),
        e(1, 2).sub(&e(5, 4)).expect("same dimension"),
        e(2, 6).sub(&e(3, 5)).expect("same dimension"),
    ]
}

/// A random exact-rational member of `L`, built by projecting a random
/// matrix `R` onto the constraint: `X = (R - M R^T M) / 2`.
pub fn random_l_member(rng: &mut impl Rng) -> ComplexMatrix {
    let rows = (0..6)
        .map(|_| {
            (0..6)
                .map(|_| Polynomial::constant(0, GaussianRational::from_real(small_rational(rng))))
                .collect()
        })
        .collect();
    let r: ComplexMatrix = PolyMatrix::from_rows(rows).expect("square by construction");
    let swap = block_swap_matrix(0);
    let projected = r
        .sub(&swap.mul(&r.transpose()).expect("same dim").mul(&swap).expect("same dim"))
        .expect("same dim");
    projected.scale(&GaussianRational::new(ratio(1, 2), rat(0)))
}

/// Seeded batch of random `L` members.
pub fn random_l_members(count: usize, seed: u64) -> Vec<ComplexMatrix> {
    (0..count)
        .map(|k| {
            let mut rng = trial_rng(seed, k as u64);
            random_l_member(&mut rng)
        })
        .collect()
}
