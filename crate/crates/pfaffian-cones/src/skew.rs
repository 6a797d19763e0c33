//! The antisymmetric matrix of independent variables, its Pfaffian and
//! sub-Pfaffians, matrix-indexed derivatives, the Hessian tensor and its
//! traces, and characteristic-polynomial coefficients.
//!
//! Matrix-index derivatives use the convention that `d/dM_ab` for `a < b`
//! is the derivative with respect to the single independent variable
//! `x_(a,b)`, extended antisymmetrically: `dp/dM_ba := -dp/dM_ab`, and
//! `dp/dM_aa := 0`. Every identity in this module — first derivatives as
//! signed complementary sub-Pfaffians, the total antisymmetry of the
//! Hessian tensor, the closed trace forms — is stated for this convention;
//! treating all `(2l)^2` entries as independent changes the identities by
//! integer factors.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::matrix::{rational_determinant, PolyMatrix};
use crate::ring::{rat, ratio, Monomial, Polynomial, Rational};
use crate::{Error, Result};

/// Number of independent variables for matrix size `2l`.
pub fn nvars(ell: usize) -> usize {
    ell * (2 * ell - 1)
}

/// `(2l - 1)!!`, the number of perfect matchings of `2l` points and hence
/// the term count of the degree-`l` Pfaffian.
pub fn double_factorial_odd(ell: usize) -> u64 {
    (0..ell).map(|k| 2 * k as u64 + 1).product()
}

/// Row-major bijection between strict upper-triangle positions `(a, b)`,
/// `1 <= a < b <= 2l`, and variable indices `1..=l(2l-1)`:
/// `(1,2) -> 1, (1,3) -> 2, ..., (1,2l) -> 2l-1, (2,3) -> 2l, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIndexMap {
    ell: usize,
}

impl PairIndexMap {
    pub fn new(ell: usize) -> Self {
        assert!(ell >= 1, "matrix size must be positive");
        Self { ell }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dim(&self) -> usize {
        2 * self.ell
    }

    pub fn nvars(&self) -> usize {
        nvars(self.ell)
    }

    /// Variable index for the pair `(a, b)` with `a < b`.
    pub fn forward(&self, a: usize, b: usize) -> Result<usize> {
        let m = self.dim();
        if a == 0 || b == 0 || a >= b || b > m {
            return Err(Error::MatrixIndex { a, b, dim: m });
        }
        Ok((a - 1) * m - (a - 1) * a / 2 + (b - a))
    }

    /// Pair `(a, b)` for the variable index `i`.
    pub fn inverse(&self, i: usize) -> Result<(usize, usize)> {
        if i == 0 || i > self.nvars() {
            return Err(Error::VariableIndex { index: i, nvars: self.nvars() });
        }
        let m = self.dim();
        let mut rest = i;
        for a in 1..m {
            let row_len = m - a;
            if rest <= row_len {
                return Ok((a, a + rest));
            }
            rest -= row_len;
        }
        unreachable!("index bounds were checked");
    }
}

/// The `2l x 2l` antisymmetric matrix whose strict upper triangle holds the
/// independent variables `x1..xn` in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkewSymbolicMatrix {
    index: PairIndexMap,
}

impl SkewSymbolicMatrix {
    pub fn new(ell: usize) -> Self {
        Self { index: PairIndexMap::new(ell) }
    }

    pub fn ell(&self) -> usize {
        self.index.ell()
    }

    pub fn dim(&self) -> usize {
        self.index.dim()
    }

    pub fn nvars(&self) -> usize {
        self.index.nvars()
    }

    pub fn pair_index(&self) -> PairIndexMap {
        self.index
    }

    /// Entry `(a, b)` as a polynomial: `x_(a,b)` above the diagonal, its
    /// negation below, zero on the diagonal. Indices are 1-based.
    pub fn entry(&self, a: usize, b: usize) -> Result<Polynomial> {
        let m = self.dim();
        if a == 0 || b == 0 || a > m || b > m {
            return Err(Error::MatrixIndex { a, b, dim: m });
        }
        let n = self.nvars();
        if a == b {
            return Ok(Polynomial::zero(n));
        }
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let v = self.index.forward(lo, hi)?;
        Ok(Polynomial::from_terms(n, [(Monomial::var(v), rat(sign))]))
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix<Rational> {
        let m = self.dim();
        let rows = (1..=m)
            .map(|a| (1..=m).map(|b| self.entry(a, b).expect("in range")).collect())
            .collect();
        PolyMatrix::from_rows(rows).expect("square by construction")
    }

    /// Evaluate the matrix at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        if point.len() != self.nvars() {
            return Err(Error::PointLength { got: point.len(), expected: self.nvars() });
        }
        let m = self.dim();
        let mut out = vec![vec![Rational::zero(); m]; m];
        for a in 1..=m {
            for b in (a + 1)..=m {
                let v = self.index.forward(a, b)?;
                out[a - 1][b - 1] = point[v - 1].clone();
                out[b - 1][a - 1] = -point[v - 1].clone();
            }
        }
        Ok(out)
    }

    /// The Pfaffian, by recursive expansion along the first remaining row
    /// with memoization on index subsets. The result is homogeneous of
    /// degree `l` with `(2l-1)!!` monomials, every coefficient `+-1`.
    pub fn pfaffian(&self) -> Polynomial {
        let full: u32 = (1u32 << self.dim()) - 1;
        let mut memo = HashMap::new();
        self.pfaffian_mask(full, &mut memo)
    }

    /// Pfaffian of the principal submatrix on `rows` (even size, sorted
    /// ascending defines the submatrix). The empty subset yields 1.
    pub fn sub_pfaffian(&self, rows: &[usize]) -> Result<Polynomial> {
        if !rows.len().is_multiple_of(2) {
            return Err(Error::BadSubset(format!("size {} is odd", rows.len())));
        }
        let mut mask: u32 = 0;
        for &r in rows {
            if r == 0 || r > self.dim() {
                return Err(Error::BadSubset(format!("row {r} out of range 1..={}", self.dim())));
            }
            let bit = 1u32 << (r - 1);
            if mask & bit != 0 {
                return Err(Error::BadSubset(format!("row {r} repeated")));
            }
            mask |= bit;
        }
        let mut memo = HashMap::new();
        Ok(self.pfaffian_mask(mask, &mut memo))
    }

    fn pfaffian_mask(&self, mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Polynomial {
        let n = self.nvars();
        if mask == 0 {
            return Polynomial::one(n);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let a = mask.trailing_zeros() as usize; // 0-based row position
        let mut acc = Polynomial::zero(n);
        let mut positive = true;
        for b in (a + 1)..self.dim() {
            if mask & (1 << b) == 0 {
                continue;
            }
            let rest = mask & !(1 << a) & !(1 << b);
            let sub = self.pfaffian_mask(rest, memo);
            let v = self.index.forward(a + 1, b + 1).expect("bits are in range");
            let coeff = if positive { rat(1) } else { rat(-1) };
            acc.add_assign(&sub.mul_term(&Monomial::var(v), &coeff));
            positive = !positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// Symbolic determinant; equals the squared Pfaffian.
    pub fn determinant(&self) -> Polynomial {
        self.to_poly_matrix().determinant()
    }

    /// Exact determinant of the matrix evaluated at a rational point.
    pub fn determinant_at(&self, point: &[Rational]) -> Result<Rational> {
        rational_determinant(self.evaluate(point)?)
    }

    /// First matrix derivatives of the Pfaffian, keyed by ordered pairs
    /// `(a, b)` with `a < b`. Equals `partial(pfaffian, pair_index(a, b))`
    /// and `(-1)^(a+b+1)` times the complementary sub-Pfaffian.
    pub fn grad_matrix(&self) -> BTreeMap<(usize, usize), Polynomial> {
        let p = self.pfaffian();
        let mut out = BTreeMap::new();
        for a in 1..=self.dim() {
            for b in (a + 1)..=self.dim() {
                let v = self.index.forward(a, b).expect("in range");
                out.insert((a, b), p.partial(v).expect("in range"));
            }
        }
        out
    }

    pub fn hessian_tensor(&self) -> Result<HessianTensor> {
        HessianTensor::new(self.ell())
    }
}

/// Convenience constructors mirroring the operation surface.
pub fn pair_index(ell: usize, a: usize, b: usize) -> Result<usize> {
    PairIndexMap::new(ell).forward(a, b)
}

pub fn pair_index_inverse(ell: usize, i: usize) -> Result<(usize, usize)> {
    PairIndexMap::new(ell).inverse(i)
}

pub fn pfaffian(ell: usize) -> Polynomial {
    SkewSymbolicMatrix::new(ell).pfaffian()
}

pub fn determinant(ell: usize) -> Polynomial {
    SkewSymbolicMatrix::new(ell).determinant()
}

pub fn sub_pfaffian(ell: usize, rows: &[usize]) -> Result<Polynomial> {
    SkewSymbolicMatrix::new(ell).sub_pfaffian(rows)
}

pub fn grad_matrix(ell: usize) -> BTreeMap<(usize, usize), Polynomial> {
    SkewSymbolicMatrix::new(ell).grad_matrix()
}

pub fn hessian_tensor(ell: usize) -> Result<HessianTensor> {
    HessianTensor::new(ell)
}

pub fn trace_s2(ell: usize) -> Result<Polynomial> {
    Ok(HessianTensor::new(ell)?.trace_s2())
}

pub fn trace_s3(ell: usize) -> Result<Polynomial> {
    Ok(HessianTensor::new(ell)?.trace_s3())
}

/// The four-index tensor of second matrix derivatives of the Pfaffian,
/// `S_ab,cd = d^2 p / dM_ab dM_cd` under the module's derivative convention.
///
/// Values are stored once per unordered pair of ordered index pairs, as the
/// directly computed second partials; `get` extends them to arbitrary index
/// positions by the definitional sign rules (a swap inside a pair negates,
/// pair exchange is symmetric, a repeated index inside a pair gives zero).
/// The stronger statement — total antisymmetry in all four indices — is a
/// theorem about Pfaffians, exercised by the test suite rather than wired
/// into the lookup.
#[derive(Debug, Clone)]
pub struct HessianTensor {
    ell: usize,
    index: PairIndexMap,
    /// Keyed by variable indices `(i, j)` with `i <= j`; zero entries absent.
    canonical: BTreeMap<(usize, usize), Polynomial>,
}

impl HessianTensor {
    pub fn new(ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::HessianSize(ell));
        }
        let matrix = SkewSymbolicMatrix::new(ell);
        let index = matrix.pair_index();
        let p = matrix.pfaffian();
        let n = matrix.nvars();
        let mut canonical = BTreeMap::new();
        for i in 1..=n {
            let pi = p.partial(i).expect("in range");
            for j in i..=n {
                let pij = pi.partial(j).expect("in range");
                if !pij.is_zero() {
                    canonical.insert((i, j), pij);
                }
            }
        }
        Ok(Self { ell, index, canonical })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn dim(&self) -> usize {
        2 * self.ell
    }

    pub fn nvars(&self) -> usize {
        self.index.nvars()
    }

    /// Stored entry and sign for arbitrary 1-based indices; `None` for a
    /// structural zero (repeated index inside a pair, or a vanishing second
    /// derivative).
    pub fn get_signed(&self, a: usize, b: usize, c: usize, d: usize) -> Option<(&Polynomial, bool)> {
        if a == b || c == d {
            return None;
        }
        let (a, b, s1) = if a < b { (a, b, false) } else { (b, a, true) };
        let (c, d, s2) = if c < d { (c, d, false) } else { (d, c, true) };
        let i = self.index.forward(a, b).ok()?;
        let j = self.index.forward(c, d).ok()?;
        let key = (i.min(j), i.max(j));
        self.canonical.get(&key).map(|p| (p, s1 ^ s2))
    }

    /// Owned entry with the sign applied; zero when absent.
    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> Polynomial {
        match self.get_signed(a, b, c, d) {
            Some((p, false)) => p.clone(),
            Some((p, true)) => p.negated(),
            None => Polynomial::zero(self.nvars()),
        }
    }

    /// `Tr[S^2] = sum S_ab,cd S_cd,ab` with all four indices running over
    /// the full range independently.
    pub fn trace_s2(&self) -> Polynomial {
        let m = self.dim();
        let mut acc = Polynomial::zero(self.nvars());
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    for d in 1..=m {
                        let Some((p1, s1)) = self.get_signed(a, b, c, d) else { continue };
                        let Some((p2, s2)) = self.get_signed(c, d, a, b) else { continue };
                        let prod = p1.times(p2);
                        if s1 ^ s2 {
                            acc.sub_assign(&prod);
                        } else {
                            acc.add_assign(&prod);
                        }
                    }
                }
            }
        }
        acc
    }

    /// `Tr[S^3] = sum S_ab,cd S_cd,ef S_ef,ab` over all six indices.
    pub fn trace_s3(&self) -> Polynomial {
        let m = self.dim();
        let mut acc = Polynomial::zero(self.nvars());
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    for d in 1..=m {
                        let Some((p1, s1)) = self.get_signed(a, b, c, d) else { continue };
                        for e in 1..=m {
                            for f in 1..=m {
                                let Some((p2, s2)) = self.get_signed(c, d, e, f) else { continue };
                                let Some((p3, s3)) = self.get_signed(e, f, a, b) else { continue };
                                let prod = p1.times(p2).times(p3);
                                if s1 ^ s2 ^ s3 {
                                    acc.sub_assign(&prod);
                                } else {
                                    acc.add_assign(&prod);
                                }
                            }
                        }
                    }
                }
            }
        }
        acc
    }

    /// Evaluate every stored entry at a rational point, keeping the same
    /// sign-extension access rules. Used for randomized identity testing.
    pub fn evaluate(&self, point: &[Rational]) -> Result<EvaluatedHessian> {
        let mut values = BTreeMap::new();
        for (key, p) in &self.canonical {
            let v = p.evaluate(point)?;
            if !v.is_zero() {
                values.insert(*key, v);
            }
        }
        Ok(EvaluatedHessian { index: self.index, values })
    }
}

/// A Hessian tensor evaluated at a point: scalar entries, same sign rules.
#[derive(Debug, Clone)]
pub struct EvaluatedHessian {
    index: PairIndexMap,
    values: BTreeMap<(usize, usize), Rational>,
}

impl EvaluatedHessian {
    pub fn get_signed(&self, a: usize, b: usize, c: usize, d: usize) -> Option<(&Rational, bool)> {
        if a == b || c == d {
            return None;
        }
        let (a, b, s1) = if a < b { (a, b, false) } else { (b, a, true) };
        let (c, d, s2) = if c < d { (c, d, false) } else { (d, c, true) };
        let i = self.index.forward(a, b).ok()?;
        let j = self.index.forward(c, d).ok()?;
        let key = (i.min(j), i.max(j));
        self.values.get(&key).map(|v| (v, s1 ^ s2))
    }

    pub fn trace_s2(&self) -> Rational {
        let m = self.index.dim();
        let mut acc = Rational::zero();
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    for d in 1..=m {
                        let Some((v1, s1)) = self.get_signed(a, b, c, d) else { continue };
                        let Some((v2, s2)) = self.get_signed(c, d, a, b) else { continue };
                        let prod = v1 * v2;
                        if s1 ^ s2 {
                            acc -= prod;
                        } else {
                            acc += prod;
                        }
                    }
                }
            }
        }
        acc
    }
}

/// Coefficients of the characteristic polynomial
/// `det(lambda I - M) = lambda^(2l) + c_(2l-2) lambda^(2l-2) + ... + c_0`.
/// Odd-power coefficients vanish identically; the constructor checks this
/// rather than assuming it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyCoeffs {
    ell: usize,
    /// `even[m]` is the coefficient of `lambda^(2m)`, for `m = 0..l-1`.
    even: Vec<Polynomial>,
}

impl serde::Serialize for CharPolyCoeffs {
    /// Wire format: an ordered list of coefficients tagged with the power
    /// of lambda they multiply.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Tagged<'a> {
            power: usize,
            coefficient: &'a Polynomial,
        }
        let tagged: Vec<Tagged> = self
            .even
            .iter()
            .enumerate()
            .map(|(m, c)| Tagged { power: 2 * m, coefficient: c })
            .collect();
        tagged.serialize(serializer)
    }
}

impl CharPolyCoeffs {
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Coefficient of `lambda^(2m)`; `m` ranges over `0..l`.
    pub fn coeff(&self, m: usize) -> &Polynomial {
        &self.even[m]
    }

    /// All even coefficients, constant term first.
    pub fn coeffs(&self) -> &[Polynomial] {
        &self.even
    }
}

/// Characteristic-polynomial coefficients by the Faddeev-LeVerrier
/// recurrence over the rational polynomial ring (ring operations plus exact
/// division by small integers only).
pub fn char_poly(ell: usize) -> Result<CharPolyCoeffs> {
    let matrix = SkewSymbolicMatrix::new(ell).to_poly_matrix();
    let n = 2 * ell;
    let nv = nvars(ell);
    let mut coeffs = vec![Polynomial::zero(nv); n + 1];
    coeffs[n] = Polynomial::one(nv);
    let mut aux = PolyMatrix::identity(n, nv);
    for k in 1..=n {
        let am = matrix.mul(&aux)?;
        let c = am.trace().scale(&ratio(-1, k as i64));
        coeffs[n - k] = c.clone();
        if k < n {
            aux = am.add_poly_diag(&c);
        }
    }
    for (power, c) in coeffs.iter().enumerate().take(n) {
        if power % 2 == 1 && !c.is_zero() {
            return Err(Error::ContractViolation(format!(
                "characteristic coefficient of lambda^{power} is nonzero"
            )));
        }
    }
    let even = (0..ell).map(|m| coeffs[2 * m].clone()).collect();
    Ok(CharPolyCoeffs { ell, even })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_examples() {
        assert_eq!(pair_index(3, 1, 2).unwrap(), 1);
        assert_eq!(pair_index(3, 5, 6).unwrap(), 15);
        assert_eq!(pair_index(2, 3, 4).unwrap(), 6);
        assert_eq!(pair_index(3, 2, 3).unwrap(), 6);
        assert!(pair_index(3, 2, 2).is_err());
        assert!(pair_index(3, 3, 2).is_err());
        assert!(pair_index(3, 1, 7).is_err());
    }

    #[test]
    fn pair_index_round_trip() {
        for ell in 1..=6 {
            let map = PairIndexMap::new(ell);
            let mut seen = 0;
            for a in 1..=map.dim() {
                for b in (a + 1)..=map.dim() {
                    let i = map.forward(a, b).unwrap();
                    assert_eq!(map.inverse(i).unwrap(), (a, b));
                    seen += 1;
                }
            }
            assert_eq!(seen, map.nvars());
            assert!(map.inverse(0).is_err());
            assert!(map.inverse(map.nvars() + 1).is_err());
        }
    }

    #[test]
    fn pfaffian_small_cases() {
        assert_eq!(pfaffian(1).to_string(), "x1");
        assert_eq!(pfaffian(2).to_string(), "x1*x6 - x2*x5 + x3*x4");
        let p3 = pfaffian(3);
        assert_eq!(p3.term_count(), 15);
        assert!(p3.is_homogeneous());
        assert_eq!(p3.degree(), Some(3));
        // Spot checks against the expansion along the first row.
        let m = |vars: [usize; 3]| Monomial::from_pairs(vars.map(|v| (v, 1u16)));
        assert_eq!(p3.coefficient(&m([1, 10, 15])), rat(1));
        assert_eq!(p3.coefficient(&m([1, 11, 14])), rat(-1));
        assert_eq!(p3.coefficient(&m([2, 7, 15])), rat(-1));
        assert_eq!(p3.coefficient(&m([5, 6, 13])), rat(1));
    }

    #[test]
    fn determinant_is_squared_pfaffian() {
        assert_eq!(determinant(1).to_string(), "x1^2");
        let p2 = pfaffian(2);
        assert_eq!(determinant(2), p2.times(&p2));
    }

    #[test]
    fn sub_pfaffian_examples() {
        let m = SkewSymbolicMatrix::new(3);
        assert_eq!(m.sub_pfaffian(&[1, 2]).unwrap().to_string(), "x1");
        assert_eq!(
            m.sub_pfaffian(&[3, 4, 5, 6]).unwrap().to_string(),
            "x10*x15 - x11*x14 + x12*x13"
        );
        assert_eq!(m.sub_pfaffian(&[]).unwrap(), Polynomial::one(15));
        assert_eq!(m.sub_pfaffian(&[1, 2, 3, 4, 5, 6]).unwrap(), m.pfaffian());
        assert!(m.sub_pfaffian(&[1, 2, 3]).is_err());
        assert!(m.sub_pfaffian(&[1, 1]).is_err());
        assert!(m.sub_pfaffian(&[0, 7]).is_err());
    }

    #[test]
    fn gradient_entries() {
        let g2 = grad_matrix(2);
        assert_eq!(g2[&(1, 2)].to_string(), "x6");
        let g3 = grad_matrix(3);
        assert_eq!(g3[&(1, 2)].to_string(), "x10*x15 - x11*x14 + x12*x13");
        let g1 = grad_matrix(1);
        assert_eq!(g1[&(1, 2)], Polynomial::one(1));
    }

    #[test]
    fn gradient_is_signed_complementary_sub_pfaffian() {
        for ell in 1..=4 {
            let m = SkewSymbolicMatrix::new(ell);
            let grads = m.grad_matrix();
            for a in 1..=m.dim() {
                for b in (a + 1)..=m.dim() {
                    let complement: Vec<usize> =
                        (1..=m.dim()).filter(|&r| r != a && r != b).collect();
                    let sub = m.sub_pfaffian(&complement).unwrap();
                    let expect = if (a + b + 1) % 2 == 0 { sub } else { sub.negated() };
                    assert_eq!(grads[&(a, b)], expect, "l={ell} pair=({a},{b})");
                }
            }
        }
    }

    #[test]
    fn hessian_entries() {
        let h3 = hessian_tensor(3).unwrap();
        assert_eq!(h3.get(1, 2, 3, 4).to_string(), "x15");
        assert!(h3.get(1, 2, 1, 3).is_zero());
        assert!(h3.get(1, 1, 3, 4).is_zero());
        let h2 = hessian_tensor(2).unwrap();
        assert_eq!(h2.get(1, 2, 3, 4), Polynomial::one(6));
        assert_eq!(h2.get(2, 1, 3, 4), Polynomial::one(6).negated());
        assert_eq!(h2.get(3, 4, 1, 2), Polynomial::one(6));
        assert!(hessian_tensor(1).is_err());
    }

    #[test]
    fn hessian_matches_epsilon_form_for_ell3() {
        // For l = 3 and distinct indices, S_ab,cd equals the signature of
        // [a b c d e f] times x_(e,f), where (e, f) is the complement.
        let h = hessian_tensor(3).unwrap();
        let map = PairIndexMap::new(3);
        for a in 1..=6usize {
            for b in 1..=6 {
                for c in 1..=6 {
                    for d in 1..=6 {
                        let mut seen = [false; 7];
                        let distinct = [a, b, c, d].iter().all(|&i| {
                            let fresh = !seen[i];
                            seen[i] = true;
                            fresh
                        });
                        if !distinct {
                            continue;
                        }
                        let rest: Vec<usize> = (1..=6).filter(|&i| !seen[i]).collect();
                        let (e, f) = (rest[0], rest[1]);
                        let sign = permutation_sign(&[a, b, c, d, e, f]);
                        let v = map.forward(e, f).unwrap();
                        let expect = Polynomial::from_terms(15, [(Monomial::var(v), rat(sign))]);
                        assert_eq!(h.get(a, b, c, d), expect, "indices {:?}", (a, b, c, d));
                    }
                }
            }
        }
    }

    fn permutation_sign(perm: &[usize]) -> i64 {
        let mut sign = 1;
        for i in 0..perm.len() {
            for j in (i + 1)..perm.len() {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    #[test]
    fn trace_s2_closed_forms() {
        let t2 = trace_s2(2).unwrap();
        assert_eq!(t2, Polynomial::constant(6, rat(24)));
        let t3 = trace_s2(3).unwrap();
        let sum_sq = Polynomial::from_terms(15, (1..=15).map(|v| (Monomial::var_pow(v, 2), rat(24))));
        assert_eq!(t3, sum_sq);
    }

    #[test]
    fn trace_s3_closed_forms() {
        assert!(trace_s3(2).unwrap().is_zero());
        let t3 = trace_s3(3).unwrap();
        assert_eq!(t3, pfaffian(3).scale(&rat(48)));
    }

    #[test]
    fn char_poly_small_cases() {
        let c1 = char_poly(1).unwrap();
        assert_eq!(c1.coeff(0).to_string(), "x1^2");
        let c2 = char_poly(2).unwrap();
        let sum_sq = Polynomial::from_terms(6, (1..=6).map(|v| (Monomial::var_pow(v, 2), rat(1))));
        assert_eq!(c2.coeff(1), &sum_sq);
        let p2 = pfaffian(2);
        assert_eq!(c2.coeff(0), &p2.times(&p2));
    }

    #[test]
    fn char_poly_serializes_as_power_tagged_list() {
        let coeffs = char_poly(1).unwrap();
        let json = serde_json::to_value(&coeffs).unwrap();
        assert_eq!(json[0]["power"], 0);
        assert_eq!(json[0]["coefficient"][0]["exponents"]["1"], 2);
    }

    #[test]
    fn evaluated_hessian_matches_symbolic_trace() {
        let h = hessian_tensor(3).unwrap();
        let sym = h.trace_s2();
        let point: Vec<Rational> = (1..=15).map(|i| rat((i % 5) as i64 - 2)).collect();
        let eval = h.evaluate(&point).unwrap();
        assert_eq!(eval.trace_s2(), sym.evaluate(&point).unwrap());
    }

    #[test]
    fn term_counts_match_double_factorial() {
        assert_eq!(double_factorial_odd(1), 1);
        assert_eq!(double_factorial_odd(4), 105);
        for ell in 1..=4 {
            assert_eq!(pfaffian(ell).term_count() as u64, double_factorial_odd(ell));
        }
    }
}
