//! Square matrices with polynomial entries, plus exact scalar linear algebra.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::ring::{Coefficient, GaussianRational, Polynomial, Rational};
use crate::{Error, Result};

/// A dense square matrix of polynomials over coefficient ring `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<C: Coefficient> {
    dim: usize,
    nvars: usize,
    entries: Vec<Polynomial<C>>,
}

/// Matrix with Gaussian-rational polynomial entries.
pub type ComplexMatrix = PolyMatrix<GaussianRational>;

impl<C: Coefficient> PolyMatrix<C> {
    pub fn zero(dim: usize, nvars: usize) -> Self {
        Self { dim, nvars, entries: vec![Polynomial::zero(nvars); dim * dim] }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        let mut m = Self::zero(dim, nvars);
        for i in 0..dim {
            *m.at_mut(i, i) = Polynomial::one(nvars);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial<C>>>) -> Result<Self> {
        let dim = rows.len();
        let nvars = rows
            .iter()
            .flatten()
            .map(Polynomial::nvars)
            .max()
            .unwrap_or(0);
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Dimension(format!(
                    "expected {dim} columns, got {}",
                    row.len()
                )));
            }
            for p in row {
                entries.push(p.with_nvars(nvars));
            }
        }
        Ok(Self { dim, nvars, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Entry at (row, col), 0-based.
    pub fn at(&self, row: usize, col: usize) -> &Polynomial<C> {
        &self.entries[row * self.dim + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut Polynomial<C> {
        &mut self.entries[row * self.dim + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("{} vs {}", self.dim, other.dim)));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            a.add_assign(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        let entries = self.entries.iter().map(Polynomial::negated).collect();
        Self { dim: self.dim, nvars: self.nvars, entries }
    }

    pub fn scale(&self, c: &C) -> Self {
        let entries = self.entries.iter().map(|p| p.scale(c)).collect();
        Self { dim: self.dim, nvars: self.nvars, entries }
    }

    /// Add a polynomial to every diagonal entry.
    pub fn add_poly_diag(&self, p: &Polynomial<C>) -> Self {
        let mut out = self.clone();
        out.nvars = out.nvars.max(p.nvars());
        for i in 0..self.dim {
            out.at_mut(i, i).add_assign(p);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!("{} vs {}", self.dim, other.dim)));
        }
        let dim = self.dim;
        let mut out = Self::zero(dim, self.nvars.max(other.nvars));
        for i in 0..dim {
            for k in 0..dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.times(b);
                    out.at_mut(i, j).add_assign(&prod);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.dim, self.nvars);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *out.at_mut(i, j) = self.at(j, i).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Polynomial<C> {
        let mut t = Polynomial::zero(self.nvars);
        for i in 0..self.dim {
            t.add_assign(self.at(i, i));
        }
        t
    }

    /// Symbolic determinant by Laplace expansion along the first remaining
    /// row, memoized on the set of remaining columns.
    pub fn determinant(&self) -> Polynomial<C> {
        assert!(self.dim <= 63, "determinant expansion uses a 64-bit column mask");
        let full: u64 = if self.dim == 0 { 0 } else { (1u64 << self.dim) - 1 };
        let mut memo: HashMap<u64, Polynomial<C>> = HashMap::new();
        self.det_minor(full, &mut memo)
    }

    fn det_minor(&self, cols: u64, memo: &mut HashMap<u64, Polynomial<C>>) -> Polynomial<C> {
        if cols == 0 {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = self.dim - cols.count_ones() as usize;
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_flip = false;
        for col in 0..self.dim {
            if cols & (1 << col) == 0 {
                continue;
            }
            let entry = self.at(row, col);
            if !entry.is_zero() {
                let minor = self.det_minor(cols & !(1 << col), memo);
                let contrib = entry.times(&minor);
                if sign_flip {
                    acc.sub_assign(&contrib);
                } else {
                    acc.add_assign(&contrib);
                }
            }
            sign_flip = !sign_flip;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Row-major canonical text forms, the wire format for matrices.
    pub fn to_text_rows(&self) -> Vec<String> {
        self.entries.iter().map(|p| p.to_string()).collect()
    }
}

impl ComplexMatrix {
    /// Conjugate transpose; conjugation acts on coefficients only, since the
    /// variables are real symbols.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zero(self.dim, self.nvars);
        for i in 0..self.dim {
            for j in 0..self.dim {
                *out.at_mut(i, j) = self.at(j, i).conjugate();
            }
        }
        out
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.dagger().add(&self.clone()).map(|m| m.is_zero()).unwrap_or(false)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.transpose().add(&self.clone()).map(|m| m.is_zero()).unwrap_or(false)
    }
}

/// Exact determinant of a rational scalar matrix by Gaussian elimination
/// with column pivoting.
pub fn rational_determinant(mut m: Vec<Vec<Rational>>) -> Result<Rational> {
    let n = m.len();
    for row in &m {
        if row.len() != n {
            return Err(Error::Dimension(format!("expected {n} columns, got {}", row.len())));
        }
    }
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return Ok(Rational::zero()),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            let pivot_row: Vec<Rational> = m[col][col..n].to_vec();
            for (c, pc) in (col..n).zip(pivot_row) {
                let sub = &factor * &pc;
                m[r][c] -= sub;
            }
        }
    }
    Ok(det)
}
