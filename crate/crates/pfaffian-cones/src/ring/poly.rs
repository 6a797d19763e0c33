//! Sparse multivariate polynomials over an exact coefficient ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::coeff::{rational_to_f64, Coefficient, GaussianRational, Rational};
use super::monomial::Monomial;
use crate::{Error, Result};

/// A sparse polynomial: a map from monomial to nonzero coefficient.
///
/// Terms live in a `BTreeMap` keyed by the graded-lex order, so iteration,
/// serialization and division are deterministic. The zero polynomial has an
/// empty term map, and equality is term-map equality.
#[derive(Debug, Clone)]
pub struct Polynomial<C: Coefficient = Rational> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for Polynomial<C> {}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `x{var}`, 1-based.
    pub fn var(nvars: usize, var: usize) -> Result<Self> {
        if var == 0 || var > nvars {
            return Err(Error::VariableIndex { index: var, nvars });
        }
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(var), C::one());
        Ok(p)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Re-declare the variable count (e.g. to embed into a larger ring).
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        debug_assert!(self.terms.keys().all(|m| m.max_var() <= nvars));
        self.nvars = nvars;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (canonical display order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Leading term in graded-lex order, `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// All terms share one total degree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Add `c * m` in place, pruning a resulting zero.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.nvars = self.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.nvars = self.nvars.max(other.nvars);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.neg_ref());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn negated(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c.neg_ref());
        }
        out
    }

    /// Multiply by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(self.nvars.max(m.max_var()));
        if c.is_zero() {
            return out;
        }
        for (tm, tc) in &self.terms {
            out.terms.insert(tm.mul(m), tc.mul_ref(c));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars.max(other.nvars));
        // Iterate the smaller operand outside to keep the accumulator hot.
        let (small, large) = if self.term_count() <= other.term_count() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.times(self);
        }
        out
    }

    /// Exact formal partial derivative with respect to `x{var}` (1-based).
    pub fn partial(&self, var: usize) -> Result<Self> {
        if var == 0 || var > self.nvars {
            return Err(Error::VariableIndex { index: var, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((reduced, e)) = m.step_down(var) {
                out.add_term(reduced, c.mul_ref(&C::from_rational(super::coeff::rat(e as i64))));
            }
        }
        Ok(out)
    }

    /// Sum of second partials over every variable.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            for (v, e) in m.iter() {
                if e >= 2 {
                    let (reduced, _) = m.step_down(v).expect("exponent present");
                    let (reduced, _) = reduced.step_down(v).expect("exponent >= 2");
                    let factor = C::from_rational(super::coeff::rat((e as i64) * (e as i64 - 1)));
                    out.add_term(reduced, c.mul_ref(&factor));
                }
            }
        }
        out
    }

    /// Exact evaluation at a rational point of length `nvars`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::PointLength { got: point.len(), expected: self.nvars });
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut v = Rational::one();
            for (var, e) in m.iter() {
                let base = &point[var - 1];
                for _ in 0..e {
                    v *= base;
                }
            }
            acc = acc.add_ref(&c.mul_ref(&C::from_rational(v)));
        }
        Ok(acc)
    }

    /// Multivariate division by a single divisor with graded-lex leading-term
    /// reduction: returns `(q, r)` with `self = q*d + r` and no term of `r`
    /// divisible by the leading monomial of `d`. When `self` is a polynomial
    /// multiple of `d` the remainder is zero and the quotient unique.
    pub fn divide_exact(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let nvars = self.nvars.max(d.nvars);
        let mut p = self.clone().with_nvars(nvars);
        let mut q = Self::zero(nvars);
        let mut r = Self::zero(nvars);
        let (dm, dc) = d.leading_term().expect("nonzero divisor");
        while let Some((pm, pc)) = p.leading_term() {
            match pm.checked_div(dm) {
                Some(m) => {
                    let c = pc.div_ref(dc);
                    p.sub_assign(&d.mul_term(&m, &c));
                    q.add_term(m, c);
                }
                None => {
                    let (pm, pc) = (pm.clone(), pc.clone());
                    p.terms.remove(&pm);
                    r.add_term(pm, pc);
                }
            }
        }
        Ok((q, r))
    }

    /// Exact composition: replace each mapped variable by a polynomial.
    /// Unmapped variables stay themselves.
    pub fn substitute(&self, map: &BTreeMap<usize, Self>) -> Self {
        let target_nvars = map
            .values()
            .map(Self::nvars)
            .chain(std::iter::once(self.nvars))
            .max()
            .unwrap_or(self.nvars);
        let mut out = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target_nvars, c.clone());
            for (v, e) in m.iter() {
                let base = match map.get(&v) {
                    Some(p) => p.clone().with_nvars(target_nvars),
                    None => Self::var(target_nvars, v).expect("variable in range"),
                };
                term = term.times(&base.pow(e as u32));
            }
            out.add_assign(&term);
        }
        out
    }
}

impl Polynomial<Rational> {
    /// Explicit promotion into the Gaussian-rational ring.
    pub fn to_gaussian(&self) -> Polynomial<GaussianRational> {
        let mut out = Polynomial::<GaussianRational>::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), GaussianRational::from_real(c.clone()));
        }
        out
    }

    /// Floating-point evaluation (numeric sampling only; exact paths use
    /// [`Polynomial::evaluate`]).
    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.nvars {
            return Err(Error::PointLength { got: point.len(), expected: self.nvars });
        }
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut v = rational_to_f64(c);
            for (var, e) in m.iter() {
                v *= point[var - 1].powi(e as i32);
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl Polynomial<GaussianRational> {
    /// The real part as a rational polynomial.
    pub fn real_part(&self) -> Polynomial<Rational> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.re.clone()))
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.nvars, terms)
    }

    /// The imaginary part as a rational polynomial.
    pub fn imag_part(&self) -> Polynomial<Rational> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.im.clone()))
            .collect::<Vec<_>>();
        Polynomial::from_terms(self.nvars, terms)
    }

    /// Conjugate every coefficient (variables are real symbols).
    pub fn conjugate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.conjugate()))
            .collect::<Vec<_>>();
        Self::from_terms(self.nvars, terms)
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.plus(rhs)
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.minus(rhs)
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.times(rhs)
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.negated()
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::render(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::coeff::{rat, ratio};
    use num_traits::Zero;

    fn p2() -> Polynomial {
        // x1*x6 - x2*x5 + x3*x4
        Polynomial::from_terms(
            6,
            [
                (Monomial::from_pairs([(1, 1), (6, 1)]), rat(1)),
                (Monomial::from_pairs([(2, 1), (5, 1)]), rat(-1)),
                (Monomial::from_pairs([(3, 1), (4, 1)]), rat(1)),
            ],
        )
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = Polynomial::from_terms(6, [(Monomial::from_pairs([(1, 1), (6, 1)]), rat(1))]);
        let b = a.negated();
        assert!(a.plus(&b).is_zero());
    }

    #[test]
    fn sum_assembles_quadratic_cone() {
        let a = Polynomial::from_terms(
            6,
            [
                (Monomial::from_pairs([(1, 1), (6, 1)]), rat(1)),
                (Monomial::from_pairs([(2, 1), (5, 1)]), rat(-1)),
            ],
        );
        let b = Polynomial::from_terms(6, [(Monomial::from_pairs([(3, 1), (4, 1)]), rat(1))]);
        assert_eq!(a.plus(&b), p2());
    }

    #[test]
    fn add_identity() {
        let p = p2();
        assert_eq!(p.plus(&Polynomial::zero(6)), p);
    }

    #[test]
    fn mul_single_variables() {
        let x1 = Polynomial::<Rational>::var(6, 1).unwrap();
        let x6 = Polynomial::<Rational>::var(6, 6).unwrap();
        let prod = x1.times(&x6);
        assert_eq!(
            prod,
            Polynomial::from_terms(6, [(Monomial::from_pairs([(1, 1), (6, 1)]), rat(1))])
        );
    }

    #[test]
    fn mul_identity() {
        let p = p2();
        assert_eq!(p.times(&Polynomial::one(6)), p);
    }

    #[test]
    fn square_of_p2_brute_force() {
        // Independent expansion: square by explicitly distributing over the
        // three signed terms and collecting by hand-built monomials.
        let p = p2();
        let sq = p.times(&p);
        let signed = [
            (vec![(1usize, 1u16), (6, 1)], 1i64),
            (vec![(2, 1), (5, 1)], -1),
            (vec![(3, 1), (4, 1)], 1),
        ];
        let mut expect = Polynomial::zero(6);
        for (ma, sa) in &signed {
            for (mb, sb) in &signed {
                let m = Monomial::from_pairs(ma.iter().copied())
                    .mul(&Monomial::from_pairs(mb.iter().copied()));
                expect.add_term(m, rat(sa * sb));
            }
        }
        assert_eq!(sq, expect);
        assert_eq!(sq.term_count(), 6);
        assert_eq!(sq.degree(), Some(4));
    }

    #[test]
    fn partial_of_p2() {
        let p = p2();
        assert_eq!(p.partial(1).unwrap(), Polynomial::var(6, 6).unwrap());
        assert!(Polynomial::constant(6, rat(5)).partial(1).unwrap().is_zero());
        let x1sq = Polynomial::from_terms(6, [(Monomial::var_pow(1, 2), rat(1))]);
        assert_eq!(x1sq.partial(1).unwrap(), Polynomial::var(6, 1).unwrap().scale(&rat(2)));
        assert!(p.partial(0).is_err());
        assert!(p.partial(7).is_err());
    }

    #[test]
    fn evaluate_p2() {
        let p = p2();
        let e = |coords: [i64; 6]| {
            let pt: Vec<_> = coords.iter().map(|&c| rat(c)).collect();
            p.evaluate(&pt).unwrap()
        };
        assert_eq!(e([1, 0, 0, 0, 0, 1]), rat(1));
        assert_eq!(e([1, 1, 1, 1, 1, 1]), rat(1)); // 1 - 1 + 1
        assert_eq!(e([0; 6]), rat(0));
        assert!(p.evaluate(&[rat(1)]).is_err());
    }

    #[test]
    fn divide_exact_multiple_and_remainder() {
        let p = p2();
        let (q, r) = p.scale(&rat(2)).divide_exact(&p).unwrap();
        assert_eq!(q, Polynomial::constant(6, rat(2)));
        assert!(r.is_zero());

        // 2xy - 8z^2 by xy - z^2 leaves -6z^2.
        let xy = Monomial::from_pairs([(1, 1), (2, 1)]);
        let zz = Monomial::var_pow(3, 2);
        let num = Polynomial::from_terms(3, [(xy.clone(), rat(2)), (zz.clone(), rat(-8))]);
        let den = Polynomial::from_terms(3, [(xy, rat(1)), (zz.clone(), rat(-1))]);
        let (q, r) = num.divide_exact(&den).unwrap();
        assert_eq!(q, Polynomial::constant(3, rat(2)));
        assert_eq!(r, Polynomial::from_terms(3, [(zz, rat(-6))]));

        assert!(p.divide_exact(&Polynomial::zero(6)).is_err());
    }

    #[test]
    fn substitute_difference_of_squares() {
        // x1 -> x1 + x6, x6 -> x6 - x1 on x1*x6 gives x6^2 - x1^2.
        let x1x6 = Polynomial::from_terms(6, [(Monomial::from_pairs([(1, 1), (6, 1)]), rat(1))]);
        let mut map = BTreeMap::new();
        let x1 = Polynomial::<Rational>::var(6, 1).unwrap();
        let x6 = Polynomial::<Rational>::var(6, 6).unwrap();
        map.insert(1, x1.plus(&x6));
        map.insert(6, x6.minus(&x1));
        let out = x1x6.substitute(&map);
        let expect = Polynomial::from_terms(
            6,
            [(Monomial::var_pow(6, 2), rat(1)), (Monomial::var_pow(1, 2), rat(-1))],
        );
        assert_eq!(out, expect);

        // Identity substitution.
        assert_eq!(p2().substitute(&BTreeMap::new()), p2());
    }

    #[test]
    fn laplacian_cases() {
        assert!(p2().laplacian().is_zero());
        let x1sq = Polynomial::from_terms(3, [(Monomial::var_pow(1, 2), rat(1))]);
        assert_eq!(x1sq.laplacian(), Polynomial::constant(3, rat(2)));
        // xy - z^2 in three variables has laplacian -2.
        let u = Polynomial::from_terms(
            3,
            [
                (Monomial::from_pairs([(1, 1), (2, 1)]), rat(1)),
                (Monomial::var_pow(3, 2), rat(-1)),
            ],
        );
        assert_eq!(u.laplacian(), Polynomial::constant(3, rat(-2)));
    }

    #[test]
    fn promotion_is_explicit_and_faithful() {
        let p = p2();
        let g = p.to_gaussian();
        assert_eq!(g.real_part(), p);
        assert!(g.imag_part().is_zero());
        let point: Vec<_> = (0..6).map(|i| ratio(i + 1, 2)).collect();
        let exact = p.evaluate(&point).unwrap();
        let gexact = g.evaluate(&point).unwrap();
        assert_eq!(gexact.re, exact);
        assert!(gexact.im.is_zero());
    }
}
