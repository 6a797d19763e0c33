//! Sparse monomials with a graded-lexicographic total order.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A power product of variables `x1..xn`.
///
/// Stored as `(variable index, exponent)` pairs, 1-based, sorted by index,
/// with no zero exponents. The inline capacity of six covers every monomial
/// of the degree-six Pfaffian without heap allocation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: SmallVec<[(u16, u16); 6]>,
}

impl Monomial {
    /// The empty product (the constant monomial).
    pub fn one() -> Self {
        Self::default()
    }

    /// The single variable `x{var}` (1-based).
    pub fn var(var: usize) -> Self {
        Self::var_pow(var, 1)
    }

    /// `x{var}^exp`; a zero exponent yields the constant monomial.
    pub fn var_pow(var: usize, exp: u16) -> Self {
        let mut powers = SmallVec::new();
        if exp > 0 {
            powers.push((var as u16, exp));
        }
        Self { powers }
    }

    /// Build from (variable, exponent) pairs in any order.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u16)>) -> Self {
        let mut powers: SmallVec<[(u16, u16); 6]> = SmallVec::new();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            match powers.iter_mut().find(|(pv, _)| *pv == v as u16) {
                Some((_, pe)) => *pe += e,
                None => powers.push((v as u16, e)),
            }
        }
        powers.sort_unstable_by_key(|&(v, _)| v);
        Self { powers }
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e as u32).sum()
    }

    /// Exponent of `x{var}` (0 when absent).
    pub fn exponent(&self, var: usize) -> u16 {
        self.powers
            .iter()
            .find(|&&(v, _)| v == var as u16)
            .map_or(0, |&(_, e)| e)
    }

    /// Largest variable index appearing (0 for the constant monomial).
    pub fn max_var(&self) -> usize {
        self.powers.last().map_or(0, |&(v, _)| v as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.powers.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut powers: SmallVec<[(u16, u16); 6]> = SmallVec::new();
        let (mut a, mut b) = (self.powers.iter().peekable(), other.powers.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        powers.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        powers.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        powers.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    powers.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    powers.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { powers }
    }

    /// Exponent-wise quotient, `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut powers: SmallVec<[(u16, u16); 6]> = SmallVec::new();
        let mut a = self.powers.iter().peekable();
        for &(vb, eb) in &other.powers {
            loop {
                let &&(va, ea) = a.peek()?;
                if va < vb {
                    powers.push((va, ea));
                    a.next();
                } else if va == vb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        powers.push((va, ea - eb));
                    }
                    a.next();
                    break;
                } else {
                    return None;
                }
            }
        }
        powers.extend(a.copied());
        Some(Self { powers })
    }

    /// Divide out one power of `x{var}`, returning the reduced exponent.
    pub(crate) fn step_down(&self, var: usize) -> Option<(Self, u16)> {
        let pos = self.powers.iter().position(|&(v, _)| v == var as u16)?;
        let e = self.powers[pos].1;
        let mut powers = self.powers.clone();
        if e == 1 {
            powers.remove(pos);
        } else {
            powers[pos].1 -= 1;
        }
        Some((Self { powers }, e))
    }
}

/// Graded lexicographic order with `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.powers.iter();
            let mut b = other.powers.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        // A positive exponent on an earlier variable wins.
                        match va.cmp(&vb) {
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Equal => {
                                if ea != eb {
                                    return ea.cmp(&eb);
                                }
                            }
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}
