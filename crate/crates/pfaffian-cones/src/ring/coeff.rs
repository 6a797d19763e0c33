//! Coefficient rings: arbitrary-precision rationals and Gaussian rationals.
//!
//! Exactly two coefficient rings exist. They are distinct Rust types, so a
//! mixed-ring operation is a compile error rather than a runtime one; the
//! only crossing point is the explicit promotion in
//! [`crate::ring::Polynomial::to_gaussian`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Build a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Build the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Complex number with rational real and imaginary parts.
///
/// Arithmetic is componentwise-exact; conjugation negates the imaginary
/// part. This is the coefficient field for the su(4) computations, where
/// variables stay real symbols and only coefficients are complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conjugate(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}*i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}*i", self.re, self.im)
                }
            }
        }
    }
}

/// Ring operations a polynomial coefficient must support.
///
/// Both rings here are fields, so exact division is part of the contract;
/// `div` panics on a zero divisor, mirroring `BigRational`.
pub trait Coefficient: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn div_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// Split into (renders-negative, magnitude text) for canonical output.
    fn text_signed(&self) -> (bool, String);
    /// Parse the magnitude grammar produced by `text_signed`.
    fn parse_text(s: &str) -> Option<Self>;
}

impl Coefficient for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn text_signed(&self) -> (bool, String) {
        let mag = self.abs();
        let text = if mag.denom().is_one() {
            format!("{}", mag.numer())
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        (self.is_negative(), text)
    }
    fn parse_text(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

impl std::ops::Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl std::ops::Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Coefficient::mul_ref(&self, &rhs)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::from_real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_real(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Coefficient for GaussianRational {
    fn add_ref(&self, other: &Self) -> Self {
        Self { re: &self.re + &other.re, im: &self.im + &other.im }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        Self { re: &self.re - &other.re, im: &self.im - &other.im }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Self {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
    fn div_ref(&self, other: &Self) -> Self {
        let norm = &other.re * &other.re + &other.im * &other.im;
        let conj = other.conjugate();
        let num = self.mul_ref(&conj);
        Self { re: num.re / &norm, im: num.im / &norm }
    }
    fn neg_ref(&self) -> Self {
        Self { re: -self.re.clone(), im: -self.im.clone() }
    }
    fn from_rational(r: Rational) -> Self {
        Self::from_real(r)
    }
    fn text_signed(&self) -> (bool, String) {
        // Gaussian coefficients always render as a parenthesized sum; the
        // leading sign stays inside the parentheses.
        (false, format!("({})", self))
    }
    fn parse_text(s: &str) -> Option<Self> {
        let inner = s.strip_prefix('(')?.strip_suffix(')')?.trim();
        parse_gaussian(inner)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

fn parse_gaussian(s: &str) -> Option<GaussianRational> {
    // Accepted forms: "a", "b*i", "i", "-i", "a+b*i", "a-b*i".
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    // Split at the last top-level +/- that is not the leading sign.
    let bytes = s.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'/' {
            split = Some(idx);
            break;
        }
    }
    let parse_im = |part: &str| -> Option<Rational> {
        let body = part.strip_suffix('i')?;
        let body = body.strip_suffix('*').unwrap_or(body);
        match body {
            "" | "+" => Some(Rational::one()),
            "-" => Some(-Rational::one()),
            other => parse_rational(other),
        }
    };
    if s.ends_with('i') {
        match split {
            Some(idx) => {
                let re = parse_rational(&s[..idx])?;
                let sign = if bytes[idx] == b'-' { -Rational::one() } else { Rational::one() };
                let im = parse_im(&s[idx + 1..])?;
                Some(GaussianRational::new(re, sign * im))
            }
            None => Some(GaussianRational::new(Rational::zero(), parse_im(&s)?)),
        }
    } else {
        Some(GaussianRational::from_real(parse_rational(&s)?))
    }
}

/// Convert a rational to the nearest f64 (used only for numeric sampling).
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of truncated parts for extreme values.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic_is_componentwise_complex() {
        let a = GaussianRational::new(rat(1), rat(2));
        let b = GaussianRational::new(rat(3), rat(-1));
        let prod = a.mul_ref(&b);
        assert_eq!(prod, GaussianRational::new(rat(5), rat(5)));
        let quot = prod.div_ref(&b);
        assert_eq!(quot, a);
    }

    #[test]
    fn conjugation_negates_imaginary_part() {
        let a = GaussianRational::new(ratio(1, 2), ratio(-3, 4));
        let c = a.conjugate();
        assert_eq!(c.re, ratio(1, 2));
        assert_eq!(c.im, ratio(3, 4));
    }

    #[test]
    fn gaussian_text_round_trip() {
        for g in [
            GaussianRational::new(ratio(1, 2), ratio(1, 2)),
            GaussianRational::new(rat(0), rat(-1)),
            GaussianRational::new(rat(-2), rat(0)),
            GaussianRational::new(ratio(-1, 3), ratio(5, 7)),
        ] {
            let (neg, text) = g.text_signed();
            assert!(!neg);
            let back = GaussianRational::parse_text(&text).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn rational_text_round_trip() {
        for r in [rat(0), rat(7), rat(-7), ratio(22, 7), ratio(-3, 4)] {
            let (neg, text) = r.text_signed();
            let parsed = parse_rational(&text).unwrap();
            let restored = if neg { -parsed } else { parsed };
            assert_eq!(restored, r);
        }
    }
}
