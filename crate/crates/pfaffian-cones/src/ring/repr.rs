//! Canonical structured form: a polynomial is a list of
//! `{exponents: {i: e}, coeff: {num, den} | {re, im}}` objects, terms in
//! descending graded-lex order. Integer parts are decimal strings so
//! arbitrary-precision values survive JSON.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coeff::{Coefficient, GaussianRational, Rational};
use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CoeffRepr {
    Rational { num: String, den: String },
    Gaussian { re: RationalRepr, im: RationalRepr },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TermRepr {
    pub exponents: BTreeMap<u16, u16>,
    pub coeff: CoeffRepr,
}

fn rational_repr(r: &Rational) -> RationalRepr {
    RationalRepr { num: r.numer().to_string(), den: r.denom().to_string() }
}

fn rational_from_repr(r: &RationalRepr) -> Result<Rational> {
    let num: BigInt =
        r.num.parse().map_err(|_| Error::Parse(format!("bad numerator '{}'", r.num)))?;
    let den: BigInt =
        r.den.parse().map_err(|_| Error::Parse(format!("bad denominator '{}'", r.den)))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(num, den))
}

/// Serialize a rational as its canonical `num/den` string.
pub mod serde_rational {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }
}

/// Serialize a rational vector as canonical `num/den` strings.
pub mod serde_rational_vec {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }
}

/// Structured encoding for a coefficient ring.
pub trait StructuredCoeff: Coefficient {
    fn to_repr(&self) -> CoeffRepr;
    fn from_repr(repr: &CoeffRepr) -> Result<Self>;
}

impl StructuredCoeff for Rational {
    fn to_repr(&self) -> CoeffRepr {
        let r = rational_repr(self);
        CoeffRepr::Rational { num: r.num, den: r.den }
    }
    fn from_repr(repr: &CoeffRepr) -> Result<Self> {
        match repr {
            CoeffRepr::Rational { num, den } => {
                rational_from_repr(&RationalRepr { num: num.clone(), den: den.clone() })
            }
            CoeffRepr::Gaussian { .. } => {
                Err(Error::Parse("expected a rational coefficient, got a complex one".into()))
            }
        }
    }
}

impl StructuredCoeff for GaussianRational {
    fn to_repr(&self) -> CoeffRepr {
        CoeffRepr::Gaussian { re: rational_repr(&self.re), im: rational_repr(&self.im) }
    }
    fn from_repr(repr: &CoeffRepr) -> Result<Self> {
        match repr {
            CoeffRepr::Gaussian { re, im } => {
                Ok(GaussianRational::new(rational_from_repr(re)?, rational_from_repr(im)?))
            }
            CoeffRepr::Rational { num, den } => Ok(GaussianRational::from_real(
                rational_from_repr(&RationalRepr { num: num.clone(), den: den.clone() })?,
            )),
        }
    }
}

impl<C: StructuredCoeff> Polynomial<C> {
    /// The canonical structured form (descending graded-lex term order).
    pub fn to_structured(&self) -> Vec<TermRepr> {
        self.terms_desc()
            .map(|(m, c)| TermRepr { exponents: m.iter().map(|(v, e)| (v as u16, e)).collect(), coeff: c.to_repr() })
            .collect()
    }

    /// Rebuild from the structured form; `nvars` declares the ring arity.
    pub fn from_structured(terms: &[TermRepr], nvars: usize) -> Result<Self> {
        let mut out = Self::zero(nvars);
        for term in terms {
            let m = Monomial::from_pairs(term.exponents.iter().map(|(&v, &e)| (v as usize, e)));
            if m.max_var() > nvars {
                return Err(Error::Parse(format!(
                    "variable x{} exceeds declared arity {nvars}",
                    m.max_var()
                )));
            }
            out.add_term(m, C::from_repr(&term.coeff)?);
        }
        Ok(out)
    }
}

impl<C: StructuredCoeff> Serialize for Polynomial<C> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_structured().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::coeff::{rat, ratio};

    #[test]
    fn structured_round_trip_rational() {
        let p: Polynomial = Polynomial::from_terms(
            6,
            [
                (Monomial::from_pairs([(1, 1), (6, 1)]), rat(1)),
                (Monomial::from_pairs([(2, 1), (5, 1)]), ratio(-1, 2)),
                (Monomial::one(), rat(3)),
            ],
        );
        let repr = p.to_structured();
        let json = serde_json::to_string(&repr).unwrap();
        let back: Vec<TermRepr> = serde_json::from_str(&json).unwrap();
        let q = Polynomial::<Rational>::from_structured(&back, 6).unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn structured_round_trip_gaussian() {
        let p: Polynomial<GaussianRational> = Polynomial::from_terms(
            4,
            [
                (Monomial::var(1), GaussianRational::new(ratio(1, 2), ratio(-1, 3))),
                (Monomial::var_pow(2, 2), GaussianRational::new(rat(0), rat(1))),
            ],
        );
        let json = serde_json::to_string(&p.to_structured()).unwrap();
        let back: Vec<TermRepr> = serde_json::from_str(&json).unwrap();
        let q = Polynomial::<GaussianRational>::from_structured(&back, 4).unwrap();
        assert_eq!(q, p);
    }
}
