//! Canonical text form: terms in descending graded-lex order, coefficients
//! as `num/den` (denominator omitted when 1), variables as `x{i}`,
//! e.g. `x1*x6 - x2*x5 + x3*x4`. Parsing accepts terms in any order.

use std::fmt;

use super::coeff::Coefficient;
use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::{Error, Result};

pub(crate) fn render<C: Coefficient>(
    p: &Polynomial<C>,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (k, (m, c)) in p.terms_desc().enumerate() {
        let (negative, mag) = c.text_signed();
        if k == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let coeff_is_unit = mag == "1";
        if m.is_one() {
            write!(f, "{mag}")?;
        } else if coeff_is_unit {
            write!(f, "{m}")?;
        } else {
            write!(f, "{mag}*{m}")?;
        }
    }
    Ok(())
}

/// Render to the canonical string.
pub fn to_text<C: Coefficient>(p: &Polynomial<C>) -> String {
    p.to_string()
}

/// Parse the canonical text form. `nvars` declares the ring arity; it must
/// cover every variable that appears.
pub fn parse<C: Coefficient>(input: &str, nvars: usize) -> Result<Polynomial<C>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if trimmed == "0" {
        return Ok(Polynomial::zero(nvars));
    }
    let mut out = Polynomial::zero(nvars);
    for (sign, chunk) in split_terms(trimmed)? {
        let (m, c) = parse_term::<C>(&chunk)?;
        if m.max_var() > nvars {
            return Err(Error::Parse(format!(
                "variable x{} exceeds declared arity {nvars}",
                m.max_var()
            )));
        }
        let c = if sign { c.neg_ref() } else { c };
        out.add_term(m, c);
    }
    Ok(out)
}

/// Split on top-level `+`/`-`, returning (is_negative, term text) pairs.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut sign = false;
    let mut depth = 0usize;
    let mut seen_any = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.trim().is_empty() && !seen_any {
                    // Leading sign of the first term.
                    sign = ch == '-';
                } else if current.trim().is_empty() {
                    return Err(Error::Parse(format!("dangling '{ch}'")));
                } else {
                    parts.push((sign, std::mem::take(&mut current)));
                    sign = ch == '-';
                }
                seen_any = true;
            }
            _ => {
                current.push(ch);
                seen_any = true;
            }
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    if current.trim().is_empty() {
        return Err(Error::Parse("trailing operator".into()));
    }
    parts.push((sign, current));
    Ok(parts)
}

fn parse_term<C: Coefficient>(term: &str) -> Result<(Monomial, C)> {
    let mut coeff = C::one();
    let mut pairs: Vec<(usize, u16)> = Vec::new();
    for factor in split_factors(term)? {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in '{term}'")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            if rest.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let (var, exp) = match rest.split_once('^') {
                    Some((v, e)) => {
                        let var: usize = v
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad variable '{factor}'")))?;
                        let exp: u16 = e
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent '{factor}'")))?;
                        (var, exp)
                    }
                    None => (
                        rest.parse()
                            .map_err(|_| Error::Parse(format!("bad variable '{factor}'")))?,
                        1,
                    ),
                };
                if var == 0 {
                    return Err(Error::Parse("variable indices are 1-based".into()));
                }
                pairs.push((var, exp));
                continue;
            }
        }
        let c = C::parse_text(factor)
            .ok_or_else(|| Error::Parse(format!("bad coefficient '{factor}'")))?;
        coeff = coeff.mul_ref(&c);
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

/// Split a term on top-level `*`.
fn split_factors(term: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for ch in term.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
                current.push(ch);
            }
            '*' if depth == 0 => parts.push(std::mem::take(&mut current)),
            _ => current.push(ch),
        }
    }
    parts.push(current);
    Ok(parts)
}
