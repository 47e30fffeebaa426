//! Polynomial literals such as `3x^2 - 1/2x + 1` or `2*x^3`.

use num_traits::One;

use crate::element1d::SmoothFunction1D;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with('^') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);

    let mut total = Polynomial::zero();
    for term in terms {
        total = &total + &parse_term(term)?;
    }
    Ok(total)
}

fn parse_term(term: &str) -> Result<Polynomial> {
    let bad = || Error::Parse(format!("cannot parse polynomial term `{term}`"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-Rational::one(), &term[1..]),
        Some(b'+') => (Rational::one(), &term[1..]),
        _ => (Rational::one(), term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff_text, power) = match body.find('x') {
        None => (body, 0),
        Some(pos) => {
            let rest = &body[pos + 1..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^').and_then(|p| p.parse::<usize>().ok()).ok_or_else(bad)?
            };
            (body[..pos].strip_suffix('*').unwrap_or(&body[..pos]), power)
        }
    };
    let coeff = if coeff_text.is_empty() {
        Rational::one()
    } else {
        rational::parse(coeff_text).map_err(|_| bad())?
    };
    Ok(Polynomial::monomial(sign * coeff, power))
}

/// A built-in function name, or else a polynomial literal.
pub fn parse_input(text: &str) -> Result<SmoothFunction1D> {
    match SmoothFunction1D::by_name(text.trim()) {
        Ok(f) => Ok(f),
        Err(_) => parse_polynomial(text)
            .map(SmoothFunction1D::polynomial)
            .map_err(|_| Error::UnknownFunction(text.to_string())),
    }
}
