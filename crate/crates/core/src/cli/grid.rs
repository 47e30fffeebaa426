//! Parameter-grid syntax: `3`, `0..3` (inclusive), `0,2,5`, and `auto+K` for degrees.

use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeSpec(pub Vec<usize>);

impl FromStr for RangeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let number = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a non-negative integer, got `{t}`")))
        };
        let values = if let Some((a, b)) = s.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (number(a)?, number(b)?);
            if a > b {
                return Err(Error::Parse(format!("empty range `{s}`")));
            }
            (a..=b).collect()
        } else {
            s.split(',').map(number).collect::<Result<Vec<_>>>()?
        };
        Ok(RangeSpec(values))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeSpec {
    /// `2m+1 ..= 2m+1+K`.
    Auto(usize),
    Explicit(Vec<usize>),
}

impl FromStr for DegreeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "auto" {
            return Ok(DegreeSpec::Auto(0));
        }
        if let Some(k) = s.strip_prefix("auto+") {
            let k = k
                .parse()
                .map_err(|_| Error::Parse(format!("expected `auto+K`, got `{s}`")))?;
            return Ok(DegreeSpec::Auto(k));
        }
        Ok(DegreeSpec::Explicit(s.parse::<RangeSpec>()?.0))
    }
}

/// All `(m, n)` pairs, sorted, with `n ≥ 2m + 1` enforced.
pub fn expand_grid(m: &RangeSpec, n: &DegreeSpec) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for &m in &m.0 {
        let lowest = 2 * m + 1;
        match n {
            DegreeSpec::Auto(k) => out.extend((lowest..=lowest + k).map(|n| (m, n))),
            DegreeSpec::Explicit(ns) => {
                for &n in ns {
                    if n < lowest {
                        return Err(Error::DegreeTooLow { m, n });
                    }
                    out.push((m, n));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
