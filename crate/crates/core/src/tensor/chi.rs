use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form_degree::FormDegree;

/// Which of the `N` tensor factors carry a 1-form; the weight is the total form degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharacteristicVector(Vec<u8>);

impl CharacteristicVector {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidFormDegree(bad as usize));
        }
        Ok(CharacteristicVector(bits))
    }

    pub fn from_degrees(degrees: &[FormDegree]) -> Self {
        CharacteristicVector(degrees.iter().map(|d| d.value() as u8).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&b| b as usize).sum()
    }

    pub fn degree(&self, factor: usize) -> FormDegree {
        FormDegree::from_bit(self.0[factor])
    }

    /// Copy with bit `t` set.
    pub fn raised(&self, t: usize) -> Self {
        let mut bits = self.0.clone();
        bits[t] = 1;
        CharacteristicVector(bits)
    }

    /// Copy with bit `t` cleared.
    pub fn lowered(&self, t: usize) -> Self {
        let mut bits = self.0.clone();
        bits[t] = 0;
        CharacteristicVector(bits)
    }

    /// Number of 1-form factors strictly before position `t`.
    pub fn weight_before(&self, t: usize) -> usize {
        self.0[..t].iter().map(|&b| b as usize).sum()
    }

    /// Index ranges of the rank-one basis in this block: `n + 1 - i_ℓ` per factor.
    pub fn shape(&self, n: usize) -> Vec<usize> {
        self.0.iter().map(|&b| n + 1 - b as usize).collect()
    }

    /// Compact label such as `01`.
    pub fn label(&self) -> String {
        self.0.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

impl fmt::Display for CharacteristicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `C(N, ν)` characteristic vectors of weight `ν`, in lexicographic order.
pub fn enumerate_chi(n_factors: usize, nu: usize) -> Result<Vec<CharacteristicVector>> {
    if nu > n_factors {
        return Err(Error::NuOutOfRange { nu, n_factors });
    }
    let mut out = Vec::new();
    let mut bits = vec![0u8; n_factors];
    collect(&mut bits, 0, nu, &mut out);
    Ok(out)
}

fn collect(bits: &mut Vec<u8>, pos: usize, remaining: usize, out: &mut Vec<CharacteristicVector>) {
    let left = bits.len() - pos;
    if remaining > left {
        return;
    }
    if pos == bits.len() {
        out.push(CharacteristicVector(bits.clone()));
        return;
    }
    bits[pos] = 0;
    collect(bits, pos + 1, remaining, out);
    if remaining > 0 {
        bits[pos] = 1;
        collect(bits, pos + 1, remaining - 1, out);
        bits[pos] = 0;
    }
}

/// Orientation rule for the signs `θ_t` of the tensor exterior derivative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `θ_t = (−1)^{i_1 + … + i_{t−1}}`.
    #[default]
    Alternating,
    /// `θ_t = 1`. Not a cochain map; kept as a negative control.
    Unsigned,
}

impl SignConvention {
    /// `θ_t` for differentiating factor `t` of a form in block `chi`.
    pub fn theta(self, chi: &CharacteristicVector, t: usize) -> i64 {
        match self {
            SignConvention::Alternating => {
                if chi.weight_before(t).is_multiple_of(2) { 1 } else { -1 }
            }
            SignConvention::Unsigned => 1,
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(bits: &[u8]) -> CharacteristicVector {
        CharacteristicVector::new(bits.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_chi(2, 1).unwrap(), vec![cv(&[0, 1]), cv(&[1, 0])]);
        assert_eq!(enumerate_chi(3, 0).unwrap(), vec![cv(&[0, 0, 0])]);
        assert_eq!(enumerate_chi(4, 2).unwrap().len(), 6);
        assert!(enumerate_chi(2, 3).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=5 {
            for nu in 0..=n {
                let got = enumerate_chi(n, nu).unwrap();
                let brute: Vec<CharacteristicVector> = (0..1usize << n)
                    .map(|mask| cv(&(0..n).map(|b| ((mask >> (n - 1 - b)) & 1) as u8).collect::<Vec<_>>()))
                    .filter(|c| c.weight() == nu)
                    .collect();
                assert_eq!(got, brute);
                assert_eq!(got.len(), binomial(n, nu));
            }
        }
    }

    #[test]
    fn signs() {
        let c = cv(&[1, 0, 1, 0]);
        let s = SignConvention::Alternating;
        assert_eq!(s.theta(&c, 0), 1);
        assert_eq!(s.theta(&c, 1), -1);
        assert_eq!(s.theta(&c, 3), 1);
        assert_eq!(SignConvention::Unsigned.theta(&c, 1), 1);
    }

    #[test]
    fn rejects_non_binary_bits() {
        assert!(CharacteristicVector::new(vec![0, 2]).is_err());
    }
}
