//! Shifted Legendre polynomials on `[0, 1]`, their iterated integrals, and
//! exact Legendre expansions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// `ℓ_0, …, ℓ_max` by the shifted three-term recurrence
/// `(j+1) ℓ_{j+1} = (2j+1)(2x-1) ℓ_j - j ℓ_{j-1}`.
pub fn legendre_family(max: usize) -> Vec<Polynomial> {
    let mut family = Vec::with_capacity(max + 1);
    family.push(Polynomial::one());
    if max == 0 {
        return family;
    }
    let two_x_minus_one = Polynomial::from_ints(&[-1, 2]);
    family.push(two_x_minus_one.clone());
    for j in 1..max {
        let a = (&two_x_minus_one * &family[j]).scale(&rational::int(2 * j as i64 + 1));
        let b = family[j - 1].scale(&rational::int(j as i64));
        let next = (&a - &b).scale(&rational::frac(1, j as i64 + 1));
        family.push(next);
    }
    family
}

/// Shifted Legendre polynomial `ℓ_j`: orthogonal on `[0, 1]`, normalized by `ℓ_j(1) = 1`.
pub fn legendre(j: usize) -> Polynomial {
    legendre_family(j).pop().expect("family is nonempty")
}

/// `L^α_j`: `α`-fold integral from zero of `ℓ_j`, degree `j + α`.
pub fn iterated_legendre_integral(alpha: usize, j: usize) -> Polynomial {
    (0..alpha).fold(legendre(j), |p, _| p.integrate_from_zero())
}

/// Coefficients `c_i` with `p = Σ c_i ℓ_i`, via `c_i = (2i+1) ∫₀¹ p ℓ_i`.
///
/// Returns `deg p + 1` coefficients (empty for the zero polynomial).
pub fn legendre_expansion(p: &Polynomial) -> Vec<Rational> {
    let Some(degree) = p.degree() else {
        return Vec::new();
    };
    legendre_family(degree)
        .iter()
        .enumerate()
        .map(|(i, l)| (p * l).definite_integral() * Rational::from_integer(BigInt::from(2 * i + 1)))
        .collect()
}

/// `Σ c_i ℓ_i`.
pub fn legendre_combination(coeffs: &[Rational]) -> Polynomial {
    if coeffs.is_empty() {
        return Polynomial::zero();
    }
    legendre_family(coeffs.len() - 1)
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(Polynomial::zero(), |acc, (l, c)| &acc + &l.scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use num_traits::One;
    use proptest::prelude::*;

    /// Independent construction: Gram–Schmidt on monomials over [0,1],
    /// then scaled so that the value at 1 is one.
    fn gram_schmidt(max: usize) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for k in 0..=max {
            let mut v = Polynomial::monomial(Rational::one(), k);
            for q in &out {
                let num = (&v * q).definite_integral();
                let den = (q * q).definite_integral();
                v = &v - &q.scale(&(num / den));
            }
            let at_one = v.evaluate(&int(1));
            out.push(v.scale(&(Rational::one() / at_one)));
        }
        out
    }

    #[test]
    fn low_order_values() {
        assert_eq!(legendre(0), Polynomial::one());
        assert_eq!(legendre(1), Polynomial::from_ints(&[-1, 2]));
        assert_eq!(legendre(2), Polynomial::from_ints(&[1, -6, 6]));
    }

    #[test]
    fn recurrence_matches_gram_schmidt() {
        let oracle = gram_schmidt(12);
        assert_eq!(legendre_family(12), oracle);
    }

    #[test]
    fn orthogonality_and_normalization() {
        let family = legendre_family(20);
        for (i, li) in family.iter().enumerate() {
            assert_eq!(li.degree(), Some(i));
            assert_eq!(li.evaluate(&int(1)), int(1));
            assert_eq!((li * li).definite_integral(), frac(1, 2 * i as i64 + 1));
            for lj in &family[i + 1..] {
                assert!((li * lj).definite_integral().is_zero());
            }
        }
    }

    #[test]
    fn iterated_integrals() {
        assert_eq!(iterated_legendre_integral(0, 2), legendre(2));
        assert_eq!(iterated_legendre_integral(1, 1), Polynomial::from_ints(&[0, -1, 1]));
        // 2(2j+1) L^1_j = ℓ_{j+1} - ℓ_{j-1} at j = 1
        let lhs = iterated_legendre_integral(1, 1).scale(&int(6));
        assert_eq!(lhs, Polynomial::from_ints(&[0, -6, 6]));
        assert_eq!(lhs, &legendre(2) - &legendre(0));
        for alpha in 0..5 {
            for j in 0..6 {
                assert_eq!(iterated_legendre_integral(alpha, j).degree(), Some(j + alpha));
            }
        }
    }

    #[test]
    fn expansions() {
        assert_eq!(legendre_expansion(&legendre(3)), vec![int(0), int(0), int(0), int(1)]);
        assert_eq!(
            legendre_expansion(&Polynomial::from_ints(&[0, -1, 1])),
            vec![frac(-1, 6), int(0), frac(1, 6)]
        );
        assert!(legendre_expansion(&Polynomial::zero()).is_empty());
    }

    proptest! {
        #[test]
        fn expansion_round_trips(cs in prop::collection::vec((-30i64..30, 1i64..12), 0..13)) {
            let p = Polynomial::new(cs.into_iter().map(|(a, b)| frac(a, b)).collect());
            prop_assert_eq!(legendre_combination(&legendre_expansion(&p)), p);
        }
    }
}
