//! Smooth forms on `[0, 1]^N`, known through mixed partial derivatives.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::element1d::SmoothFunction1D;
use crate::error::{Error, Result};
use crate::form_degree::FormDegree;
use crate::polynomial::FloatPolynomial;

use super::chi::{CharacteristicVector, SignConvention};
use super::form::{Factor, FormSum, RankOneForm};

/// `(orders, point) ↦ ∂^{orders} u_χ(point)`.
pub type MixedPartialFn = Arc<dyn Fn(&[usize], &[f64]) -> f64 + Send + Sync>;

/// A smooth `ν`-form: one coefficient function per characteristic vector;
/// missing blocks are zero.
#[derive(Clone)]
pub struct SmoothFormND {
    name: String,
    n_factors: usize,
    nu: usize,
    max_order: Option<usize>,
    components: BTreeMap<CharacteristicVector, MixedPartialFn>,
    factorization: Option<FormSum>,
}

impl fmt::Debug for SmoothFormND {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SmoothFormND")
            .field("name", &self.name)
            .field("n_factors", &self.n_factors)
            .field("nu", &self.nu)
            .field("max_order", &self.max_order)
            .field("blocks", &self.components.keys().collect::<Vec<_>>())
            .finish()
    }
}

impl SmoothFormND {
    /// Zero form; add blocks with [`SmoothFormND::with_component`].
    pub fn new(name: impl Into<String>, n_factors: usize, nu: usize, max_order: Option<usize>) -> Result<Self> {
        if nu > n_factors {
            return Err(Error::NuOutOfRange { nu, n_factors });
        }
        Ok(SmoothFormND {
            name: name.into(),
            n_factors,
            nu,
            max_order,
            components: BTreeMap::new(),
            factorization: None,
        })
    }

    pub fn with_component(
        mut self,
        chi: CharacteristicVector,
        f: impl Fn(&[usize], &[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if chi.len() != self.n_factors {
            return Err(Error::FactorCountMismatch {
                expected: self.n_factors,
                found: chi.len(),
            });
        }
        if chi.weight() != self.nu {
            return Err(Error::FormDegreeMismatch {
                expected: self.nu,
                found: chi.weight(),
            });
        }
        self.components.insert(chi, Arc::new(f));
        Ok(self)
    }

    /// `u_1 ⊗ … ⊗ u_N` with each factor tagged by its form degree.
    pub fn from_product(factors: Vec<(FormDegree, SmoothFunction1D)>) -> Self {
        let degrees: Vec<FormDegree> = factors.iter().map(|(k, _)| *k).collect();
        let chi = CharacteristicVector::from_degrees(&degrees);
        let name = factors
            .iter()
            .map(|(_, f)| f.name().to_string())
            .collect::<Vec<_>>()
            .join(" ⊗ ");
        let max_order = factors.iter().filter_map(|(_, f)| f.max_order()).min();
        let exact: Option<Vec<Factor>> = factors
            .iter()
            .map(|(k, f)| f.exact_polynomial().map(|p| Factor::new(*k, p.clone())))
            .collect();
        let functions: Vec<SmoothFunction1D> = factors.into_iter().map(|(_, f)| f).collect();
        let n_factors = functions.len();
        let nu = chi.weight();
        let mut out = SmoothFormND {
            name,
            n_factors,
            nu,
            max_order,
            components: BTreeMap::new(),
            factorization: exact.map(|fs| FormSum::from_term(RankOneForm::unit(fs))),
        };
        out.components.insert(
            chi,
            Arc::new(move |orders: &[usize], x: &[f64]| {
                functions
                    .iter()
                    .zip(orders.iter().zip(x))
                    .map(|(f, (&s, &xi))| f.derivative(s, xi).unwrap_or(f64::NAN))
                    .product()
            }),
        );
        out
    }

    /// Floating view of an exact polynomial form, keeping it as the factorization.
    pub fn from_form_sum(form: &FormSum) -> Self {
        let mut by_block: BTreeMap<CharacteristicVector, Vec<(f64, Vec<FloatPolynomial>)>> = BTreeMap::new();
        for term in form.terms() {
            by_block.entry(term.chi()).or_default().push((
                crate::rational::to_f64(&term.weight),
                term.factors.iter().map(|f| f.poly.to_float()).collect(),
            ));
        }
        let mut out = SmoothFormND {
            name: "polynomial".to_string(),
            n_factors: form.n_factors(),
            nu: form.nu(),
            max_order: None,
            components: BTreeMap::new(),
            factorization: Some(form.clone()),
        };
        for (chi, terms) in by_block {
            out.components.insert(
                chi,
                Arc::new(move |orders: &[usize], x: &[f64]| {
                    terms
                        .iter()
                        .map(|(w, polys)| {
                            polys
                                .iter()
                                .zip(orders.iter().zip(x))
                                .fold(*w, |acc, (p, (&s, &xi))| acc * p.derivative(s).evaluate(xi))
                        })
                        .sum()
                }),
            );
        }
        out
    }

    /// Attaches an exact factorization after spot-checking it against the callbacks.
    pub fn with_factorization(mut self, form: FormSum) -> Result<Self> {
        let probe = SmoothFormND::from_form_sum(&form);
        let zero = vec![0; self.n_factors];
        for t in [0.0, 0.25, 0.6, 1.0] {
            let point: Vec<f64> = (0..self.n_factors).map(|l| (t + 0.17 * l as f64) % 1.0).collect();
            for chi in self.components.keys().chain(probe.components.keys()) {
                let a = self.partial(chi, &zero, &point)?;
                let b = probe.partial(chi, &zero, &point)?;
                if (a - b).abs() > 1e-9 * (1.0 + b.abs()) {
                    return Err(Error::InconsistentSmoothInput {
                        name: self.name.clone(),
                        x: point[0],
                    });
                }
            }
        }
        self.factorization = Some(form);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_factors(&self) -> usize {
        self.n_factors
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn max_order(&self) -> Option<usize> {
        self.max_order
    }

    pub fn factorization(&self) -> Option<&FormSum> {
        self.factorization.as_ref()
    }

    pub fn has_component(&self, chi: &CharacteristicVector) -> bool {
        self.components.contains_key(chi)
    }

    /// `∂^{orders} u_χ(point)`; zero for blocks without a component.
    pub fn partial(&self, chi: &CharacteristicVector, orders: &[usize], point: &[f64]) -> Result<f64> {
        if let Some(max) = self.max_order {
            if let Some(&order) = orders.iter().find(|&&s| s > max) {
                return Err(Error::MissingDerivative {
                    name: self.name.clone(),
                    order,
                    available: max,
                });
            }
        }
        Ok(self.components.get(chi).map_or(0.0, |f| f(orders, point)))
    }

    /// `(du)_{χ'} = Σ_t θ_t(χ'−e_t) ∂_t u_{χ'−e_t}` over the `t` with `χ'_t = 1`.
    pub fn exterior_derivative(&self, convention: SignConvention) -> SmoothFormND {
        let mut targets: BTreeMap<CharacteristicVector, Vec<(f64, usize, MixedPartialFn)>> = BTreeMap::new();
        for (chi, f) in &self.components {
            for t in 0..self.n_factors {
                if chi.bits()[t] == 1 {
                    continue;
                }
                let sign = convention.theta(chi, t) as f64;
                targets.entry(chi.raised(t)).or_default().push((sign, t, Arc::clone(f)));
            }
        }
        let mut out = SmoothFormND {
            name: format!("d({})", self.name),
            n_factors: self.n_factors,
            nu: self.nu + 1,
            max_order: self.max_order.map(|m| m.saturating_sub(1)),
            components: BTreeMap::new(),
            factorization: self.factorization.as_ref().map(|f| f.exterior_derivative(convention)),
        };
        for (chi, parts) in targets {
            out.components.insert(
                chi,
                Arc::new(move |orders: &[usize], x: &[f64]| {
                    parts
                        .iter()
                        .map(|(sign, t, f)| {
                            let mut raised = orders.to_vec();
                            raised[*t] += 1;
                            sign * f(&raised, x)
                        })
                        .sum()
                }),
            );
        }
        out
    }
}
