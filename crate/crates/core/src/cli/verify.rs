use std::fmt::Write;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::element1d::{
    fixtures, monomial_probes, two_cell_continuity_demo, verify_commutation, verify_lemma_hypotheses,
    verify_node_matrix_commute, verify_projection, verify_unisolvence, write_csv, Element1D,
};
use crate::error::Result;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};
use crate::report::VerificationReport;
use crate::tensor::{
    enumerate_chi, monomial_rank_one_probes, verify_dd_zero_with, verify_dimensions, verify_kronecker_structure,
    verify_tensor_commutation_with, Factor, RankOneForm, SignConvention,
};

use super::args::{Check, Fixture, Format, VerifyArgs};
use super::grid::expand_grid;
use super::output::to_json;
use super::parse::parse_input;

pub const VERIFY_SCHEME: &str = "fecc-verify/v1";

/// All reports of one `verify` run, in grid order.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub scheme: &'static str,
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
}

impl SuiteResult {
    pub fn new(reports: Vec<VerificationReport>) -> Self {
        SuiteResult {
            scheme: VERIFY_SCHEME,
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed { 0 } else { 1 }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => to_json(self),
            Format::Text => {
                let mut s = String::new();
                for r in &self.reports {
                    let _ = writeln!(s, "{r}");
                }
                let failed = self.reports.iter().filter(|r| !r.passed).count();
                let _ = writeln!(
                    s,
                    "overall: {} ({} reports, {failed} failed)",
                    if self.passed { "PASS" } else { "FAIL" },
                    self.reports.len()
                );
                Ok(s)
            }
            Format::Csv => {
                let header: Vec<String> = ["property", "parameters", "passed", "witnesses", "first_witness"]
                    .map(String::from)
                    .to_vec();
                let rows = self.reports.iter().map(|r| {
                    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let first = r
                        .witnesses
                        .first()
                        .map(|w| format!("{} {:?}: {}", w.check, w.indices, w.detail))
                        .unwrap_or_default();
                    vec![
                        r.property.clone(),
                        params.join(";"),
                        r.passed.to_string(),
                        r.witnesses.len().to_string(),
                        first,
                    ]
                });
                write_csv(&header, rows)
            }
        }
    }
}

fn build_element(fixture: Option<Fixture>, m: usize, n: usize) -> Result<Element1D> {
    match fixture {
        Some(Fixture::SwappedBasis) => fixtures::swapped_basis(m, n),
        Some(Fixture::WrongFunctionalOrder) => fixtures::wrong_functional_order(m, n),
        Some(Fixture::PermutedAlpha1) => fixtures::permuted_alpha1(m, n),
        Some(Fixture::UnsignedTheta) | None => Element1D::build(m, n),
    }
}

/// Random polynomials with small rational coefficients, reproducible from `seed`.
pub fn random_probes(seed: u64, count: usize, max_degree: usize) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            Polynomial::new(
                (0..=degree)
                    .map(|_| rational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
                    .collect(),
            )
        })
        .collect()
}

fn random_rank_one(seed: u64, count: usize, n_factors: usize, nu: usize, max_degree: usize) -> Result<Vec<RankOneForm>> {
    let chis = enumerate_chi(n_factors, nu)?;
    let polys = random_probes(seed, count * n_factors, max_degree);
    Ok((0..count)
        .map(|i| {
            let chi = &chis[i % chis.len()];
            let factors = (0..n_factors)
                .map(|l| Factor::new(chi.degree(l), polys[i * n_factors + l].clone()))
                .collect();
            RankOneForm::new(Rational::from_integer((i as i64 + 1).into()), factors)
        })
        .filter(|f: &RankOneForm| !f.weight.is_zero())
        .collect())
}

fn point_seed(seed: u64, m: usize, n: usize) -> u64 {
    seed ^ ((m as u64) << 32) ^ (n as u64).wrapping_mul(0x9e37_79b9)
}

fn run_point(args: &VerifyArgs, m: usize, n: usize) -> Result<Vec<(VerificationReport, Duration)>> {
    let e = build_element(args.fixture, m, n)?;
    let convention = match args.fixture {
        Some(Fixture::UnsignedTheta) => SignConvention::Unsigned,
        _ => SignConvention::Alternating,
    };
    let seed = point_seed(args.seed, m, n);
    let mut out = Vec::new();
    let mut timed = |f: &mut dyn FnMut() -> Result<Vec<VerificationReport>>| -> Result<()> {
        let start = Instant::now();
        let reports = f()?;
        let elapsed = start.elapsed();
        out.extend(reports.into_iter().map(|r| (r, elapsed)));
        Ok(())
    };
    let mut checks = args.checks.clone();
    checks.sort_unstable();
    checks.dedup();
    for check in checks {
        match check {
            Check::Unisolvence => timed(&mut || Ok(vec![verify_unisolvence(&e), verify_node_matrix_commute(&e)]))?,
            Check::LemmaHypotheses => {
                let degree = args.probe_degree.unwrap_or(n + 5).max(n);
                timed(&mut || Ok(vec![verify_lemma_hypotheses(&e, degree)?]))?
            }
            Check::Commutation => {
                let degree = args.probe_degree.unwrap_or(n + 5);
                timed(&mut || {
                    let mut probes = monomial_probes(degree);
                    probes.extend(random_probes(seed, args.random_probes, degree));
                    Ok(vec![verify_commutation(&e, &probes), verify_projection(&e)])
                })?
            }
            Check::ContinuityDemo => {
                let input = parse_input(&args.input)?;
                timed(&mut || Ok(vec![two_cell_continuity_demo(&e, &input)?]))?
            }
            Check::DdZero => {
                for &n_factors in &args.n_factors.0 {
                    let cap = args.probe_degree.unwrap_or(2);
                    timed(&mut || Ok(vec![verify_dd_zero_with(n_factors, &e, cap, convention)?]))?
                }
            }
            Check::TensorCommutation => {
                for &n_factors in &args.n_factors.0 {
                    let degree = args.probe_degree.unwrap_or(n + 3);
                    let nus: Vec<usize> = match args.nu {
                        Some(nu) => vec![nu],
                        None => (0..=n_factors).collect(),
                    };
                    for nu in nus {
                        timed(&mut || {
                            let mut probes = monomial_rank_one_probes(n_factors, nu, degree)?;
                            probes.extend(random_rank_one(seed, args.random_probes, n_factors, nu, degree)?);
                            Ok(vec![verify_tensor_commutation_with(n_factors, nu, &probes, &e, convention)?])
                        })?
                    }
                }
            }
            Check::Dimensions => {
                for &n_factors in &args.n_factors.0 {
                    timed(&mut || {
                        let mut reports = vec![verify_dimensions(n_factors, &e)?];
                        for nu in 0..=n_factors {
                            reports.push(verify_kronecker_structure(n_factors, nu, &e)?);
                        }
                        Ok(reports)
                    })?
                }
            }
        }
    }
    Ok(out)
}

/// Runs every selected check on every grid point. Timings go to stderr so
/// the report itself is reproducible.
pub fn cmd_verify(args: &VerifyArgs) -> Result<SuiteResult> {
    let grid = expand_grid(&args.m, &args.n)?;
    let per_point = grid
        .par_iter()
        .map(|&(m, n)| run_point(args, m, n))
        .collect::<Result<Vec<_>>>()?;
    let mut reports = Vec::new();
    for (report, elapsed) in per_point.into_iter().flatten() {
        let first_line = report.to_string().lines().next().unwrap_or_default().to_string();
        eprintln!("[timing] {first_line}: {:.3} ms", elapsed.as_secs_f64() * 1e3);
        reports.push(report);
    }
    Ok(SuiteResult::new(reports))
}
