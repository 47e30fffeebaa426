//! Acceptance checks, one test per criterion. Run with `--nocapture` to see
//! the PASS/FAIL lines.

use std::time::{Duration, Instant};

use fecc::element1d::{
    fixtures, latex_key, monomial_probes, two_cell_continuity_demo, verify_commutation, verify_lemma_hypotheses,
    verify_node_matrix_commute, verify_projection, verify_unisolvence,
};
use fecc::legendre::{iterated_legendre_integral, legendre, legendre_expansion};
use fecc::quadrature::Quadrature;
use fecc::rational::{frac, int};
use fecc::tensor::{
    enumerate_chi, monomial_rank_one_probes, tensor_functionals, verify_dd_zero, verify_dd_zero_with,
    verify_tensor_commutation, verify_tensor_commutation_with, CharacteristicVector, SignConvention, SmoothFormND,
};
use fecc::tolerances::{COMMUTATION_1D, CONTINUITY, SMOOTH_QUADRATURE_ORDER};
use fecc::{Element1D, FormDegree, Polynomial, SmoothFunction1D, VerificationReport};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid_1d() -> Vec<(usize, usize)> {
    (0..=4).flat_map(|m| (2 * m + 1..=2 * m + 6).map(move |n| (m, n))).collect()
}

fn grid_tensor() -> Vec<(usize, usize)> {
    (0..=2).flat_map(|m| (2 * m + 1..=2 * m + 3).map(move |n| (m, n))).collect()
}

fn verdict(id: u32, title: &str, ok: bool, elapsed: Duration, limit: Option<Duration>, failures: &[String]) {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let limit_text = limit.map_or(String::new(), |l| format!(" (limit {} s)", l.as_secs()));
    println!(
        "[criterion {id:>2}] {} {title}: {:.2} s{limit_text}",
        if ok && in_time { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(ok, "criterion {id} failed: {failures:?}");
    assert!(in_time, "criterion {id} exceeded its time limit: {elapsed:?}");
}

fn failures_of(reports: &[VerificationReport]) -> Vec<String> {
    reports.iter().filter(|r| !r.passed).map(|r| r.to_string()).collect()
}

/// Random polynomials with small rational coefficients.
fn random_polys(seed: u64, count: usize, max_degree: usize) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(0..=max_degree);
            Polynomial::new((0..=d).map(|_| frac(rng.gen_range(-20..=20), rng.gen_range(1..=15))).collect())
        })
        .collect()
}

#[test]
fn criterion_01_unisolvence_grid() {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (m, n) in grid_1d() {
        let e = Element1D::build(m, n).unwrap();
        reports.push(verify_unisolvence(&e));
        reports.push(verify_node_matrix_commute(&e));
        // Independent restatement of the deletion identity.
        let m0 = e.node_matrix(FormDegree::Zero);
        let m1 = e.node_matrix(FormDegree::One);
        for i in 0..n {
            for j in 0..n {
                if m1.get(i, j) != m0.get(i, j) {
                    failures.push(format!("m={m} n={n}: M1[{i}][{j}] differs from M0"));
                }
            }
        }
        if m0.rows() != n + 1 || m1.rows() != n {
            failures.push(format!("m={m} n={n}: wrong matrix sizes"));
        }
    }
    failures.extend(failures_of(&reports));
    verdict(
        1,
        "unisolvence and deletion identity, m<=4, n=2m+1..2m+6",
        failures.is_empty() && reports.len() == 60,
        start.elapsed(),
        Some(Duration::from_secs(30)),
        &failures,
    );
}

#[test]
fn criterion_02_lemma_hypotheses() {
    let start = Instant::now();
    let reports: Vec<VerificationReport> = grid_1d()
        .into_iter()
        .map(|(m, n)| verify_lemma_hypotheses(&Element1D::build(m, n).unwrap(), n + 5).unwrap())
        .collect();
    let failures = failures_of(&reports);
    verdict(
        2,
        "kernel/range separation hypotheses with probes to degree n+5",
        failures.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(30)),
        &failures,
    );
}

#[test]
fn criterion_03_commutation() {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (m, n) in grid_1d() {
        let e = Element1D::build(m, n).unwrap();
        let mut probes = monomial_probes(n + 5);
        probes.extend(random_polys((m * 100 + n) as u64, 8, n + 5));
        reports.push(verify_commutation(&e, &probes));
        // Oracle: the residual computed from scratch, without the verifier.
        for u in &probes {
            let lhs = e.interpolate(FormDegree::Zero, u).differentiate();
            let rhs = e.interpolate(FormDegree::One, &u.differentiate());
            if lhs != rhs {
                failures.push(format!("m={m} n={n}: d I0 u != I1 du for u = {u}"));
            }
        }
    }
    failures.extend(failures_of(&reports));
    verdict(
        3,
        "d I0 u = I1 du exactly on monomials to n+5 and random probes",
        failures.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(60)),
        &failures,
    );
}

#[test]
fn criterion_04_projection() {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (m, n) in grid_1d() {
        let e = Element1D::build(m, n).unwrap();
        reports.push(verify_projection(&e));
        let mut polys = monomial_probes(n);
        polys.extend(random_polys(n as u64, 4, n));
        for p in &polys {
            if e.interpolate(FormDegree::Zero, p) != *p {
                failures.push(format!("m={m} n={n}: I0 does not reproduce {p}"));
            }
            if p.degree().is_none_or(|d| d < n) && e.interpolate(FormDegree::One, p) != *p {
                failures.push(format!("m={m} n={n}: I1 does not reproduce {p}"));
            }
        }
    }
    failures.extend(failures_of(&reports));
    verdict(4, "I0 reproduces P_n, I1 reproduces P_(n-1)", failures.is_empty(), start.elapsed(), None, &failures);
}

#[test]
fn criterion_05_legendre_identities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for j in 1..=20 {
        let lhs = iterated_legendre_integral(1, j).scale(&int(2 * (2 * j as i64 + 1)));
        let rhs = &legendre(j + 1) - &legendre(j - 1);
        if lhs != rhs {
            failures.push(format!("integral identity fails at j={j}"));
        }
    }
    for i in 0..=20 {
        if legendre(i).evaluate(&int(1)) != int(1) {
            failures.push(format!("l_{i}(1) != 1"));
        }
        for j in 0..=20 {
            let inner = (&legendre(i) * &legendre(j)).definite_integral();
            let expected = if i == j { frac(1, 2 * i as i64 + 1) } else { int(0) };
            if inner != expected {
                failures.push(format!("<l_{i}, l_{j}> = {inner}"));
            }
        }
    }
    // L^m_j = a_1 l_(j+m) + a_2 l_(j+m-2) + ... + a_(m+1) l_(j-m). The lower
    // end and the parity need j >= m; the top coefficient is checked for all j.
    for m in 1..=4 {
        for j in 0..=10 {
            let c = legendre_expansion(&iterated_legendre_integral(m, j));
            let top = j + m;
            if c.len() != top + 1 || c[top].is_zero() {
                failures.push(format!("L^{m}_{j}: leading index is not {top}"));
                continue;
            }
            if j >= m {
                for (k, ck) in c.iter().enumerate() {
                    let in_band = k + m >= j && (top - k) % 2 == 0;
                    if !in_band && !ck.is_zero() {
                        failures.push(format!("L^{m}_{j}: stray coefficient on l_{k}"));
                    }
                }
                if c[j - m].is_zero() {
                    failures.push(format!("L^{m}_{j}: lowest coefficient l_{} vanishes", j - m));
                }
            }
        }
    }
    verdict(
        5,
        "Legendre integral, orthogonality, normalization, expansion band",
        failures.is_empty(),
        start.elapsed(),
        None,
        &failures,
    );
}

#[test]
fn criterion_06_tensor_dd_zero() {
    let start = Instant::now();
    let mut reports = Vec::new();
    for n_factors in [2, 3] {
        for (m, n) in grid_tensor() {
            reports.push(verify_dd_zero(n_factors, &Element1D::build(m, n).unwrap(), 2).unwrap());
        }
    }
    let failures = failures_of(&reports);
    verdict(
        6,
        "d(d phi) = 0 on every rank-one basis element, N in {2,3}",
        failures.is_empty() && reports.len() == 18,
        start.elapsed(),
        Some(Duration::from_secs(120)),
        &failures,
    );
}

#[test]
fn criterion_07_tensor_commutation() {
    let start = Instant::now();
    let mut reports = Vec::new();
    for n_factors in [2, 3] {
        for (m, n) in grid_tensor() {
            let e = Element1D::build(m, n).unwrap();
            for nu in 0..=n_factors {
                let probes = monomial_rank_one_probes(n_factors, nu, n + 3).unwrap();
                reports.push(verify_tensor_commutation(n_factors, nu, &probes, &e).unwrap());
            }
        }
    }
    let failures = failures_of(&reports);
    verdict(
        7,
        "I(du) = d(Iu) on rank-one monomials to degree n+3, N in {2,3}, all nu",
        failures.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(120)),
        &failures,
    );
}

#[test]
fn criterion_08_quintic_c2_descriptors() {
    let start = Instant::now();
    let e = Element1D::build(2, 5).unwrap();
    let mut failures = Vec::new();
    let lists: [(&[u8], &[&str]); 3] = [
        (
            &[0, 0],
            &[
                r"\partial_x u(0)\partial_y v(0)",
                r"\partial_x u(0)\partial_y v(1)",
                r"\partial_x u(0)\partial^2_y v(0)",
                r"\partial_x u(0)\partial^2_y v(1)",
                r"\partial_x u(0)(v(1)-v(0))",
                r"\partial_x u(0)(v(1)+v(0))",
            ],
        ),
        (
            &[0, 1],
            &[
                r"\partial_x u(0)v(0)",
                r"\partial_x u(0)v(1)",
                r"\partial_x u(0)\partial_y v(0)",
                r"\partial_x u(0)\partial_y v(1)",
                r"\partial_x u(0)\int_0^1 v\,\dif x",
            ],
        ),
        (
            &[1, 1],
            &[
                r"u(0)v(0)",
                r"u(0)v(1)",
                r"u(0)\partial_y v(0)",
                r"u(0)\partial_y v(1)",
                r"u(0)\int_0^1 v\, \dif x",
            ],
        ),
    ];
    for (bits, expected) in lists {
        let chi = CharacteristicVector::new(bits.to_vec()).unwrap();
        let row: Vec<_> = tensor_functionals(&e, &chi).into_iter().filter(|f| f.indices[0] == 0).collect();
        if row.len() != expected.len() {
            failures.push(format!("block {chi}: {} functionals with j1 = 1", row.len()));
        }
        for (f, want) in row.iter().zip(expected) {
            if latex_key(&f.latex_rank_one()) != latex_key(want) {
                failures.push(format!("{}: got {}, want {want}", f.label(), f.latex_rank_one()));
            }
        }
    }

    let chi00 = CharacteristicVector::new(vec![0, 0]).unwrap();
    let row: Vec<_> = tensor_functionals(&e, &chi00).into_iter().filter(|f| f.indices[0] == 0).collect();
    let smooth_expected = [
        r"\partial_x\partial_y u(0,0)",
        r"\partial_x\partial_y u(0,1)",
        r"\partial_x\partial^2_y u(0,0)",
        r"\partial_x\partial^2_y u(0,1)",
        r"\partial_x u(0,1) - \partial_x u(0,0)",
        r"\partial_x u(0,1) + \partial_x u(0,0)",
    ];
    for (f, want) in row.iter().zip(smooth_expected) {
        if latex_key(&f.latex_function("u")) != latex_key(want) {
            failures.push(format!("{} on u: got {}, want {want}", f.label(), f.latex_function("u")));
        }
    }

    // Value on a non-separable smooth u(x, y) = e^x cos y + x^2 y^3.
    let u = SmoothFormND::new("u", 2, 0, None)
        .unwrap()
        .with_component(chi00.clone(), |o, p| {
            let (x, y) = (p[0], p[1]);
            let ex = x.exp();
            let cos_part = match o[1] % 4 {
                0 => y.cos(),
                1 => -y.sin(),
                2 => -y.cos(),
                _ => y.sin(),
            };
            let poly_x = match o[0] {
                0 => x * x,
                1 => 2.0 * x,
                2 => 2.0,
                _ => 0.0,
            };
            let poly_y = match o[1] {
                0 => y.powi(3),
                1 => 3.0 * y * y,
                2 => 6.0 * y,
                3 => 6.0,
                _ => 0.0,
            };
            ex * cos_part + poly_x * poly_y
        })
        .unwrap();
    let q = Quadrature::gauss_legendre(SMOOTH_QUADRATURE_ORDER).unwrap();
    // ∂_x u(0, y) = cos y.
    let expected = 1.0f64.cos() - 1.0;
    let got = row[4].apply_smooth(&u, &q).unwrap();
    if (got - expected).abs() > 1e-14 {
        failures.push(format!("N00_15(u) = {got}, expected {expected}"));
    }
    verdict(
        8,
        "n=5, C^2 tensor descriptors for k=0,1,2 and the 2D smooth rendering",
        failures.is_empty(),
        start.elapsed(),
        None,
        &failures,
    );
}

#[test]
fn criterion_09_smooth_inputs() {
    let start = Instant::now();
    let mut failures = Vec::new();
    assert_eq!(CONTINUITY, 1e-12);
    assert_eq!(COMMUTATION_1D, 1e-12);
    for (m, n) in [(1, 3), (2, 5)] {
        let e = Element1D::build(m, n).unwrap();
        for u in [SmoothFunction1D::sin(), SmoothFunction1D::exp()] {
            let r = e.commutation_residual_smooth(&u, SMOOTH_QUADRATURE_ORDER).unwrap();
            println!("    m={m} n={n} {}: commutation residual {r:.3e}", u.name());
            if r > COMMUTATION_1D {
                failures.push(format!("m={m} n={n} {}: residual {r:e}", u.name()));
            }
            let report = two_cell_continuity_demo(&e, &u).unwrap();
            if !report.passed {
                failures.push(report.to_string());
            }
        }
    }
    verdict(
        9,
        "smooth sin/exp: residual <= 1e-12 at order 12, two-cell C^m junction <= 1e-12",
        failures.is_empty(),
        start.elapsed(),
        None,
        &failures,
    );
}

#[test]
fn criterion_10_negative_controls() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut note = |ok: bool, what: String| {
        if !ok {
            failures.push(what);
        }
    };

    for (m, n) in [(1, 3), (2, 5), (3, 8)] {
        // Swapped basis: the node-matrix structure breaks, nothing else.
        let e = fixtures::swapped_basis(m, n).unwrap();
        let r = verify_unisolvence(&e);
        note(
            !r.passed && r.witnesses.iter().any(|w| w.indices == vec![1, 2]),
            format!("swapped basis m={m} n={n}: unisolvence did not fail at (1,2)"),
        );
        note(verify_lemma_hypotheses(&e, n + 3).unwrap().passed, format!("swapped basis m={m}: lemma check failed"));
        note(
            verify_commutation(&e, &monomial_probes(n + 3)).passed,
            format!("swapped basis m={m}: commutation failed"),
        );

        // Wrong order in the first 1-form functional: hypothesis (v) fails.
        let e = fixtures::wrong_functional_order(m, n).unwrap();
        let r = verify_lemma_hypotheses(&e, n + 3).unwrap();
        note(
            r.has_failure("v:functional-commute") && !r.witnesses.is_empty(),
            format!("wrong functional order m={m}: lemma check did not fail at (v): {r}"),
        );
        note(verify_unisolvence(&e).passed, format!("wrong functional order m={m}: unisolvence failed"));
    }

    // Unsigned θ: only d∘d = 0 breaks; commutation holds block by block.
    for n_factors in [2, 3] {
        let e = Element1D::build(1, 3).unwrap();
        let r = verify_dd_zero_with(n_factors, &e, 2, SignConvention::Unsigned).unwrap();
        note(!r.passed && !r.witnesses.is_empty(), format!("unsigned theta N={n_factors}: dd-zero passed"));
        for nu in 0..=n_factors {
            let probes = monomial_rank_one_probes(n_factors, nu, 4).unwrap();
            let c = verify_tensor_commutation_with(n_factors, nu, &probes, &e, SignConvention::Unsigned).unwrap();
            note(c.passed, format!("unsigned theta N={n_factors} nu={nu}: commutation failed"));
        }
    }

    // Permuted alpha1: the interpolant changes, the element's structure does not.
    let e = fixtures::permuted_alpha1(1, 4).unwrap();
    note(!verify_commutation(&e, &monomial_probes(6)).passed, "permuted alpha1: commutation passed".into());
    note(verify_unisolvence(&e).passed, "permuted alpha1: unisolvence failed".into());

    verdict(
        10,
        "corruption fixtures trip their targeted verifiers with witnesses",
        failures.is_empty(),
        start.elapsed(),
        None,
        &failures,
    );
}

#[test]
fn chi_enumeration_used_above_is_complete() {
    assert_eq!(enumerate_chi(3, 1).unwrap().len(), 3);
    assert!(Polynomial::zero().differentiate().is_zero());
}
