//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line. Expected values are frozen closed forms built here by
//! direct polynomial arithmetic, independent of the library's computation
//! routes; determinants additionally get a brute-force Laplace oracle.

use std::process::Command;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use tsallis_bernoulli::bernoulli::{
    beta_tilde_derivative_series, beta_tilde_recurrence_table, beta_tilde_table,
    beta_tilde_x_plus_y, classical_bernoulli_oracle_table, classical_shift_check,
    degenerate_bernoulli_numbers, lambda_appell_monomial_family, lambda_appell_reconstruct,
    translation_rhs, xn_expansion_rhs, Route,
};
use tsallis_bernoulli::bivariate::{
    beta_r_series_table, beta_r_table, partial_x_check, partial_y_check, BivariateRoute,
};
use tsallis_bernoulli::epsilon::EpsilonTable;
use tsallis_bernoulli::hessenberg::{hessenberg_det, HessMatrix};
use tsallis_bernoulli::jsonio::xpoly_from_json;
use tsallis_bernoulli::numeric::{exp_lambda, log_lambda, product_form_exp};
use tsallis_bernoulli::poly::{LambdaPoly, XPoly};
use tsallis_bernoulli::rational::rat;

fn lp(coeffs: &[i64]) -> LambdaPoly {
    LambdaPoly::from_int_coeffs(coeffs)
}

/// β̃₀..β̃₄ assembled by direct polynomial arithmetic from their factored
/// closed forms.
fn frozen_table() -> Vec<XPoly> {
    let one_minus = lp(&[1, -1]);
    let one_minus_sq = one_minus.mul(&one_minus);
    let one_minus_lsq = lp(&[1, 0, -1]);
    let lambda = lp(&[0, 1]);
    let eps3 = one_minus.mul(&lp(&[1, -2]));
    let eps4 = eps3.mul(&lp(&[1, -3]));

    let b0 = XPoly::one();
    let b1 = XPoly::from_coeffs(vec![lp(&[-1, 1]).scale(&rat(1, 2)), LambdaPoly::one()]);
    let b2 = XPoly::from_coeffs(vec![
        one_minus_lsq.scale(&rat(1, 6)),
        lp(&[-1, 1]),
        one_minus.clone(),
    ]);
    let b3 = XPoly::from_coeffs(vec![
        lambda.mul(&one_minus_lsq).scale(&rat(-1, 4)),
        one_minus_lsq.scale(&rat(1, 2)),
        one_minus_sq.scale(&rat(-3, 2)),
        eps3,
    ]);
    let b4 = XPoly::from_coeffs(vec![
        lp(&[1, 0, -20, 0, 19]).scale(&rat(-1, 30)),
        lambda.mul(&one_minus_lsq).scale(&rat(-1, 1)),
        one_minus.mul(&one_minus_lsq),
        one_minus_sq.mul(&lp(&[1, -2])).scale(&rat(-2, 1)),
        eps4,
    ]);
    vec![b0, b1, b2, b3, b4]
}

#[test]
fn criterion_01_closed_form_table() {
    let start = Instant::now();
    let expected = frozen_table();
    for route in Route::ALL {
        let got = beta_tilde_table(4, route);
        for n in 0..=4 {
            assert_eq!(got[n], expected[n], "route {route}, n = {n}");
        }
    }
    // the β̃₄ constant term is -(1 - 20λ² + 19λ⁴)/30
    assert_eq!(
        expected[4].coeff(0),
        lp(&[1, 0, -20, 0, 19]).scale(&rat(-1, 30))
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("[criterion 01] closed-form table, all routes, degrees 0..=4: PASS ({elapsed:?})");
}

#[test]
fn criterion_02_route_equivalence() {
    let start = Instant::now();
    let recurrence = beta_tilde_recurrence_table(20);
    let explicit = beta_tilde_table(20, Route::Explicit);
    let series = beta_tilde_table(20, Route::Series);
    let determinant = beta_tilde_table(12, Route::Determinant);
    for n in 0..=20 {
        assert_eq!(recurrence[n], explicit[n], "explicit at n = {n}");
        assert_eq!(recurrence[n], series[n], "series at n = {n}");
        if n <= 12 {
            assert_eq!(recurrence[n], determinant[n], "determinant at n = {n}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!("[criterion 02] route equivalence, n <= 20 (determinant n <= 12): PASS ({elapsed:?})");
}

#[test]
fn criterion_03_boundary_and_classical_limit() {
    let polys = beta_tilde_recurrence_table(20);
    let numbers = degenerate_bernoulli_numbers(20);
    let oracle = classical_bernoulli_oracle_table(20);
    for n in 0..=20 {
        assert_eq!(polys[n].substitute_x(&rat(0, 1)), numbers[n], "boundary at n = {n}");
        assert_eq!(
            polys[n].substitute_lambda(&rat(0, 1)),
            oracle[n],
            "classical limit at n = {n}"
        );
    }
    for (n, expected) in [
        (2usize, rat(1, 6)),
        (4, rat(-1, 30)),
        (6, rat(1, 42)),
        (8, rat(-1, 30)),
        (10, rat(5, 66)),
    ] {
        assert_eq!(oracle[n].coeff(0), expected, "constant at n = {n}");
    }
    println!("[criterion 03] boundary value and classical limit, n <= 20: PASS");
}

#[test]
fn criterion_04_translation_identity() {
    let explicit = beta_tilde_table(10, Route::Explicit);
    for n in 0..=10 {
        let rhs = translation_rhs(n);
        assert_eq!(rhs, beta_tilde_x_plus_y(n), "translation at n = {n}");
        assert_eq!(
            rhs.substitute_x_zero_y_as_x(),
            explicit[n],
            "contraction at n = {n}"
        );
        let (lhs, shifted) = classical_shift_check(n);
        assert_eq!(lhs, shifted, "classical shift at n = {n}");
    }
    println!("[criterion 04] translation identity, contraction, classical shift, n <= 10: PASS");
}

#[test]
fn criterion_05_lambda_appell_suite() {
    let polys = beta_tilde_recurrence_table(20);
    let lambda_x = XPoly::monomial(LambdaPoly::var(), 1);
    assert_eq!(beta_tilde_derivative_series(0), XPoly::zero());
    for n in 1..=20 {
        let deriv = polys[n].diff();
        let rhs = polys[n - 1]
            .sub(&polys[n - 1].diff().mul(&lambda_x))
            .scale(&rat(n as i64, 1));
        assert_eq!(deriv, rhs, "derivative recurrence at n = {n}");
        assert_eq!(
            beta_tilde_derivative_series(n),
            deriv,
            "derivative series at n = {n}"
        );
        assert_eq!(
            lambda_appell_reconstruct(n),
            polys[n],
            "integral reconstruction at n = {n}"
        );
    }
    let family = lambda_appell_monomial_family(10);
    let eps = EpsilonTable::new(10);
    for (n, p) in family.iter().enumerate() {
        assert_eq!(
            p,
            &XPoly::monomial(eps.minus(n).clone(), n),
            "monomial family at n = {n}"
        );
    }
    println!("[criterion 05] λ-Appell derivative, series, reconstruction (n <= 20), monomials (n <= 10): PASS");
}

#[test]
fn criterion_06_xn_expansion() {
    let eps = EpsilonTable::new(12);
    for n in 0..=12 {
        assert_eq!(
            xn_expansion_rhs(n),
            XPoly::monomial(eps.minus(n).clone(), n),
            "n = {n}"
        );
    }
    println!("[criterion 06] xⁿ expansion over β̃₀..β̃ₙ, n <= 12: PASS");
}

/// Cofactor expansion along the first row; kept in the test surface only.
fn laplace_det(rows: &[Vec<XPoly>]) -> XPoly {
    let n = rows.len();
    if n == 0 {
        return XPoly::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = XPoly::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<XPoly>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].mul(&laplace_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

#[test]
fn criterion_07_hessenberg_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE97);
    for trial in 0..100 {
        let size = rng.random_range(1usize..=6);
        let rows: Vec<Vec<XPoly>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        if i > j + 1 {
                            XPoly::zero()
                        } else {
                            let numer = rng.random_range(-9i64..=9);
                            let denom = rng.random_range(1i64..=9);
                            XPoly::constant(LambdaPoly::constant(rat(numer, denom)))
                        }
                    })
                    .collect()
            })
            .collect();
        let m = HessMatrix::new(rows.clone()).expect("pattern enforced");
        assert_eq!(
            hessenberg_det(&m),
            laplace_det(&rows),
            "trial {trial}, size {size}"
        );
    }
    println!("[criterion 07] Hessenberg recurrence vs Laplace oracle, 100 random matrices: PASS");
}

#[test]
fn criterion_08_bivariate_suite() {
    let start = Instant::now();
    for r in [1usize, 2, 3] {
        let recurrence = beta_r_table(10, r, BivariateRoute::Recurrence);
        let double_sum = beta_r_table(10, r, BivariateRoute::DoubleSum);
        let connection = beta_r_table(10, r, BivariateRoute::Connection);
        let series = beta_r_series_table(10, r);
        let single = beta_tilde_recurrence_table(10);
        for n in 0..=10 {
            assert_eq!(recurrence[n], double_sum[n], "double-sum r={r} n={n}");
            assert_eq!(recurrence[n], connection[n], "connection r={r} n={n}");
            assert_eq!(recurrence[n], series[n], "series oracle r={r} n={n}");
            assert_eq!(
                recurrence[n].substitute_y_zero(),
                single[n],
                "y = 0 reduction r={r} n={n}"
            );
        }
        for n in 1..=10 {
            let (lhs, rhs) = partial_x_check(n, r);
            assert_eq!(lhs, rhs, "x-derivative r={r} n={n}");
        }
        for n in r..=10 {
            let (lhs, rhs) = partial_y_check(n, r);
            assert_eq!(lhs, rhs, "y-derivative r={r} n={n}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!("[criterion 08] bivariate routes, reductions, partials, series oracle, n <= 10, r in 1..=3: PASS ({elapsed:?})");
}

#[test]
fn criterion_09_numeric_suite() {
    // inversion on 200 seeded admissible points
    let mut rng = ChaCha8Rng::seed_from_u64(0x90_FA11);
    let mut accepted = 0;
    while accepted < 200 {
        let x: f64 = rng.random_range(-3.0..3.0);
        let lambda: f64 = rng.random_range(-2.0..2.0);
        if lambda.abs() < 1e-6 || 1.0 + lambda * x < 0.05 {
            continue;
        }
        accepted += 1;
        let back = log_lambda(exp_lambda(x, lambda).unwrap(), lambda).unwrap();
        assert!(
            (back - x).abs() <= 1e-10 * x.abs().max(1.0),
            "inversion at X = {x}, λ = {lambda}: {back}"
        );
    }

    // continuity at λ = 0
    for sign in [1.0f64, -1.0] {
        let lambda = sign * 1e-7;
        let mut x: f64 = -3.0;
        while x <= 3.0 {
            let v = exp_lambda(x, lambda).unwrap();
            assert!(
                (v - x.exp()).abs() <= 1e-5 * x.exp(),
                "continuity at X = {x}, λ = {lambda}"
            );
            x += 0.125;
        }
    }

    // product form, |λtx| <= 0.5, 60 terms
    let mut checked = 0;
    while checked < 100 {
        let t: f64 = rng.random_range(-1.0..1.0);
        let x: f64 = rng.random_range(-1.0..1.0);
        let lambda: f64 = rng.random_range(-0.8..0.8);
        if (lambda * t * x).abs() > 0.5 {
            continue;
        }
        checked += 1;
        let closed = exp_lambda(t * x, lambda).unwrap();
        let product = product_form_exp(t, x, lambda, 60).unwrap();
        assert!(
            ((product - closed) / closed).abs() <= 1e-10,
            "product form at t={t}, x={x}, λ={lambda}"
        );
    }
    println!("[criterion 09] numeric inversion, continuity, product form at stated tolerances: PASS");
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_tsallis-bernoulli"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_10_cli_contract() {
    // JSON round-trip identity through the real binary
    let out = run_cli(&["compute", "--n", "7", "--no-meta"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).expect("JSON output");
    let parsed = xpoly_from_json(&doc["results"][0]["poly"]).unwrap();
    assert_eq!(parsed, beta_tilde_recurrence_table(7)[7]);

    // byte-identical documents under --no-meta
    let again = run_cli(&["compute", "--n", "7", "--no-meta"]);
    assert_eq!(out.stdout, again.stdout);

    // verify all --max-n 10 exits 0 within the runtime budget
    let start = Instant::now();
    let verify = run_cli(&["verify", "all", "--max-n", "10"]);
    let elapsed = start.elapsed();
    assert_eq!(verify.status.code(), Some(0), "verify all failed");
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    println!("[criterion 10] CLI round-trip, determinism, verify all --max-n 10: PASS ({elapsed:?})");
}
