//! Cross-module identity checks at the documented bounds, against
//! independent oracles where one exists.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

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
use tsallis_bernoulli::poly::{LambdaPoly, XPoly};
use tsallis_bernoulli::rational::{factorial, rat, rat_big};
use tsallis_bernoulli::series::{carlitz_number_series, log_expx_series, TruncSeries};

#[test]
fn route_equivalence_to_twenty() {
    let recurrence = beta_tilde_recurrence_table(20);
    let explicit = beta_tilde_table(20, Route::Explicit);
    let series = beta_tilde_table(20, Route::Series);
    let determinant = beta_tilde_table(12, Route::Determinant);
    for n in 0..=20 {
        assert_eq!(recurrence[n], explicit[n], "explicit differs at n = {n}");
        assert_eq!(recurrence[n], series[n], "series differs at n = {n}");
        if n <= 12 {
            assert_eq!(
                recurrence[n], determinant[n],
                "determinant differs at n = {n}"
            );
        }
    }
}

#[test]
fn boundary_at_zero_to_twenty() {
    let polys = beta_tilde_recurrence_table(20);
    let numbers = degenerate_bernoulli_numbers(20);
    for n in 0..=20 {
        assert_eq!(polys[n].substitute_x(&rat(0, 1)), numbers[n], "n = {n}");
    }
}

#[test]
fn classical_limit_matches_series_oracle_to_twenty() {
    let polys = beta_tilde_recurrence_table(20);
    let oracle = classical_bernoulli_oracle_table(20);
    for n in 0..=20 {
        assert_eq!(polys[n].substitute_lambda(&rat(0, 1)), oracle[n], "n = {n}");
    }
    let constants = [
        (2usize, rat(1, 6)),
        (4, rat(-1, 30)),
        (6, rat(1, 42)),
        (8, rat(-1, 30)),
        (10, rat(5, 66)),
    ];
    for (n, expected) in constants {
        assert_eq!(oracle[n].coeff(0), expected, "constant at n = {n}");
    }
}

#[test]
fn degenerate_numbers_match_their_own_series() {
    let numbers = degenerate_bernoulli_numbers(20);
    let series = carlitz_number_series(20);
    for n in 0..=20 {
        let from_series = series
            .coeff(n)
            .scale(&rat_big(factorial(n)))
            .substitute_x(&rat(0, 1));
        assert_eq!(numbers[n], from_series, "n = {n}");
    }
}

#[test]
fn xn_expansion_to_twelve() {
    let eps = EpsilonTable::new(12);
    for n in 0..=12 {
        let lhs = XPoly::monomial(eps.minus(n).clone(), n);
        assert_eq!(xn_expansion_rhs(n), lhs, "n = {n}");
    }
}

#[test]
fn translation_identity_to_ten() {
    let explicit = beta_tilde_table(10, Route::Explicit);
    for n in 0..=10 {
        let rhs = translation_rhs(n);
        assert_eq!(rhs, beta_tilde_x_plus_y(n), "translation at n = {n}");
        assert_eq!(
            rhs.substitute_x_zero_y_as_x(),
            explicit[n],
            "contraction at n = {n}"
        );
    }
}

#[test]
fn classical_shift_to_ten() {
    for n in 0..=10 {
        let (lhs, rhs) = classical_shift_check(n);
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn appell_structure_to_twenty() {
    let polys = beta_tilde_recurrence_table(20);
    let lambda_x = XPoly::monomial(LambdaPoly::var(), 1);
    for n in 1..=20 {
        let deriv = polys[n].diff();
        let recurrence_rhs = polys[n - 1]
            .sub(&polys[n - 1].diff().mul(&lambda_x))
            .scale(&rat(n as i64, 1));
        assert_eq!(deriv, recurrence_rhs, "derivative recurrence at n = {n}");
        assert_eq!(
            beta_tilde_derivative_series(n),
            deriv,
            "derivative series at n = {n}"
        );
        assert_eq!(
            lambda_appell_reconstruct(n),
            polys[n],
            "reconstruction at n = {n}"
        );
    }
}

#[test]
fn appell_monomial_family_to_ten() {
    let family = lambda_appell_monomial_family(10);
    let eps = EpsilonTable::new(10);
    for (n, p) in family.iter().enumerate() {
        assert_eq!(p, &XPoly::monomial(eps.minus(n).clone(), n), "n = {n}");
    }
}

#[test]
fn bivariate_routes_agree_to_twelve() {
    for r in [1, 2, 3] {
        let recurrence = beta_r_table(12, r, BivariateRoute::Recurrence);
        let double_sum = beta_r_table(12, r, BivariateRoute::DoubleSum);
        let connection = beta_r_table(12, r, BivariateRoute::Connection);
        let single = beta_tilde_recurrence_table(12);
        for n in 0..=12 {
            assert_eq!(recurrence[n], double_sum[n], "double-sum r={r} n={n}");
            assert_eq!(recurrence[n], connection[n], "connection r={r} n={n}");
            assert_eq!(
                recurrence[n].substitute_y_zero(),
                single[n],
                "y=0 reduction r={r} n={n}"
            );
        }
    }
}

#[test]
fn bivariate_partials_to_ten() {
    for r in [1, 2, 3] {
        for n in 1..=10 {
            let (lhs, rhs) = partial_x_check(n, r);
            assert_eq!(lhs, rhs, "x-derivative r={r} n={n}");
        }
        for n in r..=10 {
            let (lhs, rhs) = partial_y_check(n, r);
            assert_eq!(lhs, rhs, "y-derivative r={r} n={n}");
        }
    }
}

#[test]
fn bivariate_series_oracle_to_ten() {
    for r in [1, 2, 3] {
        let series = beta_r_series_table(10, r);
        let recurrence = beta_r_table(10, r, BivariateRoute::Recurrence);
        assert_eq!(series, recurrence, "r = {r}");
    }
}

/// Brute-force side of the falling-factorial identity: expand
/// ((1+λt)^(x0) - 1)/λ by repeated series multiplication.
fn binomial_power_coefficients(order: usize, x0: usize) -> Vec<LambdaPoly> {
    let mut base = TruncSeries::<LambdaPoly>::zero(order);
    let mut coeffs: Vec<LambdaPoly> = base.coeffs().to_vec();
    coeffs[0] = LambdaPoly::one();
    coeffs[1] = LambdaPoly::var();
    base = TruncSeries::new(order, coeffs);

    let mut power = TruncSeries::<LambdaPoly>::one(order);
    for _ in 0..x0 {
        power = power.mul(&base);
    }

    (0..=order)
        .map(|n| {
            let mut c = power.coeff(n).clone();
            if n == 0 {
                c = c.sub(&LambdaPoly::one());
            }
            if c.is_zero() {
                return LambdaPoly::zero();
            }
            // exact division by λ
            assert!(
                c.coeff(0) == rat(0, 1),
                "coefficient not divisible by λ at t^{n}"
            );
            LambdaPoly::from_coeffs(c.coeffs()[1..].to_vec())
        })
        .collect()
}

#[test]
fn falling_factorial_series_matches_binomial_expansion() {
    let series = log_expx_series(8);
    for x0 in 0..=5usize {
        let brute = binomial_power_coefficients(8, x0);
        for n in 0..=8 {
            let got = series.coeff(n).substitute_x(&rat(x0 as i64, 1));
            assert_eq!(got, brute[n], "x0 = {x0}, n = {n}");
        }
    }
}

/// Plain cofactor expansion along the first row; the independent
/// determinant oracle.
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

fn random_hessenberg(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<XPoly>> {
    (0..size)
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
        .collect()
}

#[test]
fn hessenberg_recurrence_matches_laplace_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xDE7);
    for trial in 0..60 {
        let size = rng.random_range(1usize..=6);
        let rows = random_hessenberg(&mut rng, size);
        let m = HessMatrix::new(rows.clone()).expect("pattern enforced");
        assert_eq!(
            hessenberg_det(&m),
            laplace_det(&rows),
            "trial {trial}, size {size}"
        );
    }
}
