//! Named identity suites behind the `verify` command.
//!
//! Every suite re-derives both sides of its identities with exact
//! arithmetic and reports one [`Check`] per identity. The numeric suite is
//! the only one using floats, with fixed tolerances that are part of the
//! public contract; its random points come from a seeded generator so runs
//! are reproducible.

use std::fmt;
use std::str::FromStr;

use num::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bernoulli::{
    beta_tilde_derivative_series, beta_tilde_recurrence_table, beta_tilde_table,
    beta_tilde_x_plus_y, classical_bernoulli_oracle_table, classical_shift_check,
    degenerate_bernoulli_numbers, lambda_appell_monomial_family, lambda_appell_reconstruct,
    translation_rhs, xn_expansion_rhs, Route,
};
use crate::bivariate::{
    beta_r_recurrence_table, beta_r_series_table, beta_r_table, partial_x_check, partial_y_check,
    BivariateRoute,
};
use crate::epsilon::EpsilonTable;
use crate::numeric::{exp_lambda, log_lambda, product_form_exp, xpoly_eval_f64};
use crate::poly::{LambdaPoly, XPoly};
use crate::rational::{factorial, rat, rat_big};
use crate::series::carlitz_number_series;

/// Degree cap for the determinant route inside the suites; the other routes
/// run to the requested bound.
pub const DETERMINANT_CAP: usize = 12;

/// The r values exercised by the bivariate suite.
pub const BIVARIATE_RS: [usize; 3] = [1, 2, 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Routes,
    Translation,
    Appell,
    Determinant,
    Bivariate,
    Classical,
    Numeric,
    XnExpansion,
}

impl Suite {
    pub const NAMED: [Suite; 8] = [
        Suite::Routes,
        Suite::Translation,
        Suite::Appell,
        Suite::Determinant,
        Suite::Bivariate,
        Suite::Classical,
        Suite::Numeric,
        Suite::XnExpansion,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Routes => "routes",
            Suite::Translation => "translation",
            Suite::Appell => "appell",
            Suite::Determinant => "determinant",
            Suite::Bivariate => "bivariate",
            Suite::Classical => "classical",
            Suite::Numeric => "numeric",
            Suite::XnExpansion => "xnexpansion",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "routes" => Ok(Suite::Routes),
            "translation" => Ok(Suite::Translation),
            "appell" => Ok(Suite::Appell),
            "determinant" => Ok(Suite::Determinant),
            "bivariate" => Ok(Suite::Bivariate),
            "classical" => Ok(Suite::Classical),
            "numeric" => Ok(Suite::Numeric),
            "xnexpansion" => Ok(Suite::XnExpansion),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: &'static str, name: impl Into<String>, result: Result<(), String>) -> Check {
    match result {
        Ok(()) => Check {
            suite,
            name: name.into(),
            passed: true,
            detail: String::new(),
        },
        Err(detail) => Check {
            suite,
            name: name.into(),
            passed: false,
            detail,
        },
    }
}

/// First index where two sequences disagree, as an error.
fn all_equal<T: PartialEq>(
    a: &[T],
    b: &[T],
    describe: impl Fn(usize) -> String,
) -> Result<(), String> {
    for (i, (x, y)) in a.iter().zip(b.iter()).enumerate() {
        if x != y {
            return Err(describe(i));
        }
    }
    Ok(())
}

pub fn run_suite(suite: Suite, max_n: usize) -> Vec<Check> {
    match suite {
        Suite::All => Suite::NAMED
            .iter()
            .flat_map(|s| run_suite(*s, max_n))
            .collect(),
        Suite::Routes => routes_suite(max_n),
        Suite::Translation => translation_suite(max_n),
        Suite::Appell => appell_suite(max_n),
        Suite::Determinant => determinant_suite(max_n),
        Suite::Bivariate => bivariate_suite(max_n),
        Suite::Classical => classical_suite(max_n),
        Suite::Numeric => numeric_suite(),
        Suite::XnExpansion => xn_expansion_suite(max_n),
    }
}

fn routes_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "routes";
    let recurrence = beta_tilde_recurrence_table(max_n);
    let explicit = beta_tilde_table(max_n, Route::Explicit);
    let series = beta_tilde_table(max_n, Route::Series);
    let det_cap = max_n.min(DETERMINANT_CAP);
    let determinant = beta_tilde_table(det_cap, Route::Determinant);

    let mut checks = vec![
        check(
            S,
            format!("recurrence == explicit (n <= {max_n})"),
            all_equal(&recurrence, &explicit, |n| format!("mismatch at n = {n}")),
        ),
        check(
            S,
            format!("recurrence == series oracle (n <= {max_n})"),
            all_equal(&recurrence, &series, |n| format!("mismatch at n = {n}")),
        ),
        check(
            S,
            format!("recurrence == determinant (n <= {det_cap})"),
            all_equal(&recurrence[..=det_cap], &determinant, |n| {
                format!("mismatch at n = {n}")
            }),
        ),
    ];

    // numbers against their own independent series t/(exp_λ(t)-1)
    let numbers = degenerate_bernoulli_numbers(max_n);
    let carlitz = carlitz_number_series(max_n);
    let from_series: Vec<LambdaPoly> = (0..=max_n)
        .map(|n| {
            carlitz
                .coeff(n)
                .scale(&rat_big(factorial(n)))
                .substitute_x(&rat(0, 1))
        })
        .collect();
    checks.push(check(
        S,
        format!("beta numbers == number series oracle (n <= {max_n})"),
        all_equal(&numbers, &from_series, |n| format!("mismatch at n = {n}")),
    ));

    // shape: x-degree n, leading coefficient ε⁻λ(n), λ-degree <= n
    let eps = EpsilonTable::new(max_n);
    let mut shape_result = Ok(());
    'outer: for (n, p) in recurrence.iter().enumerate() {
        if p.degree() != Some(n) {
            shape_result = Err(format!("x-degree of index {n} is not {n}"));
            break;
        }
        if p.leading() != Some(eps.minus(n)) {
            shape_result = Err(format!("leading x-coefficient at n = {n} differs"));
            break;
        }
        for c in p.coeffs() {
            if c.degree().unwrap_or(0) > n {
                shape_result = Err(format!("λ-degree exceeds {n} at n = {n}"));
                break 'outer;
            }
        }
    }
    checks.push(check(
        S,
        format!("x-degree n, leading ε⁻λ(n), λ-degree <= n (n <= {max_n})"),
        shape_result,
    ));
    checks
}

fn translation_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "translation";
    let explicit = beta_tilde_table(max_n, Route::Explicit);
    let mut translation = Ok(());
    let mut contraction = Ok(());
    let mut shift = Ok(());
    for n in 0..=max_n {
        let rhs = translation_rhs(n);
        if translation.is_ok() && rhs != beta_tilde_x_plus_y(n) {
            translation = Err(format!("translation identity fails at n = {n}"));
        }
        if contraction.is_ok() && rhs.substitute_x_zero_y_as_x() != explicit[n] {
            contraction = Err(format!("contraction fails at n = {n}"));
        }
        if shift.is_ok() {
            let (lhs, rhs) = classical_shift_check(n);
            if lhs != rhs {
                shift = Err(format!("classical shift fails at n = {n}"));
            }
        }
    }
    vec![
        check(
            S,
            format!("translation expansion == beta(x+y) (n <= {max_n})"),
            translation,
        ),
        check(
            S,
            format!("contraction x->0, y->x recovers explicit expansion (n <= {max_n})"),
            contraction,
        ),
        check(
            S,
            format!("classical shift property at λ=0 (n <= {max_n})"),
            shift,
        ),
    ]
}

fn appell_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "appell";
    let polys = beta_tilde_recurrence_table(max_n);
    let lambda_x = XPoly::monomial(LambdaPoly::var(), 1);

    let mut derivative = Ok(());
    let mut derivative_series = if beta_tilde_derivative_series(0) == XPoly::zero() {
        Ok(())
    } else {
        Err("derivative series is nonzero at n = 0".to_string())
    };
    let mut reconstruction = Ok(());
    for n in 1..=max_n {
        let deriv = polys[n].diff();
        if derivative.is_ok() {
            let rhs = polys[n - 1]
                .sub(&polys[n - 1].diff().mul(&lambda_x))
                .scale(&rat(n as i64, 1));
            if deriv != rhs {
                derivative = Err(format!("derivative recurrence fails at n = {n}"));
            }
        }
        if derivative_series.is_ok() && beta_tilde_derivative_series(n) != deriv {
            derivative_series = Err(format!("derivative series fails at n = {n}"));
        }
        if reconstruction.is_ok() && lambda_appell_reconstruct(n) != polys[n] {
            reconstruction = Err(format!("integral reconstruction fails at n = {n}"));
        }
    }

    let family = lambda_appell_monomial_family(max_n);
    let eps = EpsilonTable::new(max_n);
    let expected: Vec<XPoly> = (0..=max_n)
        .map(|n| XPoly::monomial(eps.minus(n).clone(), n))
        .collect();
    let monomials = all_equal(&family, &expected, |n| {
        format!("monomial family fails at n = {n}")
    });

    vec![
        check(
            S,
            format!("β̃'ₙ = n(β̃ₙ₋₁ - λx·β̃'ₙ₋₁) (n <= {max_n})"),
            derivative,
        ),
        check(
            S,
            format!("derivative series == d/dx β̃ₙ (n <= {max_n})"),
            derivative_series,
        ),
        check(
            S,
            format!("integral reconstruction == β̃ₙ (n <= {max_n})"),
            reconstruction,
        ),
        check(
            S,
            format!("λ-Appell monomial family is ε⁻λ(n)xⁿ (n <= {max_n})"),
            monomials,
        ),
    ]
}

fn determinant_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "determinant";
    let cap = max_n.min(DETERMINANT_CAP);
    let determinant = beta_tilde_table(cap, Route::Determinant);
    let recurrence = beta_tilde_recurrence_table(cap);
    let classical = classical_bernoulli_oracle_table(cap);

    let equality = all_equal(&determinant, &recurrence, |n| {
        format!("mismatch at n = {n}")
    });
    let classical_limit = {
        let substituted: Vec<_> = determinant
            .iter()
            .map(|p| p.substitute_lambda(&rat(0, 1)))
            .collect();
        all_equal(&substituted, &classical, |n| format!("mismatch at n = {n}"))
    };

    vec![
        check(
            S,
            format!("determinant == recurrence (n <= {cap})"),
            equality,
        ),
        check(
            S,
            format!("determinant at λ=0 == classical Bₙ(x) (n <= {cap})"),
            classical_limit,
        ),
    ]
}

fn bivariate_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "bivariate";
    let mut checks = Vec::new();
    for r in BIVARIATE_RS {
        let recurrence = beta_r_recurrence_table(max_n, r);

        let mut routes = Ok(());
        for route in [BivariateRoute::DoubleSum, BivariateRoute::Connection] {
            if routes.is_err() {
                break;
            }
            let other = beta_r_table(max_n, r, route);
            routes = all_equal(&recurrence, &other, |n| {
                format!("{route} differs at n = {n}")
            });
        }
        checks.push(check(
            S,
            format!("three routes agree (r = {r}, n <= {max_n})"),
            routes,
        ));

        let single = beta_tilde_recurrence_table(max_n);
        let reduced: Vec<XPoly> = recurrence.iter().map(|p| p.substitute_y_zero()).collect();
        checks.push(check(
            S,
            format!("y = 0 reduction (r = {r}, n <= {max_n})"),
            all_equal(&reduced, &single, |n| format!("mismatch at n = {n}")),
        ));

        let mut partial_x = Ok(());
        for n in 1..=max_n {
            let (lhs, rhs) = partial_x_check(n, r);
            if lhs != rhs {
                partial_x = Err(format!("x-derivative identity fails at n = {n}"));
                break;
            }
        }
        checks.push(check(
            S,
            format!("x-derivative identity (r = {r}, n <= {max_n})"),
            partial_x,
        ));

        let mut partial_y = Ok(());
        for n in r..=max_n {
            let (lhs, rhs) = partial_y_check(n, r);
            if lhs != rhs {
                partial_y = Err(format!("y-derivative identity fails at n = {n}"));
                break;
            }
        }
        checks.push(check(
            S,
            format!("y-derivative identity (r = {r}, {r} <= n <= {max_n})"),
            partial_y,
        ));

        let series = beta_r_series_table(max_n, r);
        checks.push(check(
            S,
            format!("series oracle (r = {r}, n <= {max_n})"),
            all_equal(&recurrence, &series, |n| format!("mismatch at n = {n}")),
        ));
    }
    checks
}

fn classical_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "classical";
    let polys = beta_tilde_recurrence_table(max_n);
    let numbers = degenerate_bernoulli_numbers(max_n);
    let oracle = classical_bernoulli_oracle_table(max_n);

    let boundary = {
        let at_zero: Vec<LambdaPoly> = polys.iter().map(|p| p.substitute_x(&rat(0, 1))).collect();
        all_equal(&at_zero, &numbers, |n| format!("mismatch at n = {n}"))
    };

    let substituted: Vec<_> = polys
        .iter()
        .map(|p| p.substitute_lambda(&rat(0, 1)))
        .collect();
    let limit = all_equal(&substituted, &oracle, |n| format!("mismatch at n = {n}"));

    let known = [
        (2usize, rat(1, 6)),
        (4, rat(-1, 30)),
        (6, rat(1, 42)),
        (8, rat(-1, 30)),
        (10, rat(5, 66)),
    ];
    let mut constants = Ok(());
    for (n, expected) in known {
        if n > max_n {
            continue;
        }
        let got = substituted[n].coeff(0);
        if got != expected {
            constants = Err(format!("B_{n} constant term is {got}, expected {expected}"));
            break;
        }
    }

    vec![
        check(S, format!("β̃ₙ(λ|0) == βₙ(λ) (n <= {max_n})"), boundary),
        check(
            S,
            format!("λ = 0 matches classical series oracle (n <= {max_n})"),
            limit,
        ),
        check(
            S,
            "classical constants 1/6, -1/30, 1/42, -1/30, 5/66".to_string(),
            constants,
        ),
    ]
}

fn xn_expansion_suite(max_n: usize) -> Vec<Check> {
    const S: &str = "xnexpansion";
    let eps = EpsilonTable::new(max_n);
    let mut result = Ok(());
    for n in 0..=max_n {
        let lhs = XPoly::monomial(eps.minus(n).clone(), n);
        if xn_expansion_rhs(n) != lhs {
            result = Err(format!("expansion fails at n = {n}"));
            break;
        }
    }
    vec![check(
        S,
        format!("ε⁻λ(n)xⁿ == weighted sum of β̃₀..β̃ₙ (n <= {max_n})"),
        result,
    )]
}

/// Tolerances here are part of the public test contract.
fn numeric_suite() -> Vec<Check> {
    const S: &str = "numeric";
    let mut rng = ChaCha8Rng::seed_from_u64(0x7151_1B5E);

    // inversion log_λ(exp_λ(X)) = X on 200 admissible points
    let mut inversion = Ok(());
    let mut accepted = 0;
    while accepted < 200 {
        let x: f64 = rng.random_range(-3.0..3.0);
        let lambda: f64 = rng.random_range(-2.0..2.0);
        if lambda.abs() < 1e-6 || 1.0 + lambda * x < 0.05 {
            continue;
        }
        accepted += 1;
        let round_trip = exp_lambda(x, lambda).and_then(|y| log_lambda(y, lambda));
        let ok = match round_trip {
            Ok(back) => (back - x).abs() <= 1e-10 * x.abs().max(1.0),
            Err(_) => false,
        };
        if !ok {
            inversion = Err(format!("inversion fails at X = {x}, λ = {lambda}"));
            break;
        }
    }

    // continuity of exp_λ at λ = 0
    let mut continuity = Ok(());
    'cont: for sign in [1.0, -1.0] {
        let lambda = sign * 1e-7;
        let mut x: f64 = -3.0;
        while x <= 3.0 {
            let reference = x.exp();
            let v = exp_lambda(x, lambda).expect("admissible by construction");
            if (v - reference).abs() > 1e-5 * reference {
                continuity = Err(format!("continuity fails at X = {x}, λ = {lambda}"));
                break 'cont;
            }
            x += 0.25;
        }
    }

    // product form against the closed form, |λtx| <= 0.5, 60 terms
    let mut product = Ok(());
    for _ in 0..100 {
        let t: f64 = rng.random_range(-0.9..0.9);
        let x: f64 = rng.random_range(-0.9..0.9);
        let lambda: f64 = rng.random_range(-0.6..0.6);
        if (lambda * t * x).abs() > 0.5 {
            continue;
        }
        let closed = exp_lambda(t * x, lambda).expect("1 + λtx > 0 since |λtx| <= 0.5");
        let via_product = product_form_exp(t, x, lambda, 60).expect("|λtx| < 1");
        if ((via_product - closed) / closed).abs() > 1e-10 {
            product = Err(format!("product form fails at t={t}, x={x}, λ={lambda}"));
            break;
        }
    }

    // exact evaluation agrees with float Horner
    let mut consistency = Ok(());
    let polys = beta_tilde_recurrence_table(6);
    let points = [
        (rat(1, 3), rat(2, 5)),
        (rat(-1, 4), rat(3, 7)),
        (rat(1, 2), rat(-2, 3)),
        (rat(-2, 5), rat(7, 8)),
    ];
    'consistency: for p in &polys {
        for (l0, x0) in &points {
            let exact = p.eval(l0, x0).to_f64().expect("fits in f64");
            let float = xpoly_eval_f64(
                p,
                l0.to_f64().expect("fits in f64"),
                x0.to_f64().expect("fits in f64"),
            );
            if (exact - float).abs() > 1e-12 * exact.abs().max(1.0) {
                consistency = Err(format!(
                    "float Horner deviates at λ = {l0}, x = {x0}: {exact} vs {float}"
                ));
                break 'consistency;
            }
        }
    }

    vec![
        check(S, "inversion |log_λ(exp_λ(X)) - X| <= 1e-10 (200 points)", inversion),
        check(S, "continuity at λ = 0 within 1e-5 relative", continuity),
        check(S, "product form within 1e-10 relative (60 terms)", product),
        check(S, "exact vs float Horner within 1e-12 relative", consistency),
    ]
}
