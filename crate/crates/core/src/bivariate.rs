//! The two-variable extension β̃ₙ⁽ʳ⁾(λ|x,y), generated by
//! t·exp_λ(tx)·exp_λ(tʳy)/(exp_λ(t) - 1).
//!
//! Setting y = 0 recovers the single-variable polynomials, and for n < r
//! there is no y-dependence at all. Three closed routes plus the series
//! oracle compute the same family.

use std::fmt;
use std::str::FromStr;

use crate::bernoulli::{beta_tilde_recurrence_table, degenerate_bernoulli_numbers};
use crate::epsilon::EpsilonTable;
use crate::poly::LambdaPoly;
use crate::rational::{binomial, factorial, rat, rat_big, Rational};
use crate::series::beta_bivariate_generating_series;
use crate::xypoly::XYPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BivariateRoute {
    Recurrence,
    DoubleSum,
    Connection,
}

impl BivariateRoute {
    pub const ALL: [BivariateRoute; 3] = [
        BivariateRoute::Recurrence,
        BivariateRoute::DoubleSum,
        BivariateRoute::Connection,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BivariateRoute::Recurrence => "recurrence",
            BivariateRoute::DoubleSum => "double-sum",
            BivariateRoute::Connection => "connection",
        }
    }
}

impl fmt::Display for BivariateRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BivariateRoute {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recurrence" => Ok(BivariateRoute::Recurrence),
            "double-sum" | "double_sum" => Ok(BivariateRoute::DoubleSum),
            "connection" => Ok(BivariateRoute::Connection),
            other => Err(format!(
                "unknown bivariate route `{other}` (expected recurrence, double-sum or connection)"
            )),
        }
    }
}

/// `n! / ((n - r·l)! l!)` as a rational.
fn lead_weight(n: usize, r: usize, l: usize) -> Rational {
    Rational::new(factorial(n), factorial(n - r * l) * factorial(l))
}

/// β̃₀⁽ʳ⁾..β̃ₙ⁽ʳ⁾ by the recurrence
/// β̃ₙ⁽ʳ⁾ = Σ_{l=0}^{⌊n/r⌋} n!/((n-rl)! l!) ε⁻λ(l) ε⁻λ(n-rl) x^(n-rl) yˡ
///        - (1/(n+1)) Σ_{l=0}^{n-1} C(n+1,l) ε⁻λ(n+1-l) β̃ₗ⁽ʳ⁾.
pub fn beta_r_recurrence_table(max_n: usize, r: usize) -> Vec<XYPoly> {
    assert!(r >= 1, "bivariate order r must be >= 1");
    let eps = EpsilonTable::new(max_n + 1);
    let mut polys: Vec<XYPoly> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut lead = XYPoly::zero();
        for l in 0..=(n / r) {
            let coeff = eps
                .minus(l)
                .mul(eps.minus(n - r * l))
                .scale(&lead_weight(n, r, l));
            lead = lead.add(&XYPoly::monomial(coeff, n - r * l, l));
        }
        let mut sum = XYPoly::zero();
        for l in 0..n {
            let c = rat_big(binomial(n + 1, l));
            sum = sum.add(&polys[l].scale_lambda(eps.minus(n + 1 - l)).scale(&c));
        }
        polys.push(lead.sub(&sum.scale(&rat(1, (n + 1) as i64))));
    }
    polys
}

/// β̃₀⁽ʳ⁾..β̃ₙ⁽ʳ⁾ by the explicit double sum over xʲ yˡ monomials weighted
/// by ε⁻λ(j) ε⁻λ(l) βₙ₋ⱼ₋ᵣₗ(λ); only j + r·l <= n contributes.
pub fn beta_r_double_sum_table(max_n: usize, r: usize) -> Vec<XYPoly> {
    assert!(r >= 1, "bivariate order r must be >= 1");
    let eps = EpsilonTable::new(max_n);
    let numbers = degenerate_bernoulli_numbers(max_n);
    (0..=max_n)
        .map(|n| {
            let mut acc = XYPoly::zero();
            for j in 0..=n {
                for l in 0..=((n - j) / r) {
                    let w = Rational::new(
                        factorial(n),
                        factorial(j) * factorial(l) * factorial(n - j - r * l),
                    );
                    let coeff = eps
                        .minus(j)
                        .mul(eps.minus(l))
                        .mul(&numbers[n - j - r * l])
                        .scale(&w);
                    acc = acc.add(&XYPoly::monomial(coeff, j, l));
                }
            }
            acc
        })
        .collect()
}

/// β̃₀⁽ʳ⁾..β̃ₙ⁽ʳ⁾ by the connection formula
/// β̃ₙ⁽ʳ⁾ = Σ_{l=0}^{⌊n/r⌋} n!/(l!(n-rl)!) ε⁻λ(l) β̃ₙ₋ᵣₗ(λ|x) yˡ.
pub fn beta_r_connection_table(max_n: usize, r: usize) -> Vec<XYPoly> {
    assert!(r >= 1, "bivariate order r must be >= 1");
    let eps = EpsilonTable::new(max_n / r);
    let betas = beta_tilde_recurrence_table(max_n);
    (0..=max_n)
        .map(|n| {
            let mut acc = XYPoly::zero();
            for l in 0..=(n / r) {
                let term = XYPoly::from_xpoly(&betas[n - r * l])
                    .mul(&XYPoly::monomial(LambdaPoly::one(), 0, l))
                    .scale_lambda(eps.minus(l))
                    .scale(&lead_weight(n, r, l));
                acc = acc.add(&term);
            }
            acc
        })
        .collect()
}

/// β̃₀⁽ʳ⁾..β̃ₙ⁽ʳ⁾ as n! times the tⁿ coefficients of the two-variable
/// generating series; the oracle route.
pub fn beta_r_series_table(max_n: usize, r: usize) -> Vec<XYPoly> {
    let series = beta_bivariate_generating_series(max_n, r);
    (0..=max_n)
        .map(|n| series.coeff(n).scale(&rat_big(factorial(n))))
        .collect()
}

pub fn beta_r_table(max_n: usize, r: usize, route: BivariateRoute) -> Vec<XYPoly> {
    match route {
        BivariateRoute::Recurrence => beta_r_recurrence_table(max_n, r),
        BivariateRoute::DoubleSum => beta_r_double_sum_table(max_n, r),
        BivariateRoute::Connection => beta_r_connection_table(max_n, r),
    }
}

pub fn beta_r(n: usize, r: usize, route: BivariateRoute) -> XYPoly {
    beta_r_table(n, r, route).pop().expect("table is nonempty")
}

pub fn beta_r_recurrence(n: usize, r: usize) -> XYPoly {
    beta_r(n, r, BivariateRoute::Recurrence)
}

pub fn beta_r_double_sum(n: usize, r: usize) -> XYPoly {
    beta_r(n, r, BivariateRoute::DoubleSum)
}

pub fn beta_r_connection(n: usize, r: usize) -> XYPoly {
    beta_r(n, r, BivariateRoute::Connection)
}

/// The family up to max_n for one r, by one route.
pub struct BivariateFamily {
    pub max_n: usize,
    pub r: usize,
    pub route: BivariateRoute,
    pub polys: Vec<XYPoly>,
}

impl BivariateFamily {
    pub fn compute(max_n: usize, r: usize, route: BivariateRoute) -> Self {
        BivariateFamily {
            max_n,
            r,
            route,
            polys: beta_r_table(max_n, r, route),
        }
    }
}

/// Both sides of ∂ₓβ̃ₙ⁽ʳ⁾ = n(β̃ₙ₋₁⁽ʳ⁾ - λx·∂ₓβ̃ₙ₋₁⁽ʳ⁾). Requires n >= 1.
pub fn partial_x_check(n: usize, r: usize) -> (XYPoly, XYPoly) {
    assert!(n >= 1, "partial_x_check: n must be >= 1");
    let table = beta_r_recurrence_table(n, r);
    let lhs = table[n].partial_x();
    let inner = table[n - 1].sub(
        &table[n - 1]
            .partial_x()
            .mul(&XYPoly::x())
            .scale_lambda(&LambdaPoly::var()),
    );
    (lhs, inner.scale(&rat(n as i64, 1)))
}

/// Both sides of ∂ᵧβ̃ₙ⁽ʳ⁾ = n!/(n-r)!·(β̃ₙ₋ᵣ⁽ʳ⁾ - λy·∂ᵧβ̃ₙ₋ᵣ⁽ʳ⁾).
/// Requires n >= r.
pub fn partial_y_check(n: usize, r: usize) -> (XYPoly, XYPoly) {
    assert!(n >= r, "partial_y_check: n must be >= r");
    let table = beta_r_recurrence_table(n, r);
    let lhs = table[n].partial_y();
    let inner = table[n - r].sub(
        &table[n - r]
            .partial_y()
            .mul(&XYPoly::y())
            .scale_lambda(&LambdaPoly::var()),
    );
    let w = Rational::new(factorial(n), factorial(n - r));
    (lhs, inner.scale(&w))
}
