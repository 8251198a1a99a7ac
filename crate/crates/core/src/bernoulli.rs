//! The deformed Bernoulli numbers and polynomials.
//!
//! The polynomials β̃ₙ(λ|x) are generated by t·exp_λ(tx)/(exp_λ(t) - 1);
//! their values at x = 0 are Carlitz's degenerate Bernoulli numbers βₙ(λ),
//! and the λ → 0 limit recovers the classical Bernoulli polynomials. Four
//! independent routes compute the same family:
//!
//! * [`Route::Recurrence`]: the triangular recurrence from the expansion of
//!   ε⁻λ(n)xⁿ in terms of β̃₀..β̃ₙ,
//! * [`Route::Explicit`]: β̃ₙ = Σₖ C(n,k) ε⁻λ(k) βₙ₋ₖ(λ) xᵏ,
//! * [`Route::Determinant`]: an upper-Hessenberg determinant (see
//!   [`crate::hessenberg`]),
//! * [`Route::Series`]: n! times the tⁿ coefficient of the truncated
//!   generating series, the oracle the other routes are tested against.
//!
//! This module also carries the translation formula in (x, y), the
//! λ-deformed Appell structure (derivative recurrence, series form of the
//! derivative, and integral reconstruction), and the classical shift
//! property used for the λ = 0 cross-checks.

use std::fmt;
use std::str::FromStr;

use crate::epsilon::EpsilonTable;
use crate::hessenberg;
use crate::poly::{LambdaPoly, RatPoly, XPoly};
use crate::rational::{binomial, factorial, multinomial3, rat, rat_big, Rational};
use crate::series::{beta_generating_series, classical_bernoulli_series};
use crate::xypoly::XYPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Recurrence,
    Explicit,
    Determinant,
    Series,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::Recurrence,
        Route::Explicit,
        Route::Determinant,
        Route::Series,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Explicit => "explicit",
            Route::Determinant => "determinant",
            Route::Series => "series",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recurrence" => Ok(Route::Recurrence),
            "explicit" => Ok(Route::Explicit),
            "determinant" => Ok(Route::Determinant),
            "series" => Ok(Route::Series),
            other => Err(format!(
                "unknown route `{other}` (expected recurrence, explicit, determinant or series)"
            )),
        }
    }
}

/// Degenerate Bernoulli numbers βₙ(λ) for n = 0..=max_n, from the x = 0
/// specialization of the polynomial recurrence.
pub fn degenerate_bernoulli_numbers(max_n: usize) -> Vec<LambdaPoly> {
    let eps = EpsilonTable::new(max_n + 1);
    let mut numbers: Vec<LambdaPoly> = Vec::with_capacity(max_n + 1);
    numbers.push(LambdaPoly::one());
    for n in 1..=max_n {
        let mut acc = LambdaPoly::zero();
        for k in 0..n {
            let c = rat_big(binomial(n + 1, k));
            acc = acc.add(&eps.minus(n + 1 - k).mul(&numbers[k]).scale(&c));
        }
        numbers.push(acc.scale(&rat(-1, (n + 1) as i64)));
    }
    numbers
}

/// β̃₀..β̃ₙ by the triangular recurrence
/// β̃ₙ = ε⁻λ(n)xⁿ - (1/(n+1)) Σ_{k<n} C(n+1,k) ε⁻λ(n+1-k) β̃ₖ.
pub fn beta_tilde_recurrence_table(max_n: usize) -> Vec<XPoly> {
    let eps = EpsilonTable::new(max_n + 1);
    let mut polys: Vec<XPoly> = Vec::with_capacity(max_n + 1);
    polys.push(XPoly::one());
    for n in 1..=max_n {
        let mut sum = XPoly::zero();
        for k in 0..n {
            let c = rat_big(binomial(n + 1, k));
            sum = sum.add(&polys[k].scale_lambda(eps.minus(n + 1 - k)).scale(&c));
        }
        let lead = XPoly::monomial(eps.minus(n).clone(), n);
        polys.push(lead.sub(&sum.scale(&rat(1, (n + 1) as i64))));
    }
    polys
}

/// β̃₀..β̃ₙ by the explicit expansion β̃ₙ = Σₖ C(n,k) ε⁻λ(k) βₙ₋ₖ(λ) xᵏ.
pub fn beta_tilde_explicit_table(max_n: usize) -> Vec<XPoly> {
    let eps = EpsilonTable::new(max_n);
    let numbers = degenerate_bernoulli_numbers(max_n);
    (0..=max_n)
        .map(|n| {
            let mut coeffs = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let c = rat_big(binomial(n, k));
                coeffs.push(eps.minus(k).mul(&numbers[n - k]).scale(&c));
            }
            XPoly::from_coeffs(coeffs)
        })
        .collect()
}

/// β̃₀..β̃ₙ as n! times the tⁿ coefficients of the generating series.
pub fn beta_tilde_series_table(max_n: usize) -> Vec<XPoly> {
    let series = beta_generating_series(max_n);
    (0..=max_n)
        .map(|n| series.coeff(n).scale(&rat_big(factorial(n))))
        .collect()
}

/// β̃₀..β̃ₙ by the chosen route.
pub fn beta_tilde_table(max_n: usize, route: Route) -> Vec<XPoly> {
    match route {
        Route::Recurrence => beta_tilde_recurrence_table(max_n),
        Route::Explicit => beta_tilde_explicit_table(max_n),
        Route::Determinant => (0..=max_n).map(hessenberg::beta_tilde_determinant).collect(),
        Route::Series => beta_tilde_series_table(max_n),
    }
}

pub fn beta_tilde(n: usize, route: Route) -> XPoly {
    beta_tilde_table(n, route).pop().expect("table is nonempty")
}

pub fn beta_tilde_recurrence(n: usize) -> XPoly {
    beta_tilde(n, Route::Recurrence)
}

pub fn beta_tilde_explicit(n: usize) -> XPoly {
    beta_tilde(n, Route::Explicit)
}

pub fn beta_tilde_series(n: usize) -> XPoly {
    beta_tilde(n, Route::Series)
}

/// One consistent family: the numbers always come from the x = 0 recurrence
/// (the single source of truth), the polynomials from the chosen route.
pub struct BetaFamily {
    pub max_n: usize,
    pub route: Route,
    pub numbers: Vec<LambdaPoly>,
    pub polys: Vec<XPoly>,
}

impl BetaFamily {
    pub fn compute(max_n: usize, route: Route) -> Self {
        BetaFamily {
            max_n,
            route,
            numbers: degenerate_bernoulli_numbers(max_n),
            polys: beta_tilde_table(max_n, route),
        }
    }
}

/// Right-hand side of the translation formula: an expansion of β̃ₙ(λ|x+y)
/// over terms β̃ₙ₋ₖ₋ₗ(λ|x)·xᵏ·(x+y)ˡ with signed multinomial and ε±λ
/// weights. Only k + l <= n contributes.
pub fn translation_rhs(n: usize) -> XYPoly {
    let eps = EpsilonTable::new(n);
    let betas = beta_tilde_recurrence_table(n);
    let x = XYPoly::x();
    let x_plus_y = XYPoly::x().add(&XYPoly::y());

    // powers of x and (x+y) up to n, computed once
    let mut x_pows = vec![XYPoly::one()];
    let mut s_pows = vec![XYPoly::one()];
    for k in 1..=n {
        x_pows.push(x_pows[k - 1].mul(&x));
        s_pows.push(s_pows[k - 1].mul(&x_plus_y));
    }

    let mut acc = XYPoly::zero();
    for k in 0..=n {
        for l in 0..=(n - k) {
            let mut c = rat_big(multinomial3(n, k, l));
            if k % 2 == 1 {
                c = -c;
            }
            let weight = eps.plus(k).mul(eps.minus(l)).scale(&c);
            let term = XYPoly::from_xpoly(&betas[n - k - l])
                .mul(&x_pows[k])
                .mul(&s_pows[l])
                .scale_lambda(&weight);
            acc = acc.add(&term);
        }
    }
    acc
}

/// β̃ₙ(λ|x+y), expanded: the left-hand side of the translation formula.
pub fn beta_tilde_x_plus_y(n: usize) -> XYPoly {
    beta_tilde_recurrence(n).compose_xy(&XYPoly::x().add(&XYPoly::y()))
}

/// Classical Bernoulli polynomials B₀(x)..Bₙ(x) as the λ = 0 substitution.
pub fn classical_bernoulli_table(max_n: usize) -> Vec<RatPoly> {
    beta_tilde_recurrence_table(max_n)
        .iter()
        .map(|p| p.substitute_lambda(&rat(0, 1)))
        .collect()
}

/// Classical Bernoulli polynomials from the λ = 0 generating series
/// t·exp(tx)/(exp(t) - 1); independent of the λ-deformed routes.
pub fn classical_bernoulli_oracle_table(max_n: usize) -> Vec<RatPoly> {
    let series = classical_bernoulli_series(max_n);
    (0..=max_n)
        .map(|n| series.coeff(n).scale(&rat_big(factorial(n))))
        .collect()
}

/// Both sides of the classical shift property
/// Bₙ(x+y) = Σₗ C(n,l) Bₙ₋ₗ(x) yˡ, with Bₘ(x) taken at λ = 0.
pub fn classical_shift_check(n: usize) -> (XYPoly, XYPoly) {
    let classical = classical_bernoulli_table(n);
    let lift = |p: &RatPoly| XPoly::from_rat_poly(p);

    let lhs = lift(&classical[n]).compose_xy(&XYPoly::x().add(&XYPoly::y()));

    let y = XYPoly::y();
    let mut y_pows = vec![XYPoly::one()];
    for l in 1..=n {
        y_pows.push(y_pows[l - 1].mul(&y));
    }
    let mut rhs = XYPoly::zero();
    for l in 0..=n {
        let term = XYPoly::from_xpoly(&lift(&classical[n - l]))
            .mul(&y_pows[l])
            .scale(&rat_big(binomial(n, l)));
        rhs = rhs.add(&term);
    }
    (lhs, rhs)
}

/// Closed series form of the x-derivative:
/// β̃′₀ = 0 and β̃′ₙ = n!·Σ_{k=0}^{n-1} (-λx)^(n-1-k)/k! · β̃ₖ(λ|x).
pub fn beta_tilde_derivative_series(n: usize) -> XPoly {
    if n == 0 {
        return XPoly::zero();
    }
    let m = n - 1;
    let betas = beta_tilde_recurrence_table(m);
    let mut acc = XPoly::zero();
    for k in 0..=m {
        let e = m - k;
        // (-λx)^e contributes (-1)^e λ^e x^e
        let sign = if e.is_multiple_of(2) { 1 } else { -1 };
        let lambda_pow = LambdaPoly::monomial(rat(sign, 1), e);
        let term = betas[k]
            .mul(&XPoly::monomial(lambda_pow, e))
            .scale(&Rational::new(1.into(), factorial(k)));
        acc = acc.add(&term);
    }
    acc.scale(&rat_big(factorial(n)))
}

/// Rebuild β̃ₙ from the λ-Appell integral form
/// β̃ₙ(λ|x) = βₙ(λ) + n ∫₀ˣ (β̃ₙ₋₁(λ|u) - λu·β̃′ₙ₋₁(λ|u)) du. Requires n >= 1.
pub fn lambda_appell_reconstruct(n: usize) -> XPoly {
    assert!(n >= 1, "lambda_appell_reconstruct: n must be >= 1");
    let prev = beta_tilde_recurrence(n - 1);
    let numbers = degenerate_bernoulli_numbers(n);
    let integrand = appell_integrand(&prev);
    XPoly::constant(numbers[n].clone())
        .add(&integrand.antideriv().scale(&rat(n as i64, 1)))
}

/// The λ-Appell family seeded by P₀ = 1 with Pₙ(λ|0) = 0; iterating the
/// integral step must produce exactly ε⁻λ(n)·xⁿ.
pub fn lambda_appell_monomial_family(max_n: usize) -> Vec<XPoly> {
    let mut family = vec![XPoly::one()];
    for n in 1..=max_n {
        let step = appell_integrand(&family[n - 1])
            .antideriv()
            .scale(&rat(n as i64, 1));
        family.push(step);
    }
    family
}

/// p(x) - λx·p′(x), the integrand of the λ-Appell construction.
fn appell_integrand(p: &XPoly) -> XPoly {
    let lambda_x = XPoly::monomial(LambdaPoly::var(), 1);
    p.sub(&p.diff().mul(&lambda_x))
}

/// Right side of the xⁿ expansion
/// ε⁻λ(n)xⁿ = (1/(n+1)) Σ_{k=0}^{n} C(n+1,k) ε⁻λ(n+1-k) β̃ₖ(λ|x).
pub fn xn_expansion_rhs(n: usize) -> XPoly {
    let eps = EpsilonTable::new(n + 1);
    let betas = beta_tilde_recurrence_table(n);
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let c = rat_big(binomial(n + 1, k));
        acc = acc.add(&betas[k].scale_lambda(eps.minus(n + 1 - k)).scale(&c));
    }
    acc.scale(&rat(1, (n + 1) as i64))
}
