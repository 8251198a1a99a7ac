//! Floating-point evaluation of the deformed exponential and logarithm,
//! the infinite-product form, and float spot checks of the exact
//! polynomials.
//!
//! Everything exact lives elsewhere; this module is the only place IEEE
//! doubles appear. Non-finite values are rejected at the boundary and never
//! propagated.

use crate::poly::XPoly;
use num::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum NumericError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("overflow: result is not a finite f64")]
    Overflow,
}

fn check_finite(name: &str, v: f64) -> Result<(), NumericError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(NumericError::Domain(format!("{name} must be finite")))
    }
}

fn finish(v: f64) -> Result<f64, NumericError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(NumericError::Overflow)
    }
}

/// exp_λ(X) = (1+λX)^(1/λ) for λ ≠ 0, exp(X) at λ = 0 (the continuous
/// extension). Needs 1+λX > 0 when λ ≠ 0. The λ = 0 case is an explicit
/// branch: the λ ≠ 0 formula loses digits to cancellation as λ shrinks,
/// and it stays accurate only down to about |λ| = 1e-7.
pub fn exp_lambda(x: f64, lambda: f64) -> Result<f64, NumericError> {
    check_finite("X", x)?;
    check_finite("lambda", lambda)?;
    if lambda == 0.0 {
        return finish(x.exp());
    }
    let base = 1.0 + lambda * x;
    if base <= 0.0 {
        return Err(NumericError::Domain(format!(
            "1 + lambda*X = {base} must be positive"
        )));
    }
    finish(((lambda * x).ln_1p() / lambda).exp())
}

/// log_λ(X) = (X^λ - 1)/λ for λ ≠ 0, ln(X) at λ = 0. Needs X > 0.
pub fn log_lambda(x: f64, lambda: f64) -> Result<f64, NumericError> {
    check_finite("X", x)?;
    check_finite("lambda", lambda)?;
    if x <= 0.0 {
        return Err(NumericError::Domain(format!("X = {x} must be positive")));
    }
    if lambda == 0.0 {
        return finish(x.ln());
    }
    finish((x.powf(lambda) - 1.0) / lambda)
}

/// Truncated infinite-product form of the deformed exponential:
/// exp(Σ_{l=0}^{L-1} (-1)ˡ λˡ (tx)^(l+1)/(l+1)), which converges to
/// exp_λ(t·x) for |λtx| < 1. Requires L >= 1.
pub fn product_form_exp(t: f64, x: f64, lambda: f64, terms: usize) -> Result<f64, NumericError> {
    check_finite("t", t)?;
    check_finite("x", x)?;
    check_finite("lambda", lambda)?;
    if terms < 1 {
        return Err(NumericError::Domain("L must be >= 1".to_string()));
    }
    let tx = t * x;
    if (lambda * tx).abs() >= 1.0 {
        return Err(NumericError::Domain(format!(
            "|lambda*t*x| = {} must be < 1",
            (lambda * tx).abs()
        )));
    }
    let mut exponent = 0.0_f64;
    // (-1)^l λ^l (tx)^(l+1), built incrementally
    let mut power = tx;
    for l in 0..terms {
        exponent += power / (l as f64 + 1.0);
        power *= -lambda * tx;
    }
    finish(exponent.exp())
}

/// Float Horner evaluation of an exact polynomial: each λ-coefficient is
/// evaluated by Horner in λ, then the outer polynomial by Horner in x.
pub fn xpoly_eval_f64(p: &XPoly, lambda: f64, x: f64) -> f64 {
    let mut acc = 0.0_f64;
    for c in p.coeffs().iter().rev() {
        let mut inner = 0.0_f64;
        for r in c.coeffs().iter().rev() {
            inner = inner * lambda + r.to_f64().expect("rational fits in f64");
        }
        acc = acc * x + inner;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_one_is_linear() {
        assert_eq!(exp_lambda(0.25, 1.0).unwrap(), 1.25);
        assert_eq!(exp_lambda(1.0, 1.0).unwrap(), 2.0);
    }

    #[test]
    fn exp_at_zero_argument_is_one() {
        for lambda in [-1.5, -0.3, 0.0, 0.7, 2.0] {
            assert_eq!(exp_lambda(0.0, lambda).unwrap(), 1.0);
        }
    }

    #[test]
    fn continuity_near_lambda_zero() {
        let e = std::f64::consts::E;
        let v = exp_lambda(1.0, 1e-8).unwrap();
        assert!((v - e).abs() / e < 1e-6, "got {v}");
    }

    #[test]
    fn exp_domain_and_overflow_are_distinct() {
        assert!(matches!(
            exp_lambda(-2.0, 1.0),
            Err(NumericError::Domain(_))
        ));
        assert_eq!(exp_lambda(2000.0, 1e-3), Err(NumericError::Overflow));
        assert!(matches!(
            exp_lambda(f64::NAN, 0.5),
            Err(NumericError::Domain(_))
        ));
    }

    #[test]
    fn log_fixed_points() {
        for lambda in [-0.5, 0.0, 0.3, 1.0] {
            assert_eq!(log_lambda(1.0, lambda).unwrap(), 0.0);
        }
        assert_eq!(log_lambda(3.5, 1.0).unwrap(), 2.5);
        assert!(matches!(
            log_lambda(0.0, 0.3),
            Err(NumericError::Domain(_))
        ));
        assert!(matches!(
            log_lambda(-1.0, 0.0),
            Err(NumericError::Domain(_))
        ));
    }

    #[test]
    fn inversion_round_trip() {
        let x = 0.7;
        let lambda = 0.3;
        let y = exp_lambda(x, lambda).unwrap();
        let back = log_lambda(y, lambda).unwrap();
        assert!((back - x).abs() <= 1e-12, "got {back}");
    }

    #[test]
    fn product_form_classical_limit() {
        // λ = 0: a single surviving term, exp(tx) exactly
        for terms in [1, 5, 40] {
            let v = product_form_exp(0.3, 0.5, 0.0, terms).unwrap();
            assert_eq!(v, (0.15_f64).exp());
        }
    }

    #[test]
    fn product_form_at_origin() {
        assert_eq!(product_form_exp(0.0, 0.0, 0.9, 7).unwrap(), 1.0);
    }

    #[test]
    fn product_form_matches_closed_form() {
        let closed = exp_lambda(0.24, 0.5).unwrap();
        let product = product_form_exp(0.4, 0.6, 0.5, 40).unwrap();
        assert!(
            ((product - closed) / closed).abs() < 1e-10,
            "product {product} vs closed {closed}"
        );
    }

    #[test]
    fn product_form_rejects_divergent_input() {
        assert!(matches!(
            product_form_exp(2.0, 2.0, 0.5, 10),
            Err(NumericError::Domain(_))
        ));
        assert!(matches!(
            product_form_exp(1.0, 1.0, 0.5, 0),
            Err(NumericError::Domain(_))
        ));
    }
}
