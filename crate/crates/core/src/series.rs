//! Truncated formal power series in t and the generating-function builders.
//!
//! All arithmetic discards terms beyond the fixed truncation order, and
//! binary operations demand equal orders: silently re-truncating mismatched
//! operands would hide bugs in the oracle route, so that is a panic instead.
//! Division requires a unit denominator (t⁰ coefficient exactly 1) and is
//! performed by forward substitution.

use crate::epsilon::EpsilonTable;
use crate::poly::{Coeff, LambdaPoly, RatPoly, XPoly};
use crate::rational::{inv_factorial, Rational};
use crate::xypoly::XYPoly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("non-unit denominator: the t^0 coefficient must be 1")]
    NonUnitDenominator,
}

/// Power series in t truncated at a fixed order; `coeffs[n]` multiplies tⁿ.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn new(order: usize, coeffs: Vec<C>) -> Self {
        assert_eq!(coeffs.len(), order + 1, "series length must be order + 1");
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// A series is a unit here iff its t⁰ coefficient is the constant 1.
    pub fn is_unit(&self) -> bool {
        self.coeffs[0] == C::one()
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series orders differ; truncation must match"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        TruncSeries { coeffs }
    }

    /// Forward-substitution division: returns q with q·rhs = self up to the
    /// truncation order.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.assert_same_order(rhs);
        if !rhs.is_unit() {
            return Err(SeriesError::NonUnitDenominator);
        }
        let n = self.order();
        let mut q: Vec<C> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..=m {
                if rhs.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.sub(&rhs.coeffs[k].mul(&q[m - k]));
            }
            q.push(acc);
        }
        Ok(TruncSeries { coeffs: q })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// exp_λ(t·x) = Σ ε⁻λ(n) xⁿ tⁿ/n!, truncated.
pub fn exp_lambda_tx(order: usize) -> TruncSeries<XPoly> {
    let eps = EpsilonTable::new(order);
    TruncSeries::new(
        order,
        (0..=order)
            .map(|n| XPoly::monomial(eps.minus(n).scale(&inv_factorial(n)), n))
            .collect(),
    )
}

/// exp_λ(t) = Σ ε⁻λ(n) tⁿ/n!, truncated; coefficients are constant in x.
pub fn exp_lambda_t(order: usize) -> TruncSeries<XPoly> {
    let eps = EpsilonTable::new(order);
    TruncSeries::new(
        order,
        (0..=order)
            .map(|n| XPoly::constant(eps.minus(n).scale(&inv_factorial(n))))
            .collect(),
    )
}

/// exp_λ(tʳ·y) = Σ ε⁻λ(l) yˡ t^(r·l)/l!, truncated. Requires r >= 1.
pub fn exp_lambda_try(order: usize, r: usize) -> TruncSeries<XYPoly> {
    assert!(r >= 1, "exp_lambda_try: r must be >= 1");
    let eps = EpsilonTable::new(order / r);
    TruncSeries::new(
        order,
        (0..=order)
            .map(|n| {
                if n % r == 0 {
                    let l = n / r;
                    XYPoly::monomial(eps.minus(l).scale(&inv_factorial(l)), 0, l)
                } else {
                    XYPoly::zero()
                }
            })
            .collect(),
    )
}

/// (exp_λ(t) - 1)/t = Σ ε⁻λ(k+1) tᵏ/(k+1)!; the unit denominator of every
/// generating function here.
pub fn expm1_lambda_over_t(order: usize) -> TruncSeries<XPoly> {
    let eps = EpsilonTable::new(order + 1);
    TruncSeries::new(
        order,
        (0..=order)
            .map(|k| XPoly::constant(eps.minus(k + 1).scale(&inv_factorial(k + 1))))
            .collect(),
    )
}

/// t·exp_λ(tx)/(exp_λ(t) - 1): the generating function whose tⁿ coefficient
/// times n! is the deformed Bernoulli polynomial of degree n. This is the
/// oracle route the closed forms are checked against.
pub fn beta_generating_series(order: usize) -> TruncSeries<XPoly> {
    exp_lambda_tx(order)
        .div(&expm1_lambda_over_t(order))
        .expect("denominator is a unit by construction")
}

/// t/(exp_λ(t) - 1): tⁿ coefficient times n! is the degenerate Bernoulli
/// number βₙ(λ). Built independently of the polynomial routes.
pub fn carlitz_number_series(order: usize) -> TruncSeries<XPoly> {
    TruncSeries::one(order)
        .div(&expm1_lambda_over_t(order))
        .expect("denominator is a unit by construction")
}

/// t·exp_λ(tx)·exp_λ(tʳy)/(exp_λ(t) - 1): the two-variable generating
/// function; tⁿ coefficient times n! is the bivariate polynomial of index n.
pub fn beta_bivariate_generating_series(order: usize, r: usize) -> TruncSeries<XYPoly> {
    let numerator = exp_lambda_tx(order)
        .map_coeffs(XYPoly::from_xpoly)
        .mul(&exp_lambda_try(order, r));
    let denominator = expm1_lambda_over_t(order).map_coeffs(XYPoly::from_xpoly);
    numerator
        .div(&denominator)
        .expect("denominator is a unit by construction")
}

/// log_λ((exp_λ(t))^x) = ((1+λt)^x - 1)/λ = Σ_{n>=1} λ^(n-1) (x)ₙ tⁿ/n!
/// with the falling factorial (x)ₙ = x(x-1)···(x-n+1). Requires order >= 1.
pub fn log_expx_series(order: usize) -> TruncSeries<XPoly> {
    assert!(order >= 1, "log_expx_series: order must be >= 1");
    let mut coeffs = vec![XPoly::zero()];
    let mut falling = RatPoly::one();
    for n in 1..=order {
        // extend (x)ₙ₋₁ by the factor (x - (n-1))
        falling = falling.mul(&RatPoly::from_int_coeffs(&[-((n - 1) as i64), 1]));
        let lambda_part = LambdaPoly::monomial(inv_factorial(n), n - 1);
        coeffs.push(XPoly::from_rat_poly(&falling).scale_lambda(&lambda_part));
    }
    TruncSeries::new(order, coeffs)
}

/// t·exp(tx)/(exp(t) - 1): the classical generating function; tⁿ coefficient
/// times n! is the classical Bernoulli polynomial. Serves as the λ=0 oracle.
pub fn classical_bernoulli_series(order: usize) -> TruncSeries<RatPoly> {
    let numerator = TruncSeries::new(
        order,
        (0..=order)
            .map(|n| RatPoly::monomial(inv_factorial(n), n))
            .collect(),
    );
    let denominator = TruncSeries::new(
        order,
        (0..=order)
            .map(|k| RatPoly::constant(inv_factorial(k + 1)))
            .collect(),
    );
    numerator
        .div(&denominator)
        .expect("denominator is a unit by construction")
}
