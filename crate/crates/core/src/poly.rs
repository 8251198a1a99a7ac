//! Dense polynomials over an exact coefficient ring.
//!
//! `DensePoly<C>` stores coefficients in ascending power order. The
//! representation is canonical: the vector is empty for the zero polynomial
//! and its last entry is nonzero otherwise. The variable tower used
//! throughout is built by nesting: [`LambdaPoly`] is a polynomial in λ over
//! the rationals and [`XPoly`] is a polynomial in x over Q[λ].

use crate::rational::Rational;
use num::Zero;

/// Exact coefficient ring with rational scalar action.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiply by a rational scalar.
    fn scale(&self, k: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of the i-th
/// power of the variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in λ over the rationals.
pub type LambdaPoly = DensePoly<Rational>;

/// Polynomial in x over the rationals (classical-limit polynomials). Same
/// ring as [`LambdaPoly`]; only the variable read at render time differs.
pub type RatPoly = DensePoly<Rational>;

/// Polynomial in x whose coefficients are polynomials in λ.
pub type XPoly = DensePoly<LambdaPoly>;

impl<C: Coeff> DensePoly<C> {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            DensePoly { coeffs: vec![c] }
        }
    }

    /// The variable itself (`0 + 1·v`).
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c · v^k`; the zero polynomial when `c` is zero.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        for _ in 0..k {
            coeffs.push(C::zero());
        }
        coeffs.push(c);
        DensePoly { coeffs }
    }

    /// Construct from ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = DensePoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `v^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == C::one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if Zero::is_zero(k) {
            return Self::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval_at(&self, point: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(point).add(c);
        }
        acc
    }

    /// Derivative with respect to the variable.
    pub fn diff(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Antiderivative with zero constant term, so the result vanishes at 0.
    pub fn antideriv(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1.into(), (k as i64 + 1).into())));
        }
        Self::from_coeffs(coeffs)
    }

    /// Apply `f` coefficientwise and re-normalize.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> DensePoly<D> {
        DensePoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> Coeff for DensePoly<C> {
    fn zero() -> Self {
        DensePoly::zero()
    }
    fn one() -> Self {
        DensePoly::one()
    }
    fn is_zero(&self) -> bool {
        DensePoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        DensePoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        DensePoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        DensePoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        DensePoly::mul(self, rhs)
    }
    fn scale(&self, k: &Rational) -> Self {
        DensePoly::scale(self, k)
    }
}

impl DensePoly<Rational> {
    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }
}

impl DensePoly<LambdaPoly> {
    /// Partial evaluation in λ; the result is a polynomial in x over Q.
    pub fn substitute_lambda(&self, lambda0: &Rational) -> RatPoly {
        self.map(|c| c.eval_at(lambda0))
    }

    /// Partial evaluation in x; the result is a polynomial in λ.
    pub fn substitute_x(&self, x0: &Rational) -> LambdaPoly {
        self.eval_at(&LambdaPoly::constant(x0.clone()))
    }

    /// Full evaluation at a rational point `(λ0, x0)`.
    pub fn eval(&self, lambda0: &Rational, x0: &Rational) -> Rational {
        self.substitute_lambda(lambda0).eval_at(x0)
    }

    /// Multiply every x-coefficient by a fixed λ-polynomial.
    pub fn scale_lambda(&self, s: &LambdaPoly) -> XPoly {
        if s.is_zero() {
            return Self::zero();
        }
        self.map(|c| c.mul(s))
    }

    /// Lift a polynomial in x over Q to one with constant λ-coefficients.
    pub fn from_rat_poly(p: &RatPoly) -> XPoly {
        DensePoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|r| LambdaPoly::constant(r.clone()))
                .collect(),
        }
    }
}
