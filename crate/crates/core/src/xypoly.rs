//! Sparse polynomials in x and y with coefficients in Q[λ].
//!
//! Bivariate supports stay sparse, so terms live in a `BTreeMap` keyed by
//! `(x exponent, y exponent)`; no zero coefficient is ever stored, and
//! iteration order is the canonical `(xexp, yexp)` order.

use std::collections::BTreeMap;

use crate::poly::{Coeff, DensePoly, LambdaPoly, XPoly};
use crate::rational::Rational;
use num::Zero;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XYPoly {
    terms: BTreeMap<(usize, usize), LambdaPoly>,
}

impl XYPoly {
    pub fn zero() -> Self {
        XYPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(LambdaPoly::one(), 0, 0)
    }

    pub fn constant(c: LambdaPoly) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · x^j y^l`; the zero polynomial when `c` is zero.
    pub fn monomial(c: LambdaPoly, xexp: usize, yexp: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xexp, yexp), c);
        }
        XYPoly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(LambdaPoly::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(LambdaPoly::one(), 0, 1)
    }

    pub fn from_xpoly(p: &XPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert((k, 0), c.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(xexp, yexp)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &LambdaPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `x^j y^l`, zero if absent.
    pub fn coeff(&self, xexp: usize, yexp: usize) -> LambdaPoly {
        self.terms
            .get(&(xexp, yexp))
            .cloned()
            .unwrap_or_else(LambdaPoly::zero)
    }

    fn insert_add(&mut self, key: (usize, usize), val: &LambdaPoly) {
        if val.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                let sum = c.add(val);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(key, val.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (key, c) in &rhs.terms {
            out.insert_add(*key, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((ax, ay), ac) in &self.terms {
            for ((bx, by), bc) in &rhs.terms {
                out.insert_add((ax + bx, ay + by), &ac.mul(bc));
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if Zero::is_zero(k) {
            return Self::zero();
        }
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(key, c)| (*key, c.scale(k)))
                .collect(),
        }
    }

    /// Multiply every term by a fixed λ-polynomial.
    pub fn scale_lambda(&self, s: &LambdaPoly) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        XYPoly {
            terms: self
                .terms
                .iter()
                .map(|(key, c)| (*key, c.mul(s)))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute y := 0.
    pub fn substitute_y_zero(&self) -> XPoly {
        let deg = self
            .terms
            .keys()
            .filter(|(_, l)| *l == 0)
            .map(|(k, _)| *k)
            .max();
        let Some(deg) = deg else {
            return XPoly::zero();
        };
        let mut coeffs = vec![LambdaPoly::zero(); deg + 1];
        for ((k, l), c) in &self.terms {
            if *l == 0 {
                coeffs[*k] = c.clone();
            }
        }
        XPoly::from_coeffs(coeffs)
    }

    /// Substitute x := 0 and rename y to x.
    pub fn substitute_x_zero_y_as_x(&self) -> XPoly {
        let deg = self
            .terms
            .keys()
            .filter(|(k, _)| *k == 0)
            .map(|(_, l)| *l)
            .max();
        let Some(deg) = deg else {
            return XPoly::zero();
        };
        let mut coeffs = vec![LambdaPoly::zero(); deg + 1];
        for ((k, l), c) in &self.terms {
            if *k == 0 {
                coeffs[*l] = c.clone();
            }
        }
        XPoly::from_coeffs(coeffs)
    }

    pub fn partial_x(&self) -> Self {
        let mut out = Self::zero();
        for ((k, l), c) in &self.terms {
            if *k >= 1 {
                out.insert_add((k - 1, *l), &c.scale(&Rational::from_integer((*k).into())));
            }
        }
        out
    }

    pub fn partial_y(&self) -> Self {
        let mut out = Self::zero();
        for ((k, l), c) in &self.terms {
            if *l >= 1 {
                out.insert_add((*k, l - 1), &c.scale(&Rational::from_integer((*l).into())));
            }
        }
        out
    }

    /// Exact evaluation at a rational point `(λ0, x0, y0)`.
    pub fn eval(&self, lambda0: &Rational, x0: &Rational, y0: &Rational) -> Rational {
        let mut acc: Rational = Zero::zero();
        for ((k, l), c) in &self.terms {
            let mut term = c.eval_at(lambda0);
            for _ in 0..*k {
                term *= x0;
            }
            for _ in 0..*l {
                term *= y0;
            }
            acc += term;
        }
        acc
    }
}

impl Coeff for XYPoly {
    fn zero() -> Self {
        XYPoly::zero()
    }
    fn one() -> Self {
        XYPoly::one()
    }
    fn is_zero(&self) -> bool {
        XYPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        XYPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        XYPoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        XYPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        XYPoly::mul(self, rhs)
    }
    fn scale(&self, k: &Rational) -> Self {
        XYPoly::scale(self, k)
    }
}

impl DensePoly<LambdaPoly> {
    /// Substitute the x variable with an arbitrary bivariate polynomial
    /// (Horner in the outer variable).
    pub fn compose_xy(&self, sub: &XYPoly) -> XYPoly {
        let mut acc = XYPoly::zero();
        for c in self.coeffs().iter().rev() {
            acc = acc.mul(sub).add(&XYPoly::constant(c.clone()));
        }
        acc
    }
}
