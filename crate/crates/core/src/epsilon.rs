//! The coefficient products ε±λ(n) of the λ-exponential power series.
//!
//! The deformed exponential exp_λ(X) = (1+λX)^(1/λ) expands as
//! Σ ε⁻λ(n) Xⁿ/n! and its reciprocal as Σ (-1)ⁿ ε⁺λ(n) Xⁿ/n!, where
//! ε±λ(n) = Π_{j=0}^{n-1} (1 ± jλ) and the empty product is 1.

use crate::poly::LambdaPoly;
use crate::rational::rat_int;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// ε±λ(n) as a polynomial in λ.
pub fn epsilon(n: usize, sign: Sign) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        let slope = match sign {
            Sign::Plus => j as i64,
            Sign::Minus => -(j as i64),
        };
        acc = acc.mul(&LambdaPoly::from_coeffs(vec![rat_int(1), rat_int(slope)]));
    }
    acc
}

/// Precomputed ε±λ(0..=max_n), shared read-only by the engines. Built once
/// per computation; nothing here is process-global.
pub struct EpsilonTable {
    plus: Vec<LambdaPoly>,
    minus: Vec<LambdaPoly>,
}

impl EpsilonTable {
    pub fn new(max_n: usize) -> Self {
        let mut plus = Vec::with_capacity(max_n + 1);
        let mut minus = Vec::with_capacity(max_n + 1);
        plus.push(LambdaPoly::one());
        minus.push(LambdaPoly::one());
        for n in 1..=max_n {
            let j = (n - 1) as i64;
            plus.push(plus[n - 1].mul(&LambdaPoly::from_coeffs(vec![rat_int(1), rat_int(j)])));
            minus.push(minus[n - 1].mul(&LambdaPoly::from_coeffs(vec![rat_int(1), rat_int(-j)])));
        }
        EpsilonTable { plus, minus }
    }

    pub fn max_n(&self) -> usize {
        self.minus.len() - 1
    }

    pub fn plus(&self, n: usize) -> &LambdaPoly {
        &self.plus[n]
    }

    pub fn minus(&self, n: usize) -> &LambdaPoly {
        &self.minus[n]
    }
}
