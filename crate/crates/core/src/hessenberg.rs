//! Exact upper-Hessenberg determinants and the determinantal route to the
//! deformed Bernoulli polynomials.
//!
//! An upper-Hessenberg matrix has h(j,l) = 0 whenever j - l >= 2. Its
//! determinant satisfies a first-order recurrence in the leading principal
//! minors, which needs no pivoting or division and therefore stays exact
//! over the polynomial ring.

use crate::epsilon::EpsilonTable;
use crate::poly::XPoly;
use crate::rational::{binomial, factorial, rat_big, Rational};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HessenbergError {
    #[error("matrix is not square: row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row},{col}) below the first subdiagonal is nonzero")]
    NotHessenberg { row: usize, col: usize },
}

/// Dense square matrix of exact polynomial entries, validated to satisfy the
/// upper-Hessenberg zero pattern on construction.
#[derive(Debug, Clone)]
pub struct HessMatrix {
    rows: Vec<Vec<XPoly>>,
}

impl HessMatrix {
    pub fn new(rows: Vec<Vec<XPoly>>) -> Result<Self, HessenbergError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(HessenbergError::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if i > j + 1 && !entry.is_zero() {
                    return Err(HessenbergError::NotHessenberg {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(HessMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry by 0-based indices.
    pub fn entry(&self, row: usize, col: usize) -> &XPoly {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<XPoly>] {
        &self.rows
    }
}

/// Determinant by the leading-principal-minor recurrence
/// H₀ = 1, Hₘ = Σ_{l=0}^{m-1} (-1)^(m-1-l) · Q(l, m-2) · h(l+1, m) · Hₗ,
/// where Q(l, k) is the product of the subdiagonal entries h(j+2, j+1) for
/// j = l..=k (empty product 1). Indices in the formula are 1-based.
pub fn hessenberg_det(m: &HessMatrix) -> XPoly {
    let n = m.size();
    let mut minors: Vec<XPoly> = Vec::with_capacity(n + 1);
    minors.push(XPoly::one());
    for size in 1..=n {
        let mut acc = XPoly::zero();
        // running subdiagonal product Q(l, size-2), extended as l decreases
        let mut q = XPoly::one();
        for l in (0..size).rev() {
            let term = q.mul(m.entry(l, size - 1)).mul(&minors[l]);
            if (size - 1 - l) % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
            if l > 0 {
                q = q.mul(m.entry(l, l - 1));
            }
        }
        minors.push(acc);
    }
    minors.pop().expect("at least the empty minor exists")
}

/// The (n+1)×(n+1) matrix whose determinant carries β̃ₙ(λ|x). Rows, 1-based:
/// row 1 holds 1, ε⁻λ(1)x, …, ε⁻λ(n)xⁿ; row 2 holds ε⁻λ(c)/c at column c;
/// row r >= 3 holds ε⁻λ(c-r+2)·C(c-1, r-3) at column c >= r-1 and zero
/// below the subdiagonal. Requires n >= 1.
pub fn build_d_matrix(n: usize) -> HessMatrix {
    assert!(n >= 1, "build_d_matrix: n must be >= 1");
    let size = n + 1;
    let eps = EpsilonTable::new(n + 1);
    let mut rows = Vec::with_capacity(size);

    let row1 = (0..size)
        .map(|j| XPoly::monomial(eps.minus(j).clone(), j))
        .collect();
    rows.push(row1);

    let row2 = (0..size)
        .map(|j| {
            XPoly::constant(
                eps.minus(j + 1)
                    .scale(&Rational::new(1.into(), ((j + 1) as i64).into())),
            )
        })
        .collect();
    rows.push(row2);

    for i in 2..size {
        let row = (0..size)
            .map(|j| {
                if j + 1 < i {
                    XPoly::zero()
                } else {
                    let coeff = eps.minus(j + 2 - i).scale(&rat_big(binomial(j, i - 2)));
                    XPoly::constant(coeff)
                }
            })
            .collect();
        rows.push(row);
    }

    HessMatrix::new(rows).expect("matrix satisfies the Hessenberg pattern by construction")
}

/// β̃ₙ(λ|x) by the determinantal route: 1 for n = 0, otherwise
/// (-1)ⁿ/(n-1)! times the Hessenberg determinant of the order-(n+1) matrix.
pub fn beta_tilde_determinant(n: usize) -> XPoly {
    if n == 0 {
        return XPoly::one();
    }
    let det = hessenberg_det(&build_d_matrix(n));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    det.scale(&Rational::new(sign.into(), factorial(n - 1)))
}
