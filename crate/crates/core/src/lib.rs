//! Exact arithmetic for a Tsallis-flavoured deformation of the Bernoulli
//! polynomials.
//!
//! The family β̃ₙ(λ|x) is generated by t·exp_λ(tx)/(exp_λ(t) - 1), where
//! exp_λ(X) = (1+λX)^(1/λ) is the deformed exponential of nonextensive
//! statistics. At x = 0 the family reduces to Carlitz's degenerate
//! Bernoulli numbers βₙ(λ), and as λ → 0 to the classical Bernoulli
//! polynomials Bₙ(x).
//!
//! Everything symbolic is computed over arbitrary-precision rationals; no
//! rounding occurs outside the [`numeric`] module. The same polynomials are
//! produced by four independent routes (recurrence, explicit expansion,
//! Hessenberg determinant, truncated generating series), and [`verify`]
//! re-derives every identity of the family on demand: translation in the
//! argument, the λ-Appell derivative and integral structure, the xⁿ
//! expansion, the two-variable extension with its differential recurrences,
//! and the classical limits.

pub mod bernoulli;
pub mod bivariate;
pub mod epsilon;
pub mod hessenberg;
pub mod jsonio;
pub mod numeric;
pub mod poly;
pub mod rational;
pub mod render;
pub mod series;
pub mod verify;
pub mod xypoly;

pub use bernoulli::{beta_tilde, beta_tilde_table, degenerate_bernoulli_numbers, BetaFamily, Route};
pub use bivariate::{beta_r, beta_r_table, BivariateFamily, BivariateRoute};
pub use epsilon::{epsilon, EpsilonTable, Sign};
pub use poly::{Coeff, DensePoly, LambdaPoly, RatPoly, XPoly};
pub use rational::{parse_rational, Rational};
pub use series::TruncSeries;
pub use verify::{run_suite, Check, Suite};
pub use xypoly::XYPoly;
