//! Python extension module exposing the exact polynomial types and the main
//! computation and verification entry points.
//!
//! Rationals cross the boundary as canonical `p/q` strings (or Python ints),
//! so no precision is lost; `fractions.Fraction` accepts the same format.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tsallis_bernoulli::bernoulli::{
    beta_tilde_table, degenerate_bernoulli_numbers, translation_rhs, Route,
};
use tsallis_bernoulli::bivariate::{beta_r_table, BivariateRoute};
use tsallis_bernoulli::epsilon::{epsilon, Sign};
use tsallis_bernoulli::jsonio;
use tsallis_bernoulli::numeric;
use tsallis_bernoulli::poly::{LambdaPoly, XPoly};
use tsallis_bernoulli::rational::{parse_rational, Rational};
use tsallis_bernoulli::render;
use tsallis_bernoulli::verify::{run_suite, Suite};
use tsallis_bernoulli::xypoly::XYPoly;

#[derive(FromPyObject)]
enum RationalInput {
    Int(i64),
    Str(String),
}

fn to_rational(input: RationalInput) -> PyResult<Rational> {
    match input {
        RationalInput::Int(n) => Ok(Rational::from_integer(n.into())),
        RationalInput::Str(s) => {
            parse_rational(&s).map_err(|e| PyValueError::new_err(e.to_string()))
        }
    }
}

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Polynomial in λ with exact rational coefficients.
#[pyclass(eq, from_py_object, name = "LambdaPoly", module = "tsallis_bernoulli_py")]
#[derive(Clone, PartialEq)]
struct PyLambdaPoly {
    inner: LambdaPoly,
}

#[pymethods]
impl PyLambdaPoly {
    /// Build from ascending λ-coefficients given as ints or `p/q` strings.
    #[new]
    fn new(coeffs: Vec<RationalInput>) -> PyResult<Self> {
        let coeffs = coeffs
            .into_iter()
            .map(to_rational)
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Self {
            inner: LambdaPoly::from_coeffs(coeffs),
        })
    }

    /// Ascending coefficients as canonical rational strings.
    fn coeffs(&self) -> Vec<String> {
        self.inner.coeffs().iter().map(|c| c.to_string()).collect()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Exact evaluation at a rational λ value.
    fn eval(&self, lambda: RationalInput) -> PyResult<String> {
        Ok(self.inner.eval_at(&to_rational(lambda)?).to_string())
    }

    fn latex(&self) -> String {
        render::lambda_poly_latex(&self.inner)
    }

    fn to_json(&self) -> String {
        jsonio::lambda_poly_to_json(&self.inner).to_string()
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(value_err)?;
        Ok(Self {
            inner: jsonio::lambda_poly_from_json(&v).map_err(value_err)?,
        })
    }

    fn __add__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> Self {
        Self {
            inner: self.inner.neg(),
        }
    }

    fn __str__(&self) -> String {
        render::lambda_poly_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("LambdaPoly('{}')", render::lambda_poly_text(&self.inner))
    }
}

/// Polynomial in x whose coefficients are polynomials in λ.
#[pyclass(eq, from_py_object, name = "XPoly", module = "tsallis_bernoulli_py")]
#[derive(Clone, PartialEq)]
struct PyXPoly {
    inner: XPoly,
}

#[pymethods]
impl PyXPoly {
    /// Build from ascending x-coefficients.
    #[new]
    fn new(coeffs: Vec<PyLambdaPoly>) -> Self {
        Self {
            inner: XPoly::from_coeffs(coeffs.into_iter().map(|c| c.inner).collect()),
        }
    }

    /// Ascending x-coefficients as λ-polynomials.
    fn coeffs(&self) -> Vec<PyLambdaPoly> {
        self.inner
            .coeffs()
            .iter()
            .map(|c| PyLambdaPoly { inner: c.clone() })
            .collect()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Exact evaluation at rational (λ, x).
    fn eval(&self, lambda: RationalInput, x: RationalInput) -> PyResult<String> {
        Ok(self
            .inner
            .eval(&to_rational(lambda)?, &to_rational(x)?)
            .to_string())
    }

    /// Substitute λ; the result has constant λ-coefficients.
    fn substitute_lambda(&self, lambda: RationalInput) -> PyResult<Self> {
        let p = self.inner.substitute_lambda(&to_rational(lambda)?);
        Ok(Self {
            inner: XPoly::from_rat_poly(&p),
        })
    }

    /// Substitute x; the result is a λ-polynomial.
    fn substitute_x(&self, x: RationalInput) -> PyResult<PyLambdaPoly> {
        Ok(PyLambdaPoly {
            inner: self.inner.substitute_x(&to_rational(x)?),
        })
    }

    /// Derivative in x.
    fn diff(&self) -> Self {
        Self {
            inner: self.inner.diff(),
        }
    }

    /// Antiderivative in x vanishing at 0.
    fn antideriv(&self) -> Self {
        Self {
            inner: self.inner.antideriv(),
        }
    }

    fn latex(&self) -> String {
        render::xpoly_latex(&self.inner)
    }

    fn to_json(&self) -> String {
        jsonio::xpoly_to_json(&self.inner).to_string()
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(value_err)?;
        Ok(Self {
            inner: jsonio::xpoly_from_json(&v).map_err(value_err)?,
        })
    }

    fn __add__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> Self {
        Self {
            inner: self.inner.neg(),
        }
    }

    fn __str__(&self) -> String {
        render::xpoly_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("XPoly('{}')", render::xpoly_text(&self.inner))
    }
}

/// Polynomial in x and y with λ-polynomial coefficients.
#[pyclass(eq, from_py_object, name = "XYPoly", module = "tsallis_bernoulli_py")]
#[derive(Clone, PartialEq)]
struct PyXYPoly {
    inner: XYPoly,
}

#[pymethods]
impl PyXYPoly {
    /// Build from `(xexp, yexp, coeff)` monomials.
    #[new]
    fn new(terms: Vec<(usize, usize, PyLambdaPoly)>) -> Self {
        let mut inner = XYPoly::zero();
        for (xexp, yexp, c) in terms {
            inner = inner.add(&XYPoly::monomial(c.inner, xexp, yexp));
        }
        Self { inner }
    }

    /// Monomials as `(xexp, yexp, coeff)`, sorted by exponents.
    fn terms(&self) -> Vec<(usize, usize, PyLambdaPoly)> {
        self.inner
            .terms()
            .map(|(&(xexp, yexp), c)| (xexp, yexp, PyLambdaPoly { inner: c.clone() }))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Exact evaluation at rational (λ, x, y).
    fn eval(&self, lambda: RationalInput, x: RationalInput, y: RationalInput) -> PyResult<String> {
        Ok(self
            .inner
            .eval(&to_rational(lambda)?, &to_rational(x)?, &to_rational(y)?)
            .to_string())
    }

    fn substitute_y_zero(&self) -> PyXPoly {
        PyXPoly {
            inner: self.inner.substitute_y_zero(),
        }
    }

    fn partial_x(&self) -> Self {
        Self {
            inner: self.inner.partial_x(),
        }
    }

    fn partial_y(&self) -> Self {
        Self {
            inner: self.inner.partial_y(),
        }
    }

    fn latex(&self) -> String {
        render::xypoly_latex(&self.inner)
    }

    fn to_json(&self) -> String {
        jsonio::xypoly_to_json(&self.inner).to_string()
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(value_err)?;
        Ok(Self {
            inner: jsonio::xypoly_from_json(&v).map_err(value_err)?,
        })
    }

    fn __add__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> Self {
        Self {
            inner: self.inner.neg(),
        }
    }

    fn __str__(&self) -> String {
        render::xypoly_text(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("XYPoly('{}')", render::xypoly_text(&self.inner))
    }
}

/// ε±λ(n) = Π_{j<n} (1 ± jλ); `sign` is "+"/"plus" or "-"/"minus".
#[pyfunction]
#[pyo3(name = "epsilon")]
fn epsilon_py(n: usize, sign: &str) -> PyResult<PyLambdaPoly> {
    let sign = match sign {
        "+" | "plus" => Sign::Plus,
        "-" | "minus" => Sign::Minus,
        other => return Err(PyValueError::new_err(format!("unknown sign `{other}`"))),
    };
    Ok(PyLambdaPoly {
        inner: epsilon(n, sign),
    })
}

/// Degenerate Bernoulli numbers β₀(λ)..βₙ(λ).
#[pyfunction]
fn bernoulli_numbers(max_n: usize) -> Vec<PyLambdaPoly> {
    degenerate_bernoulli_numbers(max_n)
        .into_iter()
        .map(|inner| PyLambdaPoly { inner })
        .collect()
}

/// The deformed Bernoulli polynomial of degree n by the chosen route
/// (recurrence, explicit, determinant or series).
#[pyfunction]
#[pyo3(signature = (n, route = "recurrence"))]
fn beta_tilde(n: usize, route: &str) -> PyResult<PyXPoly> {
    let route: Route = route.parse().map_err(value_err)?;
    Ok(PyXPoly {
        inner: beta_tilde_table(n, route).pop().expect("table is nonempty"),
    })
}

/// The two-variable polynomial of degree n and order r by the chosen route
/// (recurrence, double-sum or connection).
#[pyfunction]
#[pyo3(signature = (n, r, route = "recurrence"))]
fn beta_bivariate(n: usize, r: usize, route: &str) -> PyResult<PyXYPoly> {
    if r < 1 {
        return Err(PyValueError::new_err("r must be >= 1"));
    }
    let route: BivariateRoute = route.parse().map_err(value_err)?;
    Ok(PyXYPoly {
        inner: beta_r_table(n, r, route).pop().expect("table is nonempty"),
    })
}

/// Expanded right side of the translation formula for β̃ₙ(λ|x+y).
#[pyfunction]
#[pyo3(name = "translation_rhs")]
fn translation_rhs_py(n: usize) -> PyXYPoly {
    PyXYPoly {
        inner: translation_rhs(n),
    }
}

/// exp_λ(X) = (1+λX)^(1/λ), exp(X) at λ = 0.
#[pyfunction]
fn exp_lambda(x: f64, lambda: f64) -> PyResult<f64> {
    numeric::exp_lambda(x, lambda).map_err(value_err)
}

/// log_λ(X) = (X^λ - 1)/λ, ln(X) at λ = 0.
#[pyfunction]
fn log_lambda(x: f64, lambda: f64) -> PyResult<f64> {
    numeric::log_lambda(x, lambda).map_err(value_err)
}

/// Truncated product form of exp_λ(t·x); needs |λtx| < 1.
#[pyfunction]
#[pyo3(signature = (t, x, lambda, terms = 60))]
fn product_form_exp(t: f64, x: f64, lambda: f64, terms: usize) -> PyResult<f64> {
    numeric::product_form_exp(t, x, lambda, terms).map_err(value_err)
}

/// Run one identity suite; returns `(suite, check, passed, detail)` tuples.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_n = 10))]
fn verify_suite(suite: &str, max_n: usize) -> PyResult<Vec<(String, String, bool, String)>> {
    let suite: Suite = suite.parse().map_err(value_err)?;
    Ok(run_suite(suite, max_n)
        .into_iter()
        .map(|c| (c.suite.to_string(), c.name, c.passed, c.detail))
        .collect())
}

#[pymodule]
fn tsallis_bernoulli_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLambdaPoly>()?;
    m.add_class::<PyXPoly>()?;
    m.add_class::<PyXYPoly>()?;
    m.add_function(wrap_pyfunction!(epsilon_py, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(beta_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(beta_bivariate, m)?)?;
    m.add_function(wrap_pyfunction!(translation_rhs_py, m)?)?;
    m.add_function(wrap_pyfunction!(exp_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(log_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(product_form_exp, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("SCHEMA_VERSION", "tsallis-bernoulli/1")?;
    Ok(())
}
