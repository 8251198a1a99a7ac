//! Deterministic text and LaTeX rendering of the polynomial types.
//!
//! Terms are ordered by descending x power, then descending y power, then
//! descending λ power, matching the usual presentation of the families.
//! Rationals render in the canonical `p/q` form.

use crate::poly::{DensePoly, LambdaPoly, XPoly};
use crate::rational::Rational;
use crate::xypoly::XYPoly;
use num::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Text,
    Latex,
}

fn power(var: &str, k: usize, mode: Mode) -> String {
    match (k, mode) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (_, Mode::Text) => format!("{var}^{k}"),
        (_, Mode::Latex) => format!("{var}^{{{k}}}"),
    }
}

/// One `c·v^k` term; `c` must be nonzero.
fn scalar_term(c: &Rational, var_part: &str, mode: Mode) -> String {
    if var_part.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return var_part.to_string();
    }
    if (-c).is_one() {
        return format!("-{var_part}");
    }
    match mode {
        Mode::Text => format!("{c}*{var_part}"),
        Mode::Latex => format!("{c} {var_part}"),
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}

fn poly1_string(p: &DensePoly<Rational>, var: &str, mode: Mode) -> String {
    let mut terms = Vec::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        terms.push(scalar_term(c, &power(var, k, mode), mode));
    }
    join_terms(terms)
}

/// λ-polynomial (or any rational polynomial) with an explicit variable name.
pub fn poly1_text(p: &DensePoly<Rational>, var: &str) -> String {
    poly1_string(p, var, Mode::Text)
}

pub fn poly1_latex(p: &DensePoly<Rational>, var: &str) -> String {
    poly1_string(p, var, Mode::Latex)
}

pub fn lambda_poly_text(p: &LambdaPoly) -> String {
    poly1_string(p, "λ", Mode::Text)
}

pub fn lambda_poly_latex(p: &LambdaPoly) -> String {
    poly1_string(p, "\\lambda", Mode::Latex)
}

fn lambda_coeff_term(c: &LambdaPoly, var_part: &str, mode: Mode) -> String {
    let lvar = match mode {
        Mode::Text => "λ",
        Mode::Latex => "\\lambda",
    };
    if c.degree() == Some(0) {
        return scalar_term(&c.coeff(0), var_part, mode);
    }
    let inner = poly1_string(c, lvar, mode);
    if var_part.is_empty() {
        inner
    } else {
        match mode {
            Mode::Text => format!("({inner})*{var_part}"),
            Mode::Latex => format!("({inner}) {var_part}"),
        }
    }
}

fn xpoly_string(p: &XPoly, mode: Mode) -> String {
    let mut terms = Vec::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        terms.push(lambda_coeff_term(c, &power("x", k, mode), mode));
    }
    join_terms(terms)
}

pub fn xpoly_text(p: &XPoly) -> String {
    xpoly_string(p, Mode::Text)
}

pub fn xpoly_latex(p: &XPoly) -> String {
    xpoly_string(p, Mode::Latex)
}

fn xypoly_string(p: &XYPoly, mode: Mode) -> String {
    let mut terms = Vec::new();
    let entries: Vec<_> = p.terms().collect();
    for (&(k, l), c) in entries.into_iter().rev() {
        let xpart = power("x", k, mode);
        let ypart = power("y", l, mode);
        let var_part = match (xpart.is_empty(), ypart.is_empty(), mode) {
            (true, true, _) => String::new(),
            (false, true, _) => xpart,
            (true, false, _) => ypart,
            (false, false, Mode::Text) => format!("{xpart}*{ypart}"),
            (false, false, Mode::Latex) => format!("{xpart} {ypart}"),
        };
        terms.push(lambda_coeff_term(c, &var_part, mode));
    }
    join_terms(terms)
}

pub fn xypoly_text(p: &XYPoly) -> String {
    xypoly_string(p, Mode::Text)
}

pub fn xypoly_latex(p: &XYPoly) -> String {
    xypoly_string(p, Mode::Latex)
}
