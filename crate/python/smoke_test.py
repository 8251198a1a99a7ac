#!/usr/bin/env python3
"""Build-and-import smoke test for the tsallis_bernoulli_py extension.

Builds the cdylib with cargo, loads it, and exercises the main types and
operations end to end. Run from anywhere:

    python3 python/smoke_test.py [--release]
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def build(profile: str) -> None:
    args = ["cargo", "build", "-p", "tsallis-bernoulli-py"]
    if profile == "release":
        args.append("--release")
    subprocess.run(args, cwd=ROOT, check=True)


def load_module(profile: str):
    so = ROOT / "target" / profile / "libtsallis_bernoulli_py.so"
    if not so.exists():
        sys.exit(f"extension not found at {so}")
    staging = Path(tempfile.mkdtemp(prefix="tsallis_bernoulli_py_"))
    shutil.copy2(so, staging / "tsallis_bernoulli_py.so")
    sys.path.insert(0, str(staging))
    import tsallis_bernoulli_py

    return tsallis_bernoulli_py


def main() -> None:
    profile = "release" if "--release" in sys.argv[1:] else "debug"
    build(profile)
    tb = load_module(profile)
    print(f"loaded tsallis_bernoulli_py {tb.__version__} ({profile})")

    # the four routes agree and reproduce the closed forms
    b2 = tb.beta_tilde(2)
    for route in ("explicit", "determinant", "series"):
        assert tb.beta_tilde(2, route) == b2, route
    assert [c.coeffs() for c in b2.coeffs()] == [
        ["1/6", "0", "-1/6"],
        ["-1", "1"],
        ["1", "-1"],
    ]
    assert str(b2) == "(-λ + 1)*x^2 + (λ - 1)*x - 1/6*λ^2 + 1/6"

    # exact evaluation and substitution
    assert b2.eval(0, 1) == "1/6"
    assert Fraction(tb.beta_tilde(1).eval("1/2", "1/3")) == Fraction(1, 12)
    classical = b2.substitute_lambda(0)
    assert [c.coeffs() for c in classical.coeffs()] == [["1/6"], ["-1"], ["1"]]
    assert b2.substitute_x(0) == tb.bernoulli_numbers(2)[2]

    # degenerate Bernoulli numbers: β₄(λ) = -(1 - 20λ² + 19λ⁴)/30
    numbers = tb.bernoulli_numbers(4)
    assert numbers[4].coeffs() == ["-1/30", "0", "2/3", "0", "-19/30"]

    # ε products and polynomial arithmetic
    eps3 = tb.epsilon(3, "-")
    assert eps3.coeffs() == ["1", "-3", "2"]
    assert tb.epsilon(2, "-") * tb.LambdaPoly(["1", "-2"]) == eps3

    # bivariate: β̃₂^(2) = β̃₂(λ|x) + 2y, and y=0 recovers the 1-variable poly
    biv = tb.beta_bivariate(2, 2)
    assert tb.beta_bivariate(2, 2, "double-sum") == biv
    assert tb.beta_bivariate(2, 2, "connection") == biv
    assert biv.substitute_y_zero() == b2
    y_terms = [(j, l, c.coeffs()) for (j, l, c) in biv.terms() if l > 0]
    assert y_terms == [(0, 1, ["2"])]

    # translation formula at n = 1 is x + y + (λ-1)/2
    t1 = tb.translation_rhs(1)
    assert sorted(t1.terms(), key=lambda t: (t[0], t[1]))[0][2].coeffs() == ["-1/2", "1/2"]
    assert str(t1) == "x + y + 1/2*λ - 1/2"

    # JSON round trips exactly
    assert tb.XPoly.from_json(b2.to_json()) == b2
    assert tb.XYPoly.from_json(biv.to_json()) == biv
    assert "\\lambda" in b2.latex()

    # floats: deformed exponential and logarithm
    assert tb.exp_lambda(1.0, 1.0) == 2.0
    assert tb.log_lambda(1.0, 0.3) == 0.0
    back = tb.log_lambda(tb.exp_lambda(0.7, 0.3), 0.3)
    assert abs(back - 0.7) < 1e-12
    closed = tb.exp_lambda(0.24, 0.5)
    assert abs(tb.product_form_exp(0.4, 0.6, 0.5) - closed) < 1e-10 * closed
    try:
        tb.exp_lambda(-5.0, 1.0)
    except ValueError:
        pass
    else:
        raise AssertionError("domain error expected")

    # identity suites
    for suite in ("routes", "appell", "classical"):
        for name, check, passed, detail in tb.verify_suite(suite, 8):
            assert passed, f"{name}/{check}: {detail}"

    print("smoke test passed")


if __name__ == "__main__":
    main()
