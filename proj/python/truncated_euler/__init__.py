"""Exact truncated Euler, hypergeometric Bernoulli and Frobenius-Euler polynomials.

Polynomials are returned as dicts mapping (x exponent, y exponent) to Fraction.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "truncated_euler",
    "truncated_euler_number",
    "hypergeom_bernoulli",
    "bernoulli",
    "euler",
    "frobenius_euler",
    "verify",
    "run_cli",
]


def _poly(terms):
    return {(ex, ey): Fraction(c) for ex, ey, c in terms}


def truncated_euler(m, n):
    return _poly(_core.truncated_euler(m, n))


def truncated_euler_number(m, n):
    return Fraction(_core.truncated_euler_number(m, n))


def hypergeom_bernoulli(m, n):
    return _poly(_core.hypergeom_bernoulli(m, n))


def bernoulli(n):
    return _poly(_core.bernoulli(n))


def euler(n):
    return _poly(_core.euler(n))


def frobenius_euler(n, r, lam):
    return _poly(_core.frobenius_euler(n, r, str(Fraction(lam))))


def verify(m_max=3, n_max=10):
    """Run every identity on the grid; returns (passed, failed, T7 sign variant)."""
    return _core.verify(m_max, n_max)


def run_cli(args):
    """Run the command-line interface in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
