"""Closed-form counts and statistic generating polynomials."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ._util import exact_div
from .lattice import PathSpec, enumerate_paths
from .qpoly import QTPoly
from .statistics import DEFAULT_INTERPRETATION, area, dinv


def count_schroder(n: int, d: int, r: int) -> int:
    """Number of r-Schroder paths of size n with d down steps (n - d diagonals)."""
    if not 0 <= d <= n or r < 1:
        raise ValueError(f"need 0 <= d <= n and r >= 1, got n={n}, d={d}, r={r}")
    return exact_div(comb(n, d) * comb(d * r + n, n), d * r + 1, "count_schroder")


def count_fuss_catalan(n: int, r: int) -> int:
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    return exact_div(comb(n * r + n, n), n * r + 1, "count_fuss_catalan")


class NonIntegralCount(ArithmeticError):
    def __init__(self, value: Fraction, args):
        super().__init__(f"formula value {value} is not an integer for {args}")
        self.value = value


def parking_closed_exact(n: int, d: int, r: int) -> Fraction:
    """The parking count formula evaluated in rationals (no rounding)."""
    if not 0 <= d <= n or r < 1:
        raise ValueError(f"need 0 <= d <= n and r >= 1, got n={n}, d={d}, r={r}")
    m = d * (r - 1) + n + 1
    return Fraction(factorial(n), factorial(d)) * comb(m, n - d) * Fraction(m) ** (d - 1)


def count_parking_closed(n: int, d: int, r: int) -> int:
    value = parking_closed_exact(n, d, r)
    if value.denominator != 1:
        raise NonIntegralCount(value, (n, d, r))
    return value.numerator


def gen_poly(spec: PathSpec, variant=None, interpretation=DEFAULT_INTERPRETATION) -> QTPoly:
    """Sum of ``q**area * t**dinv`` over the family.

    ``variant=None`` drops the dinv factor (``t**0``), which only needs the
    area statistic and therefore works for every integer-slope family.
    """
    out = {}
    for path in enumerate_paths(spec):
        key = (area(path), 0 if variant is None else dinv(path, variant, interpretation))
        out[key] = out.get(key, 0) + 1
    return QTPoly(out)
