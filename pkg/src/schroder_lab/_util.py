from __future__ import annotations

import math
import os
from collections import Counter
from fractions import Fraction
from typing import Iterable


def floor_frac(x) -> int:
    return math.floor(Fraction(x))


def ceil_frac(x) -> int:
    return math.ceil(Fraction(x))


def exact_div(num: int, den: int, what: str = "division") -> int:
    """Integer division that refuses to truncate."""
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{what}: {num} / {den} leaves remainder {rem}")
    return q


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def arrangements(symbols) -> int:
    """Number of distinct rearrangements of a sequence of hashable symbols."""
    return multinomial(Counter(symbols).values())


def thread_cap() -> int:
    raw = os.environ.get("SCHRODER_LAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parse_rational(text) -> Fraction:
    """Accept ints, Fractions and strings such as ``"3/2"``."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
