"""Exact Laurent polynomials in q, bivariate polynomials in (q, t), and the
usual q-analogues."""
from __future__ import annotations

import logging
from typing import Dict, Iterable, Mapping, Tuple

log = logging.getLogger(__name__)


class QPoly:
    """Laurent polynomial in ``q`` with integer coefficients.

    Stored as ``{exponent: coefficient}`` without zero entries. Instances are
    treated as immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        self._c: Dict[int, int] = {int(e): int(c) for e, c in coeffs.items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls({exponent: coeff})

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c) if self._c else 0

    def max_exp(self) -> int:
        return max(self._c) if self._c else 0

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = _lift(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out: Dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = QPoly(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        return QPoly({e + k: c for e, c in self._c.items()})

    def divmod(self, other: "QPoly") -> Tuple["QPoly", "QPoly"]:
        """Long division after normalising both operands to start at q^0."""
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        s0, o0 = self.min_exp(), other.min_exp()
        num = self.shift(-s0)._c
        den = other.shift(-o0)._c
        dd = max(den)
        lead = den[dd]
        quot: Dict[int, int] = {}
        num = dict(num)
        while num and max(num) >= dd:
            top = max(num)
            c, rem = divmod(num[top], lead)
            if rem:
                break
            quot[top - dd] = c
            for e, dc in den.items():
                k = top - dd + e
                num[k] = num.get(k, 0) - c * dc
                if not num[k]:
                    del num[k]
        shift = s0 - o0
        return QPoly(quot).shift(shift), QPoly(num).shift(s0)

    def exact_div(self, other: "QPoly") -> "QPoly":
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError(f"inexact division: ({self}) / ({other}) leaves {rem}")
        return quot

    def __floordiv__(self, other):
        return self.exact_div(_lift(other))

    def evaluate(self, q):
        return sum(c * q ** e for e, c in self._c.items())

    def __call__(self, q):
        return self.evaluate(q)

    def items(self):
        return sorted(self._c.items())

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QPoly({str(self)!r})"

    def to_json(self) -> Dict[str, str]:
        return {str(e): str(c) for e, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "QPoly":
        return cls({int(e): int(c) for e, c in data.items()})


def _lift(x) -> QPoly:
    return x if isinstance(x, QPoly) else QPoly(int(x))


class QTPoly:
    """Polynomial in ``q`` and ``t``: ``{(q_exp, t_exp): coefficient}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Tuple[int, int], int] = ()):
        self._c = {(int(i), int(j)): int(c) for (i, j), c in dict(coeffs).items() if c}

    @classmethod
    def monomial(cls, qe: int, te: int, coeff: int = 1) -> "QTPoly":
        return cls({(qe, te): coeff})

    @property
    def coeffs(self):
        return dict(self._c)

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, 0) + c
        return QTPoly(out)

    def __mul__(self, other):
        out: Dict[Tuple[int, int], int] = {}
        for (a, b), c1 in self._c.items():
            for (x, y), c2 in other._c.items():
                out[(a + x, b + y)] = out.get((a + x, b + y), 0) + c1 * c2
        return QTPoly(out)

    def swap(self) -> "QTPoly":
        return QTPoly({(j, i): c for (i, j), c in self._c.items()})

    def at_t(self, t: int) -> QPoly:
        out: Dict[int, int] = {}
        for (i, j), c in self._c.items():
            out[i] = out.get(i, 0) + c * t ** j
        return QPoly(out)

    def at_q(self, q: int) -> QPoly:
        """Evaluate q, returning a polynomial in t (as a QPoly)."""
        return self.swap().at_t(q)

    def evaluate(self, q, t):
        return sum(c * q ** i * t ** j for (i, j), c in self._c.items())

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{c}*q^{i}*t^{j}" for (i, j), c in sorted(self._c.items()))

    def __repr__(self):
        return f"QTPoly({str(self)!r})"

    def to_json(self):
        return {f"{i},{j}": str(c) for (i, j), c in sorted(self._c.items())}


def q_int(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return QPoly([1] * n)


def q_fact(n: int) -> QPoly:
    out = QPoly(1)
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def q_binom(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        log.warning("q_binom(%d, %d) outside 0 <= k <= n, returning 0", n, k)
        return QPoly()
    return q_fact(n).exact_div(q_fact(k) * q_fact(n - k))


def pochhammer(a_exponent: int, n: int) -> QPoly:
    """``(a; 1/q)_n`` for ``a = q**a_exponent``: prod_{i<n} (1 - q^(a_exponent - i))."""
    out = QPoly(1)
    for i in range(n):
        out = out * (QPoly(1) - QPoly.monomial(a_exponent - i))
    return out


def specialize_t_inv_q(p: QTPoly, w: int = 0) -> QPoly:
    """``q**w * p(q, 1/q)``."""
    out: Dict[int, int] = {}
    for (i, j), c in p.coeffs.items():
        out[i - j + w] = out.get(i - j + w, 0) + c
    return QPoly(out)
