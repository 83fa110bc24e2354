"""Recursive counts of parking labelings inside pentagons and hexagons, and
their assembly into counts over unit-fraction (FSchroder) paths.

``G``, ``E`` and ``H`` follow the printed recursions term by term; the
``brute_*`` functions are independent oracles that enumerate region paths and
count rearrangements of their left-area sequences.

Two readings are left open by the printed assembly formulas and are chosen
through :class:`VariantConfig`:

* ``beta_index_mode``: the ``beta_i`` inside the product over ``k`` is either
  the literal last part ``beta_i`` or the partial sum ``beta_1 + ... + beta_k``;
* ``psch_degenerate_mode``: ``LITERAL`` evaluates the sums as written;
  ``REGION_FALLBACK`` gives the no-pentagon term weight 1, evaluates the
  diagonal-free family directly as one triangle, and lets empty regions count
  one (empty) labeling instead of raising.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Iterator, Tuple

from ._util import arrangements, ceil_frac, floor_frac, multinomial
from .lattice import (DIAG, Mode, PathSpec, RegionHexagon, RegionPentagon,
                      enumerate_paths, enumerate_region_paths)


class DomainError(ValueError):
    """Arguments outside the domain where a recursion is defined."""


class BetaIndexMode(str, enum.Enum):
    LITERAL = "literal"
    PARTIAL_SUM = "partialsum"


class DegenerateMode(str, enum.Enum):
    LITERAL = "literal"
    REGION_FALLBACK = "fallback"


@dataclass(frozen=True)
class VariantConfig:
    beta_index_mode: BetaIndexMode = BetaIndexMode.PARTIAL_SUM
    psch_degenerate_mode: DegenerateMode = DegenerateMode.LITERAL

    def __post_init__(self):
        object.__setattr__(self, "beta_index_mode", BetaIndexMode(self.beta_index_mode))
        object.__setattr__(self, "psch_degenerate_mode", DegenerateMode(self.psch_degenerate_mode))

    @property
    def fallback(self) -> bool:
        return self.psch_degenerate_mode is DegenerateMode.REGION_FALLBACK

    def to_json(self) -> dict:
        return {"beta_index_mode": self.beta_index_mode.value,
                "psch_degenerate_mode": self.psch_degenerate_mode.value}

    @classmethod
    def all(cls):
        return [cls(b, m) for b in BetaIndexMode for m in DegenerateMode]


DEFAULT_VARIANT = VariantConfig()

MAX_DEPTH = 200


# --------------------------------------------------------------------------
# Compositions


def compositions(total: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``k`` parts, lexicographic."""
    if k == 0:
        if total == 0:
            yield ()
        return
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


def pascal_twice(m: int, i: int) -> Tuple[int, int]:
    """Both sides of C(m,i-1) + 2 C(m,i) + C(m,i+1) = C(m+2,i+1)."""
    lhs = _binom(m, i - 1) + 2 * _binom(m, i) + _binom(m, i + 1)
    return lhs, _binom(m + 2, i + 1)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


# --------------------------------------------------------------------------
# Pentagons


def _check_pentagon(name, a, b, p, r, q):
    if a < 0 or b < 0 or q < 0 or p < 0 or r < 1:
        raise DomainError(f"{name}{(a, b, _fmt(p), r, q)}: negative region parameter")
    if a == 0 and b == 0:
        raise DomainError(f"{name}{(a, b, _fmt(p), r, q)}: undefined for a = b = 0")


def _fmt(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def G(a: int, b: int, p, r: int, q: int) -> int:
    """Parking labelings of a pentagon whose slant drops r per unit width."""
    return _G(a, b, Fraction(p), r, q)


@lru_cache(maxsize=None)
def _G(a, b, p, r, q):
    _check_pentagon("G", a, b, p, r, q)
    if a == 0 or b == 0 or p >= b or q >= a:
        return (b + 1) ** a
    if a - q <= r:
        return sum(b ** (a - q + w) * _binom(a, q - w) for w in range(q + 1))
    fp = floor(p)
    total = sum((fp + 1) ** (a - w) * (b - fp) ** w * _binom(a, w) for w in range(q + 1))
    for t in range(q + 1, q + (b - fp - 1) * r + 1):
        xi = (t, b - fp - 1, b - fp - Fraction(t - q, r) - 1, r, q)
        try:
            sub = _G(*xi)
        except DomainError as exc:
            raise DomainError(f"G{(a, b, _fmt(p), r, q)} -> {exc}") from None
        total += (fp + 1) ** (a - t) * _binom(a, t) * sub
    return total


def E(a: int, b: int, p, r: int, q: int) -> int:
    """Integer-slope analogue of :func:`G` (slant drops 1 per r units of width)."""
    p = Fraction(p)
    if p.denominator != 1:
        raise DomainError(f"E{(a, b, _fmt(p), r, q)}: p must be an integer")
    return _E(a, b, int(p), r, q)


@lru_cache(maxsize=None)
def _E(a, b, p, r, q):
    _check_pentagon("E", a, b, p, r, q)
    if a == 0 or b == 0 or p >= b or q >= a:
        return (b + 1) ** a
    if a - q <= 1:
        return sum(b ** (a - q + w) * _binom(a, q - w) for w in range(q + 1))
    total = sum((p + 1) ** (a - w) * (b - p) ** w * _binom(a, w) for w in range(q + 1))
    for t in range(q + 1, a):
        xi = (t, b - p - 1, (a - t) * r - 1, r, q)
        try:
            sub = _E(*xi)
        except DomainError as exc:
            raise DomainError(f"E{(a, b, p, r, q)} -> {exc}") from None
        total += (p + 1) ** (a - t) * _binom(a, t) * sub
    return total


def brute_region(region: RegionPentagon) -> int:
    return sum(arrangements(seq) for seq in enumerate_region_paths(region))


def _region(cls, name, args, orientation, **extra):
    try:
        return cls(*args, orientation=orientation, **extra)
    except ValueError as exc:
        raise DomainError(f"{name}{args}: {exc}") from None


def brute_G(a: int, b: int, p, r: int, q: int) -> int:
    return brute_region(_region(RegionPentagon, "brute_G", (a, b, Fraction(p), r, q), Mode.UNITFRAC))


def brute_E(a: int, b: int, p, r: int, q: int) -> int:
    return brute_region(_region(RegionPentagon, "brute_E", (a, b, Fraction(p), r, q), Mode.INTEGER))


def pentagons(max_a: int, max_b: int, r: int, orientation=Mode.UNITFRAC) -> Iterator[Tuple]:
    """All valid pentagon parameter tuples (a, b, p, r, q) within the bounds."""
    for a in range(max_a + 1):
        for b in range(max_b + 1):
            if a == 0 and b == 0:
                continue
            for q in range(a + 1):
                if orientation is Mode.UNITFRAC:
                    p = b - Fraction(a - q, r)
                else:
                    p = Fraction(b - r * (a - q))
                if p >= 0:
                    yield (a, b, p, r, q)


# --------------------------------------------------------------------------
# Hexagons


class _Depth:
    chain: list = []


def H(a: int, b: int, p, r: int, q: int, s: int, fallback: bool = False) -> int:
    """Parking labelings of a hexagon (pentagon cut by a lower slant through (0, s))."""
    _Depth.chain = []
    return _H(a, b, Fraction(p), r, q, s, fallback)


def _H(a, b, p, r, q, s, fallback):
    args = (a, b, _fmt(p), r, q, s)
    _Depth.chain.append(args)
    try:
        if len(_Depth.chain) > MAX_DEPTH:
            raise DomainError(f"H recursion depth cap {MAX_DEPTH} exceeded: {_Depth.chain[:3]} ...")
        return _H_cached(a, b, p, r, q, s, fallback)
    finally:
        _Depth.chain.pop()


@lru_cache(maxsize=None)
def _H_cached(a, b, p, r, q, s, fallback):
    if a == 0:
        return 1
    if b < 0:
        # no columns left for a nonempty sequence
        return 0
    if q < 0 or p < 0 or s < 0 or r < 1:
        raise DomainError(f"H{(a, b, _fmt(p), r, q, s)}: negative region parameter")
    fp = floor(p)
    lo = max(0, ceil_frac(s - p * r))
    hi = floor_frac(q + (b - fp - 1) * r)
    total = 0
    for i in range(lo, hi + 1):
        c = _binom(a, i)
        if not c:
            continue
        v = (a - i, fp, fp - max(Fraction(s - i, r), Fraction(0)), r, min(a - s, a - i))
        w = (i, b - fp - 1, p - fp + Fraction(a - i, r), r, min(i, q), i)
        if fallback and v[0] == 0 and v[1] == 0:
            left = 1
        else:
            try:
                left = G(*v)
            except DomainError as exc:
                raise DomainError(f"H{(a, b, _fmt(p), r, q, s)} -> {exc}") from None
        right = _H(*w, fallback)
        total += left * right * c
    return total


def brute_H(a: int, b: int, p, r: int, q: int, s: int) -> int:
    region = _region(RegionHexagon, "brute_H", (a, b, Fraction(p), r, q), Mode.UNITFRAC, s=s)
    return brute_region(region)


def hexagons(max_a: int, max_b: int, r: int) -> Iterator[Tuple]:
    for a, b, p, r_, q in pentagons(max_a, max_b, r):
        for s in range(a + 1):
            yield (a, b, p, r_, q, s)


# --------------------------------------------------------------------------
# Assembly over unit-fraction paths


def _require_divisible(d, r):
    if r < 1 or d % r:
        raise DomainError(f"r={r} must divide d={d}")


def _beta_ref(beta, i, k, mode: BetaIndexMode) -> int:
    if mode is BetaIndexMode.LITERAL:
        return beta[i - 1]
    return sum(beta[:k])


def _block_args(alpha, beta, i, k, r, mode):
    """Arguments (a, b, p, r, q) of block k, or None when a chi factor vanishes."""
    ak, bk = alpha[k - 1], beta[k - 1]
    ref = _beta_ref(beta, i, k, mode)
    qk = sum(alpha[:k]) - r * ref
    if not (ak or bk) or qk < 0:
        return None
    pk = min(Fraction(bk), Fraction(sum(alpha[:k - 1]), r) - ref)
    return (ak, bk, pk, r, qk)


def F(i: int, d: int, dr: int, r: int, variant: VariantConfig = DEFAULT_VARIANT) -> int:
    """Labelings of the unbarred lines split into ``i`` pentagons."""
    return _assemble_blocks(i, d, dr, r, variant, None)


def _assemble_blocks(i, d, dr, r, variant, h):
    if i < 0:
        raise DomainError(f"i={i} must be nonnegative")
    total = 0
    for alpha in compositions(d, i):
        for beta in compositions(dr, i):
            term = multinomial(alpha)
            for k in range(1, i + 1):
                args = _block_args(alpha, beta, i, k, r, variant.beta_index_mode)
                if args is None:
                    term = 0
                    break
                try:
                    if h is None:
                        term *= G(*args)
                    else:
                        s = min(h, sum(alpha[:k]))
                        term *= H(*args, s, fallback=variant.fallback)
                except DomainError as exc:
                    raise DomainError(f"alpha={alpha}, beta={beta}, k={k}: {exc}") from None
                if not term:
                    break
            total += term
    return total


def _assembly(n, d, r, variant, h):
    _require_divisible(d, r)
    if n < 0 or d > n * r:
        raise DomainError(f"need 0 <= d <= n r, got n={n}, d={d}, r={r}")
    dr = d // r
    groups = n - dr
    outer = multinomial([d] + [r] * groups)
    if variant.fallback and groups == 0:
        if n == 0:
            return outer
        if h is None:
            return outer * G(n * r, n, 0, r, 0)
        return outer * H(n * r, n, 0, r, 0, min(h, n * r), fallback=True)
    total = 0
    for i in range(0, d + dr + 1):
        weight = 1 if (variant.fallback and i == 0) else _binom(groups + 1, i + 1)
        if not weight:
            continue
        total += weight * _assemble_blocks(i, d, dr, r, variant, h)
    return outer * total


def psch(n: int, d: int, r: int, variant: VariantConfig = DEFAULT_VARIANT) -> int:
    """Parking functions on unit-fraction paths, assembled from pentagon counts."""
    return _assembly(n, d, r, variant, None)


def chsch(n: int, d: int, r: int, h: int, variant: VariantConfig = DEFAULT_VARIANT) -> int:
    """Constrained analogue of :func:`psch`, assembled from hexagon counts."""
    return _assembly(n, d, r, variant, h)


def oracle_blocks(n: int, d: int, r: int, h=None) -> dict:
    """Split the brute parking count of a unit-fraction family by the number of
    non-diagonal blocks: ``{i: sum of unbarred-entry rearrangements}``.

    Multiplying the total by the bar-group multinomial gives the full count.
    """
    spec = PathSpec(n, d, r, Mode.UNITFRAC, h)
    out: dict = {}
    for path in enumerate_paths(spec):
        blocks = sum(1 for part in path.steps.split(DIAG) if part)
        unbarred = [v for v, bar in path.code.entries if not bar]
        out[blocks] = out.get(blocks, 0) + arrangements(unbarred)
    return out
