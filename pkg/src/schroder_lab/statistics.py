"""Area and diagonal-inversion statistics on integer-slope paths.

Every dinv variant compares per-line values ``v_i`` of a code. Two readings of
``v`` are available through :class:`Interpretation`:

* ``LEFT_AREA``: the code value itself (cells left of the path);
* ``LINE_AREA``: ``r*(i-1) - a_i``, the cells between path and boundary.

``DEFAULT_INTERPRETATION`` is the one that satisfies the q,1/q identity for
r = 1 (see :func:`schroder_lab.verifier.validate_interpretation`).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .lattice import AreaCode, LatticePath, Mode


class Interpretation(str, enum.Enum):
    LEFT_AREA = "leftarea"
    LINE_AREA = "linearea"


class DinvVariant(str, enum.Enum):
    SCHRODER_R1 = "schroder"
    HAIMAN = "haiman"
    PROPOSED_D1 = "proposed"


DEFAULT_INTERPRETATION = Interpretation.LINE_AREA


class StatisticUndefined(ValueError):
    pass


@dataclass(frozen=True)
class StatRecord:
    area_lines: Tuple[int, ...]
    area: int
    dinv: int
    variant: DinvVariant
    interpretation: Interpretation

    def to_json(self) -> dict:
        return {
            "area": self.area,
            "dinv": self.dinv,
            "variant": self.variant.value,
            "interpretation": self.interpretation.value,
        }


def _code(obj: Union[AreaCode, LatticePath]) -> AreaCode:
    code = obj.code if isinstance(obj, LatticePath) else obj
    if code.spec.mode is not Mode.INTEGER:
        raise StatisticUndefined("statistics are only defined for integer-slope paths")
    return code


def area_lines(obj: Union[AreaCode, LatticePath]) -> Tuple[int, ...]:
    code = _code(obj)
    r = code.spec.r
    return tuple(r * i - v for i, (v, _) in enumerate(code.entries))


def area(obj) -> int:
    return sum(area_lines(obj))


def line_values(code: AreaCode, interpretation: Interpretation) -> Tuple[int, ...]:
    if Interpretation(interpretation) is Interpretation.LEFT_AREA:
        return code.values
    return area_lines(code)


def _pairs(code: AreaCode, interpretation):
    v = line_values(code, interpretation)
    bars = code.bars
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n):
            yield v[i], bars[i], v[j], bars[j]


def dinv_schroder_r1(obj, interpretation=DEFAULT_INTERPRETATION) -> int:
    code = _code(obj)
    if code.spec.r != 1:
        raise StatisticUndefined(f"Schroder dinv needs r = 1, got r = {code.spec.r}")
    return sum(
        1
        for vi, bi, vj, bj in _pairs(code, interpretation)
        if (not bi and vi == vj) or (not bj and vi == vj + 1)
    )


def haiman_weight(delta: int, r: int) -> int:
    if 1 <= delta <= r:
        return r - delta + 1
    if -r + 1 <= delta <= 0:
        return r + delta
    return 0


def dinv_haiman(obj, interpretation=DEFAULT_INTERPRETATION) -> int:
    code = _code(obj)
    spec = code.spec
    if spec.d != spec.n:
        raise StatisticUndefined("Haiman dinv is defined on r-Dyck paths (d = n) only")
    return sum(haiman_weight(vi - vj, spec.r) for vi, _, vj, _ in _pairs(code, interpretation))


def dinv_proposed_d1(obj, interpretation=DEFAULT_INTERPRETATION) -> int:
    # only (unbarred, barred, equal value) pairs weigh 1; the other listed cases weigh 0
    code = _code(obj)
    if code.spec.d != 1:
        raise StatisticUndefined("the proposed d = 1 dinv needs exactly one down step")
    return sum(1 for vi, bi, vj, bj in _pairs(code, interpretation) if not bi and bj and vi == vj)


DINV = {
    DinvVariant.SCHRODER_R1: dinv_schroder_r1,
    DinvVariant.HAIMAN: dinv_haiman,
    DinvVariant.PROPOSED_D1: dinv_proposed_d1,
}


def dinv(obj, variant, interpretation=DEFAULT_INTERPRETATION) -> int:
    return DINV[DinvVariant(variant)](obj, interpretation)


def applicable_variant(spec) -> DinvVariant:
    """Pick the dinv variant defined for a family, preferring Haiman on r-Dyck."""
    if spec.mode is not Mode.INTEGER:
        raise StatisticUndefined("no statistic on unit-fraction paths")
    if spec.d == spec.n:
        return DinvVariant.HAIMAN
    if spec.r == 1:
        return DinvVariant.SCHRODER_R1
    if spec.d == 1:
        return DinvVariant.PROPOSED_D1
    raise StatisticUndefined(f"no dinv variant covers r={spec.r}, d={spec.d}")


def stat_record(obj, variant=None, interpretation=DEFAULT_INTERPRETATION) -> StatRecord:
    code = _code(obj)
    variant = applicable_variant(code.spec) if variant is None else DinvVariant(variant)
    lines = area_lines(code)
    return StatRecord(
        area_lines=lines,
        area=sum(lines),
        dinv=dinv(code, variant, interpretation),
        variant=variant,
        interpretation=Interpretation(interpretation),
    )


def multiset(values: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted(values))
