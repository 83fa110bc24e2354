"""Exhaustive checks of identities and concordance reports for the recursive
formulas.

Checks on identities that hold as theorems produce ``FAIL`` when violated.
Recursions that are only conjectured produce ``MISMATCH-REPORTED`` instead, so
a sweep over them never breaks the build.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ._util import format_rational
from .counting import count_parking_closed, count_schroder, count_fuss_catalan
from .lattice import Mode, PathSpec, count_paths, enumerate_paths, parse_code
from .parking import brute_count_parking, check_occupancy_property, is_parking, parking_set
from .qpoly import QPoly, q_binom, q_int
from .recursions import (DomainError, VariantConfig, E, F, G, H, brute_E, brute_G,
                         brute_H, chsch, hexagons, oracle_blocks, pentagons, psch)
from .statistics import (DEFAULT_INTERPRETATION, Interpretation, area, dinv_haiman,
                         dinv_proposed_d1, dinv_schroder_r1)


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    MISMATCH = "MISMATCH-REPORTED"
    SKIPPED = "SKIPPED"


@dataclass
class CheckReport:
    check: str
    params: Dict[str, Any]
    expected: Any
    provenance: str
    actual: Dict[str, Any]
    status: Status
    counterexample: Optional[Dict[str, Any]] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAIL

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "params": _jsonable(self.params, False),
            "expected": _jsonable(self.expected),
            "provenance": self.provenance,
            "actual": _jsonable(self.actual),
            "status": self.status.value,
        }
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        if self.notes:
            out["notes"] = _jsonable(self.notes, False)
        return out

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _jsonable(x, count_strings: bool = True):
    """Counts become decimal strings; parameters stay JSON numbers."""
    if isinstance(x, dict):
        return {str(k): _jsonable(v, count_strings and k != "params") for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v, count_strings) for v in x]
    if isinstance(x, QPoly):
        return str(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if count_strings else x
    return str(x)


# --------------------------------------------------------------------------
# The 0012 rearrangement table and the no-symmetric-dinv argument

AREAS_SCH_2_1_2 = (0, 0, 1, 2)

ANNEXE1_TABLE: Tuple[Tuple[Tuple[int, ...], QPoly, int], ...] = (
    ((0, 0, 1, 2), QPoly([4]), 0),
    ((0, 0, 2, 1), QPoly([1, 2, 1]), 1),
    ((0, 2, 1, 0), QPoly([1, 0, 2, 0, 1]), 2),
    ((0, 2, 0, 1), QPoly([1, 0, 1, 2]), 2),
    ((0, 1, 2, 0), QPoly([2, 1, 0, 1]), 1),
    ((0, 1, 0, 2), QPoly([1, 2, 1]), 1),
    ((2, 0, 1, 0), QPoly([1, 0, 2, 0, 1]), 2),
    ((2, 1, 0, 0), QPoly([1, 1, 0, 1, 1]), 2),
    ((1, 0, 2, 0), QPoly([2, 1, 0, 1]), 1),
    ((2, 0, 0, 1), QPoly([1, 0, 1, 2]), 2),
    ((1, 2, 0, 0), QPoly([1, 1, 0, 1, 1]), 2),
    ((1, 0, 0, 2), QPoly([1, 2, 1]), 1),
)


def normalized_row(areas: Sequence[int], labels: Sequence[int]) -> Tuple[QPoly, int]:
    """``q^w * sum q^(area_i - label_i)`` with ``w`` shifting the lowest term to q^0."""
    poly = QPoly()
    for a, p in zip(areas, labels):
        poly = poly + QPoly.monomial(a - p)
    w = -poly.min_exp()
    return poly.shift(w), w


def annexe1() -> CheckReport:
    target = q_int(4)
    dyck = PathSpec(4, 4, 1)
    path = next(p for p in enumerate_paths(dyck) if p.code.values == (0, 0, 1, 2))
    computed = {}
    for pf in parking_set(path):
        labels = tuple(v for v, _ in pf.entries)
        computed[labels] = normalized_row(AREAS_SCH_2_1_2, labels)
    rows = []
    bad = None
    for labels, poly, w in ANNEXE1_TABLE:
        got = computed.get(labels)
        row_ok = got is not None and got == (poly, w)
        rows.append({"P": list(labels), "poly": got[0] if got else None,
                     "w": got[1] if got else None, "ok": row_ok})
        if not row_ok and bad is None:
            bad = {"P": list(labels), "expected_poly": poly, "expected_w": w}
    hits = [r["P"] for r in rows if r["poly"] == target]
    covered = len(computed) == 12 and set(computed) == {t[0] for t in ANNEXE1_TABLE}
    passed = bad is None and not hits and covered
    return CheckReport(
        check="annexe1",
        params={"code": "0012", "areas": list(AREAS_SCH_2_1_2)},
        expected={"rows": 12, "equal_to_[4]_q": 0},
        provenance="PUBLISHED",
        actual={"rows": rows, "equal_to_[4]_q": hits, "rearrangements": len(computed)},
        status=Status.PASS if passed else Status.FAIL,
        counterexample=bad,
    )


def check_no_symmetric_dinv() -> CheckReport:
    spec = PathSpec(2, 1, 2)
    areas = tuple(sorted(area(p) for p in enumerate_paths(spec)))
    target = q_int(4)
    dyck_path = next(p for p in enumerate_paths(PathSpec(4, 4, 1)) if p.code.values == (0, 0, 1, 2))
    assignments = [tuple(v for v, _ in pf.entries) for pf in parking_set(dyck_path)]
    # every exponent area - dinv lies in [lo, hi]; a shift w outside
    # [-hi, deg - lo] cannot place the support inside [0, deg]
    deg = target.degree()
    lo = min(areas) - max(max(a) for a in assignments)
    hi = max(areas) - min(min(a) for a in assignments)
    w_range = range(-hi, deg - lo + 1)
    witnesses = []
    checked = 0
    for labels in assignments:
        base = QPoly()
        for a, p in zip(areas, labels):
            base = base + QPoly.monomial(a - p)
        for w in w_range:
            checked += 1
            if base.shift(w) == target:
                witnesses.append({"dinv": list(labels), "w": w})
    expected_cover = 12 * len(w_range)
    ok = areas == AREAS_SCH_2_1_2 and not witnesses and checked == expected_cover == len(assignments) * len(w_range)
    return CheckReport(
        check="symmetry",
        params={"family": spec.to_dict(), "w_range": [w_range.start, w_range.stop - 1]},
        expected={"area_multiset": list(AREAS_SCH_2_1_2), "witnesses": 0, "coverage": expected_cover},
        provenance="PUBLISHED",
        actual={"area_multiset": list(areas), "witnesses": witnesses,
                "assignments": len(assignments), "coverage": checked},
        status=Status.PASS if ok else Status.FAIL,
        counterexample=witnesses[0] if witnesses else None,
    )


# --------------------------------------------------------------------------
# q-identities and statistics


def q_identity_rhs(n: int, d: int, r: int = 1) -> QPoly:
    return (q_binom(n, d) * q_binom(d * r + n, n)).exact_div(q_int(d * r + 1))


def q_identity_lhs(n: int, d: int, interpretation) -> QPoly:
    total = QPoly()
    for path in enumerate_paths(PathSpec(n, d, 1)):
        total = total + QPoly.monomial(area(path) - dinv_schroder_r1(path, interpretation))
    return total.shift(comb(n, 2) - comb(n - d, 2))


def check_q_identity(n: int, d: int) -> CheckReport:
    rhs = q_identity_rhs(n, d)
    actual = {}
    passing = []
    for interp in Interpretation:
        lhs = q_identity_lhs(n, d, interp)
        actual[interp.value] = lhs
        if lhs == rhs:
            passing.append(interp.value)
    return CheckReport(
        check="qidentity",
        params={"n": n, "d": d, "r": 1, "w": comb(n, 2) - comb(n - d, 2)},
        expected=rhs,
        provenance="PUBLISHED (cited result)",
        actual=actual,
        status=Status.PASS if passing else Status.FAIL,
        counterexample=None if passing else {"n": n, "d": d},
        notes={"passing_interpretations": passing},
    )


def validate_interpretation(max_n: int = 5) -> Tuple[Optional[Interpretation], List[CheckReport]]:
    """The interpretation that satisfies the q,1/q identity for every n <= max_n."""
    reports = [check_q_identity(n, d) for n in range(max_n + 1) for d in range(n + 1)]
    stable = [i for i in Interpretation
              if all(i.value in rep.notes["passing_interpretations"] for rep in reports)]
    return (stable[0] if stable else None), reports


def check_haiman(n: int, r: int, interpretation=DEFAULT_INTERPRETATION) -> CheckReport:
    paths = list(enumerate_paths(PathSpec(n, n, r)))
    areas = sorted(area(p) for p in paths)
    dinvs = sorted(dinv_haiman(p, interpretation) for p in paths)
    ok = areas == dinvs
    return CheckReport(
        check="haiman",
        params={"n": n, "r": r, "interpretation": Interpretation(interpretation).value},
        expected={"area_multiset": areas},
        provenance="PUBLISHED (cited result)",
        actual={"dinv_multiset": dinvs},
        status=Status.PASS if ok else Status.FAIL,
        counterexample=None if ok else {"n": n, "r": r},
    )


def proposed_d1_witness(max_n: int = 4, max_r: int = 3, interpretation=DEFAULT_INTERPRETATION) -> CheckReport:
    """Find a family Sch_{n,1}^r where area and the proposed dinv are not equidistributed."""
    scanned = []
    witness = None
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            paths = list(enumerate_paths(PathSpec(n, 1, r)))
            by_area = QPoly()
            by_dinv = QPoly()
            for p in paths:
                by_area = by_area + QPoly.monomial(area(p))
                by_dinv = by_dinv + QPoly.monomial(dinv_proposed_d1(p, interpretation))
            differs = by_area != by_dinv
            scanned.append({"n": n, "r": r, "differs": differs})
            if differs and witness is None:
                witness = {"n": n, "r": r, "sum_q_area": by_area, "sum_q_dinv": by_dinv}
    return CheckReport(
        check="proposed_d1",
        params={"max_n": max_n, "max_r": max_r,
                "interpretation": Interpretation(interpretation).value},
        expected="some (n, r) with sum q^area != sum q^dinv",
        provenance="PUBLISHED",
        actual={"scanned": scanned},
        status=Status.PASS if witness else Status.FAIL,
        counterexample=witness,
    )


# --------------------------------------------------------------------------
# Concordance sweeps


def _compare(check, params, oracle, values, breaking, provenance="ORACLE") -> CheckReport:
    agree = {k: (v == oracle) for k, v in values.items()}
    if all(agree.values()):
        status = Status.PASS
    else:
        status = Status.FAIL if breaking else Status.MISMATCH
    return CheckReport(
        check=check,
        params=params,
        expected=oracle,
        provenance=provenance,
        actual=values,
        status=status,
        counterexample=None if status is Status.PASS else dict(params),
        notes={"agree": agree},
    )


def _safe(fn: Callable, *args, **kw):
    try:
        return fn(*args, **kw)
    except (DomainError, ArithmeticError) as exc:
        return f"error: {exc}"


def _variant_key(v: VariantConfig) -> str:
    return f"{v.beta_index_mode.value}/{v.psch_degenerate_mode.value}"


def _pent_params(t):
    a, b, p, r, q = t[:5]
    out = {"a": a, "b": b, "p": p, "r": r, "q": q}
    if len(t) > 5:
        out["s"] = t[5]
    return out


def _sweep_schroder_closed(max_n=6, rs=(1, 2, 3), **_):
    for r in rs:
        for n in range(max_n + 1):
            for d in range(n + 1):
                yield _compare("schroder_closed", {"n": n, "d": d, "r": r},
                               count_paths(PathSpec(n, d, r)),
                               {"closed": count_schroder(n, d, r)}, breaking=True)


def _sweep_fuss_catalan(max_n=8, max_r=4, **_):
    for r in range(1, max_r + 1):
        for n in range(max_n + 1):
            expected = comb(n * r + n, n) // (n * r + 1)
            yield _compare("fuss_catalan", {"n": n, "r": r}, expected,
                           {"schroder": count_schroder(n, n, r), "fuss": count_fuss_catalan(n, r)},
                           breaking=True, provenance="PUBLISHED")


def _sweep_parking_closed(max_n=4, rs=(1, 2), **_):
    for r in rs:
        for n in range(max_n + 1):
            for d in range(n + 1):
                yield _compare("parking_closed", {"n": n, "d": d, "r": r},
                               brute_count_parking(PathSpec(n, d, r)),
                               {"closed": _safe(count_parking_closed, n, d, r)}, breaking=True)


def _sweep_g(max_a=5, max_b=5, rs=(1, 2, 3), tier=1, **_):
    for r in rs:
        for t in pentagons(max_a, max_b, r):
            a, b, p, _, q = t
            simple = a == 0 or b == 0 or p == b or a - q <= r
            if tier == 1 and not simple:
                continue
            yield _compare(f"G_tier{tier}", _pent_params(t), brute_G(*t),
                           {"G": _safe(G, *t)}, breaking=(tier == 1))


def _sweep_e(max_a=4, max_b=4, rs=(1, 2), **_):
    for r in rs:
        for t in pentagons(max_a, max_b, r, Mode.INTEGER):
            yield _compare("E", _pent_params(t), brute_E(*t), {"E": _safe(E, *t)}, breaking=False)


def _sweep_h(max_a=3, max_b=3, rs=(1, 2), **_):
    for r in rs:
        for t in hexagons(max_a, max_b, r):
            yield _compare("H", _pent_params(t), brute_H(*t),
                           {"literal": _safe(H, *t), "fallback": _safe(H, *t, fallback=True)},
                           breaking=False)
        for t in pentagons(max_a, max_b, r):
            yield _compare("H_s0_vs_G", _pent_params(t), G(*t),
                           {"literal": _safe(H, *t, 0), "fallback": _safe(H, *t, 0, fallback=True)},
                           breaking=False, provenance="G")


def _unitfrac_families(max_n, rs):
    for r in rs:
        for n in range(1, max_n + 1):
            for d in range(0, n * r + 1, r):
                yield n, d, r


def _sweep_f(max_n=3, rs=(1, 2), variants=None, **_):
    variants = variants or VariantConfig.all()
    betas = sorted({v.beta_index_mode for v in variants}, key=lambda m: m.value)
    for n, d, r in _unitfrac_families(max_n, rs):
        blocks = oracle_blocks(n, d, r)
        groups = n - d // r
        for i in range(0, d + d // r + 1):
            values = {}
            for mode in betas:
                fi = _safe(F, i, d, d // r, r, VariantConfig(mode))
                values[mode.value] = fi if isinstance(fi, str) else comb(groups + 1, i + 1) * fi
            yield _compare("F", {"n": n, "d": d, "r": r, "i": i}, blocks.get(i, 0), values,
                           breaking=False, provenance="ORACLE (blocks)")


def _sweep_psch(max_n=3, rs=(1, 2), variants=None, max_items=200_000, **_):
    variants = variants or VariantConfig.all()
    for n, d, r in _unitfrac_families(max_n, rs):
        params = {"n": n, "d": d, "r": r}
        if count_schroder(n, d // r, r) > max_items:
            yield CheckReport("psch", params, None, "ORACLE", {}, Status.SKIPPED)
            continue
        oracle = brute_count_parking(PathSpec(n, d, r, Mode.UNITFRAC))
        values = {_variant_key(v): _safe(psch, n, d, r, v) for v in variants}
        yield _compare("psch", params, oracle, values, breaking=False)


def _sweep_chsch(max_n=3, rs=(1, 2), variants=None, max_items=200_000, **_):
    variants = variants or VariantConfig.all()
    for n, d, r in _unitfrac_families(max_n, rs):
        for h in range(0, n * r + 1):
            params = {"n": n, "d": d, "r": r, "h": h}
            if count_schroder(n, d // r, r) > max_items:
                yield CheckReport("chsch", params, None, "ORACLE", {}, Status.SKIPPED)
                continue
            oracle = brute_count_parking(PathSpec(n, d, r, Mode.UNITFRAC, h))
            values = {_variant_key(v): _safe(chsch, n, d, r, h, v) for v in variants}
            if h == n * r:
                values.update({"vs_psch:" + _variant_key(v): _safe(psch, n, d, r, v) for v in variants})
            yield _compare("chsch", params, oracle, values, breaking=False)


SWEEPS = {
    "schroder_closed": _sweep_schroder_closed,
    "fuss_catalan": _sweep_fuss_catalan,
    "parking_closed": _sweep_parking_closed,
    "G": _sweep_g,
    "E": _sweep_e,
    "H": _sweep_h,
    "F": _sweep_f,
    "psch": _sweep_psch,
    "chsch": _sweep_chsch,
}


def _size(params) -> tuple:
    vals = [v for v in params.values() if isinstance(v, int)]
    return (sum(vals), tuple(vals))


def summarize(name: str, reports: Sequence[CheckReport]) -> CheckReport:
    """Per-variant agreement counts and the smallest counterexample per variant."""
    per_variant: Dict[str, Dict[str, int]] = {}
    minimal: Dict[str, Any] = {}
    statuses: Dict[str, int] = {}
    for rep in reports:
        statuses[rep.status.value] = statuses.get(rep.status.value, 0) + 1
        for key, ok in rep.notes.get("agree", {}).items():
            tally = per_variant.setdefault(key, {"agree": 0, "disagree": 0})
            tally["agree" if ok else "disagree"] += 1
            if not ok:
                best = minimal.get(key)
                if best is None or _size(rep.params) < _size(best["params"]):
                    minimal[key] = {"params": rep.params, "expected": rep.expected,
                                    "actual": rep.actual[key]}
    if statuses.get(Status.FAIL.value):
        status = Status.FAIL
    elif statuses.get(Status.MISMATCH.value):
        status = Status.MISMATCH
    else:
        status = Status.PASS
    return CheckReport(
        check=f"{name}_summary",
        params={"reports": len(reports)},
        expected=None,
        provenance="summary",
        actual={"statuses": statuses, "per_variant": per_variant},
        status=status,
        counterexample=minimal or None,
    )


def concordance(formula: str, **bounds) -> List[CheckReport]:
    """Run a sweep; the last element is the summary report."""
    if formula not in SWEEPS:
        raise KeyError(f"unknown formula {formula!r}; choose from {sorted(SWEEPS)}")
    reports = list(SWEEPS[formula](**bounds))
    return reports + [summarize(formula, reports)]


# --------------------------------------------------------------------------
# Named groups used by the command line


def verify_qidentity(max_n: int = 5) -> List[CheckReport]:
    chosen, reports = validate_interpretation(max_n)
    summary = CheckReport(
        check="qidentity_interpretation",
        params={"max_n": max_n},
        expected="one interpretation passing for every (n, d)",
        provenance="PUBLISHED (cited result)",
        actual={"validated": chosen.value if chosen else None,
                "default": DEFAULT_INTERPRETATION.value},
        status=Status.PASS if chosen is DEFAULT_INTERPRETATION else Status.FAIL,
    )
    return reports + [summary]


def verify_statistics(max_n: int = 4, max_r: int = 3) -> List[CheckReport]:
    out = [check_haiman(n, r) for r in range(1, max_r + 1) for n in range(1, max_n + 1)]
    out.append(proposed_d1_witness(max_n, max_r))
    return out


def check_occupancy(n: int, d: int, r: int) -> CheckReport:
    """Does "at most n - k entries equal k" characterize parking functions?

    Necessity: every parking function's values have the property.
    Sufficiency: every value sequence with the property parks for some choice
    of bars. Each direction is reported on its own; neither is build-breaking.
    """
    spec = PathSpec(n, d, r)
    necessary_fail = None
    for path in enumerate_paths(spec):
        for pf in parking_set(path):
            values = [v for v, _ in pf.entries]
            if not check_occupancy_property(values, n):
                necessary_fail = values
                break
        if necessary_fail:
            break
    sufficient_fail = None
    for values in product(range(spec.width + 1), repeat=n):
        if not check_occupancy_property(values, n):
            continue
        if not any(is_parking(list(zip(values, bars)), spec) for bars in product((False, True), repeat=n)):
            sufficient_fail = list(values)
            break
    holds = {"necessary": necessary_fail is None, "sufficient": sufficient_fail is None}
    return CheckReport(
        check="occupancy",
        params={"n": n, "d": d, "r": r},
        expected={"necessary": True, "sufficient": True},
        provenance="PUBLISHED (remark)",
        actual=holds,
        status=Status.PASS if all(holds.values()) else Status.MISMATCH,
        counterexample=None if all(holds.values()) else {
            "not_necessary": necessary_fail, "not_sufficient": sufficient_fail},
    )


def verify_occupancy(max_n: int = 4, rs=(1, 2)) -> List[CheckReport]:
    return [check_occupancy(n, d, r) for r in rs for n in range(1, max_n + 1) for d in range(n + 1)]


def _n(max_n):
    return {} if max_n is None else {"max_n": max_n}


def _ab(max_n):
    return {} if max_n is None else {"max_a": max_n, "max_b": max_n}


GROUPS: Dict[str, Callable[..., List[CheckReport]]] = {
    "annexe1": lambda max_n=None: [annexe1()],
    "symmetry": lambda max_n=None: [check_no_symmetric_dinv()],
    "qidentity": lambda max_n=None: verify_qidentity(**_n(max_n)),
    "statistics": lambda max_n=None: verify_statistics(**_n(max_n)),
    "counts": lambda max_n=None: concordance("schroder_closed", **_n(max_n)) + concordance("fuss_catalan", **_n(max_n)),
    "parking": lambda max_n=None: concordance("parking_closed", **_n(max_n)) + verify_occupancy(**_n(max_n)),
    "pentagon": lambda max_n=None: (
        concordance("G", tier=1, **_ab(max_n))
        + concordance("G", **dict({"max_a": 4, "max_b": 4}, **_ab(max_n)), rs=(1, 2), tier=2)
        + concordance("E", **_ab(max_n))),
    "psch": lambda max_n=None: concordance("F", **_n(max_n)) + concordance("psch", **_n(max_n)),
    "hexagon": lambda max_n=None: concordance("H", **_ab(max_n)),
    "chsch": lambda max_n=None: concordance("chsch", **_n(max_n)),
}


def run_group(name: str, max_n: Optional[int] = None) -> List[CheckReport]:
    """Run one group (or ``"all"``); ``max_n`` overrides the sweep size bound."""
    names = list(GROUPS) if name == "all" else [name]
    out: List[CheckReport] = []
    for key in names:
        out.extend(GROUPS[key](max_n))
    return out


def exit_code(reports: Iterable[CheckReport]) -> int:
    return 0 if all(r.ok for r in reports) else 1


def summary_table(reports: Sequence[CheckReport]) -> str:
    """One line per check name: counts by status."""
    rows: Dict[str, Dict[str, int]] = {}
    for rep in reports:
        rows.setdefault(rep.check, {})
        rows[rep.check][rep.status.value] = rows[rep.check].get(rep.status.value, 0) + 1
    cols = [s.value for s in Status]
    width = max([len("check")] + [len(k) for k in rows])
    lines = ["check".ljust(width) + "  " + "  ".join(c.rjust(len(c)) for c in cols)]
    for name, counts in rows.items():
        lines.append(name.ljust(width) + "  " + "  ".join(str(counts.get(c, 0)).rjust(len(c)) for c in cols))
    return "\n".join(lines)
