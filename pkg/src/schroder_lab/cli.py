"""Command-line front door.

Usage errors exit 2, failing build-breaking checks exit 1, everything else 0.
Output is deterministic; the table format starts with a ``#`` header echoing
the active defaults, the jsonl and csv formats carry no header.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from ._util import format_rational, parse_rational
from .counting import count_parking_closed, count_schroder, gen_poly
from .lattice import Mode, PathSpec, count_paths, enumerate_paths, format_code, parse_code
from .parking import brute_count_parking, is_parking, parking_set
from .recursions import (BetaIndexMode, DegenerateMode, DomainError, VariantConfig, E, F, G, H,
                         chsch, psch)
from .statistics import (DEFAULT_INTERPRETATION, DinvVariant, Interpretation,
                         StatisticUndefined, applicable_variant, stat_record)
from .verifier import GROUPS, exit_code, run_group, summary_table

DEFAULT_MAX_ITEMS = 100_000


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


@dataclass
class RunConfig:
    args: argparse.Namespace
    out: io.TextIOBase

    @property
    def variant_config(self) -> VariantConfig:
        return VariantConfig(BetaIndexMode(self.args.beta_mode), DegenerateMode(self.args.degenerate_mode))

    def header(self) -> str:
        v = self.variant_config
        return (f"# interpretation={self.args.interpretation} beta_index_mode={v.beta_index_mode.value}"
                f" psch_degenerate_mode={v.psch_degenerate_mode.value}")


# ---------------------------------------------------------------- parser

def _common(p: argparse.ArgumentParser, *, family=True):
    if family:
        p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.INTEGER.value)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--d", type=int, default=None)
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--h", type=int, default=None)
    p.add_argument("--variant", default="auto",
                   choices=["auto"] + [v.value for v in DinvVariant])
    p.add_argument("--interpretation", choices=[i.value for i in Interpretation],
                   default=DEFAULT_INTERPRETATION.value)
    p.add_argument("--beta-mode", choices=[b.value for b in BetaIndexMode],
                   default=BetaIndexMode.PARTIAL_SUM.value)
    p.add_argument("--degenerate-mode", choices=[d.value for d in DegenerateMode],
                   default=DegenerateMode.LITERAL.value)
    p.add_argument("--format", choices=["jsonl", "csv", "table"], default="jsonl")
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    p.add_argument("--max-items", type=int, default=DEFAULT_MAX_ITEMS,
                   help="refuse to enumerate more objects than this")
    p.add_argument("--max-n", type=int, default=None, help="override the size bound of verify sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schroder-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("enumerate", help="list every path of a family"))

    count = sub.add_parser("count", help="count a family").add_subparsers(dest="how", required=True)
    for how in ("closed", "brute"):
        p = count.add_parser(how)
        _common(p)
        p.add_argument("--object", choices=["paths", "parking"], default="paths")

    stats = sub.add_parser("stats", help="area and dinv per path")
    _common(stats)
    stats.add_argument("--summary", action="store_true", help="print only the q,t generating polynomial")

    parking = sub.add_parser("parking").add_subparsers(dest="action", required=True)
    for action in ("count", "list", "factor"):
        p = parking.add_parser(action)
        _common(p)
        if action == "factor":
            p.add_argument("--seq", required=True, help='comma-separated entries, "~" marks a bar')

    formula = sub.add_parser("formula").add_subparsers(dest="name", required=True)
    for name in ("G", "E", "H"):
        p = formula.add_parser(name)
        _common(p, family=False)
        for flag in ("a", "b", "r", "q"):
            p.add_argument(f"--{flag}", type=int, required=True)
        p.add_argument("--p", type=str, required=True, help='rational "num/den"')
        if name == "H":
            p.add_argument("--s", type=int, required=True)
    p = formula.add_parser("F")
    _common(p, family=False)
    for flag in ("i", "d", "dr", "r"):
        p.add_argument(f"--{flag}", type=int, required=True)
    for name in ("psch", "chsch"):
        p = formula.add_parser(name)
        _common(p)

    verify = sub.add_parser("verify")
    verify.add_argument("group", choices=["all"] + list(GROUPS))
    _common(verify, family=False)
    return parser


# ---------------------------------------------------------------- helpers

def _require(args, *flags):
    for flag in flags:
        if getattr(args, flag) is None:
            raise UsageError(f"--{flag}", "required for this command")


def _spec(args) -> PathSpec:
    _require(args, "n", "d")
    if args.n < 0:
        raise UsageError("--n", f"must be nonnegative, got {args.n}")
    if args.r < 1:
        raise UsageError("--r", f"must be positive, got {args.r}")
    height = args.n if args.mode == Mode.INTEGER.value else args.n * args.r
    if not 0 <= args.d <= height:
        raise UsageError("--d", f"must lie in 0..{height}, got {args.d}")
    if args.h is not None and not 0 <= args.h <= height:
        raise UsageError("--h", f"must lie in 0..{height}, got {args.h}")
    return PathSpec(args.n, args.d, args.r, Mode(args.mode), args.h)


def _guard(items: Iterable, args, what: str) -> list:
    out = []
    for x in items:
        out.append(x)
        if len(out) > args.max_items:
            raise UsageError("--max-items", f"more than {args.max_items} {what}; raise the guard")
    return out


def _emit(cfg: RunConfig, rows: Sequence[dict], columns: Sequence[str]):
    fmt = cfg.args.format
    if fmt == "jsonl":
        for row in rows:
            cfg.out.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        w = csv.writer(cfg.out, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_cell(row.get(c)) for c in columns])
    else:
        cfg.out.write(cfg.header() + "\n")
        table = [list(columns)] + [[_cell(row.get(c)) for c in columns] for row in rows]
        widths = [max(len(r[k]) for r in table) for k in range(len(columns))]
        for r in table:
            cfg.out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (list, tuple)):
        return " ".join(str(v) for v in x)
    return str(x)


def _scalar(cfg: RunConfig, name: str, value: int, params: dict):
    """A single count: bare decimal in jsonl/table (with header), one row in csv."""
    fmt = cfg.args.format
    if fmt == "csv":
        _emit(cfg, [dict(params, quantity=name, value=str(value))], list(params) + ["quantity", "value"])
        return
    if fmt == "table":
        cfg.out.write(cfg.header() + "\n")
    cfg.out.write(f"{value}\n")


# ---------------------------------------------------------------- commands

def cmd_enumerate(cfg: RunConfig) -> int:
    spec = _spec(cfg.args)
    paths = _guard(enumerate_paths(spec), cfg.args, "paths")
    rows = [{"steps": p.steps, "code": format_code(p.code.entries)} for p in paths]
    _emit(cfg, rows, ["steps", "code"])
    return 0


def _unitfrac_down(spec: PathSpec) -> Optional[int]:
    return None if spec.is_empty_family else spec.d // spec.r


def cmd_count(cfg: RunConfig) -> int:
    args = cfg.args
    spec = _spec(args)
    params = spec.to_dict()
    if args.how == "closed":
        if spec.h is not None:
            raise UsageError("--h", "no closed form for constrained families; use 'count brute'")
        d = spec.d if spec.mode is Mode.INTEGER else _unitfrac_down(spec)
        if d is None:
            value = 0
        elif args.object == "paths":
            value = count_schroder(spec.n, d, spec.r)
        else:
            if spec.mode is Mode.UNITFRAC:
                raise UsageError("--mode", "the parking closed form is for integer slopes")
            value = count_parking_closed(spec.n, d, spec.r)
    else:
        value = count_paths(spec) if args.object == "paths" else brute_count_parking(spec)
    _scalar(cfg, args.object, value, params)
    return 0


def _variant(args):
    return None if args.variant == "auto" else DinvVariant(args.variant)


def cmd_stats(cfg: RunConfig) -> int:
    args = cfg.args
    spec = _spec(args)
    if spec.mode is not Mode.INTEGER:
        raise UsageError("--mode", "statistics are only defined for integer slopes")
    variant = _variant(args)
    try:
        if args.summary:
            _guard(enumerate_paths(spec), args, "paths")
            if variant is None:
                variant = applicable_variant(spec)
            poly = gen_poly(spec, variant, Interpretation(args.interpretation))
            rows = [{"area": a, "dinv": t, "count": str(c)} for (a, t), c in sorted(poly.coeffs.items())]
            _emit(cfg, rows, ["area", "dinv", "count"])
            return 0
        paths = _guard(enumerate_paths(spec), args, "paths")
        rows = []
        for p in paths:
            rec = stat_record(p, variant, Interpretation(args.interpretation))
            rows.append(dict(rec.to_json(), steps=p.steps, code=format_code(p.code.entries)))
    except StatisticUndefined as exc:
        raise UsageError("--variant", str(exc))
    _emit(cfg, rows, ["steps", "code", "area", "dinv", "variant", "interpretation"])
    return 0


def cmd_parking(cfg: RunConfig) -> int:
    args = cfg.args
    spec = _spec(args)
    if args.action == "count":
        _scalar(cfg, "parking", brute_count_parking(spec), spec.to_dict())
        return 0
    if args.action == "list":
        def gen():
            for path in enumerate_paths(spec):
                for pf in parking_set(path):
                    yield path, pf
        rows = [{"seq": format_code(pf.entries), "code": format_code(path.code.entries)}
                for path, pf in _guard(gen(), args, "parking functions")]
        _emit(cfg, rows, ["seq", "code"])
        return 0
    try:
        seq = parse_code(args.seq)
    except ValueError as exc:
        raise UsageError("--seq", str(exc))
    if len(seq) != spec.height:
        raise UsageError("--seq", f"needs {spec.height} entries, got {len(seq)}")
    fact = is_parking(seq, spec)
    if fact is None:
        _emit(cfg, [{"seq": format_code(seq), "parking": False}], ["seq", "parking"])
        return 1
    row = {"seq": format_code(seq), "parking": True, "steps": fact.path.steps,
           "code": format_code(fact.path.code.entries), "sigma": "".join(map(str, fact.sigma))
           if len(fact.sigma) < 10 else list(fact.sigma)}
    _emit(cfg, [row], ["seq", "parking", "steps", "code", "sigma"])
    return 0


def cmd_formula(cfg: RunConfig) -> int:
    args = cfg.args
    name = args.name
    variant = cfg.variant_config
    try:
        if name in ("G", "E", "H"):
            try:
                p = parse_rational(args.p)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError("--p", f"expected a rational num/den: {exc}")
            params = {"a": args.a, "b": args.b, "p": format_rational(p), "r": args.r, "q": args.q}
            if name == "G":
                value = G(args.a, args.b, p, args.r, args.q)
            elif name == "E":
                value = E(args.a, args.b, p, args.r, args.q)
            else:
                params["s"] = args.s
                value = H(args.a, args.b, p, args.r, args.q, args.s, fallback=variant.fallback)
        elif name == "F":
            params = {"i": args.i, "d": args.d, "dr": args.dr, "r": args.r}
            value = F(args.i, args.d, args.dr, args.r, variant)
        else:
            _require(args, "n", "d")
            params = {"n": args.n, "d": args.d, "r": args.r}
            if name == "psch":
                value = psch(args.n, args.d, args.r, variant)
            else:
                _require(args, "h")
                params["h"] = args.h
                value = chsch(args.n, args.d, args.r, args.h, variant)
    except (DomainError, ArithmeticError, ValueError) as exc:
        sys.stderr.write(f"{name}: {exc}\n")
        return 1
    _scalar(cfg, name, value, params)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.args.max_n is not None and cfg.args.max_n < 0:
        raise UsageError("--max-n", "must be nonnegative")
    reports = run_group(cfg.args.group, cfg.args.max_n)
    fmt = cfg.args.format
    if fmt == "jsonl":
        for rep in reports:
            cfg.out.write(rep.to_jsonl() + "\n")
    elif fmt == "csv":
        rows = [{"check": r.check, "status": r.status.value, "provenance": r.provenance,
                 "params": json.dumps(r.to_json()["params"], sort_keys=True, separators=(",", ":"))}
                for r in reports]
        _emit(cfg, rows, ["check", "status", "provenance", "params"])
    else:
        cfg.out.write(cfg.header() + "\n")
        cfg.out.write(summary_table(reports) + "\n")
    return exit_code(reports)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "stats": cmd_stats,
    "parking": cmd_parking,
    "formula": cmd_formula,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.max_items <= 0:
        parser.print_usage(sys.stderr)
        sys.stderr.write("error: --max-items: must be positive\n")
        return 2
    buf = io.StringIO()
    cfg = RunConfig(args, buf)
    try:
        code = COMMANDS[args.command](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return 2
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
