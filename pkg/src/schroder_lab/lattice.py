"""Lattice paths with down, right and diagonal steps.

Two families are supported:

* integer slope (``Mode.INTEGER``): from ``(0, n)`` to ``(r*n, 0)``, steps
  ``D=(0,-1)``, ``R=(1,0)``, ``G=(r,-1)``, staying weakly below the segment
  joining the endpoints;
* unit fraction (``Mode.UNITFRAC``): from ``(0, n*r)`` to ``(n, 0)``, steps
  ``D=(0,-1)``, ``R=(1,0)``, ``G=(1,-r)``.

A path is identified with its barred left-area code: one entry per horizontal
line (numbered from the top), holding the x-coordinate where the path crosses
that line, barred when the crossing step is diagonal.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple, Union

from ._util import ceil_frac, floor_frac


class Mode(str, enum.Enum):
    INTEGER = "integer"
    UNITFRAC = "unitfrac"


class InvalidCode(ValueError):
    """Raised when a sequence is not the area code of any path in the family."""


DOWN, RIGHT, DIAG = "D", "R", "G"
STEP_ORDER = (DOWN, RIGHT, DIAG)

Entry = Tuple[int, bool]


@dataclass(frozen=True)
class PathSpec:
    """Parameters of a path family.

    ``d`` is the number of down steps. ``h`` (optional) is the height of the
    constraint line below the start point, parallel to the main boundary.
    """

    n: int
    d: int
    r: int = 1
    mode: Mode = Mode.INTEGER
    h: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        if self.d < 0 or self.d > self.height:
            raise ValueError(f"d={self.d} out of range 0..{self.height}")
        if self.h is not None and not 0 <= self.h <= self.height:
            raise ValueError(f"h={self.h} out of range 0..{self.height}")

    @property
    def height(self) -> int:
        return self.n if self.mode is Mode.INTEGER else self.n * self.r

    @property
    def width(self) -> int:
        return self.r * self.n if self.mode is Mode.INTEGER else self.n

    @property
    def is_empty_family(self) -> bool:
        return self.mode is Mode.UNITFRAC and self.d % self.r != 0

    def step_counts(self) -> dict:
        """Multiset of steps as ``{step: count}``; empty dict for an empty family."""
        if self.mode is Mode.INTEGER:
            return {DOWN: self.d, RIGHT: self.r * self.d, DIAG: self.n - self.d}
        if self.is_empty_family:
            return {}
        return {DOWN: self.d, RIGHT: self.d // self.r, DIAG: self.n - self.d // self.r}

    def step_vector(self, step: str) -> Tuple[int, int]:
        if step == DOWN:
            return (0, -1)
        if step == RIGHT:
            return (1, 0)
        return (self.r, -1) if self.mode is Mode.INTEGER else (1, -self.r)

    def start(self) -> Tuple[int, int]:
        return (0, self.height)

    def end(self) -> Tuple[int, int]:
        return (self.width, 0)

    def inside(self, x: int, y: int) -> bool:
        """Whether the lattice point lies in the closed admissible region."""
        if x < 0 or y < 0:
            return False
        if self.mode is Mode.INTEGER:
            level, top = x + self.r * y, self.r * self.n
            floor_level = None if self.h is None else self.r * (self.n - self.h)
        else:
            level, top = self.r * x + y, self.n * self.r
            floor_level = None if self.h is None else self.n * self.r - self.h
        if level > top:
            return False
        return floor_level is None or level >= floor_level

    def to_dict(self) -> dict:
        return {"mode": self.mode.value, "n": self.n, "d": self.d, "r": self.r, "h": self.h}


@dataclass(frozen=True)
class AreaCode:
    entries: Tuple[Entry, ...]
    spec: PathSpec

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((int(v), bool(b)) for v, b in self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def bars(self) -> Tuple[bool, ...]:
        return tuple(b for _, b in self.entries)

    def __str__(self):
        return format_code(self.entries)

    def to_json(self) -> list:
        return [{"v": v, "bar": b} for v, b in self.entries]


@dataclass(frozen=True)
class LatticePath:
    spec: PathSpec
    steps: str
    _code: Optional[AreaCode] = field(default=None, compare=False, repr=False)

    def vertices(self) -> Iterator[Tuple[int, int]]:
        x, y = self.spec.start()
        yield x, y
        for s in self.steps:
            dx, dy = self.spec.step_vector(s)
            x, y = x + dx, y + dy
            yield x, y

    def is_valid(self) -> bool:
        return check_path(self.spec, self.steps) is None

    @property
    def code(self) -> AreaCode:
        if self._code is None:
            object.__setattr__(self, "_code", encode(self))
        return self._code

    def to_json(self) -> dict:
        return {"steps": self.steps, "code": self.code.to_json()}


def format_code(entries: Sequence[Entry]) -> str:
    """Render a code as ``0,0~,2,3,5~`` (``~`` marks a barred entry)."""
    return ",".join(f"{v}~" if b else str(v) for v, b in entries)


def parse_code(text: str) -> Tuple[Entry, ...]:
    """Inverse of :func:`format_code`; also accepts ``b`` as bar marker."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        barred = tok[-1] in "~b"
        out.append((int(tok.rstrip("~b")), barred))
    return tuple(out)


def canonical_key(entry: Entry) -> Tuple[int, int]:
    # unbarred before barred at equal value
    return (entry[0], 1 if entry[1] else 0)


def check_path(spec: PathSpec, steps: str) -> Optional[str]:
    """Return ``None`` if ``steps`` is a valid path of ``spec``, else a reason."""
    if spec.is_empty_family:
        return "empty family: r does not divide d"
    want = spec.step_counts()
    for s in STEP_ORDER:
        if steps.count(s) != want[s]:
            return f"expected {want[s]} steps {s}, got {steps.count(s)}"
    if len(steps) != sum(want.values()):
        return "unknown step letters"
    x, y = spec.start()
    if not spec.inside(x, y):
        return "start point violates the constraint line"
    for k, s in enumerate(steps):
        dx, dy = spec.step_vector(s)
        x, y = x + dx, y + dy
        # half-planes are convex: both endpoints inside => whole segment inside
        if not spec.inside(x, y):
            return f"step {k} ({s}) leaves the region at ({x},{y})"
    if (x, y) != spec.end():
        return f"ends at ({x},{y}) instead of {spec.end()}"
    return None


def enumerate_paths(spec: PathSpec) -> Iterator[LatticePath]:
    """Yield every path of the family in lexicographic step order D < R < G."""
    if spec.is_empty_family:
        return
    counts = spec.step_counts()
    remaining = [counts[s] for s in STEP_ORDER]
    vectors = [spec.step_vector(s) for s in STEP_ORDER]
    x0, y0 = spec.start()
    if not spec.inside(x0, y0):
        return
    prefix = []

    def rec(x, y):
        if not any(remaining):
            yield LatticePath(spec, "".join(prefix))
            return
        for k in range(3):
            if not remaining[k]:
                continue
            nx, ny = x + vectors[k][0], y + vectors[k][1]
            if not spec.inside(nx, ny):
                continue
            remaining[k] -= 1
            prefix.append(STEP_ORDER[k])
            yield from rec(nx, ny)
            prefix.pop()
            remaining[k] += 1

    yield from rec(x0, y0)


def count_paths(spec: PathSpec) -> int:
    return sum(1 for _ in enumerate_paths(spec))


def encode(path: LatticePath) -> AreaCode:
    spec = path.spec
    lines = 1 if spec.mode is Mode.INTEGER else spec.r
    x = 0
    entries = []
    for s in path.steps:
        if s == RIGHT:
            x += 1
        elif s == DOWN:
            entries.append((x, False))
        else:
            entries.extend([(x, True)] * lines)
            x += spec.r if spec.mode is Mode.INTEGER else 1
    return AreaCode(tuple(entries), spec)


def validate_code(entries: Sequence[Entry], spec: PathSpec) -> None:
    """Raise :class:`InvalidCode` naming the first violated constraint."""
    entries = [(int(v), bool(b)) for v, b in entries]
    if spec.is_empty_family:
        raise InvalidCode("empty family: r does not divide d")
    if len(entries) != spec.height:
        raise InvalidCode(f"length {len(entries)} != {spec.height}")
    r = spec.r
    integer = spec.mode is Mode.INTEGER
    n_bars = sum(b for _, b in entries)
    want_bars = spec.height - spec.d
    if n_bars != want_bars:
        raise InvalidCode(f"{n_bars} barred entries, expected {want_bars}")
    for i, (v, b) in enumerate(entries, start=1):
        if v < 0:
            raise InvalidCode(f"negative value at line {i}")
        bound = r * (i - 1) if integer else (i - 1) // r
        if v > bound:
            raise InvalidCode(f"bound exceeded at line {i}: {v} > {bound}")
        if i > 1:
            pv, pb = entries[i - 2]
            if v < pv:
                raise InvalidCode(f"non-monotone at line {i}: {v} < {pv}")
            if v == pv and pb and not b:
                raise InvalidCode(f"barred {pv} precedes unbarred {v} at line {i}")
    i = 0
    while i < len(entries):
        v, b = entries[i]
        if not b:
            i += 1
            continue
        run = 1 if integer else r
        block = entries[i:i + run]
        if len(block) < run or any(e != (v, True) for e in block):
            raise InvalidCode(f"bar run malformed at line {i + 1}: need {run} copies of {v}~")
        j = i + run
        step = r if integer else 1
        if j < len(entries) and entries[j][0] < v + step:
            raise InvalidCode(f"value after bar run at line {j + 1} must be >= {v + step}")
        i = j


def decode(code: Union[AreaCode, Sequence[Entry]], spec: Optional[PathSpec] = None) -> LatticePath:
    if isinstance(code, AreaCode):
        spec = code.spec if spec is None else spec
        entries = code.entries
    else:
        entries = tuple((int(v), bool(b)) for v, b in code)
    if spec is None:
        raise TypeError("decode needs a PathSpec for a bare entry sequence")
    validate_code(entries, spec)
    integer = spec.mode is Mode.INTEGER
    steps = []
    x = 0
    i = 0
    while i < len(entries):
        v, b = entries[i]
        steps.append(RIGHT * (v - x))
        x = v
        if b:
            steps.append(DIAG)
            x += spec.r if integer else 1
            i += 1 if integer else spec.r
        else:
            steps.append(DOWN)
            i += 1
    steps.append(RIGHT * (spec.width - x))
    path = LatticePath(spec, "".join(steps))
    reason = check_path(spec, path.steps)
    if reason is not None:
        raise InvalidCode(reason)
    return path


def paths_to_jsonl(paths) -> str:
    return "".join(json.dumps(p.to_json(), separators=(",", ":")) + "\n" for p in paths)


# --------------------------------------------------------------------------
# Regions between diagonal runs


def _as_frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RegionPentagon:
    """Pentagon with corners (0,0), (0,a), (p,a), (b,q), (b,0).

    The slanted edge from (p,a) to (b,q) drops ``r`` units per unit of width,
    i.e. ``(b - p) * r == a - q``. ``p == b`` and ``q == a`` is a rectangle.
    """

    a: int
    b: int
    p: Fraction
    r: int
    q: int
    orientation: Mode = Mode.UNITFRAC

    def __post_init__(self):
        object.__setattr__(self, "p", _as_frac(self.p))
        object.__setattr__(self, "orientation", Mode(self.orientation))
        a, b, p, r, q = self.a, self.b, self.p, self.r, self.q
        if a < 0 or b < 0 or q < 0 or p < 0 or r < 1:
            raise ValueError(f"negative parameter in pentagon {self.args}")
        if a == 0 and b == 0:
            raise ValueError("pentagon with a = b = 0 is undefined")
        if q > a or p > b:
            raise ValueError(f"need q <= a and p <= b, got {self.args}")
        if self.drop(b - p) != a - q:
            raise ValueError(f"slant relation fails for {self.args}")

    def drop(self, run):
        # vertical drop of the slanted edge over a horizontal run
        return run * self.r if self.orientation is Mode.UNITFRAC else run / self.r

    @property
    def args(self):
        return (self.a, self.b, self.p, self.r, self.q)

    @property
    def is_rectangle(self) -> bool:
        return self.p == self.b

    def upper(self, i: int) -> int:
        """Largest admissible left area on line ``i`` (1-based from the top)."""
        if self.orientation is Mode.UNITFRAC:
            return min(self.b, floor_frac(self.p + Fraction(i - 1, self.r)))
        return min(self.b, floor_frac(self.p + self.r * (i - 1)))

    def lower(self, i: int) -> int:
        return 0


@dataclass(frozen=True)
class RegionHexagon(RegionPentagon):
    """Pentagon further cut by a lower slant through (0,s) and (c,0), c = s/r.

    The lower slant is parallel to the upper one (both steep).
    """

    s: int = 0

    def __post_init__(self):
        super().__post_init__()
        if self.s < 0 or self.s > self.a:
            raise ValueError(f"need 0 <= s <= a, got s={self.s}")

    @property
    def args(self):
        return (self.a, self.b, self.p, self.r, self.q, self.s)

    @property
    def c(self) -> Fraction:
        return Fraction(self.s, self.r)

    def lower(self, i: int) -> int:
        # bottom end of the down step on line i sits at height a - i
        return max(0, ceil_frac(Fraction(self.s - (self.a - i), self.r)))


def enumerate_region_paths(region: RegionPentagon) -> Iterator[Tuple[int, ...]]:
    """Yield the left-area sequence (length ``a``) of every down/right path
    from (0,a) to (b,0) inside ``region``, in lexicographic order."""
    a = region.a
    ups = [region.upper(i) for i in range(1, a + 1)]
    lows = [region.lower(i) for i in range(1, a + 1)]
    seq = []

    def rec(i, floor):
        if i == a:
            yield tuple(seq)
            return
        for v in range(max(floor, lows[i]), ups[i] + 1):
            seq.append(v)
            yield from rec(i + 1, v)
            seq.pop()

    yield from rec(0, 0)
