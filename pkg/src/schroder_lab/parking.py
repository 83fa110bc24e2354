"""Parking functions: rearrangements of area codes.

A barred value and an unbarred value are different symbols. A parking
function factors as ``(path, sigma)`` where ``sigma[line - 1]`` is the
position (1-based) in the sequence holding that code line's entry. Within a
block of equal symbols, positions are handed out in decreasing order down the
lines, so labels increase going up a column (σ = 31542 for 0~,4,0,4,2~).
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ._util import arrangements, multinomial, thread_cap
from .lattice import (AreaCode, Entry, InvalidCode, LatticePath, PathSpec,
                      canonical_key, decode, enumerate_paths)


@dataclass(frozen=True)
class ParkingFunction:
    entries: Tuple[Entry, ...]
    spec: PathSpec

    def to_json(self) -> list:
        return [{"v": v, "bar": b} for v, b in self.entries]


@dataclass(frozen=True)
class Factorization:
    path: LatticePath
    sigma: Tuple[int, ...]

    def apply(self) -> Tuple[Entry, ...]:
        """Rebuild the parking function from the path's code and sigma."""
        out: List[Optional[Entry]] = [None] * len(self.sigma)
        for line, pos in enumerate(self.sigma):
            out[pos - 1] = self.path.code.entries[line]
        return tuple(out)

    def to_json(self) -> dict:
        return {"code": self.path.code.to_json(), "steps": self.path.steps, "sigma": list(self.sigma)}


def _normalize(seq) -> Tuple[Entry, ...]:
    return tuple((int(v), bool(b)) for v, b in seq)


def is_parking(seq: Sequence[Entry], spec: PathSpec) -> Optional[Factorization]:
    seq = _normalize(seq)
    order = sorted(range(len(seq)), key=lambda k: (canonical_key(seq[k]), -k))
    code = tuple(seq[k] for k in order)
    try:
        path = decode(code, spec)
    except InvalidCode:
        return None
    return Factorization(path, tuple(k + 1 for k in order))


def parking_set(path: LatticePath) -> Iterator[ParkingFunction]:
    """All distinct rearrangements of the path's code, in lexicographic order."""
    counts = Counter(path.code.entries)
    symbols = sorted(counts, key=canonical_key)
    n = len(path.code)
    seq: List[Entry] = []

    def rec():
        if len(seq) == n:
            yield ParkingFunction(tuple(seq), path.spec)
            return
        for s in symbols:
            if counts[s]:
                counts[s] -= 1
                seq.append(s)
                yield from rec()
                seq.pop()
                counts[s] += 1

    yield from rec()


def parking_set_size(path: LatticePath) -> int:
    return arrangements(path.code.entries)


def _chunk_total(codes) -> int:
    return sum(arrangements(c) for c in codes)


def brute_count_parking(spec: PathSpec, workers: Optional[int] = None) -> int:
    """Sum of |P(path)| over the family; the sets are pairwise disjoint."""
    codes = [p.code.entries for p in enumerate_paths(spec)]
    workers = thread_cap() if workers is None else workers
    if workers <= 1 or len(codes) < 2:
        return _chunk_total(codes)
    chunks = [codes[k::workers] for k in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_chunk_total, chunks))


def brute_count_parking_sequences(spec: PathSpec) -> int:
    """Slow oracle: test every sequence over the admissible symbol alphabet."""
    from itertools import product

    values = range(spec.width + 1)
    alphabet = [(v, b) for v in values for b in (False, True)]
    return sum(1 for seq in product(alphabet, repeat=spec.height) if is_parking(seq, spec))


def check_occupancy_property(seq: Sequence[int], n: int) -> bool:
    """True iff for every k at most n - k entries equal k."""
    counts = Counter(int(v) for v in seq)
    return all(c <= n - k for k, c in counts.items())


def multinomial_bar_groups(n: int, d: int, r: int) -> int:
    """``(n r)! / (d! (r!)^(n - d/r))``: placements of the diagonal groups."""
    groups = n - d // r
    return multinomial([d] + [r] * groups)
