"""Independent checks: BWT inversion, exhaustive minimum-runs search,
variant comparison and synthetic collections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .collection import COLEX, INPUT, LEX, SENTINEL, Ordering, StringCollection, reorder
from .optimizer import RunStats, count_runs, optimize, sap_heuristic
from .sap import build_sap
from .suffix_engine import build_bwt, reference_bwt

VARIANTS = ("input", "dolE", "colex", "sap", "opt")


class InvalidBWT(ValueError):
    """The byte string is not the multidollar BWT of any collection."""


def invert_bwt(bwt: bytes) -> StringCollection:
    """Recover the collection from its multidollar BWT.

    Row ``j`` of the first column is the marker-only suffix of string ``j``,
    so walking LF-steps from row ``j`` spells string ``j`` backwards until a
    ``$`` is met. Strings come back in their original order.
    """
    a = np.frombuffer(bwt, dtype=np.uint8)
    if np.any(a == 0):
        raise InvalidBWT("not a valid collection BWT: contains byte 0x00")
    k = int(np.count_nonzero(a == SENTINEL))
    if k == 0:
        raise InvalidBWT("not a valid collection BWT: no '$' present")
    # '$' must sort first in the first column
    key = a.astype(np.int16)
    key[a == SENTINEL] = -1
    first = np.argsort(key, kind="stable")
    lf = np.empty(len(a), dtype=np.int64)
    lf[first] = np.arange(len(a))

    visited = np.zeros(len(a), dtype=bool)
    rows = np.arange(k, dtype=np.int64)
    visited[rows] = True
    chars: list[np.ndarray] = []
    active = a[rows] != SENTINEL
    while active.any():
        if len(chars) > len(a):
            raise InvalidBWT("not a valid collection BWT: LF walk does not terminate")
        step = np.where(active, a[rows], 0)
        chars.append(step)
        nxt = lf[rows[active]]
        if visited[nxt].any() or len(np.unique(nxt)) != len(nxt):
            raise InvalidBWT("not a valid collection BWT: LF walk revisits a row")
        visited[nxt] = True
        rows[active] = nxt
        active &= a[rows] != SENTINEL
    if not visited.all():
        raise InvalidBWT("not a valid collection BWT: rows left unvisited")
    if not chars:
        raise InvalidBWT("not a valid collection BWT: empty string")
    block = np.stack(chars, axis=1)
    strings = []
    for row in block:
        s = row[row != 0][::-1].tobytes()
        strings.append(s)
    try:
        return StringCollection(tuple(strings))
    except ValueError as exc:
        raise InvalidBWT(f"not a valid collection BWT: {exc}") from None


def brute_force_min_runs(coll: StringCollection, max_k: int = 8) -> tuple[int, Ordering]:
    """Minimum r over all k! orderings, with the lexicographically smallest witness.

    Each ordering is rebuilt from scratch with the comparison-sort reference
    construction, so nothing here shares code with :func:`optimize`.
    """
    if coll.k > max_k:
        raise ValueError(f"brute force limited to k <= {max_k}, got k = {coll.k}")
    best = None
    seen: dict[tuple[bytes, ...], int] = {}
    for perm in itertools.permutations(range(coll.k)):
        strings = tuple(coll.strings[p] for p in perm)
        r = seen.get(strings)
        if r is None:
            r = count_runs(reference_bwt(StringCollection(strings))).r
            seen[strings] = r
        if best is None or r < best[0]:
            best = (r, perm)
    return best[0], Ordering.explicit(best[1])


@dataclass(frozen=True)
class ComparisonReport:
    stats: dict[str, RunStats]

    @property
    def r_opt(self) -> int:
        return self.stats["opt"].r

    def factor(self, variant: str) -> Fraction:
        return Fraction(self.stats[variant].r, self.r_opt)

    def percent(self, variant: str) -> Fraction:
        return (self.factor(variant) - 1) * 100

    def runs(self) -> dict[str, int]:
        return {v: s.r for v, s in self.stats.items()}

    def format_table(self) -> str:
        """Aligned table, one column per variant."""
        rows = [
            ("n", [str(self.stats[v].n) for v in VARIANTS]),
            ("r", [str(self.stats[v].r) for v in VARIANTS]),
            ("n/r", [f"{float(self.stats[v].mean_run):.2f}" for v in VARIANTS]),
            ("factor", [f"{float(self.factor(v)):.2f}" for v in VARIANTS]),
            ("percent", [f"{float(self.percent(v)):.2f}%" for v in VARIANTS]),
        ]
        width = max(12, *(len(c) for _, cells in rows for c in cells)) + 1
        lines = [f"{'':<8}" + "".join(f"{v:>{width}}" for v in VARIANTS)]
        lines += [f"{name:<8}" + "".join(f"{c:>{width}}" for c in cells) for name, cells in rows]
        return "\n".join(lines) + "\n"

    def format_kv(self) -> str:
        lines = []
        for v in VARIANTS:
            s = self.stats[v]
            lines.append(
                f"variant={v} n={s.n} r={s.r} n/r={float(s.mean_run):.6f} "
                f"factor={float(self.factor(v)):.6f} percent={float(self.percent(v)):.6f}"
            )
        return "\n".join(lines) + "\n"


def variants(coll: StringCollection) -> dict[str, bytes]:
    """All five BWT variants of ``coll``."""
    bwt, sa = build_bwt(coll, INPUT)
    sap = build_sap(coll, sa)
    return {
        "input": bwt,
        "dolE": build_bwt(coll, LEX)[0],
        "colex": build_bwt(coll, COLEX)[0],
        "sap": sap_heuristic(bwt, sap),
        "opt": optimize(bwt, sap),
    }


def compare(coll: StringCollection) -> ComparisonReport:
    return ComparisonReport({v: count_runs(b) for v, b in variants(coll).items()})


def generate(
    k: int,
    len_range: tuple[int, int],
    alphabet: bytes | str = b"ACGT",
    seed: int | None = 0,
) -> StringCollection:
    """``k`` uniform random strings with lengths uniform in ``len_range``."""
    lo, hi = len_range
    if k < 1:
        raise ValueError("k must be at least 1")
    if lo < 1 or hi < lo:
        raise ValueError(f"invalid length range [{lo}, {hi}]")
    if isinstance(alphabet, str):
        alphabet = alphabet.encode("latin-1")
    symbols = np.frombuffer(bytes(sorted(set(alphabet))), dtype=np.uint8)
    if not len(symbols) or SENTINEL in symbols or 0 in symbols:
        raise ValueError("alphabet must be non-empty and exclude '$' and 0x00")
    rng = np.random.default_rng(seed)
    lengths = rng.integers(lo, hi + 1, size=k)
    pool = rng.choice(symbols, size=int(lengths.sum())).tobytes()
    cuts = np.concatenate(([0], np.cumsum(lengths))).tolist()
    return StringCollection(tuple(pool[a:b] for a, b in zip(cuts, cuts[1:])))


def sample_reads(
    reference: bytes, read_len: int, coverage: float, seed: int | None = 0
) -> StringCollection:
    """Substrings of ``reference`` at uniform random start positions.

    The number of reads is ``round(coverage * len(reference) / read_len)``.
    """
    if not 1 <= read_len <= len(reference):
        raise ValueError("read length must be between 1 and the reference length")
    count = max(1, round(coverage * len(reference) / read_len))
    rng = np.random.default_rng(seed)
    starts = rng.integers(0, len(reference) - read_len + 1, size=count).tolist()
    return StringCollection(tuple(reference[s:s + read_len] for s in starts))


def random_reference(length: int, alphabet: bytes = b"ACGT", seed: int | None = 0) -> bytes:
    rng = np.random.default_rng(seed)
    return rng.choice(np.frombuffer(alphabet, dtype=np.uint8), size=length).tobytes()
