"""Run counting and within-interval rewrites of a multidollar BWT.

:func:`optimize` produces the BWT with the fewest equal-letter runs reachable
by reordering the input strings. It scans the SAP-intervals left to right
and keeps a stack of interesting intervals whose border characters are not
yet decided; once the next interval shares at most one symbol with the top
of the stack, every pending border is fixed and the stack is written out.

:func:`sap_heuristic` only groups equal characters inside each interval.

Symbols are byte values. The end marker ``$`` ranks below every other byte
wherever symbols are ordered.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .collection import SENTINEL
from .sap import SapArray, interval_bounds

# rank of each byte; '$' first, everything else by byte value
RANK = list(range(256))
RANK[SENTINEL] = -1


def symbol_rank(c: int) -> int:
    return RANK[c]


@dataclass(frozen=True)
class RunStats:
    n: int
    r: int

    @property
    def mean_run(self) -> Fraction:
        return Fraction(self.n, self.r)

    def __str__(self) -> str:
        return f"n={self.n} r={self.r} n/r={float(self.mean_run):.4f}"


def count_runs(s: bytes | str) -> RunStats:
    """Number of maximal blocks of equal characters in ``s``."""
    if isinstance(s, str):
        s = s.encode("latin-1")
    if not s:
        raise ValueError("cannot count runs of an empty sequence")
    a = np.frombuffer(s, dtype=np.uint8)
    return RunStats(len(a), 1 + int(np.count_nonzero(a[1:] != a[:-1])))


class ParikhVector(Counter):
    """Symbol multiplicities of one SAP-interval, keyed by byte value."""

    @property
    def support(self) -> list[int]:
        return sorted((c for c, m in self.items() if m > 0), key=symbol_rank)

    def __getitem__(self, c):
        if isinstance(c, str):
            c = ord(c)
        return super().__getitem__(c)

    def __repr__(self) -> str:
        inner = ", ".join(f"{chr(c)}={self[c]}" for c in self.support)
        return f"ParikhVector({inner})"


def tuples_from_sap(bwt: bytes, sap: SapArray) -> list[ParikhVector]:
    begins, ends, _ = interval_bounds(bwt, sap)
    return [ParikhVector(bwt[b:e]) for b, e in zip(begins.tolist(), ends.tolist())]


def _interesting_spans(bwt: bytes, sap: SapArray) -> list[tuple[int, int]]:
    begins, ends, interesting = interval_bounds(bwt, sap)
    return list(zip(begins[interesting].tolist(), ends[interesting].tolist()))


def _write_pending(out: bytearray, stack: list, right: int | None) -> None:
    """Fix every border of the pending intervals and write them to ``out``.

    ``stack`` holds ``(begin, end, counts)`` triples, bottom first, each
    adjacent pair sharing at least two symbols. ``right`` is the symbol the
    top must end with, or None when its right side is unconstrained.
    """
    top = stack[-1][2]
    borders = [0] * len(stack)
    borders[-1] = right if right is not None else max(top, key=symbol_rank)
    for i in range(len(stack) - 1, 0, -1):
        upper, lower = stack[i][2], stack[i - 1][2]
        borders[i - 1] = min(
            (c for c in lower if c in upper and c != borders[i]), key=symbol_rank
        )
    for i, (begin, end, counts) in enumerate(stack):
        left = borders[i - 1] if i else None
        right = borders[i]
        pos = begin
        seq = [c for c in sorted(counts, key=symbol_rank) if c != left and c != right]
        if left is not None:
            seq.insert(0, left)
        seq.append(right)
        for c in seq:
            m = counts[c]
            out[pos:pos + m] = bytes((c,)) * m
            pos += m
        assert pos == end
    stack.clear()


def optimize(bwt: bytes, sap: SapArray) -> bytes:
    """Permute characters within SAP-intervals so as to minimize runs.

    Works with either the full or the reduced SAP-array. The result is
    deterministic: among shared symbols the smallest one not already used
    by the neighbouring border is placed at a border, a free right border
    takes the largest symbol, and the remaining symbols ascend by rank.
    """
    spans = _interesting_spans(bwt, sap)
    out = bytearray(bwt)
    n = len(out)
    stack: list[tuple[int, int, dict[int, int]]] = []
    for begin, end in spans:
        counts = Counter(bwt[begin:end])
        if stack:
            top_end, top = stack[-1][1], stack[-1][2]
            if top_end == begin:
                shared = [c for c in counts if c in top]
                if len(shared) >= 2:
                    stack.append((begin, end, counts))
                    continue
                right = shared[0] if shared else None
            else:
                # a run of one symbol lies between the top and this interval
                nxt = out[top_end]
                right = nxt if nxt in top else None
            _write_pending(out, stack, right)
        pos = begin
        if begin:
            last = out[begin - 1]
            m = counts.pop(last, 0)
            if m:
                out[pos:pos + m] = bytes((last,)) * m
                pos += m
        stack.append((pos, end, counts))
    if stack:
        top_end, top = stack[-1][1], stack[-1][2]
        right = None
        if top_end < n and out[top_end] in top:
            right = out[top_end]
        _write_pending(out, stack, right)
    return bytes(out)


def sap_heuristic(bwt: bytes, sap: SapArray) -> bytes:
    """Group equal characters inside each interval, in order of first occurrence."""
    out = bytearray(bwt)
    for begin, end in _interesting_spans(bwt, sap):
        counts = Counter(bwt[begin:end])
        pos = begin
        for c, m in counts.items():
            out[pos:pos + m] = bytes((c,)) * m
            pos += m
    return bytes(out)
