"""SAP-array ("same as previous") of a multidollar BWT.

Bit ``i`` is set when the i'th sorted suffix equals the (i-1)'th one once
end markers are dropped. A maximal block of positions joined by set bits is
a SAP-interval; its BWT characters can be permuted freely by reordering the
input strings. Intervals holding two or more distinct characters are called
interesting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collection import StringCollection
from .suffix_engine import SuffixArray


@dataclass(frozen=True, eq=False)
class SapArray:
    bits: np.ndarray
    reduced: bool = False

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=bool)
        if len(bits) and bits[0]:
            raise ValueError("SAP-array must start with 0")
        object.__setattr__(self, "bits", bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SapArray):
            return NotImplemented
        return self.reduced == other.reduced and np.array_equal(self.bits, other.bits)

    def to_str(self) -> str:
        return (self.bits.astype(np.uint8) + ord("0")).tobytes().decode()

    def to_bytes(self) -> bytes:
        return self.to_str().encode()

    @classmethod
    def from_str(cls, s: str | bytes, reduced: bool = False) -> "SapArray":
        if isinstance(s, str):
            s = s.encode()
        s = s.rstrip(b"\r\n")
        a = np.frombuffer(s, dtype=np.uint8)
        if not np.all((a == ord("0")) | (a == ord("1"))):
            bad = int(np.flatnonzero((a != ord("0")) & (a != ord("1")))[0])
            raise ValueError(f"SAP position {bad}: expected '0' or '1'")
        return cls(a == ord("1"), reduced)


@dataclass(frozen=True)
class SapInterval:
    """Half-open block ``[begin, end)`` of BWT positions."""

    begin: int
    end: int
    interesting: bool

    def __len__(self) -> int:
        return self.end - self.begin


def build_sap(coll: StringCollection, sa: SuffixArray) -> SapArray:
    if len(sa) != coll.total_len:
        raise ValueError(
            f"suffix array has {len(sa)} entries, collection length is {coll.total_len}"
        )
    bits = np.zeros(len(sa), dtype=bool)
    bits[1:] = sa.classes[1:] == sa.classes[:-1]
    return SapArray(bits)


def _check(bwt: bytes, sap: SapArray) -> np.ndarray:
    if len(bwt) != len(sap):
        raise ValueError(f"BWT length {len(bwt)} does not match SAP length {len(sap)}")
    return np.frombuffer(bwt, dtype=np.uint8)


def interval_bounds(bwt: bytes, sap: SapArray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized interval table: ``(begins, ends, interesting)``."""
    a = _check(bwt, sap)
    if not len(a):
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, np.zeros(0, dtype=bool)
    begins = np.flatnonzero(~sap.bits)
    ends = np.append(begins[1:], len(a))
    interesting = np.minimum.reduceat(a, begins) != np.maximum.reduceat(a, begins)
    return begins, ends, interesting


def intervals(bwt: bytes, sap: SapArray) -> list[SapInterval]:
    begins, ends, interesting = interval_bounds(bwt, sap)
    return [
        SapInterval(b, e, f)
        for b, e, f in zip(begins.tolist(), ends.tolist(), interesting.tolist())
    ]


def reduce_sap(bwt: bytes, sap: SapArray) -> SapArray:
    """Clear the bits of every SAP-interval that is a run of a single symbol."""
    begins, ends, interesting = interval_bounds(bwt, sap)
    keep = np.repeat(interesting, ends - begins)
    return SapArray(sap.bits & keep, reduced=True)
