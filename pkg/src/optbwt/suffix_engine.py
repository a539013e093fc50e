"""Suffix sorting of a string collection and multidollar BWT extraction.

Suffixes are compared character by character with every end marker smaller
than every alphabet symbol; two end markers compare by string index. The
sort runs prefix doubling over the concatenation of the strings, where the
comparison window of a suffix is cut off at its own end marker. That yields,
besides the order, a class id per suffix that identifies its content up to
the end marker, which is what the SAP-array needs.

All positions are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collection import SENTINEL, Ordering, StringCollection, reorder


@dataclass(frozen=True, eq=False)
class SuffixArray:
    """Sorted suffixes of a collection.

    ``string_ids[i]`` and ``offsets[i]`` locate the i'th smallest suffix;
    ``offsets[i] == len(string)`` is the marker-only suffix. ``classes[i]``
    is non-decreasing and equal for two positions iff the two suffixes have
    the same content once their end markers are dropped.
    """

    string_ids: np.ndarray
    offsets: np.ndarray
    classes: np.ndarray

    def __len__(self) -> int:
        return len(self.string_ids)

    def entries(self) -> list[tuple[int, int]]:
        return list(zip(self.string_ids.tolist(), self.offsets.tolist()))

    def suffixes(self, coll: StringCollection) -> list[bytes]:
        """Suffix contents in sorted order, without end markers."""
        return [coll.strings[j][t:] for j, t in self.entries()]


def _layout(coll: StringCollection):
    lengths = np.fromiter((len(s) for s in coll.strings), dtype=np.int64, count=coll.k)
    starts = np.zeros(coll.k, dtype=np.int64)
    np.cumsum(lengths[:-1] + 1, out=starts[1:])
    # 0x00 never occurs in a valid string, so it marks the end of each one
    text = np.frombuffer(b"\x00".join(coll.strings) + b"\x00", dtype=np.uint8)
    owner = np.repeat(np.arange(coll.k, dtype=np.int64), lengths + 1)
    return text, lengths, starts, owner


def _dense_rank(key: np.ndarray) -> np.ndarray:
    order = np.argsort(key, kind="stable")
    sk = key[order]
    ranks = np.empty(len(key), dtype=np.int64)
    ranks[order] = np.concatenate(([0], np.cumsum(sk[1:] != sk[:-1])))
    return ranks


def content_classes(text: np.ndarray, to_end: np.ndarray) -> np.ndarray:
    """Rank every suffix of ``text`` by its content up to the next 0x00.

    ``to_end[i]`` is the distance from ``i`` to the next 0x00 byte. Ranks
    are dense, start at 0 (the empty content) and respect the order in
    which an end marker sorts below every symbol.
    """
    n = len(text)
    rank = text.astype(np.int64)
    longest = int(to_end.max()) if n else 0
    h = 1
    # after the pass with window h, ranks describe the first 2h symbols
    while h <= longest:
        second = np.zeros(n, dtype=np.int64)
        live = np.flatnonzero(to_end >= h)
        second[live] = rank[live + h]
        base = int(rank.max()) + 1
        rank = _dense_rank(rank * base + second)
        h *= 2
    if h == 1:
        rank = _dense_rank(rank)
    return rank


def build_suffix_array(coll: StringCollection) -> SuffixArray:
    text, lengths, starts, owner = _layout(coll)
    pos = np.arange(len(text), dtype=np.int64)
    to_end = (starts + lengths)[owner] - pos
    classes = content_classes(text, to_end)
    order = np.lexsort((owner, classes))
    string_ids = owner[order]
    return SuffixArray(
        string_ids=string_ids,
        offsets=order - starts[string_ids],
        classes=classes[order],
    )


def extract_bwt(coll: StringCollection, sa: SuffixArray) -> bytes:
    """Character circularly preceding each sorted suffix; markers become ``$``."""
    if len(sa) != coll.total_len:
        raise ValueError(
            f"suffix array has {len(sa)} entries, collection length is {coll.total_len}"
        )
    text, _, starts, _ = _layout(coll)
    src = starts[sa.string_ids] + sa.offsets - 1
    out = np.full(len(sa), SENTINEL, dtype=np.uint8)
    inner = sa.offsets > 0
    out[inner] = text[src[inner]]
    return out.tobytes()


def build_bwt(coll: StringCollection, ord: Ordering | str = "input") -> tuple[bytes, SuffixArray]:
    """Reorder ``coll``, sort its suffixes and return ``(bwt, suffix_array)``.

    The suffix array refers to the reordered collection.
    """
    coll = reorder(coll, ord)
    sa = build_suffix_array(coll)
    return extract_bwt(coll, sa), sa


def reference_suffix_order(coll: StringCollection) -> list[tuple[int, int]]:
    """Sort suffixes with a plain comparison sort (small inputs only).

    Python's bytes comparison puts a proper prefix first, which is exactly
    the end-marker-smallest rule; ties fall back to the string index.
    """
    keys = [(s[t:], j, t) for j, s in enumerate(coll.strings) for t in range(len(s) + 1)]
    keys.sort()
    return [(j, t) for _, j, t in keys]


def reference_bwt(coll: StringCollection) -> bytes:
    """BWT via :func:`reference_suffix_order`, independent of the numpy engine."""
    strings = coll.strings
    return bytes(
        SENTINEL if t == 0 else strings[j][t - 1] for j, t in reference_suffix_order(coll)
    )


def rle(bwt: bytes) -> list[tuple[int, int]]:
    """Run-length encoding as ``(byte, count)`` pairs."""
    if not bwt:
        return []
    a = np.frombuffer(bwt, dtype=np.uint8)
    heads = np.flatnonzero(np.concatenate(([True], a[1:] != a[:-1])))
    counts = np.diff(np.append(heads, len(a)))
    return list(zip(a[heads].tolist(), counts.tolist()))


def format_rle(bwt: bytes) -> bytes:
    """Serialize runs as ``char<TAB>count`` lines."""
    return b"".join(bytes([c]) + b"\t%d\n" % n for c, n in rle(bwt))


def parse_rle(data: bytes) -> bytes:
    out = bytearray()
    for lineno, line in enumerate(data.split(b"\n"), 1):
        if not line:
            continue
        if len(line) < 3 or line[1:2] != b"\t":
            raise ValueError(f"RLE line {lineno}: expected 'char<TAB>count'")
        out += line[:1] * int(line[2:])
    return bytes(out)
