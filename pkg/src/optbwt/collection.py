"""String collections: parsing, validation, serialization and reordering.

Strings are raw byte strings. Each string carries an implicit end marker;
the markers are ordered by string position and are never materialized as
distinct bytes. The byte ``$`` (0x24) is reserved for rendering them, so it
may not occur inside a string, and neither may 0x00.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Sequence

SENTINEL = 0x24
SENTINEL_BYTE = b"$"
FORMATS = ("fasta", "fastq", "lines")


class CollectionError(ValueError):
    """Raised for malformed input files or invalid collections."""


def _check_string(s: bytes, index: int) -> None:
    if not s:
        raise CollectionError(f"record {index}: empty string")
    if SENTINEL in s:
        raise CollectionError(f"record {index}: contains the sentinel byte '$'")
    if 0 in s:
        raise CollectionError(f"record {index}: contains byte 0x00")


@dataclass(frozen=True)
class StringCollection:
    """Ordered multiset of non-empty byte strings."""

    strings: tuple[bytes, ...]

    def __post_init__(self):
        strings = tuple(bytes(s) for s in self.strings)
        if not strings:
            raise CollectionError("collection must contain at least one string")
        for i, s in enumerate(strings):
            _check_string(s, i)
        object.__setattr__(self, "strings", strings)

    @classmethod
    def of(cls, *strings: str | bytes) -> "StringCollection":
        return cls(tuple(s.encode("latin-1") if isinstance(s, str) else s for s in strings))

    @property
    def k(self) -> int:
        return len(self.strings)

    @property
    def total_len(self) -> int:
        """Sum of string lengths plus one end marker per string."""
        return sum(map(len, self.strings)) + len(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self):
        return iter(self.strings)

    def __getitem__(self, i):
        return self.strings[i]

    def as_str(self) -> list[str]:
        return [s.decode("latin-1") for s in self.strings]


@dataclass(frozen=True)
class Ordering:
    """How to order the strings before building the BWT.

    ``kind`` is one of ``input``, ``lex``, ``colex`` or ``explicit``. For an
    explicit ordering, ``permutation[i]`` is the (0-based) input position of
    the string placed at position ``i``.
    """

    kind: str
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("input", "lex", "colex", "explicit"):
            raise ValueError(f"unknown ordering kind {self.kind!r}")
        if self.kind == "explicit":
            if self.permutation is None:
                raise ValueError("explicit ordering needs a permutation")
            object.__setattr__(self, "permutation", tuple(int(p) for p in self.permutation))
        elif self.permutation is not None:
            raise ValueError(f"{self.kind} ordering takes no permutation")

    @classmethod
    def explicit(cls, permutation: Iterable[int]) -> "Ordering":
        return cls("explicit", tuple(permutation))


INPUT = Ordering("input")
LEX = Ordering("lex")
COLEX = Ordering("colex")


def as_ordering(ord: Ordering | str | Sequence[int]) -> Ordering:
    if isinstance(ord, Ordering):
        return ord
    if isinstance(ord, str):
        return Ordering(ord)
    return Ordering.explicit(ord)


def reorder(coll: StringCollection, ord: Ordering | str | Sequence[int]) -> StringCollection:
    """Permute the strings of ``coll``.

    ``lex`` and ``colex`` are stable sorts (equal strings keep their input
    order); a proper prefix sorts before its extensions. ``colex`` compares
    reversed strings.
    """
    ord = as_ordering(ord)
    strings = coll.strings
    if ord.kind == "input":
        return coll
    if ord.kind == "lex":
        return StringCollection(tuple(sorted(strings)))
    if ord.kind == "colex":
        return StringCollection(tuple(sorted(strings, key=lambda s: s[::-1])))
    perm = ord.permutation
    if len(perm) != coll.k or sorted(perm) != list(range(coll.k)):
        raise CollectionError(f"explicit ordering is not a permutation of 0..{coll.k - 1}")
    return StringCollection(tuple(strings[p] for p in perm))


# -- parsing -----------------------------------------------------------------

def _read_source(source: bytes | bytearray | BinaryIO | str) -> bytes:
    if isinstance(source, (bytes, bytearray, memoryview)):
        return bytes(source)
    if isinstance(source, str):
        raise TypeError("pass bytes or a binary stream; use read_collection() for paths")
    data = source.read()
    if isinstance(data, str):
        raise TypeError("stream must be opened in binary mode")
    return data


def _split_lines(data: bytes) -> list[bytes]:
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    return lines


def _parse_lines(data: bytes) -> list[bytes]:
    return _split_lines(data)


def _parse_fasta(data: bytes) -> list[bytes]:
    records: list[list[bytes]] = []
    for lineno, line in enumerate(_split_lines(data), 1):
        if line.startswith(b">"):
            records.append([])
        elif not records:
            if line.strip():
                raise CollectionError(f"line {lineno}: sequence data before the first FASTA header")
        else:
            records[-1].append(line)
    return [b"".join(parts) for parts in records]


def _parse_fastq(data: bytes) -> list[bytes]:
    lines = _split_lines(data)
    if len(lines) % 4:
        raise CollectionError(
            f"FASTQ record {len(lines) // 4}: truncated record ({len(lines) % 4} of 4 lines)"
        )
    seqs = []
    for r in range(len(lines) // 4):
        header, seq, plus, _qual = lines[4 * r: 4 * r + 4]
        if not header.startswith(b"@") or not plus.startswith(b"+"):
            raise CollectionError(f"FASTQ record {r}: expected '@' header and '+' separator")
        seqs.append(seq)
    return seqs


_PARSERS = {"lines": _parse_lines, "fasta": _parse_fasta, "fastq": _parse_fastq}


def parse(source: bytes | BinaryIO, format: str = "lines") -> StringCollection:
    """Parse a collection from raw bytes or a binary stream.

    Bytes are taken verbatim: no case folding, no filtering of ``N``, and
    headers and FASTQ qualities are dropped. Multi-line FASTA records are
    concatenated.
    """
    try:
        parser = _PARSERS[format]
    except KeyError:
        raise CollectionError(f"unknown format {format!r}; expected one of {FORMATS}") from None
    strings = parser(_read_source(source))
    if not strings:
        raise CollectionError("input contains no records")
    return StringCollection(tuple(strings))


def read_collection(path, format: str = "lines") -> StringCollection:
    with open(path, "rb") as fh:
        return parse(fh, format)


def to_lines(coll: StringCollection) -> bytes:
    return b"".join(s + b"\n" for s in coll.strings)


def to_fasta(coll: StringCollection, prefix: str = "seq") -> bytes:
    out = io.BytesIO()
    for i, s in enumerate(coll.strings, 1):
        out.write(f">{prefix}{i}\n".encode())
        out.write(s + b"\n")
    return out.getvalue()
