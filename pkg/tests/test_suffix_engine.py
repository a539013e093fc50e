import numpy as np
import pytest
from hypothesis import given, settings

from optbwt import StringCollection, build_bwt, reorder, build_suffix_array, extract_bwt, count_runs
from optbwt.suffix_engine import (
    format_rle,
    parse_rle,
    reference_bwt,
    reference_suffix_order,
    rle,
)

from conftest import collections

FIVE_SORTED = (
    ["$"] * 5
    + ["A$", "A$", "AA$", "CCT$", "CCT$", "CGA$", "CT$", "CT$", "CT$", "GA$", "GAA$"]
    + ["GCCT$", "GGAA$", "T$", "T$", "T$", "TCCT$", "TCGA$", "TCT$", "TTCT$"]
)


def test_single_string():
    coll = StringCollection.of("A")
    sa = build_suffix_array(coll)
    assert sa.entries() == [(0, 1), (0, 0)]
    assert extract_bwt(coll, sa) == b"A$"


def test_five_sorted_suffixes(five):
    sa = build_suffix_array(five)
    assert [s.decode() + "$" for s in sa.suffixes(five)] == FIVE_SORTED


def test_marker_only_suffixes_come_first_by_string_index(five):
    sa = build_suffix_array(five)
    assert sa.entries()[:5] == [(j, 4) for j in range(5)]


def test_equal_suffixes_tie_break_by_string_index():
    coll = StringCollection.of("AB", "AB")
    assert build_suffix_array(coll).entries() == [(0, 2), (1, 2), (0, 0), (1, 0), (0, 1), (1, 1)]


def test_five_input_bwt(five):
    bwt, _ = build_bwt(five)
    assert bwt == b"AATTTGAGTGTCTCCG$$CCC$$T$"
    assert count_runs(bwt).r == 17


def test_seven_input_bwt(seven):
    assert build_bwt(seven)[0] == b"AATATAAGAACTCTC$GGCA$$$TACAAGG$$$"


def test_five_orderings(five):
    lex, _ = build_bwt(five, "lex")
    colex, _ = build_bwt(five, "colex")
    assert lex == b"TATATAGGGTTCCTCG$$CCC$$T$"
    assert colex == b"AATTTAGGGTTCCTCG$$CCC$$T$"
    assert count_runs(lex).r == 17
    assert count_runs(colex).r == 14


def test_extract_rejects_length_mismatch(five, seven):
    with pytest.raises(ValueError, match="entries"):
        extract_bwt(five, build_suffix_array(seven))


def test_general_bytes():
    coll = StringCollection((b"\x01\xff#", b"#\x01", b"\xff"))
    assert build_bwt(coll)[0] == reference_bwt(coll)


@settings(max_examples=300)
@given(collections(max_k=7, max_len=9))
def test_engine_matches_comparison_sort(coll):
    sa = build_suffix_array(coll)
    assert sa.entries() == reference_suffix_order(coll)
    assert extract_bwt(coll, sa) == reference_bwt(coll)


@given(collections(max_k=7, max_len=9, alphabet="AB"))
def test_classes_identify_equal_contents(coll):
    sa = build_suffix_array(coll)
    contents = sa.suffixes(coll)
    assert np.all(np.diff(sa.classes) >= 0)
    for i in range(1, len(contents)):
        assert (sa.classes[i] == sa.classes[i - 1]) == (contents[i] == contents[i - 1])


@given(collections(max_k=7, max_len=9))
def test_bwt_is_a_permutation_of_the_collection(coll):
    bwt, sa = build_bwt(coll)
    assert bwt.count(b"$") == coll.k
    assert sorted(bwt) == sorted(b"$".join(coll.strings) + b"$")
    assert sorted(sa.entries()) == [(j, t) for j, s in enumerate(coll.strings) for t in range(len(s) + 1)]


@given(collections(max_k=6, max_len=7))
def test_sorted_contents_do_not_depend_on_order(coll):
    ref = build_suffix_array(coll).suffixes(coll)
    for kind in ("lex", "colex"):
        re = reorder(coll, kind)
        assert build_suffix_array(re).suffixes(re) == ref


def test_rle_round_trip(five):
    bwt, _ = build_bwt(five)
    assert rle(b"AAB$$") == [(65, 2), (66, 1), (36, 2)]
    assert format_rle(b"AAB$$") == b"A\t2\nB\t1\n$\t2\n"
    assert parse_rle(format_rle(bwt)) == bwt
    assert len(rle(bwt)) == count_runs(bwt).r


def test_long_strings_and_many_duplicates():
    coll = StringCollection.of(*(["ACGTACGTAC" * 20] * 5 + ["A" * 300, "A" * 299]))
    assert build_bwt(coll)[0] == reference_bwt(coll)
