import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zecap.words import (
    format_word,
    invert_permutation,
    is_prefix_unit,
    is_suffix_unit,
    is_unit,
    longest_common_prefix,
    longest_common_suffix,
    parse_word,
    permute,
    reverse,
    shortest_prefix_unit_min_len,
)

W = parse_word
words = st.lists(st.integers(0, 2), max_size=12).map(tuple)
perms3 = st.permutations([0, 1, 2]).map(tuple)


def test_parse_and_format_roundtrip():
    assert parse_word("0a1") == (0, 10, 1)
    assert format_word((0, 10, 1)) == "0a1"
    with pytest.raises(ValueError):
        parse_word("012", q=2)
    with pytest.raises(ValueError):
        parse_word("0-1")


@pytest.mark.parametrize("w, expected", [("001", "100"), ("010", "010"), ("001001", "100100")])
def test_reverse(w, expected):
    assert reverse(w) == W(expected)


def test_permute():
    assert permute("001", (1, 0)) == W("110")
    assert permute("0110", (0, 1)) == W("0110")
    assert permute("012", (1, 2, 0)) == W("120")
    with pytest.raises(ValueError):
        permute("01", (0, 0))
    with pytest.raises(ValueError):
        permute("02", (1, 0))


@pytest.mark.parametrize(
    "u, v, pre, k",
    [("000", "001", "00", 2), ("001001", "001000", "00100", 5), ("001", "100", "", 0)],
)
def test_longest_common_prefix(u, v, pre, k):
    assert longest_common_prefix(u, v) == (W(pre), k)


@pytest.mark.parametrize("u, v, suf, k", [("000", "010", "0", 1), ("000", "001", "", 0), ("001", "011", "1", 1)])
def test_longest_common_suffix(u, v, suf, k):
    assert longest_common_suffix(u, v) == (W(suf), k)


@pytest.mark.parametrize(
    "x, y, t", [("0", "000", 0), ("01", "10", 1), ("01", "000", None), ("001", "00100", 0), ("0011", "001", None)]
)
def test_is_unit(x, y, t):
    assert is_unit(x, y) == t


def test_is_unit_rejects_empty():
    with pytest.raises(ValueError):
        is_unit("", "0")


@pytest.mark.parametrize(
    "y, lmin, expected", [("001001", 1, "001"), ("001000", 1, "0010"), ("000", 2, "00"), ("011", 2, "011")]
)
def test_shortest_prefix_unit(y, lmin, expected):
    assert shortest_prefix_unit_min_len(y, lmin) == W(expected)


@pytest.mark.parametrize("lmin", [0, 4])
def test_shortest_prefix_unit_range(lmin):
    with pytest.raises(ValueError):
        shortest_prefix_unit_min_len("011", lmin)


@given(words)
def test_reverse_involution(w):
    assert reverse(reverse(w)) == w


@given(words, perms3)
def test_permute_inverse(w, p):
    assert permute(permute(w, p), invert_permutation(p)) == w


@given(words, words)
def test_prefix_suffix_mirror(u, v):
    assert longest_common_prefix(u, v)[1] == longest_common_suffix(reverse(u), reverse(v))[1]


@given(words, words)
def test_common_prefix_is_maximal(u, v):
    pre, k = longest_common_prefix(u, v)
    assert u[:k] == v[:k] == pre
    assert k == min(len(u), len(v)) or u[k] != v[k]


@given(words.filter(bool))
def test_every_word_is_its_own_prefix_and_suffix_unit(w):
    assert is_prefix_unit(w, w)
    assert is_suffix_unit(w, w)
    assert is_unit(w, w) == 0


@given(st.lists(st.integers(0, 1), min_size=1, max_size=10).map(tuple), st.data())
def test_shortest_prefix_unit_matches_enumeration(y, data):
    lmin = data.draw(st.integers(1, len(y)))
    # independent check: periodic extension of each prefix, shortest first
    expected = next(
        y[:p] for p in range(lmin, len(y) + 1) if tuple(y[i % p] for i in range(len(y))) == y
    )
    assert shortest_prefix_unit_min_len(y, lmin) == expected


@given(st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple), st.lists(st.integers(0, 1), max_size=9).map(tuple))
def test_unit_shift_zero_is_prefix(x, y):
    t = is_unit(x, y)
    if t == 0:
        assert y[: len(x)] == x[: len(y)]
    if t is not None:
        assert all(y[i] == x[(i - t) % len(x)] for i in range(len(y)))


def test_suffix_unit_shift():
    # 0010 ends with the rotation of 001 that starts at offset len(y) mod 3
    assert is_suffix_unit("010", "0010")
    assert not is_suffix_unit("001", "0010")
    for x, y in itertools.product(["01", "001"], ["0101", "010", "00100"]):
        t = len(y) % len(x)
        manual = all(y[i] == x[(i - t) % len(x)] for i in range(len(y))) and len(x) <= len(y)
        assert is_suffix_unit(x, y) == manual
