import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zecap.channel import (
    ChannelGraph,
    CodeSet,
    apply_transform,
    classify_interchangeable,
    distinguishable,
    enumerate_one_edge_graphs,
    first_violation,
    interchangeable,
    is_code,
    load_graph,
    read_words,
    save_graph,
    single_edge,
    t_permute,
    t_reverse,
    transform_word,
)
from zecap.words import parse_word

W = parse_word
BINARY_M2 = enumerate_one_edge_graphs(2, 2)


def slow_distinguishable(x, y, g):
    k = g.m + 1
    return any({x[i : i + k], y[i : i + k]} in [set(e) for e in g.edges] for i in range(len(x) - k + 1))


def test_graph_validation():
    with pytest.raises(ValueError):
        ChannelGraph(2, 2, frozenset([(W("000"), W("00"))]))
    with pytest.raises(ValueError):
        ChannelGraph(2, 2, frozenset([(W("000"), W("000"))]))
    with pytest.raises(ValueError):
        ChannelGraph(2, 1, frozenset([(W("02"), W("00"))]))
    g = ChannelGraph.from_edges([("001", "000"), ("000", "001")])
    assert g.sorted_edges == [(W("000"), W("001"))]


@pytest.mark.parametrize(
    "x, y, expected", [("000", "001", 0), ("0000", "0001", 1), ("010", "001", None), ("00", "01", None)]
)
def test_distinguishable(g000_001, x, y, expected):
    assert distinguishable(x, y, g000_001) == expected


def test_distinguishable_length_mismatch(g000_001):
    with pytest.raises(ValueError):
        distinguishable("000", "0001", g000_001)


def test_is_code_examples(g000_001):
    g = single_edge("000", "111")
    square = [a + b for a in ("000", "111") for b in ("000", "111")]
    assert is_code(square, g)
    assert first_violation(["000", "010"], g000_001) == (W("000"), W("010"))
    assert is_code(["0101"], g000_001)
    with pytest.raises(ValueError):
        is_code(["000", "0000"], g000_001)


def test_short_codes_never_valid():
    g = single_edge("000", "001")
    for n in (1, 2):
        words = list(itertools.product((0, 1), repeat=n))
        for a, b in itertools.combinations(words, 2):
            assert not is_code([a, b], g)


@pytest.mark.parametrize("g", BINARY_M2, ids=str)
def test_block_code_is_code(g):
    (u, v), = g.edges
    for k in range(1, 5):
        words = [sum(blocks, ()) for blocks in itertools.product((u, v), repeat=k)]
        assert len(set(words)) == 2**k
        assert is_code(words, g)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_first_violation_matches_pairwise_scan(data):
    rnd = random.Random(data.draw(st.integers(0, 10**6)))
    g = rnd.choice(BINARY_M2)
    n = rnd.randint(3, 8)
    words = {tuple(rnd.randint(0, 1) for _ in range(n)) for _ in range(rnd.randint(1, 8))}
    ws = sorted(words)
    expected = next(
        ((a, b) for a, b in itertools.combinations(ws, 2) if not slow_distinguishable(a, b, g)), None
    )
    assert first_violation(ws, g) == expected
    assert first_violation(list(reversed(ws)), g) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_distinguishable_symmetric(seed):
    rnd = random.Random(seed)
    g = rnd.choice(BINARY_M2)
    n = rnd.randint(1, 9)
    x = tuple(rnd.randint(0, 1) for _ in range(n))
    y = tuple(rnd.randint(0, 1) for _ in range(n))
    assert (distinguishable(x, y, g) is None) == (distinguishable(y, x, g) is None)
    assert (distinguishable(x, y, g) is not None) == slow_distinguishable(x, y, g)


def test_transforms():
    assert t_reverse(single_edge("000", "100")) == single_edge("000", "001")
    assert t_permute(single_edge("000", "001"), (1, 0)) == single_edge("111", "110")
    g = single_edge("010", "011")
    assert t_permute(g, (0, 1)) == g
    with pytest.raises(ValueError):
        t_permute(g, (0, 1, 2))


def test_interchangeable_examples():
    assert interchangeable(single_edge("000", "001"), single_edge("111", "110")) == ((1, 0), False)
    assert interchangeable(single_edge("000", "001"), single_edge("000", "010")) is None
    g = single_edge("001", "100")
    assert interchangeable(g, g) == ((0, 1), False)
    with pytest.raises(ValueError):
        interchangeable(single_edge("00", "01"), g)


def test_interchangeability_is_equivalence():
    rel = {(a, b): interchangeable(a, b) is not None for a in BINARY_M2 for b in BINARY_M2}
    for a in BINARY_M2:
        assert rel[a, a]
        for b in BINARY_M2:
            assert rel[a, b] == rel[b, a]
            for c in BINARY_M2:
                if rel[a, b] and rel[b, c]:
                    assert rel[a, c]


@pytest.mark.parametrize("q, m, count", [(2, 2, 28), (2, 1, 6), (2, 0, 1), (3, 1, 36)])
def test_enumerate_counts(q, m, count):
    assert len(enumerate_one_edge_graphs(q, m)) == count


def test_classify_binary_m2_table_sizes():
    classes = classify_interchangeable(BINARY_M2)
    assert len(classes) == 11
    assert sorted(len(c) for c in classes) == sorted([4, 2, 4, 4, 4, 1, 1, 2, 2, 2, 2])
    assert sum(len(c) for c in classes) == 28
    for c in classes:
        assert c.canonical == c.members[0]
        for member, t in zip(c.members, c.transforms):
            assert apply_transform(c.canonical, t) == member


def test_classify_binary_m1_by_hand():
    classes = classify_interchangeable(enumerate_one_edge_graphs(2, 1))
    got = sorted(sorted(str(g) for g in c.members) for c in classes)
    # flip and reversal orbit of 00-01; 00-11 and 01-10 are fixed by both maps
    expected = sorted(
        [
            sorted(str(single_edge(a, b)) for a, b in [("00", "01"), ("00", "10"), ("11", "10"), ("11", "01")]),
            [str(single_edge("00", "11"))],
            [str(single_edge("01", "10"))],
        ]
    )
    assert got == expected


def test_classify_single_graph():
    assert len(classify_interchangeable([single_edge("010", "011")])) == 1


@pytest.mark.parametrize("g", BINARY_M2, ids=str)
def test_transformed_code_stays_code(g):
    (u, v), = g.edges
    code = [a + b for a in (u, v) for b in (u, v)]
    for perm in itertools.permutations(range(2)):
        for rev in (False, True):
            t = (perm, rev)
            assert is_code([transform_word(w, t) for w in code], apply_transform(g, t))


def test_graph_json_roundtrip(tmp_path, four_edge_graph):
    path = tmp_path / "g.json"
    save_graph(four_edge_graph, path)
    assert load_graph(path) == four_edge_graph
    data = json.loads(path.read_text())
    assert data["q"] == 2 and data["m"] == 2 and len(data["edges"]) == 4
    with pytest.raises(ValueError):
        ChannelGraph.from_json({"q": 2, "m": 2, "edges": [["000", "002"]]})
    with pytest.raises(ValueError):
        ChannelGraph.from_json({"q": 2, "edges": []})


def test_read_words_with_comments(tmp_path):
    path = tmp_path / "code.txt"
    path.write_text("# header\n000  # first\n\n111\n")
    assert read_words(path) == [W("000"), W("111")]
    path.write_text("0-0\n")
    with pytest.raises(ValueError, match="code.txt:1"):
        read_words(path)


def test_codeset():
    c = CodeSet.of(["01", "00"])
    assert c.n == 2 and len(c) == 2 and c.sorted() == [W("00"), W("01")]
    assert c.to_text() == "00\n01\n"
    with pytest.raises(ValueError):
        CodeSet.of(["0", "00"])
    with pytest.raises(ValueError):
        CodeSet.of([])
