import os
import subprocess
import sys

import networkx as nx
import numpy as np
import pytest

from zecap import _pykernels, kernels
from zecap.channel import single_edge
from zecap.oracle import all_words, label_array

ck = pytest.importorskip("zecap._ckernels")
BACKENDS = [_pykernels, ck]


def random_bitsets(rng, n, p):
    adj = np.triu(rng.random((n, n)) < p, 1)
    adj = adj | adj.T
    return adj, _pykernels.pack_adjacency(adj)


def word_case(n, u="001", v="100"):
    g = single_edge(u, v)
    _, emat = g.edge_matrix()
    return label_array(all_words(2, n), g), emat


def test_backend_selected():
    expected = "python" if os.environ.get("ZECAP_PURE", "") not in ("", "0") else "compiled"
    assert kernels.BACKEND == expected


def test_pure_backend_env():
    out = subprocess.run(
        [sys.executable, "-c", "from zecap import kernels; print(kernels.BACKEND)"],
        env={"ZECAP_PURE": "1", "PATH": ""},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("n", [3, 6, 9])
def test_matrix_and_bitsets_agree(n):
    labels, emat = word_case(n)
    mats = [b.distinguishability_matrix(labels, emat) for b in BACKENDS]
    assert np.array_equal(mats[0].astype(bool), mats[1].astype(bool))
    bits = [b.adjacency_bitsets(labels, emat) for b in BACKENDS]
    assert np.array_equal(bits[0], bits[1])
    assert np.array_equal(bits[0], _pykernels.pack_adjacency(mats[0].astype(bool)))


def test_first_indistinguishable_pair():
    labels, emat = word_case(5)
    assert _pykernels.first_indistinguishable_pair(labels, emat) == ck.first_indistinguishable_pair(labels, emat)
    assert ck.first_indistinguishable_pair(labels, emat) is not None
    code = labels[[0, 1]]
    assert ck.first_indistinguishable_pair(code, emat) == _pykernels.first_indistinguishable_pair(code, emat)


@pytest.mark.parametrize("seed", range(40))
def test_clique_parity_with_networkx(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 70))
    adj, bits = random_bitsets(rng, n, float(rng.uniform(0.2, 0.9)))
    G = nx.from_numpy_array(adj.astype(int))
    cliques = [tuple(sorted(c)) for c in nx.find_cliques(G)]
    w = max(len(c) for c in cliques)
    lexmin = min(c for c in cliques if len(c) == w)
    for b in BACKENDS:
        clique, _, complete = b.max_clique(bits)
        assert complete and len(clique) == w
        assert all(adj[a, c] for a, c in zip(clique, clique[1:]))
        first, _, ok = b.first_clique(bits, w)
        assert ok and tuple(sorted(first)) == lexmin
        none, _, ok = b.first_clique(bits, w + 1)
        assert ok and none is None


@pytest.mark.parametrize("seed", range(10))
def test_visit_order_parity(seed):
    rng = np.random.default_rng(100 + seed)
    adj, bits = random_bitsets(rng, 50, 0.6)
    visit = rng.permutation(50)
    w = len(ck.max_clique(bits)[0])
    got = [tuple(sorted(b.first_clique(bits, w, visit=visit)[0])) for b in BACKENDS]
    assert got[0] == got[1]


def test_lower_bound_and_budget():
    rng = np.random.default_rng(7)
    adj, bits = random_bitsets(rng, 60, 0.7)
    for b in BACKENDS:
        w = len(b.max_clique(bits)[0])
        clique, _, complete = b.max_clique(bits, lower_bound=w)
        assert complete and len(clique) == 0
        _, nodes, complete = b.max_clique(bits, budget=3)
        assert not complete
