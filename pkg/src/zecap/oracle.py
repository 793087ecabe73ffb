"""Exact maximum-code search for small lengths, and checks on the resulting size tables.

Words whose windows hit the same positive-degree vertices at the same places
are pairwise indistinguishable and behave identically against every other
word, so the search runs over these profile classes and keeps at most one word
per class.  The largest code is then a maximum clique of the distinguishability
graph on classes.
"""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from zecap import kernels
from zecap.channel import ChannelGraph, CodeSet
from zecap.words import WordLike, as_word

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Profile:
    u_positions: frozenset
    v_positions: frozenset


def profile(x: WordLike, u: WordLike, v: WordLike) -> Profile:
    x, u, v = as_word(x), as_word(u), as_word(v)
    k = len(u)
    su, sv = set(), set()
    for i in range(len(x) - k + 1):
        w = x[i : i + k]
        if w == u:
            su.add(i)
        elif w == v:
            sv.add(i)
    return Profile(frozenset(su), frozenset(sv))


def profiles_distinguishable(a: Profile, b: Profile) -> bool:
    return bool((a.u_positions & b.v_positions) or (a.v_positions & b.u_positions))


@dataclass(frozen=True)
class SearchResult:
    n: int
    max_size: int
    witness: CodeSet
    nodes_explored: int
    status: str
    classes: int = 0

    def as_dict(self) -> dict:
        from zecap.words import format_word

        return {
            "n": self.n,
            "max_size": self.max_size,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "classes": self.classes,
            "witness": [format_word(w) for w in self.witness.sorted()],
        }


def all_words(q: int, n: int) -> np.ndarray:
    """Every word of length ``n`` as rows of an array, in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int32)
    grid = np.indices((q,) * n, dtype=np.int32).reshape(n, -1).T
    return np.ascontiguousarray(grid)


def label_array(words: np.ndarray, g: ChannelGraph) -> np.ndarray:
    """Vectorised window labelling; see :func:`zecap.channel.window_labels`."""
    ids, _ = g.edge_matrix()
    sentinel = len(ids)
    k = g.m + 1
    n = words.shape[1]
    n_windows = max(0, n - k + 1)
    if n_windows == 0:
        return np.zeros((words.shape[0], 0), dtype=np.int32)
    weights = g.q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    lookup = {sum(s * int(w) for s, w in zip(vert, weights)): i for vert, i in ids.items()}
    codes = np.zeros((words.shape[0], n_windows), dtype=np.int64)
    for off in range(k):
        codes += words[:, off : off + n_windows].astype(np.int64) * weights[off]
    out = np.full(codes.shape, sentinel, dtype=np.int32)
    for code, i in lookup.items():
        out[codes == code] = i
    return out


def _popcounts(bits: np.ndarray) -> np.ndarray:
    return np.unpackbits(bits.view(np.uint8), axis=1).sum(axis=1)


def _greedy_clique(bits: np.ndarray) -> list[int]:
    """Greedy clique in the given vertex order (callers sort by degree first)."""
    chosen: list[int] = []
    for v in range(bits.shape[0]):
        if all(bits[c, v >> 6] >> np.uint64(v & 63) & np.uint64(1) for c in chosen):
            chosen.append(v)
    return chosen


def max_code_exact(
    g: ChannelGraph, n: int, budget: int = DEFAULT_BUDGET, *, compress: bool = True, lexmin: bool = True
) -> SearchResult:
    """Largest code of length ``n`` for ``g`` by exhaustive branch and bound.

    ``status`` is ``"EXACT"`` when the search finished inside ``budget`` nodes
    and ``"LOWER_BOUND"`` otherwise.  With ``lexmin`` the witness is the
    lexicographically least optimal code (as a sorted word list); if the node
    budget runs out during that second pass the first optimum found is kept.
    """
    if n < 1:
        raise ValueError("length must be at least 1")
    words = all_words(g.q, n)
    if n < g.m + 1 or not g.edges:
        w0 = tuple(int(s) for s in words[0])
        return SearchResult(n, 1, CodeSet.of([w0]), 0, "EXACT", 1)

    labels = label_array(words, g)
    if compress:
        _, first = np.unique(labels, axis=0, return_index=True)
        reps = np.sort(first)
    else:
        reps = np.arange(words.shape[0])
    rep_labels = np.ascontiguousarray(labels[reps])
    _, emat = g.edge_matrix()

    degree = _popcounts(kernels.adjacency_bitsets(rep_labels, emat))
    order = np.lexsort((np.arange(len(reps)), -degree))
    dbits = kernels.adjacency_bitsets(np.ascontiguousarray(rep_labels[order]), emat)
    seed = _greedy_clique(dbits)
    found, nodes, complete = kernels.max_clique(dbits, lower_bound=len(seed), budget=budget)
    best = [int(order[i]) for i in (found or seed)]
    status = "EXACT" if complete else "LOWER_BOUND"
    log.debug("n=%d classes=%d size=%d nodes=%d %s", n, len(reps), len(best), nodes, status)

    if lexmin and complete:
        # visit in lexicographic order while keeping the degree-ordered bitsets
        rank = np.empty_like(order)
        rank[order] = np.arange(len(order))
        lex, more, ok = kernels.first_clique(dbits, len(best), budget=max(budget - nodes, 1), visit=rank)
        nodes += more
        if ok and lex is not None:
            best = [int(order[i]) for i in lex]
    witness = CodeSet.of((tuple(int(s) for s in words[reps[i]]) for i in best), n)
    return SearchResult(n, len(best), witness, int(nodes), status, len(reps))


def size_table(g: ChannelGraph, n_max: int, budget: int = DEFAULT_BUDGET, *, lexmin: bool = False) -> dict[int, int]:
    """Exact ``{n: max code size}`` for ``0 <= n <= n_max`` (``n = 0`` is the empty word)."""
    out = {0: 1}
    for n in range(1, n_max + 1):
        res = max_code_exact(g, n, budget, lexmin=lexmin)
        if res.status != "EXACT":
            raise RuntimeError(f"search budget exhausted at n={n}")
        out[n] = res.max_size
    return out


def superadditivity_check(sizes: Mapping[int, int]) -> bool:
    """``sizes[a + b] >= sizes[a] * sizes[b]`` for every pair whose sum is tabulated."""
    for a, b in itertools.combinations_with_replacement(sorted(sizes), 2):
        if a + b in sizes and sizes[a + b] < sizes[a] * sizes[b]:
            return False
    return True


def recurrence_residuals(sizes: Mapping[int, int], offsets: Iterable[int]) -> list[tuple[int, int]]:
    """Slack ``sum(sizes[n - o] for o in offsets) - sizes[n]`` for every ``n`` it is defined at.

    The range starts at ``min(sizes) + max(offsets)``; a gap in the table
    inside that range raises ``KeyError``.
    """
    offsets = list(offsets)
    if not offsets or any(o <= 0 for o in offsets):
        raise ValueError("offsets must be positive")
    lo = min(sizes) + max(offsets)
    out = []
    for n in range(lo, max(sizes) + 1):
        need = [n] + [n - o for o in offsets]
        missing = [k for k in need if k not in sizes]
        if missing:
            raise KeyError(f"size table lacks lengths {missing}")
        out.append((n, sum(sizes[n - o] for o in offsets) - sizes[n]))
    return out


def load_size_tables(path: str | Path) -> dict[str, dict[int, int]]:
    p = Path(path)
    if not p.exists():
        return {}
    raw = json.loads(p.read_text())
    return {k: {int(n): int(s) for n, s in v.items()} for k, v in raw.items()}


def save_size_tables(tables: Mapping[str, Mapping[int, int]], path: str | Path) -> None:
    data = {k: {str(n): s for n, s in sorted(v.items())} for k, v in sorted(tables.items())}
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def graph_key(g: ChannelGraph) -> str:
    from zecap.words import format_word

    edges = ",".join(f"{format_word(a)}-{format_word(b)}" for a, b in g.sorted_edges)
    return f"q{g.q}m{g.m}:{edges}"
