"""Channel graphs over X^(m+1), distinguishability and symmetry classes."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Tuple

import numpy as np

from zecap import kernels
from zecap.words import Word, WordLike, as_word, format_word, parse_word, permute, reverse

Edge = Tuple[Word, Word]
Transform = Tuple[Tuple[int, ...], bool]


def _edge(a: Word, b: Word) -> Edge:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class ChannelGraph:
    """Graph whose vertices are the words of length ``m + 1`` over ``q`` symbols.

    Only edges are stored; every other vertex has degree zero.
    """

    q: int
    m: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError(f"alphabet size must be positive, got {self.q}")
        if self.m < 0:
            raise ValueError(f"memory must be non-negative, got {self.m}")
        clean = set()
        for a, b in self.edges:
            a, b = as_word(a), as_word(b)
            for w in (a, b):
                if len(w) != self.m + 1:
                    raise ValueError(
                        f"vertex {format_word(w)} has length {len(w)}, expected {self.m + 1}"
                    )
                if any(not 0 <= s < self.q for s in w):
                    raise ValueError(f"vertex {format_word(w)} outside alphabet of size {self.q}")
            if a == b:
                raise ValueError(f"self-loop on {format_word(a)}")
            clean.add(_edge(a, b))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[WordLike, WordLike]], q: int | None = None) -> "ChannelGraph":
        pairs = [(as_word(a), as_word(b)) for a, b in edges]
        if not pairs:
            raise ValueError("cannot infer memory from an empty edge list")
        m = len(pairs[0][0]) - 1
        if q is None:
            q = max(2, 1 + max(max(a + b) for a, b in pairs))
        return cls(q, m, frozenset(pairs))

    @property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: Word, b: Word) -> bool:
        return _edge(a, b) in self.edges

    def degree(self, w: WordLike) -> int:
        w = as_word(w)
        return sum(1 for a, b in self.edges if w in (a, b))

    def active_vertices(self) -> list[Word]:
        """Vertices of positive degree, sorted."""
        return sorted({w for e in self.edges for w in e})

    def edge_matrix(self) -> tuple[dict[Word, int], np.ndarray]:
        """Compact ids for active vertices plus a sentinel id for all degree-zero vertices."""
        active = self.active_vertices()
        ids = {w: i for i, w in enumerate(active)}
        mat = np.zeros((len(active) + 1, len(active) + 1), dtype=np.uint8)
        for a, b in self.edges:
            mat[ids[a], ids[b]] = mat[ids[b], ids[a]] = 1
        return ids, mat

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "edges": [[format_word(a), format_word(b)] for a, b in self.sorted_edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChannelGraph":
        try:
            q, m, raw = int(data["q"]), int(data["m"]), data["edges"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"graph JSON needs integer 'q', 'm' and an 'edges' list: {exc}") from None
        edges = []
        for pair in raw:
            if len(pair) != 2:
                raise ValueError(f"edge {pair!r} must have exactly two endpoints")
            edges.append((parse_word(pair[0], q), parse_word(pair[1], q)))
        return cls(q, m, frozenset(edges))

    def __str__(self) -> str:
        body = ", ".join(f"{format_word(a)}-{format_word(b)}" for a, b in self.sorted_edges)
        return f"G[q={self.q}, m={self.m}]({body})"


def single_edge(u: WordLike, v: WordLike, q: int | None = None) -> ChannelGraph:
    """The graph ``G(u, v)`` whose only edge joins ``u`` and ``v``."""
    u, v = as_word(u), as_word(v)
    if len(u) != len(v):
        raise ValueError(f"{format_word(u)} and {format_word(v)} differ in length")
    if len(u) == 0:
        raise ValueError("vertices must be non-empty")
    return ChannelGraph.from_edges([(u, v)], q=q)


def load_graph(path: str | Path) -> ChannelGraph:
    with open(path) as fh:
        return ChannelGraph.from_json(json.load(fh))


def save_graph(g: ChannelGraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(g.to_json(), indent=2) + "\n")


# --- codes -----------------------------------------------------------------


@dataclass(frozen=True)
class CodeSet:
    n: int
    words: frozenset

    @classmethod
    def of(cls, words: Iterable[WordLike], n: int | None = None) -> "CodeSet":
        ws = frozenset(as_word(w) for w in words)
        lengths = {len(w) for w in ws}
        if len(lengths) > 1:
            raise ValueError(f"code words have mixed lengths {sorted(lengths)}")
        if n is None:
            if not lengths:
                raise ValueError("length of an empty code must be given")
            n = lengths.pop()
        elif lengths and lengths != {n}:
            raise ValueError(f"code words have length {lengths.pop()}, expected {n}")
        return cls(n, ws)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.words))

    def __contains__(self, w: object) -> bool:
        return w in self.words

    def sorted(self) -> list[Word]:
        return sorted(self.words)

    def to_text(self) -> str:
        return "".join(format_word(w) + "\n" for w in self.sorted())


def read_words(path: str | Path, q: int | None = None) -> list[Word]:
    """Newline-delimited words; ``#`` starts a comment, blank lines are skipped."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            out.append(parse_word(text, q))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return out


def window_labels(words: Sequence[Word], g: ChannelGraph) -> np.ndarray:
    """Compact vertex id of every length-(m+1) window of every word.

    Degree-zero windows all share the sentinel id, so equal label rows mean the
    two words can never be told apart.
    """
    ids, _ = g.edge_matrix()
    sentinel = len(ids)
    k = g.m + 1
    n = len(words[0]) if words else 0
    n_windows = max(0, n - k + 1)
    out = np.full((len(words), n_windows), sentinel, dtype=np.int32)
    for r, w in enumerate(words):
        for i in range(n_windows):
            out[r, i] = ids.get(w[i : i + k], sentinel)
    return out


def distinguishable(x: WordLike, y: WordLike, g: ChannelGraph) -> int | None:
    """Smallest window index where ``x`` and ``y`` show the two ends of an edge."""
    x, y = as_word(x), as_word(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    k = g.m + 1
    for i in range(len(x) - k + 1):
        a, b = x[i : i + k], y[i : i + k]
        if a != b and _edge(a, b) in g.edges:
            return i
    return None


def first_violation(words: Iterable[WordLike], g: ChannelGraph) -> Tuple[Word, Word] | None:
    """First pair (in sorted order) of distinct words that ``g`` cannot separate."""
    ws = sorted({as_word(w) for w in words})
    if len({len(w) for w in ws}) > 1:
        raise ValueError("code words have mixed lengths")
    if len(ws) < 2:
        return None
    _, mat = g.edge_matrix()
    pair = kernels.first_indistinguishable_pair(window_labels(ws, g), mat)
    if pair is None:
        return None
    return ws[pair[0]], ws[pair[1]]


def is_code(words: Iterable[WordLike], g: ChannelGraph) -> bool:
    return first_violation(words, g) is None


# --- symmetry --------------------------------------------------------------


def t_reverse(g: ChannelGraph) -> ChannelGraph:
    return ChannelGraph(g.q, g.m, frozenset((reverse(a), reverse(b)) for a, b in g.edges))


def t_permute(g: ChannelGraph, perm: Sequence[int]) -> ChannelGraph:
    if len(perm) != g.q:
        raise ValueError(f"permutation of length {len(perm)} does not act on {g.q} symbols")
    return ChannelGraph(g.q, g.m, frozenset((permute(a, perm), permute(b, perm)) for a, b in g.edges))


def apply_transform(g: ChannelGraph, transform: Transform) -> ChannelGraph:
    perm, reversed_ = transform
    return t_permute(t_reverse(g) if reversed_ else g, perm)


def transform_word(w: WordLike, transform: Transform) -> Word:
    perm, reversed_ = transform
    w = as_word(w)
    return permute(reverse(w) if reversed_ else w, perm)


def _transforms(q: int) -> Iterator[Transform]:
    for reversed_ in (False, True):
        for perm in itertools.permutations(range(q)):
            yield perm, reversed_


def interchangeable(g1: ChannelGraph, g2: ChannelGraph) -> Transform | None:
    """A ``(permutation, reversed)`` pair mapping ``g1`` onto ``g2``, if any.

    Tries the plain permutations before the reversed ones, each in
    lexicographic order, so the identity wins whenever it applies.
    """
    if (g1.q, g1.m) != (g2.q, g2.m):
        raise ValueError("graphs differ in alphabet size or memory")
    if len(g1.edges) != len(g2.edges):
        return None
    for t in _transforms(g1.q):
        if apply_transform(g1, t) == g2:
            return t
    return None


def enumerate_one_edge_graphs(q: int, m: int) -> list[ChannelGraph]:
    if q < 2 or m < 0:
        raise ValueError("need q >= 2 and m >= 0")
    verts = list(itertools.product(range(q), repeat=m + 1))
    return [ChannelGraph(q, m, frozenset([(a, b)])) for a, b in itertools.combinations(verts, 2)]


@dataclass(frozen=True)
class SymmetryClass:
    canonical: ChannelGraph
    members: tuple
    transforms: tuple

    def __len__(self) -> int:
        return len(self.members)


def _key(g: ChannelGraph) -> tuple:
    return tuple(g.sorted_edges)


def classify_interchangeable(graphs: Iterable[ChannelGraph]) -> list[SymmetryClass]:
    """Partition graphs into interchangeability classes.

    The canonical member of each class is the one with the least sorted edge
    list; classes are returned sorted by canonical member, and each transform
    maps the canonical graph onto the corresponding member.
    """
    graphs = sorted(set(graphs), key=_key)
    if not graphs:
        return []
    q, m = graphs[0].q, graphs[0].m
    if any((g.q, g.m) != (q, m) for g in graphs):
        raise ValueError("graphs differ in alphabet size or memory")
    remaining = set(graphs)
    classes = []
    for g in graphs:
        if g not in remaining:
            continue
        members, transforms = [], []
        for t in _transforms(q):
            image = apply_transform(g, t)
            if image in remaining:
                remaining.discard(image)
                members.append(image)
                transforms.append(t)
        order = sorted(range(len(members)), key=lambda i: _key(members[i]))
        classes.append(
            SymmetryClass(g, tuple(members[i] for i in order), tuple(transforms[i] for i in order))
        )
    return classes
