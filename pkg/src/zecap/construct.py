"""Quasi 2-code construction for one-edge graphs and the rates it certifies."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Tuple

from zecap.words import (
    Word,
    WordLike,
    as_word,
    format_word,
    longest_common_prefix,
    longest_common_suffix,
    reverse,
    shortest_prefix_unit_min_len,
)
from zecap.channel import CodeSet


class Status(str, Enum):
    EXACT = "EXACT"
    LOWER_BOUND = "LOWER_BOUND"
    MATCH = "MATCH"
    GAP = "GAP"


ROOT_TOL = 1e-12


@dataclass(frozen=True)
class RateBound:
    root: float
    rate: float
    exponents: Tuple[int, ...]
    status: Status = Status.LOWER_BOUND

    def exact(self) -> "RateBound":
        return replace(self, status=Status.EXACT)


class DegenerateRate(ValueError):
    """A single generator length has rate zero, which is never a useful bound."""


def characteristic_root(lengths: Iterable[int]) -> RateBound:
    """Positive root of ``sum(x**l for l in lengths) == 1`` by bisection on (0, 1)."""
    exps = tuple(sorted(int(l) for l in lengths))
    if not exps:
        raise ValueError("need at least one generator length")
    if any(l <= 0 for l in exps):
        raise ValueError(f"generator lengths must be positive, got {exps}")
    if len(exps) == 1:
        raise DegenerateRate(f"a single generator of length {exps[0]} gives root 1 and rate 0")
    counts = Counter(exps)

    def f(x: float) -> float:
        return sum(c * x**l for l, c in counts.items()) - 1.0

    lo, hi = 0.0, 1.0  # f(0) = -1, f(1) = T - 1 > 0, f increasing
    while hi - lo > ROOT_TOL:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    return RateBound(root, -math.log2(root), exps)


# --- core pair -------------------------------------------------------------


def _check_pair(u: WordLike, v: WordLike) -> tuple[Word, Word]:
    u, v = as_word(u), as_word(v)
    if len(u) != len(v):
        raise ValueError(f"{format_word(u)} and {format_word(v)} differ in length")
    if u == v:
        raise ValueError(f"edge endpoints must differ, got {format_word(u)} twice")
    return u, v


def normalize_orientation(u: WordLike, v: WordLike) -> tuple[Word, Word, bool]:
    """Reverse both words when their common suffix is longer than their common prefix."""
    u, v = _check_pair(u, v)
    if longest_common_prefix(u, v)[1] < longest_common_suffix(u, v)[1]:
        return reverse(u), reverse(v), True
    return u, v, False


@dataclass(frozen=True)
class CorePair:
    u: Word
    v: Word
    u_v: Word
    v_u: Word
    pre: Word
    reversed: bool

    @property
    def overlap(self) -> int:
        return len(self.pre)

    @property
    def lengths(self) -> tuple[int, int]:
        return len(self.u_v), len(self.v_u)


def _core_pair_oriented(u: Word, v: Word, reversed_: bool) -> CorePair:
    pre, lp = longest_common_prefix(u, v)
    min_len = len(u) - lp
    return CorePair(
        u,
        v,
        shortest_prefix_unit_min_len(u, min_len),
        shortest_prefix_unit_min_len(v, min_len),
        pre,
        reversed_,
    )


def derive_core_pair(u: WordLike, v: WordLike) -> CorePair:
    u2, v2, rev = normalize_orientation(u, v)
    return _core_pair_oriented(u2, v2, rev)


def candidate_core_pairs(u: WordLike, v: WordLike) -> list[CorePair]:
    """Core pairs for every admissible orientation (two when prefix and suffix tie)."""
    u, v = _check_pair(u, v)
    lp = longest_common_prefix(u, v)[1]
    ls = longest_common_suffix(u, v)[1]
    out = []
    if lp >= ls:
        out.append(_core_pair_oriented(u, v, False))
    if ls >= lp:
        out.append(_core_pair_oriented(reverse(u), reverse(v), True))
    return out


def best_core_pair(u: WordLike, v: WordLike) -> CorePair:
    """The candidate orientation with the highest rate; ties keep the unreversed one."""
    cands = candidate_core_pairs(u, v)
    return max(cands, key=lambda cp: (characteristic_root(cp.lengths).rate, not cp.reversed))


def quasi_two_code_bound(u: WordLike, v: WordLike) -> RateBound:
    return characteristic_root(best_core_pair(u, v).lengths)


def capacity_if_uniform(u: WordLike, v: WordLike) -> RateBound | None:
    """The bound marked exact when one endpoint is a constant word, else ``None``."""
    u, v = _check_pair(u, v)
    if len(set(u)) == 1 or len(set(v)) == 1:
        return quasi_two_code_bound(u, v).exact()
    return None


# --- star languages --------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    generators: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("generator set is empty")
        if any(len(g) == 0 for g in self.generators):
            raise ValueError("generators must be non-empty")

    @classmethod
    def of(cls, gens: Iterable[WordLike]) -> "GeneratorSet":
        return cls(tuple(as_word(g) for g in gens))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(g) for g in self.generators))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def _gens(gens) -> GeneratorSet:
    return gens if isinstance(gens, GeneratorSet) else GeneratorSet.of(gens)


def is_uniquely_decodable(gens) -> bool:
    """Sardinas-Patterson test; duplicated generators are never uniquely decodable."""
    code = list(_gens(gens))
    cset = set(code)
    if len(cset) != len(code):
        return False

    def dangling(a: set[Word], b: set[Word]) -> set[Word]:
        out = set()
        for x in a:
            for y in b:
                if len(x) < len(y) and y[: len(x)] == x:
                    out.add(y[len(x) :])
        return out

    current = dangling(cset, cset)
    seen: set[frozenset] = set()
    while current:
        if current & cset:
            return False
        key = frozenset(current)
        if key in seen:
            return True
        seen.add(key)
        current = dangling(current, cset) | dangling(cset, current)
    return True


def star_language(gens, n: int) -> set[Word]:
    """All length-``n`` concatenations of generators."""
    if n < 0:
        raise ValueError("length must be non-negative")
    gs = list(_gens(gens))
    table: list[set[Word]] = [{()}]
    for k in range(1, n + 1):
        layer: set[Word] = set()
        for g in gs:
            if len(g) <= k:
                layer.update(w + g for w in table[k - len(g)])
        table.append(layer)
    return table[n]


def count_star_language(gens, n: int) -> int:
    """Number of distinct length-``n`` concatenations.

    Uses the linear recurrence when the generators are uniquely decodable and
    falls back to enumeration otherwise.
    """
    gs = _gens(gens)
    if n < 0:
        raise ValueError("length must be non-negative")
    if not is_uniquely_decodable(gs):
        return len(star_language(gs, n))
    counts = [1] + [0] * n
    for k in range(1, n + 1):
        counts[k] = sum(counts[k - l] for l in gs.lengths if l <= k)
    return counts[n]


def build_quasi_code(u: WordLike, v: WordLike, n: int) -> CodeSet:
    """Length-``n`` star words over the core pair, each followed by the common prefix.

    Words are built in the orientation of :func:`best_core_pair` and mapped back
    by reversal when that orientation is reversed, so the result is always a
    code for ``G(u, v)`` itself.  Word length is ``n + len(pre)``.
    """
    cp = best_core_pair(u, v)
    body = star_language([cp.u_v, cp.v_u], n)
    words = {w + cp.pre for w in body}
    if cp.reversed:
        words = {reverse(w) for w in words}
    return CodeSet.of(words, n + len(cp.pre))


# --- Case 11 and the binary summary --------------------------------------

CASE11_WORDS = (
    "00100100100", "00100101001", "00100110010", "00110010010", "00110011001",
    "01001001001", "01001001100", "01001100100", "10000100001", "10010010010",
    "10010011001", "10010100100", "10011001001", "10011001100",
)


def case11_generators() -> GeneratorSet:
    return GeneratorSet.of(CASE11_WORDS)


@dataclass(frozen=True)
class KnownCapacity:
    """A capacity value (or interval) together with its symbolic form."""

    low: float
    high: float
    symbol: str

    @property
    def is_interval(self) -> bool:
        return self.high - self.low > 1e-12


def _alpha_rate() -> float:
    return characteristic_root((1, 3)).rate


def _beta_rate() -> float:
    return characteristic_root((2, 3)).rate


def _known(symbol: str) -> KnownCapacity:
    if symbol == "-log alpha":
        r = _alpha_rate()
        return KnownCapacity(r, r, symbol)
    if symbol == "-log beta":
        r = _beta_rate()
        return KnownCapacity(r, r, symbol)
    if symbol == "1/2":
        return KnownCapacity(0.5, 0.5, symbol)
    if symbol == "1/3":
        return KnownCapacity(1 / 3, 1 / 3, symbol)
    if symbol == "[log14/11, -log beta]":
        return KnownCapacity(math.log2(14) / 11, _beta_rate(), symbol)
    raise KeyError(symbol)


# Published case data for binary one-edge graphs with two memories.
TABLE1_CASES: Tuple[Tuple[int, Tuple[str, ...], str], ...] = (
    (1, ("000-001", "000-100", "111-110", "111-011"), "-log alpha"),
    (2, ("000-010", "111-101"), "1/2"),
    (3, ("000-011", "000-110", "111-100", "111-001"), "-log beta"),
    (4, ("010-011", "010-110", "101-100", "101-001"), "-log beta"),
    (5, ("010-001", "010-100", "101-110", "101-011"), "-log beta"),
    (6, ("000-111",), "1/3"),
    (7, ("010-101",), "1/3"),
    (8, ("100-011", "110-001"), "1/3"),
    (9, ("000-101", "111-010"), "1/3"),
    (10, ("001-011", "110-100"), "1/3"),
    (11, ("001-100", "110-011"), "[log14/11, -log beta]"),
)

# Case 10 has been quoted with -log beta next to its capacity of 1/3, so the
# computed bound is reported rather than assumed.
CASE_NOTES = {
    10: "proof text quotes lower bound -log beta; computed quasi 2-code bound is 1/3, equal to the stated capacity",
    11: "quasi 2-code rate 1/3 is below the 14-word code rate log14/11; capacity not determined",
}

MATCH_TOL = 1e-6


@dataclass
class Table1Row:
    case: int
    members: list[str]
    canonical: str
    listed: str
    len_u_v: int
    len_v_u: int
    bound: RateBound
    capacity: KnownCapacity
    status: Status
    orientations: list[dict] = field(default_factory=list)
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "members": self.members,
            "canonical": self.canonical,
            "listed": self.listed,
            "len_u_v": self.len_u_v,
            "len_v_u": self.len_v_u,
            "bound_bits": self.bound.rate,
            "capacity_low_bits": self.capacity.low,
            "capacity_high_bits": self.capacity.high,
            "capacity_symbol": self.capacity.symbol,
            "status": self.status.value,
            "orientations": self.orientations,
            "note": self.note,
        }


def _pair_text(g) -> str:
    (a, b), = g.edges
    return f"{format_word(a)}-{format_word(b)}"


def _norm_pair_text(text: str) -> str:
    a, b = text.split("-")
    return "-".join(sorted((a, b)))


def table1_binary_m2() -> list[Table1Row]:
    """Classify the 28 binary two-memory one-edge graphs and attach bounds and capacities."""
    from zecap.channel import classify_interchangeable, enumerate_one_edge_graphs

    classes = classify_interchangeable(enumerate_one_edge_graphs(2, 2))
    by_members = {frozenset(_pair_text(g) for g in c.members): c for c in classes}
    rows = []
    for case, listed, symbol in TABLE1_CASES:
        key = frozenset(_norm_pair_text(p) for p in listed)
        cls = by_members.get(key)
        if cls is None:
            raise RuntimeError(f"case {case} members {sorted(key)} do not form a symmetry class")
        (u, v), = cls.canonical.edges
        cp = best_core_pair(u, v)
        bound = characteristic_root(cp.lengths)
        known = _known(symbol)
        exact = capacity_if_uniform(u, v)
        if known.is_interval:
            status = Status.GAP
        elif abs(bound.rate - known.low) > MATCH_TOL:
            status = Status.LOWER_BOUND
        elif exact is not None:
            status = Status.EXACT
        else:
            status = Status.MATCH
        orientations = [
            {
                "reversed": c.reversed,
                "u_v": format_word(c.u_v),
                "v_u": format_word(c.v_u),
                "pre": format_word(c.pre),
                "bound_bits": characteristic_root(c.lengths).rate,
            }
            for c in candidate_core_pairs(u, v)
        ]
        rows.append(
            Table1Row(
                case=case,
                members=sorted(_pair_text(g) for g in cls.members),
                canonical=_pair_text(cls.canonical),
                listed=listed[0],
                len_u_v=len(cp.u_v),
                len_v_u=len(cp.v_u),
                bound=bound,
                capacity=known,
                status=status,
                orientations=orientations,
                note=CASE_NOTES.get(case, ""),
            )
        )
    if len(rows) != len(classes):
        raise RuntimeError(f"{len(classes)} symmetry classes but {len(rows)} published cases")
    return rows
