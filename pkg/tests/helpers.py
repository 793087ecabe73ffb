"""Shared generators for randomized tests."""

import random

from zecap.channel import ChannelGraph, CodeSet, is_code, single_edge
from zecap.construct import best_core_pair, star_language
from zecap.surgery import (
    apply_deletion,
    apply_replacement,
    deletion_admissible,
    replacement_admissible,
)


def random_single_edge(rng: random.Random, q: int, m: int) -> ChannelGraph:
    k = m + 1
    while True:
        u = tuple(rng.randrange(q) for _ in range(k))
        v = tuple(rng.randrange(q) for _ in range(k))
        if u != v:
            return single_edge(u, v, q)


def prefix_invariant_holds(u, v, n) -> bool:
    """Every word of the oriented construction starts with the common prefix of its core pair."""
    cp = best_core_pair(u, v)
    k = cp.overlap
    return all((w + cp.pre)[:k] == cp.u[:k] for w in star_language([cp.u_v, cp.v_u], n))


def random_replacement(rng: random.Random, code: CodeSet, g: ChannelGraph):
    """Pick a codeword and a random admissible coordinate set, then rewrite those coordinates.

    Returns ``None`` when no codeword has an admissible coordinate.
    """
    n = code.n
    words = code.sorted()
    rng.shuffle(words)
    for x in words:
        ok = [i for i in range(n) if replacement_admissible(x, {i}, g)]
        if not ok:
            continue
        s = set(rng.sample(ok, rng.randint(1, len(ok))))
        assert replacement_admissible(x, s, g)
        x_new = tuple(rng.randrange(g.q) if i in s else c for i, c in enumerate(x))
        return x, x_new, s
    return None


def random_deletion_set(rng: random.Random, code: CodeSet, g: ChannelGraph):
    ok = [i for i in range(code.n) if deletion_admissible(code, {i}, g)]
    if not ok:
        return set()
    s = set(rng.sample(ok, rng.randint(1, len(ok))))
    return s if deletion_admissible(code, s, g) else {rng.choice(ok)}


def surgery_trial(rng: random.Random, code: CodeSet, g: ChannelGraph) -> dict:
    """One replacement followed by one deletion on a subcode of ``code``."""
    size = rng.randint(min(2, len(code)), len(code))
    sub = CodeSet(code.n, frozenset(rng.sample(code.sorted(), size)))
    out = {"replaced": False, "deleted": 0, "ok": True}
    rep = random_replacement(rng, sub, g)
    if rep is not None:
        x, x_new, s = rep
        sub2 = apply_replacement(sub, x, x_new, s, g)
        out["replaced"] = True
        out["ok"] &= len(sub2) == len(sub) and is_code(sub2.words, g)
        sub = sub2
    s = random_deletion_set(rng, sub, g)
    if s and len(s) < sub.n:
        sub2 = apply_deletion(sub, s, g)
        out["deleted"] = len(s)
        out["ok"] &= len(sub2) == len(sub) and (len(sub2) < 2 or is_code(sub2.words, g))
    return out
