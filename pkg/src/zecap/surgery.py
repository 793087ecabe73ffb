"""Local code surgery: replacing coordinates next to isolated vertices, and deleting
coordinates on which no pair of codewords can be told apart.
"""

from __future__ import annotations

from typing import Iterable

from zecap.channel import ChannelGraph, CodeSet, first_violation
from zecap.words import Word, WordLike, as_word, format_word


class SurgeryError(ValueError):
    pass


def _coords(s: Iterable[int], n: int) -> frozenset[int]:
    s = frozenset(int(i) for i in s)
    bad = [i for i in s if not 0 <= i < n]
    if bad:
        raise SurgeryError(f"coordinates {sorted(bad)} outside 0..{n - 1}")
    return s


def index_window(s: Iterable[int], m: int, n: int) -> set[int]:
    """Start indices of every length-(m+1) window that covers a coordinate in ``s``."""
    out: set[int] = set()
    for i in _coords(s, n) if n > 0 else ():
        out.update(range(max(i - m, 0), min(i, n - m - 1) + 1))
    return out


def _window(x: Word, j: int, m: int) -> Word:
    return x[j : j + m + 1]


def replacement_admissible(x: WordLike, s: Iterable[int], g: ChannelGraph) -> bool:
    """True when every window of ``x`` touching ``s`` is an isolated vertex of ``g``."""
    x = as_word(x)
    active = set(g.active_vertices())
    return all(_window(x, j, g.m) not in active for j in index_window(s, g.m, len(x)))


def apply_replacement(
    code: CodeSet, x: WordLike, x_new: WordLike, s: Iterable[int], g: ChannelGraph, *, check: bool = True
) -> CodeSet:
    x, x_new = as_word(x), as_word(x_new)
    s = _coords(s, code.n)
    if x not in code:
        raise SurgeryError(f"{format_word(x)} is not a codeword")
    if len(x_new) != len(x):
        raise SurgeryError("replacement changes the word length")
    outside = [i for i in range(len(x)) if i not in s and x[i] != x_new[i]]
    if outside:
        raise SurgeryError(f"replacement changes coordinates {outside} outside the chosen set")
    if not replacement_admissible(x, s, g):
        raise SurgeryError(f"a window of {format_word(x)} touching {sorted(s)} has positive degree")
    out = CodeSet(code.n, (code.words - {x}) | {x_new})
    if check:
        bad = first_violation(out.words, g)
        if bad is not None or len(out) != len(code):
            raise AssertionError(f"replacement broke the code at {bad}")
    return out


def deletion_admissible(code: CodeSet, s: Iterable[int], g: ChannelGraph) -> bool:
    """True when no two codewords form an edge at any window touching ``s``."""
    idx = sorted(index_window(s, g.m, code.n))
    if not idx:
        return True
    active = set(g.active_vertices())
    edges = g.edges
    for j in idx:
        seen = {_window(w, j, g.m) for w in code.words}
        seen &= active
        for a in seen:
            for b in seen:
                if a < b and (a, b) in edges:
                    return False
    return True


def delete_coords(x: WordLike, s: Iterable[int]) -> Word:
    s = set(s)
    return tuple(c for i, c in enumerate(as_word(x)) if i not in s)


def apply_deletion(code: CodeSet, s: Iterable[int], g: ChannelGraph, *, check: bool = True) -> CodeSet:
    s = _coords(s, code.n)
    if not deletion_admissible(code, s, g):
        raise SurgeryError(f"codewords are distinguishable at a window touching {sorted(s)}")
    out = CodeSet(code.n - len(s), frozenset(delete_coords(w, s) for w in code.words))
    if check:
        bad = first_violation(out.words, g) if len(out) > 1 else None
        if bad is not None or len(out) != len(code):
            raise AssertionError(f"deletion broke the code at {bad}")
    return out
