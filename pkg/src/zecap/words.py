"""Word primitives over a small integer alphabet.

A word is a tuple of symbol indices ``0..q-1``.  Text forms use one character
per symbol (``0-9`` then ``a-z``), so ``"001001"`` and ``(0, 0, 1, 0, 0, 1)``
denote the same word.  Every public function accepts either form and returns
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

Word = Tuple[int, ...]
WordLike = Union[str, Sequence[int]]

SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"
EMPTY: Word = ()


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self) -> None:
        if self.size < 1 or self.size > len(SYMBOLS):
            raise ValueError(f"alphabet size must be in 1..{len(SYMBOLS)}, got {self.size}")

    def check(self, w: Word) -> Word:
        for s in w:
            if not 0 <= s < self.size:
                raise ValueError(f"symbol {s} outside alphabet of size {self.size}")
        return w


def parse_word(text: str, q: int | None = None) -> Word:
    """Parse a symbol string such as ``"0120"``.

    Raises ``ValueError`` on characters that are not symbols, or that are
    outside ``0..q-1`` when ``q`` is given.
    """
    out = []
    for ch in text.strip().lower():
        idx = SYMBOLS.find(ch)
        if idx < 0:
            raise ValueError(f"invalid symbol {ch!r} in word {text!r}")
        if q is not None and idx >= q:
            raise ValueError(f"symbol {ch!r} in word {text!r} outside alphabet of size {q}")
        out.append(idx)
    return tuple(out)


def as_word(w: WordLike) -> Word:
    if isinstance(w, str):
        return parse_word(w)
    return tuple(int(s) for s in w)


def format_word(w: WordLike) -> str:
    if isinstance(w, str):
        return w
    return "".join(SYMBOLS[s] for s in w)


def reverse(w: WordLike) -> Word:
    return as_word(w)[::-1]


def permute(w: WordLike, perm: Sequence[int]) -> Word:
    """Apply the symbol map ``s -> perm[s]`` to every position of ``w``."""
    perm = tuple(perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
    w = as_word(w)
    try:
        return tuple(perm[s] for s in w)
    except IndexError:
        raise ValueError(f"word {format_word(w)} has a symbol outside 0..{len(perm) - 1}") from None


def invert_permutation(perm: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def longest_common_prefix(u: WordLike, v: WordLike) -> Tuple[Word, int]:
    u, v = as_word(u), as_word(v)
    k = 0
    for a, b in zip(u, v):
        if a != b:
            break
        k += 1
    return u[:k], k


def longest_common_suffix(u: WordLike, v: WordLike) -> Tuple[Word, int]:
    suf, k = longest_common_prefix(reverse(u), reverse(v))
    return suf[::-1], k


def is_unit(x: WordLike, y: WordLike) -> int | None:
    """Smallest shift ``t`` with ``y[i] == x[(i - t) % len(x)]`` for all ``i``.

    Returns ``None`` when ``x`` is longer than ``y`` or no shift works.
    """
    x, y = as_word(x), as_word(y)
    if not x:
        raise ValueError("a unit must be non-empty")
    p = len(x)
    if p > len(y):
        return None
    for t in range(p):
        if all(y[i] == x[(i - t) % p] for i in range(len(y))):
            return t
    return None


def is_prefix_unit(x: WordLike, y: WordLike) -> bool:
    return is_unit_with_shift(x, y, 0)


def is_suffix_unit(x: WordLike, y: WordLike) -> bool:
    x, y = as_word(x), as_word(y)
    if not x:
        raise ValueError("a unit must be non-empty")
    return is_unit_with_shift(x, y, len(y) % len(x))


def is_unit_with_shift(x: WordLike, y: WordLike, t: int) -> bool:
    x, y = as_word(x), as_word(y)
    p = len(x)
    if p == 0 or p > len(y):
        return False
    return all(y[i] == x[(i - t) % p] for i in range(len(y)))


def shortest_prefix_unit_min_len(y: WordLike, min_len: int) -> Word:
    """Shortest prefix ``p`` of ``y`` with ``len(p) >= min_len`` that generates ``y`` periodically."""
    y = as_word(y)
    if not 1 <= min_len <= len(y):
        raise ValueError(f"min_len must be in 1..{len(y)}, got {min_len}")
    for p in range(min_len, len(y) + 1):
        # prefix of length p is a prefix-unit iff p is a period of y
        if all(y[i] == y[i - p] for i in range(p, len(y))):
            return y[:p]
    raise AssertionError("unreachable: y is a prefix-unit of itself")


def concat(*parts: WordLike) -> Word:
    out: Word = ()
    for p in parts:
        out += as_word(p)
    return out
