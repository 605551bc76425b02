"""Brute-force plactic congruence on letter words.

Deliberately naive: classes are the closure of a word under single
applications of the two Knuth relations, found by breadth-first search.
Nothing here touches rows, insertion or tableaux.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Sequence

__all__ = [
    "FuelExhausted",
    "CongruenceClass",
    "knuth_neighbors",
    "congruence_class",
    "oracle_equivalent",
    "all_classes",
]

Word = tuple[int, ...]

DEFAULT_FUEL = 1_000_000


class FuelExhausted(RuntimeError):
    """The BFS visited more words than its fuel allowed."""


class CongruenceClass(frozenset):
    """A frozenset of equal-length words closed under the Knuth relations."""

    def sorted_words(self) -> list[Word]:
        return sorted(self)


def knuth_neighbors(word: Sequence[int]) -> set[Word]:
    """Words reachable by one Knuth rewrite, in either direction, anywhere."""
    w = tuple(word)
    out: set[Word] = set()
    for i in range(len(w) - 2):
        a, b, c = w[i], w[i + 1], w[i + 2]
        head, tail = w[:i], w[i + 3 :]
        # x z y = z x y  with x <= y < z
        if a <= c < b:  # window is x z y
            out.add(head + (b, a, c) + tail)
        if b <= c < a:  # window is z x y
            out.add(head + (b, a, c) + tail)
        # y x z = y z x  with x < y <= z
        if b < a <= c:  # window is y x z
            out.add(head + (a, c, b) + tail)
        if c < a <= b:  # window is y z x
            out.add(head + (a, c, b) + tail)
    return out


def congruence_class(word: Sequence[int], fuel: int = DEFAULT_FUEL) -> CongruenceClass:
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for v in knuth_neighbors(w):
            if v not in seen:
                if len(seen) >= fuel:
                    raise FuelExhausted(f"class of {start} exceeds {fuel} words")
                seen.add(v)
                queue.append(v)
    return CongruenceClass(seen)


def oracle_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    u, v = tuple(u), tuple(v)
    if len(u) != len(v) or sorted(u) != sorted(v):
        return False
    return v in congruence_class(u)


def all_classes(n: int, length: int) -> list[CongruenceClass]:
    """Partition of all words of the given length over ``1..n`` into classes."""
    seen: set[Word] = set()
    classes: list[CongruenceClass] = []
    for w in product(range(1, n + 1), repeat=length):
        if w in seen:
            continue
        cls = congruence_class(w)
        seen |= cls
        classes.append(cls)
    return classes


def words(n: int, length: int) -> Iterable[Word]:
    return product(range(1, n + 1), repeat=length)
