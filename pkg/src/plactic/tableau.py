"""Young tableaux as normal forms of plactic classes.

Rows are listed the way they are multiplied: the shortest row (largest
letters) first and the longest row last, so ``4556·223357·1112444`` is a
tableau and its reading word is the concatenation of its rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .core import (
    Alphabet,
    AlphabetMismatchError,
    LetterWord,
    Row,
    _dominates,
    rowword_compare,
    row_to_letters,
)
from .schensted import _insert_counts, closed_form_counts

__all__ = [
    "Tableau",
    "NotATableauError",
    "normal_form_letters",
    "normal_form_rowword",
    "tableau_multiply",
    "plactic_equivalent",
    "enumerate_tableaux",
    "tableau_sort_key",
    "reducible_pairs",
    "LEFTMOST",
    "RIGHTMOST",
]


class NotATableauError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Tableau:
    """A sequence of rows each dominating the next; no rows is the identity."""

    rows: tuple[Row, ...]
    n: int

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        Alphabet(self.n)
        for r in rows:
            if r.n != self.n:
                raise AlphabetMismatchError(f"row {r} is not over {self.n} letters")
        for i, (a, b) in enumerate(zip(rows, rows[1:])):
            if not _dominates(a.counts, b.counts):
                raise NotATableauError(f"row {i + 1} does not dominate row {i + 2}")

    @classmethod
    def identity(cls, n: int) -> Tableau:
        return cls((), n)

    @property
    def is_identity(self) -> bool:
        return not self.rows

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        """Row lengths from the longest (last) row to the shortest."""
        return tuple(len(r) for r in reversed(self.rows))

    def reading_word(self) -> LetterWord:
        out: list[int] = []
        for r in self.rows:
            out.extend(row_to_letters(r))
        return tuple(out)

    def __mul__(self, other: Tableau) -> Tableau:
        return tableau_multiply(self, other)


def tableau_sort_key(t: Tableau) -> tuple:
    """Lexicographic by count vectors, bottom (longest) row first."""
    return tuple(r.counts for r in reversed(t.rows))


# ---- normal forms ----------------------------------------------------------


def normal_form_letters(word: Sequence[int], n: int) -> Tableau:
    """Schensted row insertion of each letter, bumping upward."""
    alphabet = Alphabet(n)
    rows: list[tuple[int, ...]] = []  # last entry is the bottom row
    for x in word:
        alphabet.check_letter(x)
        carry: Optional[int] = x
        i = len(rows) - 1
        while carry is not None and i >= 0:
            carry, rows[i] = _insert_counts(rows[i], carry)
            i -= 1
        if carry is not None:
            top = [0] * n
            top[carry - 1] = 1
            rows.insert(0, tuple(top))
    return Tableau(tuple(Row(r) for r in rows), n)


Strategy = Callable[[list[int]], int]


def LEFTMOST(candidates: list[int]) -> int:
    return candidates[0]


def RIGHTMOST(candidates: list[int]) -> int:
    return candidates[-1]


def reducible_pairs(rows: Sequence[tuple[int, ...]]) -> list[int]:
    return [i for i in range(len(rows) - 1) if not _dominates(rows[i], rows[i + 1])]


def _reduce_counts(rows: list[tuple[int, ...]], strategy: Strategy) -> list[tuple[int, ...]]:
    # Every replacement R·S -> X·Y strictly lowers the row word in deg-lex
    # order, which is a well order, so this loop terminates.
    while True:
        candidates = reducible_pairs(rows)
        if not candidates:
            return rows
        i = strategy(candidates)
        if i not in candidates:
            raise ValueError(f"strategy picked {i}, not one of {candidates}")
        x, y = closed_form_counts(rows[i], rows[i + 1])
        new = rows[:i] + ([x, y] if any(x) else [y]) + rows[i + 2 :]
        assert _counts_word_decreases(new, rows)
        rows = new


def _counts_word_decreases(new, old) -> bool:
    return rowword_compare([Row(c) for c in new], [Row(c) for c in old]) < 0


def normal_form_rowword(word: Sequence[Row], n: Optional[int] = None, strategy: Strategy = RIGHTMOST) -> Tableau:
    """Reduce a row word by the relations ``R·S = X·Y`` until it is a tableau.

    ``strategy`` picks which reducible adjacent pair to rewrite next, given
    the increasing list of their left indices.
    """
    if n is None:
        if not word:
            raise ValueError("alphabet size needed for the empty row word")
        n = word[0].n
    for r in word:
        if r.n != n:
            raise AlphabetMismatchError(f"row {r} is not over {n} letters")
    rows = _reduce_counts([r.counts for r in word], strategy)
    return Tableau(tuple(Row(c) for c in rows), n)


def tableau_multiply(t1: Tableau, t2: Tableau) -> Tableau:
    if t1.n != t2.n:
        raise AlphabetMismatchError(f"tableaux over {t1.n} and {t2.n} letters")
    if t1.is_identity:
        return t2
    if t2.is_identity:
        return t1
    return normal_form_rowword(t1.rows + t2.rows, t1.n)


def plactic_equivalent(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    return normal_form_letters(u, n) == normal_form_letters(v, n)


# ---- enumeration -----------------------------------------------------------


def _rows_up_to(n: int, max_len: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def fill(prefix: list[int], left: int) -> None:
        if len(prefix) == n:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for c in range(left + 1):
            prefix.append(c)
            fill(prefix, left - c)
            prefix.pop()

    fill([], max_len)
    return out  # already lexicographically increasing


def enumerate_tableaux(n: int, size: int) -> Iterator[Tableau]:
    """Every tableau over ``n`` letters with ``size`` letters, exactly once.

    Order: lexicographic in the count vectors read from the bottom (longest)
    row upward, i.e. increasing :func:`tableau_sort_key`.
    """
    Alphabet(n)
    if size < 0:
        raise ValueError("size must be non-negative")
    candidates = _rows_up_to(n, size)

    def grow(below: Optional[tuple[int, ...]], left: int) -> Iterator[tuple]:
        if left == 0:
            yield ()
            return
        for r in candidates:
            if sum(r) > left:
                continue
            if below is not None and not _dominates(r, below):
                continue
            for rest in grow(r, left - sum(r)):
                yield (r,) + rest

    for bottom_up in grow(None, size):
        yield Tableau(tuple(Row(c) for c in reversed(bottom_up)), n)
