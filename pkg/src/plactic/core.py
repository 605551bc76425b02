"""Alphabets, rows, row words and the orderings on them.

A row is a nondecreasing word over ``{1, ..., n}`` and is stored as its
vector of letter multiplicities, so ``111225`` over five letters is
``Row((3, 2, 0, 0, 1))``.  A row word is a plain tuple of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Alphabet",
    "Row",
    "RowWord",
    "LetterWord",
    "NotARowError",
    "AlphabetMismatchError",
    "partial_sums",
    "row_from_letters",
    "row_to_letters",
    "row_compare",
    "row_key",
    "rowword_compare",
    "rowword_key",
    "dominates",
    "dominates_by_letters",
    "letter_at",
    "check_same_alphabet",
    "rows_of_length",
    "all_rows",
]

LetterWord = tuple[int, ...]


class NotARowError(ValueError):
    """Raised when a letter word is empty or not nondecreasing."""


class AlphabetMismatchError(ValueError):
    """Raised when objects over different alphabets are combined."""


@dataclass(frozen=True)
class Alphabet:
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {self.n!r}")

    @property
    def letters(self) -> range:
        return range(1, self.n + 1)

    def check_letter(self, x: int) -> int:
        if not isinstance(x, int) or not 1 <= x <= self.n:
            raise ValueError(f"letter {x!r} outside alphabet 1..{self.n}")
        return x

    def check_word(self, word: Iterable[int]) -> LetterWord:
        return tuple(self.check_letter(x) for x in word)

    def rows(self, max_len: int) -> list[Row]:
        return all_rows(self.n, max_len)


@dataclass(frozen=True, slots=True)
class Row:
    """A nonempty row, held as its count vector ``(r_1, ..., r_n)``."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = self.counts
        if not isinstance(counts, tuple):
            counts = tuple(counts)
            object.__setattr__(self, "counts", counts)
        if not counts:
            raise ValueError("a row needs an alphabet of at least one letter")
        for c in counts:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"row counts must be non-negative integers, got {counts!r}")
        if not any(counts):
            raise NotARowError("not a row: the empty row is not a generator")

    @property
    def n(self) -> int:
        return len(self.counts)

    def __len__(self) -> int:
        return sum(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(row_to_letters(self))

    def __lt__(self, other: Row) -> bool:
        return row_compare(self, other) < 0

    def __le__(self, other: Row) -> bool:
        return row_compare(self, other) <= 0

    def __gt__(self, other: Row) -> bool:
        return row_compare(self, other) > 0

    def __ge__(self, other: Row) -> bool:
        return row_compare(self, other) >= 0

    @property
    def partial_sums(self) -> tuple[int, ...]:
        return partial_sums(self.counts)

    @classmethod
    def from_letters(cls, word: Sequence[int], n: int) -> Row:
        return row_from_letters(word, n)

    def letters(self) -> LetterWord:
        return row_to_letters(self)

    def __repr__(self) -> str:
        return f"Row({self.counts!r})"


RowWord = tuple[Row, ...]


def partial_sums(counts: Sequence[int]) -> tuple[int, ...]:
    """``(c_1, c_1 + c_2, ..., c_1 + ... + c_n)``."""
    return tuple(accumulate(counts))


def row_from_letters(word: Sequence[int], n: int) -> Row:
    """Count vector of a nonempty nondecreasing word over ``1..n``.

    >>> row_from_letters([1, 1, 1, 2, 2, 5], 5)
    Row((3, 2, 0, 0, 1))
    """
    alphabet = Alphabet(n)
    word = alphabet.check_word(word)
    if not word:
        raise NotARowError("not a row: empty word")
    for a, b in zip(word, word[1:]):
        if a > b:
            raise NotARowError(f"not a row: {a} precedes smaller letter {b}")
    counts = [0] * n
    for x in word:
        counts[x - 1] += 1
    return Row(tuple(counts))


def row_to_letters(row: Row) -> LetterWord:
    out: list[int] = []
    for letter, c in enumerate(row.counts, start=1):
        out.extend([letter] * c)
    return tuple(out)


def check_same_alphabet(*objs: Row) -> int:
    ns = {r.n for r in objs}
    if len(ns) > 1:
        raise AlphabetMismatchError(f"objects over different alphabets: sizes {sorted(ns)}")
    return ns.pop()


def row_key(row: Row) -> tuple:
    # More copies of a small letter make a row of the same length smaller.
    return (sum(row.counts), tuple(-c for c in row.counts))


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def row_compare(r: Row, s: Row) -> int:
    """Three-way comparison of rows: -1, 0 or 1.

    Shorter rows are smaller; among rows of equal length the one with the
    larger count at the first differing letter is smaller.
    """
    check_same_alphabet(r, s)
    return _cmp(row_key(r), row_key(s))


def rowword_key(word: Sequence[Row]) -> tuple:
    return (len(word), tuple(row_key(r) for r in word))


def rowword_compare(u: Sequence[Row], v: Sequence[Row]) -> int:
    """Deg-lex comparison of row words; degree is the number of rows."""
    if u and v:
        check_same_alphabet(*u, *v)
    return _cmp(rowword_key(u), rowword_key(v))


def letter_at(row: Row, j: int) -> int:
    """The ``j``-th letter (1-based) of the row, ``min{p : Φ_p >= j}``."""
    if not 1 <= j <= len(row):
        raise IndexError(j)
    for p, total in enumerate(partial_sums(row.counts), start=1):
        if total >= j:
            return p
    raise AssertionError("unreachable")


def dominates(r: Row, s: Row) -> bool:
    """Whether ``r`` dominates ``s``.

    Equivalent to ``R_p <= S_{p-1}`` for every ``p`` (with ``S_0 = 0``):
    the letters of ``r`` that are at most ``p`` must sit over letters of
    ``s`` that are at most ``p - 1``.
    """
    check_same_alphabet(r, s)
    return _dominates(r.counts, s.counts)


def _dominates(rc: Sequence[int], sc: Sequence[int]) -> bool:
    racc = 0
    sprev = 0
    for a, b in zip(rc, sc):
        racc += a
        if racc > sprev:
            return False
        sprev += b
    return True


def dominates_by_letters(r: Row, s: Row) -> bool:
    """Literal letter-by-letter domination test, kept as an oracle."""
    check_same_alphabet(r, s)
    rw, sw = row_to_letters(r), row_to_letters(s)
    return len(rw) <= len(sw) and all(a > b for a, b in zip(rw, sw))


def rows_of_length(n: int, length: int) -> list[Row]:
    """All rows of the given length, in increasing row order."""
    out: list[tuple[int, ...]] = []

    def fill(prefix: list[int], left: int) -> None:
        if len(prefix) == n - 1:
            out.append(tuple(prefix) + (left,))
            return
        for c in range(left, -1, -1):
            prefix.append(c)
            fill(prefix, left - c)
            prefix.pop()

    if length < 1:
        return []
    fill([], length)
    return [Row(c) for c in out]


def all_rows(n: int, max_len: int) -> list[Row]:
    """All rows of length ``1..max_len`` in increasing row order."""
    Alphabet(n)
    rows: list[Row] = []
    for length in range(1, max_len + 1):
        rows.extend(rows_of_length(n, length))
    return rows
