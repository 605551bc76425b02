"""Row products: letter-by-letter Schensted insertion and the min-recurrence.

``W * Z = X * Y`` where ``X * Y`` is a two-row tableau (``X`` may be absent).
The closed form works directly on count vectors in O(n); the insertion path
replays Schensted's bumping one letter at a time and serves as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import Row, check_same_alphabet, row_to_letters

__all__ = [
    "InsertionResult",
    "RowProduct",
    "insert_letter",
    "multiply_rows",
    "multiply_rows_schensted",
    "multiply_rows_closed_form",
    "check_equivalence",
    "closed_form_counts",
]

Counts = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class InsertionResult:
    bumped: Optional[int]
    row: Row


@dataclass(frozen=True, slots=True)
class RowProduct:
    """The tableau ``x * y`` equal to a product of two rows."""

    x: Optional[Row]
    y: Row

    @property
    def rows(self) -> tuple[Row, ...]:
        return (self.y,) if self.x is None else (self.x, self.y)


def _insert_counts(counts: Counts, x: int) -> tuple[Optional[int], Counts]:
    n = len(counts)
    if not 1 <= x <= n:
        raise ValueError(f"letter {x!r} outside alphabet 1..{n}")
    out = list(counts)
    # leftmost letter strictly larger than x is the smallest p > x present
    for p in range(x + 1, n + 1):
        if out[p - 1]:
            out[p - 1] -= 1
            out[x - 1] += 1
            return p, tuple(out)
    out[x - 1] += 1
    return None, tuple(out)


def insert_letter(row: Optional[Row], x: int, n: Optional[int] = None) -> InsertionResult:
    """Schensted insertion of letter ``x`` into ``row``.

    ``row=None`` stands for the empty row, in which case ``n`` is required.
    """
    if row is None:
        if n is None:
            raise ValueError("alphabet size needed to insert into the empty row")
        counts: Counts = (0,) * n
    else:
        if n is not None and n != row.n:
            raise ValueError(f"row is over {row.n} letters, not {n}")
        counts = row.counts
    bumped, new = _insert_counts(counts, x)
    return InsertionResult(bumped, Row(new))


def multiply_rows_schensted(w: Row, z: Row) -> RowProduct:
    """Insert the letters of ``z`` into ``w`` one at a time."""
    n = check_same_alphabet(w, z)
    counts = w.counts
    bumped: list[int] = []
    for letter in row_to_letters(z):
        b, counts = _insert_counts(counts, letter)
        if b is not None:
            if bumped and b < bumped[-1]:
                raise AssertionError(f"bumped letters not a row: {bumped + [b]}")
            bumped.append(b)
    if not bumped:
        return RowProduct(None, Row(counts))
    x = [0] * n
    for b in bumped:
        x[b - 1] += 1
    return RowProduct(Row(tuple(x)), Row(counts))


@lru_cache(maxsize=1 << 20)
def closed_form_counts(w: Counts, z: Counts) -> tuple[Counts, Counts]:
    """Closed-form product on raw count vectors; ``x`` may be all zero.

    ``x_1 = 0``, ``x_p = min(Z_{p-1} - X_{p-1}, w_p)``, ``y = w + z - x``.
    """
    n = len(w)
    x = [0] * n
    big_x = 0
    big_z = z[0]
    for p in range(1, n):
        xp = big_z - big_x
        if w[p] < xp:
            xp = w[p]
        x[p] = xp
        big_x += xp
        big_z += z[p]
    y = tuple(a + b - c for a, b, c in zip(w, z, x))
    return tuple(x), y


def multiply_rows_closed_form(w: Row, z: Row) -> RowProduct:
    check_same_alphabet(w, z)
    x, y = closed_form_counts(w.counts, z.counts)
    return RowProduct(Row(x) if any(x) else None, Row(y))


def multiply_rows(w: Row, z: Row) -> RowProduct:
    """Row product; dispatches to the closed form."""
    return multiply_rows_closed_form(w, z)


def check_equivalence(w: Row, z: Row) -> bool:
    return multiply_rows_schensted(w, z) == multiply_rows_closed_form(w, z)

