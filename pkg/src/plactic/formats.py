"""Text and JSON forms of words, rows, row words and tableaux.

Grammar (``n`` is the alphabet size)::

    word     := "ε" | letters
    letters  := digit+                 (n <= 9 only)
              | int ("," int)*
    row      := letters                (nondecreasing)
              | "(" int ("," int)* ")" (exactly n counts)
    rowword  := "ε" | row (SEP row)*   SEP is "·" or "|"
    tableau  := rowword                (rows must dominate left to right)

Printers emit digit strings when ``n <= 9`` and comma-separated integers
otherwise, rows joined by ``·``; parse and print are exact inverses.
"""

from __future__ import annotations

import re
from typing import Sequence

from .core import Alphabet, LetterWord, Row, row_from_letters, row_to_letters
from .tableau import Tableau

__all__ = [
    "ParseError",
    "EMPTY",
    "parse_word",
    "format_word",
    "parse_row",
    "format_row",
    "format_counts",
    "parse_rowword",
    "format_rowword",
    "parse_tableau",
    "format_tableau",
    "tableau_to_json",
    "tableau_from_json",
]

EMPTY = "ε"
_SEP = re.compile(r"[·|]")


class ParseError(ValueError):
    """Malformed input; ``token`` is the offending piece of text."""

    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: {token!r}")
        self.token = token


def parse_word(text: str, n: int) -> LetterWord:
    alphabet = Alphabet(n)
    text = text.strip()
    if text in (EMPTY, ""):
        return ()
    if "," in text or n > 9:
        parts = text.split(",")
    else:
        parts = list(text)
    letters = []
    for part in parts:
        part = part.strip()
        if not part.isdigit():
            raise ParseError("not a letter", part)
        x = int(part)
        if not 1 <= x <= alphabet.n:
            raise ParseError(f"letter outside 1..{n}", part)
        letters.append(x)
    return tuple(letters)


def format_word(word: Sequence[int], n: int) -> str:
    if not word:
        return EMPTY
    if n <= 9:
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def parse_row(text: str, n: int) -> Row:
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")"):
            raise ParseError("unterminated count vector", text)
        parts = [p.strip() for p in text[1:-1].split(",")]
        if len(parts) != n or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected {n} non-negative counts", text)
        counts = tuple(int(p) for p in parts)
        if not any(counts):
            raise ParseError("not a row (all counts zero)", text)
        return Row(counts)
    word = parse_word(text, n)
    if not word:
        raise ParseError("not a row (empty)", text)
    if any(a > b for a, b in zip(word, word[1:])):
        raise ParseError("not a row (not nondecreasing)", text)
    return row_from_letters(word, n)


def format_row(row: Row) -> str:
    return format_word(row_to_letters(row), row.n)


def format_counts(row: Row) -> str:
    return "(" + ",".join(str(c) for c in row.counts) + ")"


def parse_rowword(text: str, n: int) -> tuple[Row, ...]:
    text = text.strip()
    if text in (EMPTY, ""):
        return ()
    return tuple(parse_row(part, n) for part in _SEP.split(text))


def format_rowword(rows: Sequence[Row]) -> str:
    if not rows:
        return EMPTY
    return "·".join(format_row(r) for r in rows)


def parse_tableau(text: str, n: int) -> Tableau:
    rows = parse_rowword(text, n)
    try:
        return Tableau(rows, n)
    except ValueError as exc:
        raise ParseError(f"not a tableau ({exc})", text) from None


def format_tableau(t: Tableau) -> str:
    return format_rowword(t.rows)


def tableau_to_json(t: Tableau) -> dict:
    return {"n": t.n, "rows": [list(r.counts) for r in t.rows]}


def tableau_from_json(d: dict) -> Tableau:
    return Tableau(tuple(Row(tuple(c)) for c in d["rows"]), d["n"])
