"""The plactic algebra over the rationals, with tableaux as its basis."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence, Union

from .core import AlphabetMismatchError, Row
from .formats import EMPTY, ParseError, format_tableau, parse_rowword, parse_tableau, tableau_from_json, tableau_to_json
from .tableau import Tableau, normal_form_rowword, tableau_multiply, tableau_sort_key

__all__ = [
    "AlgebraElement",
    "element_add",
    "element_multiply",
    "reduce_free_word",
    "reduce_expression",
    "is_zero_mod_ideal",
    "parse_element",
    "parse_expression",
]

Coefficient = Union[int, Fraction]


class AlgebraElement:
    """A finite rational combination of tableaux over one alphabet.

    Zero coefficients are never stored; the empty map is zero.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Tableau, Coefficient]] = None):
        self.n = n
        clean: dict[Tableau, Fraction] = {}
        for t, q in (terms or {}).items():
            if t.n != n:
                raise AlphabetMismatchError(f"tableau over {t.n} letters in an element over {n}")
            q = Fraction(q)
            if q:
                clean[t] = clean.get(t, Fraction(0)) + q
                if not clean[t]:
                    del clean[t]
        self._terms = dict(sorted(clean.items(), key=lambda kv: (len(kv[0]), tableau_sort_key(kv[0]))))

    @classmethod
    def zero(cls, n: int) -> AlgebraElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> AlgebraElement:
        return cls(n, {Tableau.identity(n): 1})

    @classmethod
    def monomial(cls, t: Tableau, coeff: Coefficient = 1) -> AlgebraElement:
        return cls(t.n, {t: coeff})

    @property
    def terms(self) -> dict[Tableau, Fraction]:
        return dict(self._terms)

    @property
    def support(self) -> frozenset[Tableau]:
        return frozenset(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, t: Tableau) -> Fraction:
        return self._terms.get(t, Fraction(0))

    def _check(self, other: AlgebraElement) -> None:
        if self.n != other.n:
            raise AlphabetMismatchError(f"elements over {self.n} and {other.n} letters")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self._terms)
        for t, q in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + q
        return AlgebraElement(self.n, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, {t: -q for t, q in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, q: Coefficient) -> AlgebraElement:
        return AlgebraElement(self.n, {t: q * c for t, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            out: dict[Tableau, Fraction] = {}
            for t1, q1 in self._terms.items():
                for t2, q2 in other._terms.items():
                    t = tableau_multiply(t1, t2)
                    out[t] = out.get(t, Fraction(0)) + q1 * q2
            return AlgebraElement(self.n, out)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{q}*{format_tableau(t)}" for t, q in self._terms.items())

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"coeff": str(q), "tableau": tableau_to_json(t)["rows"]} for t, q in self._terms.items()],
        }

    @classmethod
    def from_json(cls, d: dict) -> AlgebraElement:
        n = d["n"]
        return cls(n, {tableau_from_json({"n": n, "rows": e["tableau"]}): Fraction(e["coeff"]) for e in d["terms"]})


def element_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def element_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def reduce_free_word(word: Sequence[Row], coeff: Coefficient = 1, n: Optional[int] = None) -> AlgebraElement:
    """``coeff`` times the tableau equal to the row word."""
    if n is None:
        if not word:
            raise ValueError("alphabet size needed for the empty word")
        n = word[0].n
    if not word:
        return AlgebraElement(n, {Tableau.identity(n): coeff})
    return AlgebraElement(n, {normal_form_rowword(word, n): coeff})


def reduce_expression(expr: Iterable[tuple[Sequence[Row], Coefficient]], n: int) -> AlgebraElement:
    total = AlgebraElement.zero(n)
    for word, q in expr:
        total = total + reduce_free_word(word, q, n)
    return total


def is_zero_mod_ideal(expr: Iterable[tuple[Sequence[Row], Coefficient]], n: int) -> bool:
    """Whether a combination of row words vanishes in the plactic algebra."""
    return not reduce_expression(expr, n)


# ---- text form ---------------------------------------------------------------

_TERM = re.compile(r"^\s*(?:([-+]?\d+(?:/\d+)?)\s*\*)?\s*(.*?)\s*$")


def _split_terms(text: str) -> list[tuple[Fraction, str]]:
    text = text.strip()
    if text in ("0", ""):
        return []
    out = []
    for piece in text.split("+"):
        m = _TERM.match(piece)
        body = m.group(2)
        if not body:
            raise ParseError("missing term", piece)
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if body.startswith("-"):
            coeff, body = -coeff, body[1:].strip()
        out.append((coeff, body or EMPTY))
    return out


def parse_element(text: str, n: int) -> AlgebraElement:
    """Parse ``"q1*T1 + q2*T2"`` where each ``Ti`` is a tableau."""
    total = AlgebraElement.zero(n)
    for q, body in _split_terms(text):
        total = total + AlgebraElement.monomial(parse_tableau(body, n), q)
    return total


def parse_expression(text: str, n: int) -> list[tuple[tuple[Row, ...], Fraction]]:
    """Parse ``"q1*w1 + q2*w2"`` where each ``wi`` is any row word."""
    return [(parse_rowword(body, n), q) for q, body in _split_terms(text)]
