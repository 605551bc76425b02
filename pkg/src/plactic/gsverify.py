"""Exhaustive check that the row relations ``R·S = X·Y`` form a Gröbner–Shirshov basis.

Every composition of two relations lives on a three-row word ``R·S·T``.  It
is reduced two ways::

    right:  S·T = A·B,  R·A = C·D,  D·B = E·F   ->  C·E·F
    left:   R·S = G·H,  H·T = I·J,  G·I = K·L   ->  K·L·J

and the composition is trivial when both sides end on the same row word.
A :class:`ReductionTrace` keeps all twelve intermediate count vectors
(all-zero when a product has no upper row), so the closed forms for ``C_3``,
``K_3``, ``e_2``, ``l_2`` and the supporting inequalities can be evaluated
on partial sums directly.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field, fields
from itertools import accumulate, product
from typing import Iterable, Optional, Sequence

from . import __version__
from .core import Row, _dominates, all_rows, check_same_alphabet, dominates, row_key, rowword_compare
from .schensted import RowProduct, closed_form_counts, multiply_rows

__all__ = [
    "Relation",
    "ReductionTrace",
    "LemmaOutcome",
    "VerificationReport",
    "BudgetExceeded",
    "PASS",
    "NOT_APPLICABLE",
    "FAIL",
    "TRIPLE_CHECKS",
    "LEMMAS",
    "build_relation",
    "relation_respects_ordering",
    "reduce_triple",
    "composition_trivial",
    "check_c3k3_closed_form",
    "check_e2l2_closed_form",
    "check_lemma_invariants",
    "check_zero_pattern",
    "check_conservation",
    "check_triple",
    "verify_gs_basis",
    "check_ordering",
    "triple_count",
]

Counts = tuple[int, ...]

PASS = "pass"
NOT_APPLICABLE = "not_applicable"
FAIL = "fail"

DEFAULT_BUDGET = 10**7
DEFAULT_SAMPLE_MAX_LEN = 30


class BudgetExceeded(ValueError):
    pass


# ---- relations ---------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    lhs: tuple[Row, Row]
    rhs: RowProduct

    @property
    def trivial(self) -> bool:
        return dominates(*self.lhs)

    @property
    def leading_word(self) -> tuple[Row, ...]:
        return self.lhs


def build_relation(r: Row, s: Row) -> Relation:
    check_same_alphabet(r, s)
    return Relation((r, s), multiply_rows(r, s))


def relation_respects_ordering(rel: Relation) -> bool:
    """Whether the right-hand side is strictly below ``R·S`` in deg-lex order."""
    if rel.trivial:
        raise ValueError("trivial relation has no leading word to compare")
    return rowword_compare(rel.rhs.rows, rel.lhs) < 0


# ---- traces -----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ReductionTrace:
    """Count vectors of both reduction paths of ``R·S·T``; absent rows are zero."""

    r: Counts
    s: Counts
    t: Counts
    a: Counts
    b: Counts
    c: Counts
    d: Counts
    e: Counts
    f: Counts
    g: Counts
    h: Counts
    i: Counts
    j: Counts
    k: Counts
    l: Counts  # noqa: E741

    @property
    def n(self) -> int:
        return len(self.r)

    def vector(self, name: str) -> Counts:
        return getattr(self, name.lower())

    def partial(self, name: str) -> tuple[int, ...]:
        """Partial sums of a named vector; ``partial('C')[p - 1] == C_p``."""
        return tuple(accumulate(self.vector(name)))

    def row(self, name: str) -> Optional[Row]:
        v = self.vector(name)
        return Row(v) if any(v) else None

    @property
    def right_final(self) -> tuple[Counts, ...]:
        return tuple(v for v in (self.c, self.e, self.f) if any(v))

    @property
    def left_final(self) -> tuple[Counts, ...]:
        return tuple(v for v in (self.k, self.l, self.j) if any(v))


def _trace(r: Counts, s: Counts, t: Counts) -> ReductionTrace:
    a, b = closed_form_counts(s, t)
    c, d = closed_form_counts(r, a)
    e, f = closed_form_counts(d, b)
    g, h = closed_form_counts(r, s)
    i, j = closed_form_counts(h, t)
    k, l = closed_form_counts(g, i)  # noqa: E741
    return ReductionTrace(r, s, t, a, b, c, d, e, f, g, h, i, j, k, l)


def reduce_triple(r: Row, s: Row, t: Row) -> ReductionTrace:
    check_same_alphabet(r, s, t)
    return _trace(r.counts, s.counts, t.counts)


def composition_trivial(trace: ReductionTrace) -> bool:
    return trace.right_final == trace.left_final


def check_c3k3_closed_form(trace: ReductionTrace) -> bool:
    """``C_3 = K_3 = min(t_1, s_2, r_3)``."""
    if trace.n < 3:
        raise ValueError("needs at least three letters")
    expected = min(trace.t[0], trace.s[1], trace.r[2])
    return sum(trace.c[:3]) == expected and sum(trace.k[:3]) == expected


def check_e2l2_closed_form(trace: ReductionTrace) -> bool:
    """``e_2 = l_2 = min(s_1 + t_1, t_1 + r_2, r_2 + s_2)``."""
    if trace.n < 2:
        raise ValueError("needs at least two letters")
    r, s, t = trace.r, trace.s, trace.t
    expected = min(s[0] + t[0], t[0] + r[1], r[1] + s[1])
    return trace.e[1] == expected and trace.l[1] == expected


def check_zero_pattern(trace: ReductionTrace) -> bool:
    """``a_1 = c_1 = c_2 = e_1 = g_1 = i_1 = k_1 = k_2 = l_1 = 0``."""
    tr = trace
    if tr.a[0] or tr.c[0] or tr.e[0] or tr.g[0] or tr.i[0] or tr.k[0] or tr.l[0]:
        return False
    if tr.n >= 2 and (tr.c[1] or tr.k[1]):
        return False
    return True


def check_conservation(trace: ReductionTrace) -> bool:
    tr = trace
    total = [x + y + z for x, y, z in zip(tr.r, tr.s, tr.t)]
    right = [x + y + z for x, y, z in zip(tr.c, tr.e, tr.f)]
    left = [x + y + z for x, y, z in zip(tr.k, tr.l, tr.j)]
    return total == right == left


# ---- supporting inequalities -------------------------------------------------

LEMMAS = (
    "a_le_i",  # A_p <= I_p
    "scga_nonneg",  # S_p + C_p - G_p - A_p >= 0
    "a_eq_i",  # S_p + C_p - G_p - A_p > 0  =>  A_p = I_p
    "s_minus_g",  # K_p=C_p, K_{p+1}=C_{p+1}, C_{p+1}=C_p+r_{p+1}  =>  S_p - G_p >= r_{p+1}
    "k_eq_i",  # K_{p-1}=C_{p-1}, K_p=C_p=A_{p-1}<C_{p-1}+r_p, S_{p-1}-G_{p-1}>=r_p  =>  K_p = I_{p-1}
)


@dataclass(frozen=True, slots=True)
class LemmaOutcome:
    """Result of one inequality over all indices; ``witness`` is the first failing ``p``."""

    status: str
    witness: Optional[int] = None
    applicable: int = 0


def _outcome(applicable: int, failed_at: Optional[int]) -> LemmaOutcome:
    if failed_at is not None:
        return LemmaOutcome(FAIL, failed_at, applicable)
    return LemmaOutcome(PASS if applicable else NOT_APPLICABLE, None, applicable)


def check_lemma_invariants(trace: ReductionTrace) -> dict[str, LemmaOutcome]:
    """Evaluate the five inequalities at every index where they apply.

    Conditional statements whose hypothesis never holds report
    ``not_applicable`` rather than passing vacuously.
    """
    n = trace.n
    # index 0 holds the empty partial sum so that X[p] == X_p
    S = (0,) + tuple(accumulate(trace.s))
    A = (0,) + tuple(accumulate(trace.a))
    C = (0,) + tuple(accumulate(trace.c))
    G = (0,) + tuple(accumulate(trace.g))
    I = (0,) + tuple(accumulate(trace.i))  # noqa: E741
    K = (0,) + tuple(accumulate(trace.k))
    r = (0,) + trace.r

    fail_i = fail_ii = fail_iii = fail_iv = fail_v = None
    app_iii = app_iv = app_v = 0
    for p in range(1, n + 1):
        if fail_i is None and A[p] > I[p]:
            fail_i = p
        slack = S[p] + C[p] - G[p] - A[p]
        if fail_ii is None and slack < 0:
            fail_ii = p
        if slack > 0:
            app_iii += 1
            if fail_iii is None and A[p] != I[p]:
                fail_iii = p
        if 2 <= p <= n - 1 and K[p] == C[p] and K[p + 1] == C[p + 1] and C[p + 1] == C[p] + r[p + 1]:
            app_iv += 1
            if fail_iv is None and S[p] - G[p] < r[p + 1]:
                fail_iv = p
        if (
            p >= 3
            and K[p - 1] == C[p - 1]
            and K[p] == C[p] == A[p - 1]
            and A[p - 1] < C[p - 1] + r[p]
            and S[p - 1] - G[p - 1] >= r[p]
        ):
            app_v += 1
            if fail_v is None and K[p] != I[p - 1]:
                fail_v = p
    return {
        "a_le_i": _outcome(n, fail_i),
        "scga_nonneg": _outcome(n, fail_ii),
        "a_eq_i": _outcome(app_iii, fail_iii),
        "s_minus_g": _outcome(app_iv, fail_iv),
        "k_eq_i": _outcome(app_v, fail_v),
    }


# ---- per-triple driver -------------------------------------------------------

TRIPLE_CHECKS = (
    "composition",
    "c3k3_closed_form",
    "e2l2_closed_form",
    *(f"lemma_{name}" for name in LEMMAS),
    "zero_pattern",
    "conservation",
)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def check_triple(r: Counts, s: Counts, t: Counts) -> dict[str, tuple[str, Optional[int]]]:
    """All triple checks on raw count vectors: ``check -> (status, witness)``."""
    tr = _trace(r, s, t)
    n = tr.n
    out: dict[str, tuple[str, Optional[int]]] = {
        "composition": (_verdict(composition_trivial(tr)), None),
        "c3k3_closed_form": (_verdict(check_c3k3_closed_form(tr)), None) if n >= 3 else (NOT_APPLICABLE, None),
        "e2l2_closed_form": (_verdict(check_e2l2_closed_form(tr)), None) if n >= 2 else (NOT_APPLICABLE, None),
    }
    for name, oc in check_lemma_invariants(tr).items():
        out[f"lemma_{name}"] = (oc.status, oc.witness)
    out["zero_pattern"] = (_verdict(check_zero_pattern(tr)), None)
    out["conservation"] = (_verdict(check_conservation(tr)), None)
    return out


# ---- reports ----------------------------------------------------------------


def _zero_counts(names: Iterable[str]) -> dict[str, dict[str, int]]:
    return {name: {PASS: 0, NOT_APPLICABLE: 0, FAIL: 0} for name in names}


@dataclass
class VerificationReport:
    config: dict
    rows: int
    triples: int
    sampled_triples: int
    pairs: int
    triple_counts: dict[str, dict[str, int]]
    pair_counts: dict[str, dict[str, int]]
    failures: list[dict] = field(default_factory=list)
    minimal_counterexample: Optional[dict] = None
    tool_version: str = __version__
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def total_failures(self) -> int:
        return sum(c[FAIL] for c in self.triple_counts.values()) + sum(
            c[FAIL] for c in self.pair_counts.values()
        )

    def to_dict(self, timing: bool = True) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["ok"] = self.ok
        if not timing:
            d.pop("timing")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in names})

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        cfg = self.config
        lines = [
            f"plactic verify-gs {self.tool_version}: n={cfg['n']} max_len={cfg['max_len']} "
            f"samples={cfg['samples']} seed={cfg['seed']}",
            f"rows={self.rows} triples={self.triples} sampled={self.sampled_triples} pairs={self.pairs}",
        ]
        for name, c in {**self.triple_counts, **self.pair_counts}.items():
            lines.append(
                f"  {name:<22} pass={c[PASS]:<8} n/a={c[NOT_APPLICABLE]:<8} fail={c[FAIL]}"
            )
        if self.timing:
            lines.append(f"wall time {self.timing.get('wall_time_s', 0):.2f}s")
        lines.append("OK" if self.ok else f"FAILED ({len(self.failures)} checks with counterexamples)")
        return "\n".join(lines)


def triple_count(n: int, max_len: int) -> int:
    return len(all_rows(n, max_len)) ** 3


def _triple_key(triple: Sequence[Counts]) -> tuple:
    return tuple(row_key(Row(c)) for c in triple)


def _sweep(triples: Iterable[tuple[Counts, Counts, Counts]], counts, first_failure: dict) -> int:
    seen = 0
    for r, s, t in triples:
        seen += 1
        for name, (status, witness) in check_triple(r, s, t).items():
            counts[name][status] += 1
            if status == FAIL:
                key = _triple_key((r, s, t))
                best = first_failure.get(name)
                if best is None or key < best[0]:
                    first_failure[name] = (key, (r, s, t), witness)
    return seen


def _sweep_chunk(args):
    rows, r_indices = args
    counts = _zero_counts(TRIPLE_CHECKS)
    first: dict = {}
    triples = ((rows[x], s, t) for x in r_indices for s in rows for t in rows)
    _sweep(triples, counts, first)
    return counts, first


def _merge(into_counts, into_first, counts, first) -> None:
    for name, c in counts.items():
        for status, v in c.items():
            into_counts[name][status] += v
    for name, entry in first.items():
        best = into_first.get(name)
        if best is None or entry[0] < best[0]:
            into_first[name] = entry


def sample_row(rng: random.Random, n: int, max_len: int) -> Counts:
    length = rng.randint(1, max_len)
    counts = [0] * n
    for x in rng.choices(range(n), k=length):
        counts[x] += 1
    return tuple(counts)


def default_workers() -> int:
    return max(1, int(os.environ.get("PLACTIC_THREADS", "1")))


def verify_gs_basis(
    n: int,
    max_len: int,
    samples: int = 0,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    sample_max_len: int = DEFAULT_SAMPLE_MAX_LEN,
    workers: Optional[int] = None,
) -> VerificationReport:
    """Run every triple check on all rows up to ``max_len`` plus seeded samples.

    Also checks that every nontrivial relation on pairs of those rows
    lowers the row word.  The report is independent of ``workers``.
    """
    if n < 1 or max_len < 1:
        raise ValueError("need n >= 1 and max_len >= 1")
    if budget <= 0:
        raise ValueError("budget must be positive")
    rows = [r.counts for r in all_rows(n, max_len)]
    total = len(rows) ** 3 + samples
    if total > budget:
        raise BudgetExceeded(f"{total} triples exceed the budget of {budget}")
    workers = default_workers() if workers is None else workers
    started = time.perf_counter()

    counts = _zero_counts(TRIPLE_CHECKS)
    first: dict = {}
    chunks = [(rows, range(x, min(x + 4, len(rows)))) for x in range(0, len(rows), 4)]
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            for c, f in pool.imap_unordered(_sweep_chunk, chunks):
                _merge(counts, first, c, f)
    else:
        for chunk in chunks:
            _merge(counts, first, *_sweep_chunk(chunk))
    sample_first: dict = {}
    if samples:
        rng = random.Random(seed)
        drawn = [tuple(sample_row(rng, n, sample_max_len) for _ in range(3)) for _ in range(samples)]
        _sweep(drawn, counts, sample_first)

    pair_counts = _zero_counts(["ordering"])
    pair_first = None
    for r, s in product(rows, rows):
        rel = Relation((Row(r), Row(s)), multiply_rows(Row(r), Row(s)))
        if rel.trivial:
            pair_counts["ordering"][NOT_APPLICABLE] += 1
        elif relation_respects_ordering(rel):
            pair_counts["ordering"][PASS] += 1
        else:
            pair_counts["ordering"][FAIL] += 1
            if pair_first is None:
                pair_first = (r, s)

    failures = []
    for source, table in (("exhaustive", first), ("sampled", sample_first)):
        for name in TRIPLE_CHECKS:
            if name in table:
                _, triple, witness = table[name]
                failures.append(
                    {"check": name, "source": source, "triple": [list(v) for v in triple], "witness": witness}
                )
    if pair_first is not None:
        failures.append({"check": "ordering", "source": "exhaustive", "pair": [list(v) for v in pair_first]})
    minimal = None
    if first:
        key, triple, _ = min(first.values(), key=lambda e: e[0])
        minimal = {"triple": [list(v) for v in triple], "checks": sorted(k for k, e in first.items() if e[0] == key)}

    return VerificationReport(
        config={
            "n": n,
            "max_len": max_len,
            "samples": samples,
            "seed": seed,
            "budget": budget,
            "sample_max_len": sample_max_len,
        },
        rows=len(rows),
        triples=len(rows) ** 3,
        sampled_triples=samples,
        pairs=len(rows) ** 2,
        triple_counts=counts,
        pair_counts=pair_counts,
        failures=failures,
        minimal_counterexample=minimal,
        timing={"wall_time_s": round(time.perf_counter() - started, 6)},
    )


def check_ordering(n: int, max_len: int) -> dict[str, int]:
    """Count nontrivial relations on rows up to ``max_len`` and those that fail to decrease."""
    rows = all_rows(n, max_len)
    nontrivial = failed = 0
    for r in rows:
        for s in rows:
            if _dominates(r.counts, s.counts):
                continue
            nontrivial += 1
            if not relation_respects_ordering(build_relation(r, s)):
                failed += 1
    return {"rows": len(rows), "pairs": len(rows) ** 2, "nontrivial": nontrivial, "failed": failed}
