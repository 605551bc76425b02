from itertools import product

import pytest

import plactic.gsverify as gs
from plactic.core import Row, all_rows, row_key
from plactic.formats import parse_row
from plactic.gsverify import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    TRIPLE_CHECKS,
    BudgetExceeded,
    VerificationReport,
    build_relation,
    check_c3k3_closed_form,
    check_conservation,
    check_e2l2_closed_form,
    check_lemma_invariants,
    check_ordering,
    check_zero_pattern,
    composition_trivial,
    reduce_triple,
    relation_respects_ordering,
    verify_gs_basis,
)
from plactic.tableau import LEFTMOST, RIGHTMOST, Tableau, normal_form_rowword, tableau_multiply


def R(text, n=3):
    return parse_row(text, n)


def test_build_relation_examples():
    rel = build_relation(R("111225", 5), R("23", 5))
    assert not rel.trivial
    assert rel.rhs.rows == (R("5", 5), R("1112223", 5))
    rel = build_relation(R("4556", 7), R("223357", 7))
    assert rel.trivial and rel.rhs.rows == rel.lhs
    rel = build_relation(R("2"), R("2"))
    assert not rel.trivial and rel.rhs.rows == (R("22"),)


def test_relation_respects_ordering_examples():
    assert relation_respects_ordering(build_relation(R("111225", 5), R("23", 5)))
    assert relation_respects_ordering(build_relation(R("2"), R("2")))
    with pytest.raises(ValueError):
        relation_respects_ordering(build_relation(R("2"), R("1")))


def test_check_ordering_small():
    out = check_ordering(3, 3)
    assert out["failed"] == 0 and out["rows"] == 19 and out["nontrivial"] > 0


def test_worked_trace():
    tr = reduce_triple(R("2", 2), R("12", 2), R("1", 2))
    names = dict(a="2", b="11", d="22", e="22", f="11", g="2", h="12", i="2", j="11", l="22")
    for name, text in names.items():
        assert tr.row(name) == R(text, 2), name
    assert tr.row("c") is None and tr.row("k") is None
    assert tr.c == (0, 0)
    assert tr.right_final == tr.left_final == ((0, 2), (2, 0))
    assert composition_trivial(tr)
    assert check_e2l2_closed_form(tr)
    assert tr.e[1] == 2
    assert all(o.status != FAIL for o in check_lemma_invariants(tr).values())


def test_all_dominating_trace():
    tr = reduce_triple(R("3"), R("2"), R("1"))
    assert tr.right_final == tr.left_final == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert composition_trivial(tr)
    # C = K = "3", so C_3 = K_3 = 1 = min(t_1, s_2, r_3)
    assert tr.partial("C")[2] == tr.partial("K")[2] == 1
    assert check_c3k3_closed_form(tr)


def test_minimal_rows_trace():
    tr = reduce_triple(R("1"), R("1"), R("1"))
    assert tr.right_final == tr.left_final == ((3, 0, 0),)
    report = check_lemma_invariants(tr)
    assert all(o.status in (PASS, NOT_APPLICABLE) for o in report.values())


def test_c3k3_zero_when_t1_zero():
    for r, s in product(all_rows(3, 2), repeat=2):
        tr = reduce_triple(r, s, R("23"))
        assert tr.partial("C")[2] == tr.partial("K")[2] == 0


def test_closed_form_preconditions():
    tr = reduce_triple(R("2", 2), R("1", 2), R("1", 2))
    with pytest.raises(ValueError):
        check_c3k3_closed_form(tr)
    tr = reduce_triple(Row((1,)), Row((1,)), Row((1,)))
    with pytest.raises(ValueError):
        check_e2l2_closed_form(tr)


def test_checks_agree_with_independent_normal_forms():
    # composition triviality <=> both strategies and tableau_multiply agree
    rs = all_rows(3, 3)
    for r, s, t in product(rs, repeat=3):
        tr = reduce_triple(r, s, t)
        assert check_zero_pattern(tr) and check_conservation(tr)
        left = normal_form_rowword((r, s, t), 3, LEFTMOST)
        right = normal_form_rowword((r, s, t), 3, RIGHTMOST)
        via_mul = tableau_multiply(tableau_multiply(Tableau((r,), 3), Tableau((s,), 3)), Tableau((t,), 3))
        same = left == right == via_mul
        assert composition_trivial(tr) == same
        assert same
        assert tuple(Row(v) for v in tr.right_final) == right.rows


def test_verify_small_and_counts():
    rep = verify_gs_basis(3, 3)
    assert rep.ok and rep.triples == 19**3 == 6859
    for name in TRIPLE_CHECKS:
        assert sum(rep.triple_counts[name].values()) == rep.triples
    assert rep.total_failures == 0 and rep.minimal_counterexample is None


def test_verify_one_letter():
    rep = verify_gs_basis(1, 5)
    assert rep.ok and rep.rows == 5
    assert rep.triple_counts["composition"][PASS] == 125
    assert rep.triple_counts["c3k3_closed_form"][NOT_APPLICABLE] == 125
    assert rep.pair_counts["ordering"][FAIL] == 0


def test_budget():
    with pytest.raises(BudgetExceeded):
        verify_gs_basis(3, 4, budget=1000)


def test_report_roundtrip_and_determinism():
    a = verify_gs_basis(2, 3, samples=200, seed=11)
    b = verify_gs_basis(2, 3, samples=200, seed=11)
    assert a.to_json(timing=False) == b.to_json(timing=False)
    assert VerificationReport.from_json(a.to_json()) == a
    assert a.config["seed"] == 11 and a.tool_version


def test_report_independent_of_workers():
    a = verify_gs_basis(2, 3, workers=1)
    b = verify_gs_basis(2, 3, workers=2)
    assert a.to_json(timing=False) == b.to_json(timing=False)


def test_verifier_catches_a_broken_product(monkeypatch):
    def naive(w, z):
        # concatenation without bumping: never a tableau when it should bump
        return (0,) * len(w), tuple(a + b for a, b in zip(w, z))

    real = gs.closed_form_counts

    def broken(w, z):
        if w == (0, 1, 0) and z == (1, 0, 0):
            return naive(w, z)
        return real(w, z)

    monkeypatch.setattr(gs, "closed_form_counts", broken)
    rep = verify_gs_basis(3, 2)
    assert not rep.ok
    assert rep.triple_counts["composition"][FAIL] > 0
    mc = rep.minimal_counterexample
    assert mc is not None and "composition" in mc["checks"]
    failing = [
        (r, s, t)
        for r, s, t in product([x.counts for x in all_rows(3, 2)], repeat=3)
        if not composition_trivial(gs._trace(r, s, t))
    ]
    least = min(failing, key=lambda tr: tuple(row_key(Row(v)) for v in tr))
    assert [tuple(v) for v in mc["triple"]] == list(least)


@pytest.mark.parametrize("n", [5, 8, 10])
def test_sampled_triples_large_alphabets(n):
    rep = verify_gs_basis(n, 1, samples=1500, seed=n)
    assert rep.ok and rep.sampled_triples == 1500
    assert rep.config["sample_max_len"] == 30
    assert rep.triple_counts["composition"][PASS] == rep.triples + 1500
