from itertools import product

import pytest

from plactic.core import NotARowError, Row, all_rows, dominates
from plactic.formats import format_tableau, parse_rowword, parse_tableau, parse_word
from plactic.knuth import all_classes, knuth_neighbors
from plactic.tableau import (
    LEFTMOST,
    RIGHTMOST,
    NotATableauError,
    Tableau,
    enumerate_tableaux,
    normal_form_letters,
    normal_form_rowword,
    plactic_equivalent,
    tableau_multiply,
    tableau_sort_key,
)

PAPER_TABLEAU = "4556·223357·1112444"


def T(text, n):
    return parse_tableau(text, n)


def test_paper_tableau_is_valid_and_fixed():
    t = T(PAPER_TABLEAU, 7)
    assert t.shape == (7, 6, 4)
    assert normal_form_letters(t.reading_word(), 7) == t
    assert normal_form_rowword(t.rows, 7) == t


def test_rejects_non_tableau():
    with pytest.raises(NotATableauError):
        Tableau(parse_rowword("12·2", 2), 2)


def test_normal_form_letters_examples():
    assert format_tableau(normal_form_letters((3,), 3)) == "3"
    assert format_tableau(normal_form_letters((2, 1), 3)) == "2·1"
    assert normal_form_letters((), 3).is_identity
    assert format_tableau(normal_form_letters((), 3)) == "ε"
    with pytest.raises(ValueError):
        normal_form_letters((4,), 3)


def test_normal_form_rowword_examples():
    assert format_tableau(normal_form_rowword(parse_rowword("2·12·1", 2), 2)) == "22·11"
    assert format_tableau(normal_form_rowword(parse_rowword("11·222", 2), 2)) == "11222"
    assert normal_form_rowword((), 3).is_identity


def test_strategy_must_pick_a_candidate():
    with pytest.raises(ValueError):
        normal_form_rowword(parse_rowword("2·2", 2), 2, strategy=lambda c: 99)


def test_tableau_multiply():
    assert format_tableau(tableau_multiply(T("2", 2), T("1", 2))) == "2·1"
    t = T("22·11", 2)
    e = Tableau.identity(2)
    assert tableau_multiply(t, e) == t == tableau_multiply(e, t)
    a, b, c = T("2", 2), T("12", 2), T("1", 2)
    assert (a * b) * c == a * (b * c) == T("22·11", 2)


def test_plactic_equivalent_examples():
    assert plactic_equivalent((1, 3, 2), (3, 1, 2), 3)
    assert plactic_equivalent((2, 1, 3), (2, 3, 1), 3)
    assert not plactic_equivalent((1, 2, 3), (2, 1, 3), 3)


def test_enumerate_examples():
    got = [format_tableau(t) for t in enumerate_tableaux(2, 2)]
    assert sorted(got) == sorted(["11", "12", "22", "2·1"])
    assert [format_tableau(t) for t in enumerate_tableaux(1, 3)] == ["111"]
    assert [t.is_identity for t in enumerate_tableaux(3, 0)] == [True]


@pytest.mark.parametrize("n,size", [(2, 4), (3, 4), (3, 5), (4, 3)])
def test_enumeration_order_and_uniqueness(n, size):
    tabs = list(enumerate_tableaux(n, size))
    assert tabs == sorted(tabs, key=tableau_sort_key)
    assert len(set(tabs)) == len(tabs)
    assert all(len(t) == size for t in tabs)


@pytest.mark.parametrize("size", range(0, 7))
def test_idempotence_and_completeness(size):
    tabs = list(enumerate_tableaux(3, size))
    for t in tabs:
        assert normal_form_letters(t.reading_word(), 3) == t
    forms = {normal_form_letters(w, 3) for w in product((1, 2, 3), repeat=size)}
    assert forms == set(tabs)
    assert len(forms) == len(all_classes(3, size))


def test_knuth_moves_preserve_normal_form():
    for length in range(3, 8):
        for word in product((1, 2, 3), repeat=length):
            nf = normal_form_letters(word, 3)
            for v in knuth_neighbors(word):
                assert normal_form_letters(v, 3) == nf


def test_letters_agree_with_single_letter_rowword():
    for length in range(0, 6):
        for word in product((1, 2, 3), repeat=length):
            rows = tuple(Row.from_letters((x,), 3) for x in word)
            assert normal_form_rowword(rows, 3) == normal_form_letters(word, 3)


def test_strategy_independence_small():
    rs = all_rows(3, 3)
    for k in (2, 3):
        for word in product(rs, repeat=k):
            if sum(len(r) for r in word) > 6:
                continue
            assert normal_form_rowword(word, 3, LEFTMOST) == normal_form_rowword(word, 3, RIGHTMOST)


def test_multiply_associative_grid():
    tabs = [t for size in range(0, 3) for t in enumerate_tableaux(2, size)]
    for a, b, c in product(tabs, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_rows_dominate_in_results():
    t = normal_form_letters(parse_word("3213213", 3), 3)
    assert all(dominates(a, b) for a, b in zip(t.rows, t.rows[1:]))


def test_row_word_must_be_rows():
    with pytest.raises(NotARowError):
        Row((0, 0))


@pytest.mark.parametrize("size", range(1, 6))
def test_one_tableau_word_per_class(size):
    for cls in all_classes(3, size):
        fixed = [w for w in cls if normal_form_letters(w, 3).reading_word() == w]
        assert len(fixed) == 1
