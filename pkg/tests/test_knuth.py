from collections import Counter
from itertools import product

import pytest

from plactic.knuth import FuelExhausted, all_classes, congruence_class, knuth_neighbors, oracle_equivalent


def w(text):
    return tuple(int(c) for c in text)


def test_neighbors_first_relation():
    assert knuth_neighbors(w("132")) == {w("312")}
    assert knuth_neighbors(w("312")) == {w("132")}


def test_neighbors_second_relation():
    assert knuth_neighbors(w("213")) == {w("231")}
    assert knuth_neighbors(w("231")) == {w("213")}


@pytest.mark.parametrize("text", ["111", "123", "21", ""])
def test_no_neighbors(text):
    assert knuth_neighbors(w(text)) == set()


def test_boundary_cases_of_inequalities():
    # x z y with x == y: 1 2 1 -> 2 1 1
    assert w("211") in knuth_neighbors(w("121"))
    # y x z with y == z: 2 1 2 -> 2 2 1
    assert w("221") in knuth_neighbors(w("212"))


def test_classes():
    assert congruence_class(w("21")) == {w("21")}
    assert congruence_class(w("132")) == {w("132"), w("312")}
    assert congruence_class(w("123")) == {w("123")}
    assert congruence_class(w("132")).sorted_words() == [w("132"), w("312")]


def test_oracle_equivalent():
    assert oracle_equivalent(w("132"), w("312"))
    assert not oracle_equivalent(w("123"), w("213"))
    assert oracle_equivalent(w("3121"), w("3121"))
    assert oracle_equivalent(w("312"), w("132"))


def test_fuel():
    with pytest.raises(FuelExhausted):
        congruence_class(w("14231"), fuel=3)


@pytest.mark.parametrize("length", range(0, 7))
def test_classes_partition_words(length):
    classes = all_classes(3, length)
    members = [x for c in classes for x in c]
    assert len(members) == len(set(members)) == 3**length
    for c in classes:
        counts = {tuple(sorted(Counter(x).items())) for x in c}
        assert len(counts) == 1
        for x in c:
            assert knuth_neighbors(x) <= c


def test_two_letter_two_length_classes():
    assert len(all_classes(2, 2)) == 4
    assert {frozenset(c) for c in all_classes(2, 2)} == {frozenset({x}) for x in product((1, 2), repeat=2)}
