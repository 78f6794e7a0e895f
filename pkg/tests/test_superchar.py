import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glswc.errors import NegativeMultiplicity, NonIntegral, UnsupportedCharacterValue
from glswc.superchar import (
    CharacterVector,
    SupercharMatrix,
    binary_strings,
    brute_force_multiplicities,
    build_matrix,
    characters_from_multiplicities,
    decompose,
    superchar_value,
    verify_involution,
)

from oracles import superchar_by_definition


def test_small_tables():
    assert build_matrix(1).tolist() == [[1, 1], [1, -1]]
    assert build_matrix(2).tolist() == [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
    assert build_matrix(3).tolist()[0] == [1, 3, 3, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_entries_match_definition(n):
    m = build_matrix(n)
    for i in range(n + 1):
        for k in range(n + 1):
            assert m[i, k] == superchar_by_definition(n, i, k)


def test_involution_detects_corruption():
    m = build_matrix(3)
    rows = [list(r) for r in m.entries]
    rows[2][1] -= 1
    assert not verify_involution(3, SupercharMatrix(3, tuple(map(tuple, rows))))
    assert all(verify_involution(n) for n in range(1, 13))


def test_superchar_value_bounds():
    with pytest.raises(IndexError):
        superchar_value(2, 3, 0)


def test_binary_strings_order():
    assert binary_strings(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert binary_strings(3, 1) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_decompose_examples():
    assert decompose(CharacterVector.of([5, 1, 5])).c == (3, 0, 2)
    assert decompose(CharacterVector.of([1, 1, 1])).c == (1, 0, 0)
    with pytest.raises(NonIntegral):
        decompose(CharacterVector.of([1, 0, 0]))
    with pytest.raises(NegativeMultiplicity):
        decompose(CharacterVector.of([-1, -1, -1]))
    virtual = decompose(CharacterVector.of([-1, -1, -1]), allow_virtual=True)
    assert virtual.virtual and virtual.c == (-1, 0, 0)


def test_unknown_values_refused():
    with pytest.raises(UnsupportedCharacterValue):
        decompose(CharacterVector.of([4, 0, None]))


def test_brute_force_steinberg_gl2_f5():
    chars = CharacterVector.of([5, 1, 5])
    r = brute_force_multiplicities(2, lambda g: chars.value(sum(g)))
    assert r == {(0, 0): 3, (0, 1): 0, (1, 0): 0, (1, 1): 2}


def test_character_arithmetic():
    a = CharacterVector.of([2, 0, -2])
    b = CharacterVector.of([1, 1, 1])
    assert (a + b).values == (3, 1, -1)
    assert (a - a).values == (0, 0, 0)
    assert (a + CharacterVector.of([1, None, 1])).values == (3, None, -1)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.lists(st.integers(0, 10**20), min_size=n + 1, max_size=n + 1)))
def test_round_trip(c):
    chars = characters_from_multiplicities(c)
    mult = decompose(chars)
    assert list(mult.c) == c
    assert mult.dim == chars.dim


def test_brute_force_agrees_random():
    rng = random.Random(7)
    for n in range(1, 7):
        c = [rng.randint(0, 9) for _ in range(n + 1)]
        chars = characters_from_multiplicities(c)
        r = brute_force_multiplicities(n, lambda g: chars.value(sum(g)))
        assert all(r[label] == c[sum(label)] for label in r)
