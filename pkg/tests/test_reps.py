import itertools

import pytest

from glswc import reps
from glswc.errors import NotReal, UnsupportedCharacterValue, ValidationError
from glswc.swc import FieldCase, character_invariants, w2

from oracles import q_factorial


def test_q_combinatorics():
    assert reps.q_bracket_factorial(3, 3) == 52
    assert reps.geometric_sum(2, 3) == 13
    assert reps.q_power_product(2, 3) == 16
    for n in range(6):
        for q in (3, 5, 9):
            assert reps.q_bracket_factorial(n, q) == q_factorial(n, q)


def test_prime_power_validation():
    assert [q for q in range(30) if reps.is_odd_prime_power(q)] == [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29]
    for bad in (1, 2, 15, 21, 45):
        with pytest.raises(ValidationError):
            reps.validate_q(bad)


def test_principal_series_values():
    q = 5
    for j in range(1, 4):
        fam = reps.PrincipalSeries(3, q, (0, j, -j))
        assert reps.ps_character(fam, 0) == reps.q_bracket_factorial(3, q)
        assert reps.ps_character(fam, 1) == reps.q_bracket_factorial(2, q) * (1 + 2 * (-1) ** j)


def test_principal_series_by_subsets():
    # the generating product against a direct sum over k-subsets
    fam = reps.PrincipalSeries(4, 7, (1, 5, 3, 3))
    signs = fam.signs()
    for k in range(5):
        direct = sum(
            1 if sum(signs[i] == -1 for i in idx) % 2 == 0 else -1 for idx in itertools.combinations(range(4), k)
        )
        assert reps.ps_character(fam, k) == reps.q_bracket_factorial(k, 7) * reps.q_bracket_factorial(4 - k, 7) * direct


def test_not_real():
    with pytest.raises(NotReal):
        reps.ps_character(reps.PrincipalSeries(2, 7, (1, 2)), 0)


def test_steinberg_values():
    assert reps.to_rep_input(reps.Steinberg(2, 5)).chars.values == (5, 1, 5)
    assert reps.steinberg_character(4, 3, 0) == 3**6
    assert reps.steinberg_character(4, 3, 1) == 3**3


def test_cuspidal_values():
    assert reps.cuspidal_character(reps.Cuspidal(2, 5, 1), 0) == 4
    assert reps.cuspidal_character(reps.Cuspidal(2, 5, -1), 2) == -4
    assert reps.cuspidal_character(reps.Cuspidal(4, 5, 1), 1) == 0
    with pytest.raises(UnsupportedCharacterValue):
        reps.cuspidal_character(reps.Cuspidal(3, 5, 1), 2)
    with pytest.raises(UnsupportedCharacterValue):
        reps.to_rep_input(reps.Cuspidal(3, 5, 1))
    partial = reps.to_rep_input(reps.Cuspidal(3, 5, 1), partial=True)
    assert partial.chars.values == (96, 0, None, 96)


def test_det_twist_and_sums():
    assert reps.to_rep_input(reps.DetTwist(2, 7, 1)).chars.values == (2, -2, 2)
    assert reps.to_rep_input(reps.DetTwist(2, 7, 2)).chars.values == (2, 2, 2)
    total = reps.to_rep_input(reps.DirectSum([reps.Literal(reps.trivial(2, 7)), reps.DetTwist(2, 7, 1)]))
    assert total.chars.values == (3, -1, 3)


def test_direct_sum_needs_common_group():
    with pytest.raises(ValidationError):
        reps.to_rep_input(reps.DirectSum([reps.Steinberg(2, 5), reps.Steinberg(2, 7)]))


def test_real_principal_series_counts():
    # q = 5: self-dual characters {0, 2}, one inverse pair {1, 3}
    assert len(reps.real_principal_series(2, 5)) == 4
    assert all(f.is_real for f in reps.real_principal_series(4, 9))


def test_principal_series_w2_vanishes():
    for n in (3, 4, 5):
        for q in (5, 7, 9, 11, 13):
            for fam in reps.real_principal_series(n, q):
                assert w2(reps.to_rep_input(fam), 4).is_zero()


def test_cuspidal_m_divisible_by_four():
    for n in (3, 4):
        for q in (3, 5, 7, 9):
            inp = reps.to_rep_input(reps.Cuspidal(n, q, 1), partial=True)
            assert character_invariants(inp.chars).m_pi % 4 == 0


def test_steinberg_m_factorisation():
    for n in range(2, 7):
        for q in (3, 5, 7, 9):
            m = character_invariants(reps.to_rep_input(reps.Steinberg(n, q)).chars).m_pi
            assert m == (q - 1) // 2 * q ** ((n - 1) * (n - 2) // 2) * reps.geometric_sum(n - 2, q)


def test_torus_coefficient():
    assert reps.torus_w2_coefficient(2, 7, 1) == 0
    assert reps.torus_w2_coefficient(2, 5, 3) == 0
    with pytest.raises(ValidationError):
        reps.torus_w2_coefficient(3, 5, 1)
    inp = reps.to_rep_input(reps.DetTwist(2, 7, 1))
    assert inp.field_case is FieldCase.FQ3
    assert str(w2(inp, 4)) == "v1^2 + v2^2"
