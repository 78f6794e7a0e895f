"""Acceptance gate: one test per criterion, summarised by ``conftest.py``."""

import random
import time

import pytest

from glswc import reps
from glswc.errors import InconsistentParity
from glswc.superchar import brute_force_multiplicities, build_matrix, characters_from_multiplicities, decompose
from glswc.swc import (
    FieldCase,
    a_class,
    check_closed_forms,
    is_spinorial,
    spinorial_by_classes,
    total_swc,
    verify_detection,
    verify_square_property,
    w2,
    w4_q1,
)
from glswc.tables import build_tables, principal_series_lists
from glswc.verify import explicit_m_inputs, genuine_corpus, random_multiplicities, spinorial_agrees

SEED = 20240601


def corpus(case):
    return genuine_corpus(SEED, case, 200, 6)


@pytest.mark.acceptance(1, "supercharacter table squares to 2^n I for n <= 12")
def test_involution():
    start = time.perf_counter()
    for n in range(1, 13):
        m = build_matrix(n)
        sq = m.square()
        assert sq == [[(1 << n) if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
    assert time.perf_counter() - start < 1


@pytest.mark.acceptance(2, "matrix command reproduces the n = 1, 2 tables")
def test_matrix_displays(capsys):
    from glswc.cli import main

    assert main(["matrix", "1"]) == 0
    assert capsys.readouterr().out == "[[1, 1], [1, -1]]\n"
    assert main(["matrix", "2"]) == 0
    assert capsys.readouterr().out == "[[1, 2, 1], [1, 0, -1], [1, -2, 1]]\n"


@pytest.mark.acceptance(3, "decompose inverts M and agrees with brute force")
def test_decomposition_oracle():
    rng = random.Random(SEED)
    start = time.perf_counter()
    for n in range(1, 9):
        for _ in range(100):
            c = random_multiplicities(rng, n)
            chars = characters_from_multiplicities(c, n)
            assert list(decompose(chars).c) == c
            slow = brute_force_multiplicities(n, lambda g: chars.value(sum(g)))
            assert all(slow[label] == c[sum(label)] for label in slow)
    assert time.perf_counter() - start < 10


@pytest.mark.acceptance(4, "low-degree components of the total class match the closed forms")
def test_closed_forms():
    start = time.perf_counter()
    for case in FieldCase:
        for inp in corpus(case):
            report = check_closed_forms(inp, 6)
            assert report.ok, (inp, report.details)
            assert set(report.checks) == ({"w1", "w2", "w4"} if case is FieldCase.FQ1 else {"w1", "w2"})
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance(5, "restriction to C_2^n is the square of the half-exponent product")
def test_square_property():
    for inp in corpus(FieldCase.FQ1):
        assert verify_square_property(inp, 6), inp


@pytest.mark.acceptance(6, "principal series: w2 and w4 vanish, case lists reproduced")
def test_principal_series():
    for n in (3, 4, 5):
        for q in (5, 7, 9, 11, 13):
            for fam in reps.real_principal_series(n, q):
                assert w2(reps.to_rep_input(fam), 4).is_zero(), fam
    for n in (5, 6):
        for q in (5, 13, 17):
            for fam in reps.real_principal_series(n, q):
                assert w4_q1(reps.to_rep_input(fam), 4).is_zero(), fam
    rows = principal_series_lists((17, 5, 13))
    assert len(rows) == 3 * 8
    assert all(r.match for r in rows), [r.label for r in rows if not r.match]
    # both outcomes occur in the n = 3 list for every q
    for q in (17, 5, 13):
        outcomes = {r.printed for r in rows if r.label.startswith(f"n = 3, q = {q},")}
        assert len(outcomes) == 2


@pytest.mark.acceptance(7, "cuspidal and Steinberg w4 tables recomputed and matched")
def test_tables():
    report = build_tables()
    assert len(report.cuspidal) == 8 and len(report.steinberg) == 11
    for row in report.cuspidal + report.steinberg:
        qs = sorted({s["q"] for s in row.samples})
        assert len(qs) == 2
        assert row.status == "MATCH", (row.label, row.computed, row.note)


@pytest.mark.acceptance(8, "congruence spinoriality agrees with w2 + w1^2 = 0")
def test_spinoriality():
    inputs = corpus(FieldCase.FQ1) + corpus(FieldCase.FQ3)
    inputs += explicit_m_inputs(FieldCase.FQ1) + explicit_m_inputs(FieldCase.FQ3)
    for inp in inputs:
        assert spinorial_agrees(inp), inp
    for m, inp in enumerate(explicit_m_inputs(FieldCase.FQ3)):
        assert is_spinorial(inp) == spinorial_by_classes(inp) == (m % 4 in (0, 3))
    for m, inp in enumerate(explicit_m_inputs(FieldCase.FQ1)):
        assert is_spinorial(inp) == (m % 4 == 0)
        if m % 2:
            with pytest.raises(InconsistentParity):
                spinorial_by_classes(inp)
        else:
            assert spinorial_by_classes(inp) == (m % 4 == 0)


@pytest.mark.acceptance(9, "restriction to the smaller GL detects cohomology below the bound")
def test_detection():
    start = time.perf_counter()
    for m, n in ((3, 2), (4, 3), (5, 3)):
        rep = verify_detection(FieldCase.FQ1, m, n)
        assert [r.degree for r in rep.rows] == list(range(2 * n - 1))
        assert all(r.kernel_dim == 0 for r in rep.rows)
    for n in range(1, 6):
        for m in range(n, n + 3):
            rep = verify_detection(FieldCase.FQ3, m, n)
            assert all(r.kernel_dim == 0 for r in rep.rows)
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance(10, "Steinberg representation of GL_2(F_5) end to end")
def test_steinberg_example():
    inp = reps.to_rep_input(reps.Steinberg(2, 5))
    assert inp.chars.values == (5, 1, 5)
    rep = total_swc(inp, 12)
    assert rep.multiplicities.c == (3, 0, 2)
    assert str(rep.total) == "1 + t1 + t2"
    second = w2(inp, 12)
    assert second == a_class(rep.signature, 1)
    assert str(second) == "t1 + t2"


@pytest.mark.acceptance(11, "anisotropic torus restriction kills w2 of a nonzero class")
def test_non_detection():
    for q in (3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31):
        for j in range(1, q - 1, 2):
            assert reps.torus_w2_coefficient(2, q, j) == 0
            assert not w2(reps.to_rep_input(reps.DetTwist(2, q, j)), 4).is_zero()
