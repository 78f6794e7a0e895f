from glswc import reps
from glswc.superchar import sign_character
from glswc.swc import w4_q1
from glswc.tables import (
    TableRow,
    _with_fallback,
    cuspidal_pair,
    sample_n,
    sample_q,
    steinberg_pair,
    w4_parity_pair,
)


def test_sampling_is_deterministic():
    assert sample_q(1) == [17, 49]
    assert sample_q(5) == [5, 37]
    assert sample_q(9) == [9, 25]
    assert sample_q(13) == [13, 29]
    assert sample_q(1, 8) == [9, 17]
    assert [sample_n(r) for r in range(4)] == [[4, 8], [5, 9], [2, 6], [3, 7]]


def test_parity_pair_reads_coefficients():
    inp = reps.to_rep_input(reps.PrincipalSeries(3, 17, (0, 1, 15)))
    assert w4_parity_pair(w4_q1(inp, 4)) == (1, 1)
    assert w4_parity_pair(w4_q1(reps.trivial(3, 17), 4)) == (0, 0)


def test_documented_rows():
    assert cuspidal_pair(9, 1) == (1, 0)
    assert steinberg_pair(4, 17) == (0, 0)
    assert steinberg_pair(3, 5) == (1, 1)


def test_fallback_reports_mod8_reading():
    # a deliberately wrong printed pair triggers the mod-8 retry
    row = TableRow("fake", [{"q": 13, "n": 2}], (1, 1), [(0, 0)], "MISMATCH")
    out = _with_fallback(row, lambda q: [cuspidal_pair(q, -1)])
    assert out.status == "MISMATCH"
    assert out.note.startswith("mod-8 reading (q = 5 mod 8)")


def test_sign_character():
    assert sign_character((1, 1), (1, 0)) == -1
    assert sign_character((1, 1), (1, 1)) == 1
