"""Seeded one-shot verification of the class formulas and their consequences.

Each check runs over a deterministic sample drawn from ``random.Random(seed)``
and records the first counterexample, serialised as a job descriptor when the
failing object is a representation.
"""

from __future__ import annotations

import json
import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from math import comb

from . import reps
from .errors import InconsistentParity, SWCError
from .jobs import descriptor_for
from .superchar import (
    SupercharMatrix,
    brute_force_multiplicities,
    build_matrix,
    characters_from_multiplicities,
    decompose,
    verify_involution,
)
from .swc import (
    FieldCase,
    RepInput,
    character_invariants,
    check_closed_forms,
    is_spinorial,
    spinorial_by_classes,
    verify_detection,
    verify_square_property,
    w2,
    w4_q1,
)
from .tables import build_tables

FQ1_SAMPLE = (5, 9, 13, 17, 25, 29, 37, 41)
FQ3_SAMPLE = (3, 7, 11, 19, 23, 27, 31, 43)
FAULTS = ("corrupt-matrix",)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    total: int = 0
    counterexample: dict | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, witness: Callable[[], dict] | None = None, detail: str = "") -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = witness() if witness else {}
            self.detail = detail


@dataclass
class VerificationReport:
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.ok), None)

    def to_text(self) -> str:
        lines = [f"seed {self.seed}"]
        for c in self.checks:
            lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}  {c.passed}/{c.total}")
        fail = self.first_failure
        if fail is None:
            lines.append("all checks passed")
        else:
            lines.append(f"first failure: {fail.name}")
            if fail.detail:
                lines.append(f"  {fail.detail}")
            lines.append("  counterexample: " + json.dumps(fail.counterexample, sort_keys=True))
        return "\n".join(lines) + "\n"


# random inputs

def random_multiplicities(rng: random.Random, n: int, even_from: int | None = None) -> list[int]:
    """Small non-negative multiplicities, with an occasional huge entry."""
    c = [rng.randint(0, 4) for _ in range(n + 1)]
    if rng.random() < 0.15:
        c[rng.randrange(n + 1)] += rng.randint(1, 10**30)
    if even_from is not None:
        c = [x if i < even_from else 2 * x for i, x in enumerate(c)]
    return c


def random_genuine_input(rng: random.Random, case: FieldCase, n: int) -> RepInput:
    """A character vector that can occur for a real representation of the given group.

    For ``q = 1 mod 4`` every nontrivial sign character comes in pairs, so
    ``c_i`` is even for ``i >= 1``.  For ``q = 3 mod 4`` the restriction to
    ``GL_2`` must have even ``c'_1``, arranged by adjusting ``c_1``.
    """
    case = FieldCase(case)
    if case is FieldCase.FQ1:
        c = random_multiplicities(rng, n, even_from=1)
        chars = characters_from_multiplicities(c, n)
        return RepInput.finite(rng.choice(FQ1_SAMPLE), chars, delta=rng.randint(0, 1))
    c = random_multiplicities(rng, n)
    if case is FieldCase.FQ3:
        if n >= 2 and sum(ci * comb(n - 2, i - 1) for i, ci in enumerate(c) if i >= 1) % 2:
            c[1] += 1
        return RepInput.finite(rng.choice(FQ3_SAMPLE), characters_from_multiplicities(c, n))
    return RepInput.lie(case, characters_from_multiplicities(c, n))


def genuine_corpus(seed: int, case: FieldCase, cases: int, max_n: int) -> list[RepInput]:
    rng = random.Random(f"{seed}:{FieldCase(case).value}")
    return [random_genuine_input(rng, case, rng.randint(1, max_n)) for _ in range(cases)]


def explicit_m_inputs(case: FieldCase, ms: Iterable[int] = range(8)) -> list[RepInput]:
    """Rank-two inputs with ``m_pi = m``: the trivial character plus ``m`` copies of ``sigma_2``."""
    q = 5 if case is FieldCase.FQ1 else 3
    return [RepInput.finite(q, characters_from_multiplicities([1, 0, m], 2)) for m in ms]


# individual checks

def _witness(inp: RepInput) -> Callable[[], dict]:
    return lambda: descriptor_for(inp, 6)


def check_involution(fault: str | None = None, max_n: int = 12) -> CheckResult:
    res = CheckResult("M^2=2^nI")
    for n in range(1, max_n + 1):
        matrix = build_matrix(n)
        if fault == "corrupt-matrix" and n == 3:
            rows = [list(r) for r in matrix.entries]
            rows[1][2] += 1
            matrix = SupercharMatrix(n, tuple(tuple(r) for r in rows))
        res.record(verify_involution(n, matrix), lambda n=n: {"n": n}, f"M^2 != 2^{n} I at n = {n}")
    return res


def check_decompose_round_trip(seed: int, per_n: int, max_n: int = 8) -> CheckResult:
    rng = random.Random(f"{seed}:decompose")
    res = CheckResult("decompose(M c) = c")
    for n in range(1, max_n + 1):
        for _ in range(per_n):
            c = random_multiplicities(rng, n)
            chars = characters_from_multiplicities(c, n)
            got = list(decompose(chars).c)
            res.record(got == c, lambda c=c, n=n: {"n": n, "multiplicities": c}, f"{got} != {c}")
    return res


def check_brute_force(seed: int, per_n: int, max_n: int = 8) -> CheckResult:
    rng = random.Random(f"{seed}:brute")
    res = CheckResult("decompose agrees with inner products")
    for n in range(1, max_n + 1):
        for _ in range(per_n):
            c = random_multiplicities(rng, n)
            chars = characters_from_multiplicities(c, n)
            fast = decompose(chars).c
            slow = brute_force_multiplicities(n, lambda g: chars.value(sum(g)))
            ok = all(slow[label] == fast[sum(label)] for label in slow)
            res.record(ok, lambda c=c, n=n: {"n": n, "multiplicities": c})
    return res


def _guarded(res: CheckResult, inp: RepInput, fn: Callable[[], bool]) -> None:
    try:
        ok, detail = fn(), ""
    except SWCError as exc:
        ok, detail = False, f"{exc.label}: {exc}"
    res.record(ok, _witness(inp), detail)


def check_closed_forms_on(name: str, corpus: list[RepInput], cap: int = 6) -> CheckResult:
    res = CheckResult(name)
    for inp in corpus:
        _guarded(res, inp, lambda inp=inp: check_closed_forms(inp, cap).ok)
    return res


def check_square_property(corpus: list[RepInput], cap: int = 6) -> CheckResult:
    res = CheckResult("restriction to C_2^n is a square")
    for inp in corpus:
        _guarded(res, inp, lambda inp=inp: verify_square_property(inp, cap))
    return res


def spinorial_agrees(inp: RepInput) -> bool:
    """Congruence verdict against ``w2 + w1^2 = 0``.

    For ``q = 1 mod 4`` an odd ``m_pi`` cannot come from a real
    representation; the verdict must then be negative and ``w2`` must refuse.
    """
    verdict = is_spinorial(inp)
    try:
        by_classes = spinorial_by_classes(inp)
    except InconsistentParity:
        return not verdict and inp.field_case is FieldCase.FQ1
    return verdict == by_classes


def check_spinoriality(corpora: Iterable[RepInput]) -> CheckResult:
    res = CheckResult("spinorial iff w2 + w1^2 = 0")
    for inp in corpora:
        _guarded(res, inp, lambda inp=inp: spinorial_agrees(inp))
    return res


def check_detection_q1() -> CheckResult:
    res = CheckResult("detection below degree 2n-1 (q = 1 mod 4)")
    for m, n in ((3, 2), (4, 3), (5, 3)):
        rep = verify_detection(FieldCase.FQ1, m, n)
        res.record(rep.ok, lambda m=m, n=n: {"m": m, "n": n}, str(rep.rows))
    return res


def check_detection_q3(max_n: int = 5) -> CheckResult:
    res = CheckResult("detection below degree n (q = 3 mod 4)")
    for n in range(1, max_n + 1):
        for m in range(n, n + 3):
            rep = verify_detection(FieldCase.FQ3, m, n)
            res.record(rep.ok, lambda m=m, n=n: {"m": m, "n": n}, str(rep.rows))
    return res


def _family_check(name: str, families, predicate) -> CheckResult:
    res = CheckResult(name)
    for fam in families:
        inp = reps.to_rep_input(fam)
        _guarded(res, inp, lambda inp=inp: predicate(inp))
    return res


def check_ps_w2() -> CheckResult:
    fams = [f for n in (3, 4, 5) for q in (5, 7, 9, 11, 13) for f in reps.real_principal_series(n, q)]
    return _family_check("principal series: w2 = 0 for n >= 3", fams, lambda inp: w2(inp, 4).is_zero())


def check_ps_w4() -> CheckResult:
    fams = [f for n in (5, 6) for q in (5, 13, 17) for f in reps.real_principal_series(n, q)]
    return _family_check("principal series: w4 = 0 for n >= 5", fams, lambda inp: w4_q1(inp, 4).is_zero())


def check_cuspidal_m() -> CheckResult:
    res = CheckResult("cuspidal: m_pi = 0 mod 4 for n >= 3")
    for n in (3, 4):
        for q in (3, 5, 7, 9):
            for theta in (1, -1):
                inp = reps.to_rep_input(reps.Cuspidal(n, q, theta), partial=True)
                res.record(
                    character_invariants(inp.chars).m_pi % 4 == 0,
                    lambda n=n, q=q, t=theta: {"n": n, "q": q, "theta_minus_one": t},
                )
    return res


def check_steinberg_m(max_n: int = 8) -> CheckResult:
    res = CheckResult("Steinberg: m_pi factorisation")
    for n in range(2, max(max_n, 2) + 1):
        for q in (3, 5, 7, 9, 11, 13):
            inp = reps.to_rep_input(reps.Steinberg(n, q))
            expected = (q - 1) // 2 * q ** ((n - 1) * (n - 2) // 2) * reps.geometric_sum(n - 2, q)
            res.record(character_invariants(inp.chars).m_pi == expected, _witness(inp))
    return res


def check_tables() -> CheckResult:
    res = CheckResult("w4 tables reproduce")
    report = build_tables()
    for row in report.cuspidal + report.steinberg + report.principal_series:
        res.record(row.match, lambda row=row: {"row": row.label}, f"{row.label}: {row.computed}")
    return res


def check_non_detection(qs: Iterable[int] = (3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27)) -> CheckResult:
    res = CheckResult("anisotropic torus misses w2")
    for q in qs:
        for j in range(1, q - 1, 2):
            inp = reps.to_rep_input(reps.DetTwist(2, q, j))
            _guarded(
                res, inp,
                lambda q=q, j=j, inp=inp: reps.torus_w2_coefficient(2, q, j) == 0 and not w2(inp, 4).is_zero(),
            )
    return res


def run_verification(seed: int = 0, max_n: int = 6, cases: int = 100, fault: str | None = None) -> VerificationReport:
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    report = VerificationReport(seed)
    corpora = {case: genuine_corpus(seed, case, cases, max_n) for case in FieldCase}
    finite = corpora[FieldCase.FQ1] + corpora[FieldCase.FQ3]
    explicit = explicit_m_inputs(FieldCase.FQ1) + explicit_m_inputs(FieldCase.FQ3)
    report.checks = [
        check_involution(fault),
        check_decompose_round_trip(seed, cases),
        check_brute_force(seed, max(1, cases // 20)),
        check_closed_forms_on("closed forms (q = 1 mod 4)", corpora[FieldCase.FQ1]),
        check_closed_forms_on("closed forms (q = 3 mod 4)", corpora[FieldCase.FQ3]),
        check_closed_forms_on("closed forms (real and complex)", corpora[FieldCase.REAL] + corpora[FieldCase.COMPLEX]),
        check_square_property(corpora[FieldCase.FQ1]),
        check_spinoriality(finite + explicit),
        check_detection_q1(),
        check_detection_q3(),
        check_ps_w2(),
        check_ps_w4(),
        check_cuspidal_m(),
        check_steinberg_m(max_n),
        check_tables(),
        check_non_detection(),
    ]
    return report
