"""Total and low-degree Stiefel-Whitney classes from character values.

A real representation is fed in through its values on the diagonal
involutions ``h_0..h_n`` (a :class:`RepInput`).  For ``GL_n(F_q)`` with
``q = 1 mod 4`` classes live in the cohomology of the diagonal torus,
``GF(2)[s_1..s_n, t_1..t_n]/(s_i^2)``; for ``q = 3 mod 4`` and for the Lie
groups ``GL_n(R)``, ``GL_n(C)`` they live in ``GF(2)[v_1..v_n]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from math import comb

from . import gf2ring as gr
from .errors import (
    InconsistentParity,
    NonIntegral,
    NotAPerfectSquare,
    OddMultiplicity,
    UnsupportedCharacterValue,
    ValidationError,
)
from .gf2ring import DEFAULT_CAP, GradedElement, RingHom, RingSignature
from .superchar import CharacterVector, MultiplicityVector, binary_strings, decompose

__all__ = [
    "FieldCase",
    "RepInput",
    "CharacterInvariants",
    "SWCReport",
    "ClosedFormReport",
    "DetectionRow",
    "DetectionReport",
    "field_case_for",
    "is_odd_prime_power",
    "character_invariants",
    "ring_for",
    "b1",
    "a_class",
    "b_class",
    "total_swc",
    "product_formula",
    "w1",
    "w2",
    "w4_q1",
    "is_spinorial",
    "spinorial_by_classes",
    "truncation_hom",
    "c2n_restriction_hom",
    "res_to_c2n",
    "verify_square_property",
    "gl_cohomology_spanning_set",
    "verify_detection",
    "check_closed_forms",
]


class FieldCase(str, Enum):
    FQ1 = "Fq1"
    FQ3 = "Fq3"
    REAL = "Real"
    COMPLEX = "Complex"

    @property
    def finite(self) -> bool:
        return self in (FieldCase.FQ1, FieldCase.FQ3)


def is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    p = 3
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 2
    return True


def field_case_for(q: int) -> FieldCase:
    if not is_odd_prime_power(q):
        raise ValidationError(f"q = {q} is not an odd prime power")
    return FieldCase.FQ1 if q % 4 == 1 else FieldCase.FQ3


@dataclass(frozen=True)
class RepInput:
    """A real representation described by its values on ``h_0..h_n``.

    ``delta`` is 1 when the determinant of the representation is non-trivial;
    it only enters the ``q = 1 mod 4`` formulas and is never inferred.
    """

    n: int
    field_case: FieldCase
    chars: CharacterVector
    delta: int = 0
    q: int | None = None
    allow_virtual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "field_case", FieldCase(self.field_case))
        if not isinstance(self.chars, CharacterVector):
            object.__setattr__(self, "chars", CharacterVector.of(self.chars))
        if self.chars.n != self.n:
            raise ValidationError(f"character vector has rank {self.chars.n}, expected {self.n}")
        if self.delta not in (0, 1):
            raise ValidationError(f"delta must be 0 or 1, got {self.delta}")
        if self.field_case.finite:
            if self.q is None:
                raise ValidationError("finite-field inputs need q")
            if field_case_for(self.q) != self.field_case:
                raise ValidationError(f"q={self.q} does not match {self.field_case.value}")
        elif self.q is not None:
            raise ValidationError("q only applies to GL_n(F_q)")

    @classmethod
    def finite(cls, q: int, chars, delta: int = 0, allow_virtual: bool = False) -> RepInput:
        chars = chars if isinstance(chars, CharacterVector) else CharacterVector.of(chars)
        return cls(chars.n, field_case_for(q), chars, delta, q, allow_virtual)

    @classmethod
    def lie(cls, field_case: FieldCase | str, chars, allow_virtual: bool = False) -> RepInput:
        chars = chars if isinstance(chars, CharacterVector) else CharacterVector.of(chars)
        return cls(chars.n, FieldCase(field_case), chars, 0, None, allow_virtual)


@dataclass(frozen=True)
class CharacterInvariants:
    m_pi: int
    n_pi: int | None


def _exact_half(x: int, what: str) -> int:
    if x % 2:
        raise NonIntegral(f"{what} = {x} is odd")
    return x // 2


def character_invariants(chars: CharacterVector) -> CharacterInvariants:
    """``m_pi = (dim - chi(h_1))/2`` and ``n_pi = (dim - chi(h_2))/2``."""
    dim = chars.value(0)
    m_pi = _exact_half(dim - chars.value(1), "dim - chi(h_1)")
    n_pi = None
    if chars.n >= 2 and chars.values[2] is not None:
        n_pi = _exact_half(dim - chars.values[2], "dim - chi(h_2)")
    return CharacterInvariants(m_pi, n_pi)


def ring_for(inp: RepInput, cap: int | None = DEFAULT_CAP) -> RingSignature:
    if inp.field_case is FieldCase.FQ1:
        return gr.st_ring(inp.n, cap)
    return gr.v_ring(inp.n, cap)


def _family(sig: RingSignature, letter: str) -> list[GradedElement]:
    return [sig.gen(name) for name in sig.names if name[0] == letter]


def b1(sig: RingSignature) -> GradedElement:
    """Sum of the degree-one classes ``s_i``."""
    total = sig.zero()
    for s in _family(sig, "s"):
        total = total + s
    return total


def a_class(sig: RingSignature, l: int) -> GradedElement:
    """Elementary symmetric polynomial of degree ``l`` in the ``t_i`` (cohomological degree ``2l``)."""
    ts = _family(sig, "t")
    n = len(ts)
    monomials = []
    for strings in binary_strings(n, l):
        exps = [0] * len(sig.generators)
        for i, bit in enumerate(strings):
            if bit:
                exps[sig.index(f"t{i + 1}")] = 1
        monomials.append(exps)
    return sig.from_monomials(monomials)


def b_class(sig: RingSignature, l: int) -> GradedElement:
    """Degree ``2l - 1`` class: over ``l``-subsets, one ``t`` swapped for the matching ``s``."""
    n = len(_family(sig, "t"))
    monomials = []
    for strings in binary_strings(n, l):
        chosen = [i for i, bit in enumerate(strings) if bit]
        for j in chosen:
            exps = [0] * len(sig.generators)
            for i in chosen:
                exps[sig.index(f"t{i + 1}" if i != j else f"s{i + 1}")] = 1
            monomials.append(exps)
    return sig.from_monomials(monomials)


def _linear_form(sig: RingSignature, letter: str, label) -> GradedElement:
    exps = [0] * len(sig.generators)
    terms = []
    for i, bit in enumerate(label):
        if bit:
            e = list(exps)
            e[sig.index(f"{letter}{i + 1}")] = 1
            terms.append(e)
    return sig.from_monomials(terms)


def product_formula(sig: RingSignature, letter: str, exponents) -> GradedElement:
    """``prod_i prod_{l of weight i} (1 + l.x)^{exponents[i]}`` with ``x`` the ``letter`` family."""
    n = len(exponents) - 1
    one = sig.one()
    acc = one
    for i in range(1, n + 1):
        e = exponents[i]
        if e == 0:
            continue
        for label in binary_strings(n, i):
            acc = acc * gr.power(one + _linear_form(sig, letter, label), e)
    return acc


@dataclass(frozen=True)
class SWCReport:
    inp: RepInput
    signature: RingSignature
    total: GradedElement
    multiplicities: MultiplicityVector
    invariants: CharacterInvariants
    spinorial: bool
    cap: int

    def component(self, d: int) -> GradedElement:
        return gr.graded_component(self.total, d)

    @property
    def components(self) -> list[tuple[int, GradedElement]]:
        return [(d, self.component(d)) for d in range(self.cap + 1)]


def _multiplicities(inp: RepInput) -> MultiplicityVector:
    mult = decompose(inp.chars, allow_virtual=inp.allow_virtual)
    if inp.field_case is FieldCase.FQ1:
        odd = [i for i in range(1, inp.n + 1) if mult[i] % 2]
        if odd:
            raise OddMultiplicity(
                f"multiplicities {list(mult.c)} are odd at indices {odd}; "
                "no real representation of GL_n(F_q), q = 1 mod 4, restricts this way"
            )
    return mult


def total_swc(inp: RepInput, cap: int = DEFAULT_CAP) -> SWCReport:
    mult = _multiplicities(inp)
    invariants = character_invariants(inp.chars)
    sig = ring_for(inp, cap)
    if inp.field_case is FieldCase.FQ1:
        halves = [c // 2 for c in mult.c]
        total = product_formula(sig, "t", halves)
        if inp.delta:
            total = (sig.one() + b1(sig)) * total
    else:
        total = product_formula(sig, "v", mult.c)
    if inp.field_case.finite:
        spinorial = is_spinorial(inp)
    else:
        spinorial = spinorial_by_classes(inp)
    return SWCReport(inp, sig, total, mult, invariants, spinorial, cap)


def w1(inp: RepInput, cap: int = DEFAULT_CAP) -> GradedElement:
    sig = ring_for(inp, cap)
    if inp.field_case is FieldCase.FQ1:
        return b1(sig) if inp.delta else sig.zero()
    m_pi = character_invariants(inp.chars).m_pi
    return gr.elementary_symmetric(sig, 1) * (m_pi % 2)


def _sum_of_squares(sig: RingSignature, letter: str) -> GradedElement:
    total = sig.zero()
    for x in _family(sig, letter):
        total = total + x * x
    return total


def _pairwise_sum(sig: RingSignature, letter: str) -> GradedElement:
    xs = _family(sig, letter)
    total = sig.zero()
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            total = total + xs[i] * xs[j]
    return total


def w2(inp: RepInput, cap: int = DEFAULT_CAP) -> GradedElement:
    sig = ring_for(inp, cap)
    inv = character_invariants(inp.chars)
    m_pi = inv.m_pi
    if inp.field_case is FieldCase.FQ1:
        if m_pi % 2:
            raise InconsistentParity(f"m_pi = {m_pi} is odd but q = 1 mod 4 forces it even")
        return a_class(sig, 1) * ((m_pi // 2) % 2)
    result = _sum_of_squares(sig, "v") * (comb(m_pi, 2) % 2)
    if inp.n < 2:
        return result
    if inv.n_pi is None:
        if inp.field_case is FieldCase.FQ3:
            return result
        raise UnsupportedCharacterValue("w2 of a Lie group representation needs chi(h_2)")
    # coefficient of v_1 v_2 after restricting to the first two coordinates
    cross = _exact_half(inv.n_pi, "n_pi")
    if inp.field_case is FieldCase.FQ3:
        if cross % 2:
            raise InconsistentParity(
                f"n_pi / 2 = {cross} is odd; real representations of GL_n(F_q), q = 3 mod 4, force it even"
            )
        return result
    return result + _pairwise_sum(sig, "v") * (cross % 2)


def w4_q1(inp: RepInput, cap: int = DEFAULT_CAP) -> GradedElement:
    if inp.field_case is not FieldCase.FQ1:
        raise ValueError("w4_q1 applies only when q = 1 mod 4")
    sig = ring_for(inp, cap)
    inv = character_invariants(inp.chars)
    if inv.m_pi % 2:
        raise InconsistentParity(f"m_pi = {inv.m_pi} is odd")
    result = _sum_of_squares(sig, "t") * (comb(inv.m_pi // 2, 2) % 2)
    if inp.n >= 2:
        n_pi = _exact_half(inp.chars.value(0) - inp.chars.value(2), "dim - chi(h_2)")
        if n_pi % 4:
            raise InconsistentParity(f"n_pi = {n_pi} is not divisible by 4")
        result = result + _pairwise_sum(sig, "t") * ((n_pi // 4) % 2)
    return result


def is_spinorial(inp: RepInput) -> bool:
    """Congruence criterion on ``m_pi`` for ``GL_n(F_q)``.

    Lie-group inputs have no congruence criterion and are decided from the
    classes themselves.
    """
    m_pi = character_invariants(inp.chars).m_pi
    if inp.field_case is FieldCase.FQ1:
        return m_pi % 4 == 0
    if inp.field_case is FieldCase.FQ3:
        return m_pi % 4 in (0, 3)
    return spinorial_by_classes(inp)


def spinorial_by_classes(inp: RepInput) -> bool:
    """``w2 + w1^2 == 0``, evaluated with the closed forms."""
    first = w1(inp, 2)
    return not (w2(inp, 2) + first * first)


_NAME = re.compile(r"([A-Za-z]+)(\d+)$")


def truncation_hom(source: RingSignature, k: int) -> RingHom:
    """Restriction to the first ``k`` diagonal entries: ``x_l -> x_l`` for ``l <= k``, else 0."""
    keep = []
    for g in source.generators:
        m = _NAME.match(g.name)
        if m is None:
            raise ValueError(f"generator {g.name} has no index")
        if int(m.group(2)) <= k:
            keep.append(g)
    target = RingSignature(keep, source.degree_cap)
    images = [
        target.gen(g.name) if g.name in target.names else target.zero() for g in source.generators
    ]
    return RingHom(source, target, images)


def c2n_restriction_hom(source: RingSignature) -> RingHom:
    """``t_i -> v_i^2`` and ``s_i -> 0``, from the torus ring to ``GF(2)[v]``."""
    n = len(_family(source, "t"))
    target = gr.v_ring(n, source.degree_cap)
    images = []
    for g in source.generators:
        if g.name.startswith("t"):
            v = target.gen("v" + g.name[1:])
            images.append(v * v)
        else:
            images.append(target.zero())
    return RingHom(source, target, images)


def res_to_c2n(a: GradedElement) -> GradedElement:
    return gr.apply_hom(c2n_restriction_hom(a.signature), a)


def verify_square_property(inp: RepInput, cap: int = DEFAULT_CAP) -> bool:
    """Check that restricting the ``q = 1 mod 4`` class to ``C_2^n`` gives a perfect square
    whose root is the half-exponent product over ``C_2^n``."""
    if inp.field_case is not FieldCase.FQ1:
        raise ValueError("the square property concerns q = 1 mod 4")
    report = total_swc(replace(inp, delta=0), cap)
    restricted = res_to_c2n(report.total)
    try:
        root = gr.sqrt(restricted)
    except NotAPerfectSquare:
        return False
    half = product_formula(restricted.signature, "v", [c // 2 for c in report.multiplicities.c])
    return root == half.truncate(cap // 2)


def _partitions_into(d: int, parts: list[int], start: int = 0):
    if d == 0:
        yield ()
        return
    for idx in range(start, len(parts)):
        p = parts[idx]
        if p <= d:
            for rest in _partitions_into(d - p, parts, idx):
                yield (p,) + rest


def gl_cohomology_spanning_set(m: int, d: int) -> tuple[RingSignature, list[GradedElement]]:
    """Monomials in ``a_2..a_2m`` and distinct ``b_1..b_{2m-1}`` of degree ``d``,
    written inside the torus ring of rank ``m``."""
    sig = gr.st_ring(m, d)
    a = {2 * l: a_class(sig, l) for l in range(1, m + 1)}
    b = {2 * l - 1: b_class(sig, l) for l in range(1, m + 1)}
    out = []
    odd_degrees = sorted(b)
    for r in range(len(odd_degrees) + 1):
        for subset in combinations(odd_degrees, r):
            rest = d - sum(subset)
            if rest < 0 or rest % 2:
                continue
            ext = sig.one()
            for j in subset:
                ext = ext * b[j]
            for parts in _partitions_into(rest, sorted(a)):
                el = ext
                for p in parts:
                    el = el * a[p]
                out.append(el)
    return sig, out


@dataclass(frozen=True)
class DetectionRow:
    degree: int
    domain_dim: int
    kernel_dim: int
    within_bound: bool


@dataclass(frozen=True)
class DetectionReport:
    field_case: FieldCase
    m: int
    n: int
    rows: tuple[DetectionRow, ...]

    @property
    def bound(self) -> int:
        return 2 * self.n - 1 if self.field_case is FieldCase.FQ1 else self.n

    @property
    def ok(self) -> bool:
        return all(r.kernel_dim == 0 for r in self.rows if r.within_bound)


def verify_detection(
    field_case: FieldCase | str, m: int, n: int, max_degree: int | None = None
) -> DetectionReport:
    """Kernel dimensions of restriction ``GL_m -> GL_{n-1}`` on the detected cohomology.

    Rows beyond the theorem's bound are recorded but never counted as failures.
    """
    field_case = FieldCase(field_case)
    if m < n or n < 1:
        raise ValidationError("need m >= n >= 1")
    if field_case is FieldCase.FQ1:
        bound = 2 * n - 1
    elif field_case is FieldCase.FQ3:
        bound = n
    else:
        raise ValidationError("detection sweeps concern GL_n(F_q)")
    top = bound - 1 if max_degree is None else max_degree
    rows = []
    for d in range(top + 1):
        if field_case is FieldCase.FQ1:
            sig, basis = gl_cohomology_spanning_set(m, d)
        else:
            sig = gr.v_ring(m, d)
            basis = gr.symmetric_invariant_basis(m, d, sig)
        h = truncation_hom(sig, n - 1)
        domain_dim = gr.span_dimension(basis)
        kernel = gr.kernel_dimension(h, d, basis)
        rows.append(DetectionRow(d, domain_dim, kernel, d < bound))
    return DetectionReport(field_case, m, n, tuple(rows))


@dataclass
class ClosedFormReport:
    report: SWCReport
    checks: dict[str, bool] = field(default_factory=dict)
    symmetric: dict[str, bool] = field(default_factory=dict)
    details: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def check_closed_forms(inp: RepInput, cap: int = 6) -> ClosedFormReport:
    """Compare the product formula's low-degree parts with the closed forms.

    Degree 2 (and 4 when ``q = 1 mod 4``) is compared after restricting both
    sides to the small ``GL_k`` used by the detection argument; the full-rank
    symmetric expressions are compared as well and only warned about.
    """
    if cap < 4:
        raise ValueError("check_closed_forms needs cap >= 4")
    rep = total_swc(inp, cap)
    out = ClosedFormReport(rep)
    sig = rep.signature

    def compare(name, got, want, k):
        h = truncation_hom(sig, min(k, inp.n))
        ok = h(got) == h(want)
        out.checks[name] = ok
        if not ok:
            out.details.append(f"{name}: restricted total gives {h(got)}, closed form gives {h(want)}")
        if k < inp.n:
            agree = got == want
            out.symmetric[name] = agree
            if not agree:
                out.warnings.append(f"{name}: full-rank expressions differ ({got} vs {want})")

    compare("w1", rep.component(1), w1(inp, cap), inp.n)
    if inp.field_case is FieldCase.FQ1:
        compare("w2", rep.component(2), w2(inp, cap), 1)
        compare("w4", rep.component(4), w4_q1(inp, cap), 2)
    else:
        compare("w2", rep.component(2), w2(inp, cap), 2)
    return out
