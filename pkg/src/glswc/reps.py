"""Character values of named representation families of ``GL_n(F_q)``.

Only the values at the diagonal involutions ``h_k`` are produced; that is
all the class computations consume.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import reduce

from .errors import NotReal, UnsupportedCharacterValue, ValidationError
from .superchar import CharacterVector
from .swc import FieldCase, RepInput, field_case_for, is_odd_prime_power

__all__ = [
    "is_odd_prime_power",
    "validate_q",
    "q_bracket_factorial",
    "geometric_sum",
    "q_power_product",
    "PrincipalSeries",
    "Cuspidal",
    "Steinberg",
    "DetTwist",
    "Literal",
    "DirectSum",
    "ps_character",
    "steinberg_character",
    "cuspidal_character",
    "det_twist_character",
    "trivial",
    "to_rep_input",
    "real_principal_series",
    "torus_w2_coefficient",
]


def validate_q(q: int) -> int:
    if not is_odd_prime_power(q):
        raise ValidationError(f"q = {q} is not an odd prime power")
    return q


def q_bracket_factorial(n: int, q: int) -> int:
    """``prod_{i=1}^n (q^i - 1)/(q - 1)``."""
    return reduce(lambda acc, i: acc * geometric_sum(i - 1, q), range(1, n + 1), 1)


def geometric_sum(i: int, q: int) -> int:
    """``1 + q + ... + q^i``."""
    return sum(q**j for j in range(i + 1))


def q_power_product(m: int, q: int) -> int:
    """``prod_{i=1}^m (q^i - 1)``; the dimension of a cuspidal representation of ``GL_{m+1}``."""
    return reduce(lambda acc, i: acc * (q**i - 1), range(1, m + 1), 1)


@dataclass(frozen=True)
class PrincipalSeries:
    """Induced from the Borel subgroup; characters ``chi^j`` given by exponents mod ``q - 1``."""

    n: int
    q: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        validate_q(self.q)
        exps = tuple(sorted(int(j) % (self.q - 1) for j in self.exponents))
        if len(exps) != self.n:
            raise ValidationError(f"need {self.n} exponents, got {len(exps)}")
        object.__setattr__(self, "exponents", exps)

    @property
    def is_real(self) -> bool:
        m = self.q - 1
        return sorted(self.exponents) == sorted((-j) % m for j in self.exponents)

    def signs(self) -> list[int]:
        """Values ``chi_j(-1) = (-1)^j``."""
        return [-1 if j % 2 else 1 for j in self.exponents]


@dataclass(frozen=True)
class Cuspidal:
    """Cuspidal representation, parameterised by the value ``theta(-1)`` of its torus character."""

    n: int
    q: int
    theta_minus_one: int

    def __post_init__(self):
        validate_q(self.q)
        if self.theta_minus_one not in (1, -1):
            raise ValidationError("theta(-1) must be 1 or -1")


@dataclass(frozen=True)
class Steinberg:
    n: int
    q: int

    def __post_init__(self):
        validate_q(self.q)


@dataclass(frozen=True)
class DetTwist:
    """Realification of the line ``chi^j o det``."""

    n: int
    q: int
    j: int

    def __post_init__(self):
        validate_q(self.q)


@dataclass(frozen=True)
class Literal:
    rep: RepInput


@dataclass(frozen=True)
class DirectSum:
    parts: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValidationError("a direct sum needs at least one summand")


def _elementary_symmetric(values: Sequence[int], k: int) -> int:
    # coefficients of prod (1 + v x)
    coeffs = [1]
    for v in values:
        coeffs = [a + v * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs[k] if k < len(coeffs) else 0


def ps_character(family: PrincipalSeries, k: int) -> int:
    if not family.is_real:
        raise NotReal(f"exponents {family.exponents} are not closed under negation mod {family.q - 1}")
    n, q = family.n, family.q
    return (
        q_bracket_factorial(k, q)
        * q_bracket_factorial(n - k, q)
        * _elementary_symmetric(family.signs(), k)
    )


def steinberg_character(n: int, q: int, k: int) -> int:
    """p-part of the centraliser order of ``h_k``, which is ``GL_k x GL_{n-k}``."""
    if not 0 <= k <= n:
        raise IndexError(k)
    return q ** (k * (k - 1) // 2 + (n - k) * (n - k - 1) // 2)


def cuspidal_character(family: Cuspidal, k: int) -> int:
    n, q = family.n, family.q
    dim = q_power_product(n - 1, q)
    if k == 0:
        return dim
    if k == n:
        # h_n = -1 is central
        return family.theta_minus_one * dim
    if k == 1:
        return 0
    raise UnsupportedCharacterValue(
        f"no formula for the cuspidal character of GL_{n} at h_{k}"
    )


def det_twist_character(n: int, q: int, j: int, k: int) -> int:
    return 2 * (-1) ** ((j * k) % 2)


def trivial(n: int, q: int | None = None, field_case: FieldCase | str | None = None) -> RepInput:
    chars = CharacterVector(n, (1,) * (n + 1))
    if q is not None:
        return RepInput.finite(q, chars)
    return RepInput.lie(field_case or FieldCase.REAL, chars)


def _family_chars(family, partial: bool) -> tuple[CharacterVector, int, int | None, FieldCase]:
    if isinstance(family, Literal):
        r = family.rep
        return r.chars, r.delta, r.q, r.field_case
    if isinstance(family, DirectSum):
        parts = [_family_chars(p, partial) for p in family.parts]
        chars = parts[0][0]
        for other in parts[1:]:
            if other[2] != parts[0][2] or other[3] != parts[0][3]:
                raise ValidationError("summands of a direct sum must share the group")
            chars = chars + other[0]
        delta = sum(p[1] for p in parts) % 2
        return chars, delta, parts[0][2], parts[0][3]

    n, q = family.n, family.q
    if isinstance(family, PrincipalSeries):
        values = [ps_character(family, k) for k in range(n + 1)]
    elif isinstance(family, Steinberg):
        values = [steinberg_character(n, q, k) for k in range(n + 1)]
    elif isinstance(family, DetTwist):
        values = [det_twist_character(n, q, family.j, k) for k in range(n + 1)]
    elif isinstance(family, Cuspidal):
        values = []
        for k in range(n + 1):
            try:
                values.append(cuspidal_character(family, k))
            except UnsupportedCharacterValue:
                if not partial:
                    raise
                values.append(None)
    else:
        raise TypeError(f"unknown family {family!r}")
    return CharacterVector(n, tuple(values)), 0, q, field_case_for(q)


def to_rep_input(family, delta: int | None = None, allow_virtual: bool = False, partial: bool = False) -> RepInput:
    """Assemble the character vector of a family.

    ``delta`` overrides the family's own determinant flag (0 for every named
    family).  With ``partial=True`` unknown character values are left as
    ``None`` instead of raising.
    """
    chars, own_delta, q, case = _family_chars(family, partial)
    d = own_delta if delta is None else delta
    if case.finite:
        return RepInput(chars.n, case, chars, d, q, allow_virtual)
    return RepInput(chars.n, case, chars, 0, None, allow_virtual)


def real_principal_series(n: int, q: int) -> list[PrincipalSeries]:
    """Every real principal series of ``GL_n(F_q)`` up to reordering of the characters."""
    validate_q(q)
    m = q - 1
    self_dual = [0, m // 2]
    pair_reps = list(range(1, m // 2))
    out = []

    def multisets(items, size, start=0):
        if size == 0:
            yield ()
            return
        for i in range(start, len(items)):
            for rest in multisets(items, size - 1, i):
                yield (items[i],) + rest

    for pairs in range(n // 2 + 1):
        singles = n - 2 * pairs
        for chosen in multisets(pair_reps, pairs):
            for fixed in multisets(self_dual, singles):
                exps = list(fixed)
                for j in chosen:
                    exps += [j, m - j]
                out.append(PrincipalSeries(n, q, tuple(exps)))
    return out


def torus_w2_coefficient(n: int, q: int, j: int) -> int:
    """Mod-2 coefficient of ``w_2`` of ``(chi^j o det)_R`` restricted to the anisotropic torus.

    On the cyclic torus of order ``q^2 - 1`` the character is ``(q+1) j`` times
    a generator of the character group, so its mod-2 Chern class is
    ``(q+1) j`` times a generator.
    """
    if n != 2:
        raise ValidationError("only the rank-two torus is covered")
    validate_q(q)
    return ((q + 1) * j) % 2

