"""Supercharacter theory of ``C_2^n`` under the permutation action of ``S_n``.

Elements of ``C_2^n`` and its linear characters are both indexed by binary
strings, stored as tuples of 0/1.  The superclass of weight ``i`` is
represented by ``h_i = (1,)*i + (0,)*(n-i)``, the diagonal matrix with ``i``
leading entries equal to -1.  The supercharacter ``sigma_i`` is the sum of the
sign characters ``sgn_l`` over strings ``l`` of weight ``i``.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import NegativeMultiplicity, NonIntegral, UnsupportedCharacterValue

BinaryString = tuple[int, ...]

__all__ = [
    "BinaryString",
    "CharacterVector",
    "MultiplicityVector",
    "SupercharMatrix",
    "binary_strings",
    "superclass_representative",
    "sign_character",
    "superchar_value",
    "build_matrix",
    "verify_involution",
    "decompose",
    "characters_from_multiplicities",
    "brute_force_multiplicities",
]


def binary_strings(n: int, weight: int | None = None) -> list[BinaryString]:
    """All length-``n`` strings in lexicographic order, optionally of one weight."""
    out = [s for s in itertools.product((0, 1), repeat=n)]
    if weight is not None:
        out = [s for s in out if sum(s) == weight]
    return out


def superclass_representative(n: int, k: int) -> BinaryString:
    return (1,) * k + (0,) * (n - k)


def sign_character(label: BinaryString, g: BinaryString) -> int:
    """Value of ``sgn_label`` at the group element ``g``."""
    return -1 if sum(a & b for a, b in zip(label, g)) % 2 else 1


@dataclass(frozen=True)
class CharacterVector:
    """Character values ``chi(h_0), ..., chi(h_n)``.

    An entry may be ``None`` when the value is not known; operations that need
    it raise :class:`UnsupportedCharacterValue`.
    """

    n: int
    values: tuple[int | None, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(None if v is None else int(v) for v in self.values))
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if len(self.values) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} character values, got {len(self.values)}")

    @classmethod
    def of(cls, values: Sequence[int | None]) -> CharacterVector:
        return cls(len(values) - 1, tuple(values))

    @property
    def dim(self) -> int:
        return self.values[0]

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.values)

    def value(self, k: int) -> int:
        v = self.values[k]
        if v is None:
            raise UnsupportedCharacterValue(f"character value at h_{k} is not available")
        return v

    def __add__(self, other: CharacterVector) -> CharacterVector:
        if self.n != other.n:
            raise ValueError("cannot add character vectors of different rank")
        return CharacterVector(
            self.n,
            tuple(None if a is None or b is None else a + b for a, b in zip(self.values, other.values)),
        )

    def __neg__(self) -> CharacterVector:
        return CharacterVector(self.n, tuple(None if a is None else -a for a in self.values))

    def __sub__(self, other: CharacterVector) -> CharacterVector:
        return self + (-other)


@dataclass(frozen=True)
class MultiplicityVector:
    """Multiplicities ``c_0..c_n`` of the supercharacters ``sigma_0..sigma_n``."""

    n: int
    c: tuple[int, ...]
    virtual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.c) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} multiplicities, got {len(self.c)}")

    @property
    def dim(self) -> int:
        return sum(ci * comb(self.n, i) for i, ci in enumerate(self.c))

    def __getitem__(self, i: int) -> int:
        return self.c[i]

    def __iter__(self):
        return iter(self.c)


@dataclass(frozen=True)
class SupercharMatrix:
    """``entries[i][k]`` is the value of ``sigma_k`` at ``h_i``."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ik):
        i, k = ik
        return self.entries[i][k]

    def apply(self, vec: Sequence[int]) -> list[int]:
        return [sum(m * x for m, x in zip(row, vec)) for row in self.entries]

    def square(self) -> list[list[int]]:
        cols = list(zip(*self.entries))
        return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def superchar_value(n: int, i: int, k: int) -> int:
    """Coefficient of ``y^i`` in ``(1 - y)^k (1 + y)^(n - k)``."""
    if not (0 <= i <= n and 0 <= k <= n):
        raise IndexError(f"indices must lie in [0, {n}], got i={i}, k={k}")
    return sum((-1) ** l * comb(k, l) * comb(n - k, i - l) for l in range(max(0, i - n + k), min(k, i) + 1))


@lru_cache(maxsize=64)
def build_matrix(n: int) -> SupercharMatrix:
    if n < 1:
        raise ValueError("rank must be at least 1")
    # row i lists the values of all supercharacters at h_i
    return SupercharMatrix(n, tuple(tuple(superchar_value(n, k, i) for k in range(n + 1)) for i in range(n + 1)))


def verify_involution(n: int, matrix: SupercharMatrix | None = None) -> bool:
    """True iff the table squares to ``2^n`` times the identity."""
    m = build_matrix(n) if matrix is None else matrix
    sq = m.square()
    scale = 1 << n
    return all(sq[i][j] == (scale if i == j else 0) for i in range(n + 1) for j in range(n + 1))


def characters_from_multiplicities(c: MultiplicityVector | Sequence[int], n: int | None = None) -> CharacterVector:
    """Character vector of ``sum c_i sigma_i``."""
    coeffs = list(c)
    n = len(coeffs) - 1 if n is None else n
    return CharacterVector(n, tuple(build_matrix(n).apply(coeffs)))


def decompose(a: CharacterVector, allow_virtual: bool = False) -> MultiplicityVector:
    """Supercharacter multiplicities of a character vector.

    The table is an involution up to ``2^n``, so ``c = M a / 2^n``.
    """
    n = a.n
    values = [a.value(k) for k in range(n + 1)]
    scale = 1 << n
    c = []
    for k, total in enumerate(build_matrix(n).apply(values)):
        q, r = divmod(total, scale)
        if r:
            raise NonIntegral(
                f"(M a)_{k} = {total} is not divisible by 2^{n}; {list(a.values)} is not a character of C_2^{n}"
            )
        c.append(q)
    virtual = any(x < 0 for x in c)
    if virtual and not allow_virtual:
        raise NegativeMultiplicity(f"multiplicities {c} contain negative entries")
    return MultiplicityVector(n, tuple(c), virtual)


def brute_force_multiplicities(
    n: int, char_fn: Callable[[BinaryString], int]
) -> dict[BinaryString, int]:
    """Multiplicity of every ``sgn_l`` in a class function, by inner products over all of ``C_2^n``."""
    group = binary_strings(n)
    # pack strings into ints so each sign is the parity of a popcount
    packed = [(int("".join(map(str, g)), 2), char_fn(g)) for g in group]
    out = {}
    for label in group:
        lbits = int("".join(map(str, label)), 2)
        total = 0
        for gbits, value in packed:
            total += -value if bin(lbits & gbits).count("1") & 1 else value
        q, r = divmod(total, 1 << n)
        if r:
            raise NonIntegral(f"inner product with sgn_{label} is {total}/2^{n}")
        out[label] = q
    return out
