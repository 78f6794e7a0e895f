"""Graded-commutative polynomial algebras over GF(2).

A ring is described by a :class:`RingSignature`: an ordered list of
generators, each with a cohomological degree and a flag saying whether it
squares to zero, plus an optional degree cap.  Elements are
:class:`GradedElement` values holding the set of monomials with coefficient 1.

Monomials are packed into Python ints.  Every generator owns a bit field:
one bit for a square-zero generator, and for a free generator enough bits to
hold the largest exponent the cap permits plus one guard bit.  Multiplying two
monomials is integer addition, squaring is a left shift by one, and extracting
a square root of an all-even monomial is a right shift.  Terms are bucketed by
degree so that truncation never has to decode anything.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .errors import BasisTooLarge, CapRequired, NotAPerfectSquare, SignatureMismatch

__all__ = [
    "DEFAULT_CAP",
    "POW_THRESHOLD",
    "Generator",
    "RingSignature",
    "GradedElement",
    "RingHom",
    "st_ring",
    "v_ring",
    "add",
    "mul",
    "power",
    "inverse",
    "graded_component",
    "sqrt",
    "apply_hom",
    "monomial_basis",
    "kernel_dimension",
    "gf2_rank",
    "span_dimension",
    "elementary_symmetric",
    "symmetric_invariant_basis",
]

DEFAULT_CAP = 12
# uncapped rings refuse pow() with exponents above this
POW_THRESHOLD = 64
DEFAULT_BASIS_BOUND = 50_000
_UNCAPPED_FIELD_BITS = 32


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    nilpotent: bool = False

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name!r} must have degree >= 1")
        if not re.fullmatch(r"[A-Za-z]\w*", self.name):
            raise ValueError(f"bad generator name {self.name!r}")


class RingSignature:
    """Generators, their degrees and an optional degree cap.

    Two signatures are equal when they have the same generators in the same
    order and the same cap; elements may only be combined within one
    signature.
    """

    __slots__ = (
        "generators",
        "degree_cap",
        "_index",
        "_offsets",
        "_widths",
        "_nilmask",
        "_guard",
        "_lowbits",
        "_hash",
    )

    def __init__(self, generators: Iterable[Generator], degree_cap: int | None = None):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if degree_cap is not None and degree_cap < 0:
            raise ValueError("degree_cap must be non-negative")
        self.generators = gens
        self.degree_cap = degree_cap
        self._index = {g.name: i for i, g in enumerate(gens)}

        offsets, widths = [], []
        nilmask = guard = lowbits = 0
        offset = 0
        for g in gens:
            if g.nilpotent:
                width = 1
                nilmask |= 1 << offset
            else:
                if degree_cap is None:
                    width = _UNCAPPED_FIELD_BITS + 1
                else:
                    width = (degree_cap // g.degree).bit_length() + 1
                guard |= 1 << (offset + width - 1)
            lowbits |= 1 << offset
            offsets.append(offset)
            widths.append(width)
            offset += width
        self._offsets = tuple(offsets)
        self._widths = tuple(widths)
        self._nilmask = nilmask
        self._guard = guard
        self._lowbits = lowbits
        self._hash = hash((gens, degree_cap))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingSignature):
            return NotImplemented
        return self.generators == other.generators and self.degree_cap == other.degree_cap

    def __hash__(self):
        return self._hash

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}{'*' if g.nilpotent else ''}" for g in self.generators)
        return f"RingSignature([{gens}], degree_cap={self.degree_cap})"

    def __len__(self):
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def has_nilpotents(self) -> bool:
        return bool(self._nilmask)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no generator named {name!r} in {self!r}") from None

    def with_cap(self, degree_cap: int | None) -> RingSignature:
        return RingSignature(self.generators, degree_cap)

    # -- monomial packing ---------------------------------------------------

    def degree_of(self, exponents: Sequence[int]) -> int:
        return sum(e * g.degree for e, g in zip(exponents, self.generators))

    def encode(self, exponents: Sequence[int]) -> tuple[int, int] | None:
        """Pack an exponent vector; ``None`` if the monomial is zero in the ring."""
        if len(exponents) != len(self.generators):
            raise ValueError(f"expected {len(self.generators)} exponents, got {len(exponents)}")
        code = degree = 0
        for e, g, off, width in zip(exponents, self.generators, self._offsets, self._widths):
            if e < 0:
                raise ValueError("exponents must be non-negative")
            if g.nilpotent and e > 1:
                return None
            degree += e * g.degree
            code |= e << off
        if self.degree_cap is not None and degree > self.degree_cap:
            return None
        for e, g, width in zip(exponents, self.generators, self._widths):
            if not g.nilpotent and e >= 1 << (width - 1):
                raise OverflowError(f"exponent {e} of {g.name} does not fit the packed field")
        return degree, code

    def decode(self, code: int) -> tuple[int, ...]:
        return tuple(
            (code >> off) & ((1 << width) - 1) for off, width in zip(self._offsets, self._widths)
        )

    # -- element constructors -------------------------------------------------

    def zero(self) -> GradedElement:
        return GradedElement._make(self, {})

    def one(self) -> GradedElement:
        return GradedElement._make(self, {0: frozenset((0,))})

    def gen(self, key: str | int) -> GradedElement:
        i = self.index(key) if isinstance(key, str) else key
        exps = [0] * len(self.generators)
        exps[i] = 1
        return self.monomial(exps)

    def gens(self) -> list[GradedElement]:
        return [self.gen(i) for i in range(len(self.generators))]

    def monomial(self, exponents: Sequence[int]) -> GradedElement:
        return self.from_monomials([exponents])

    def from_monomials(self, monomials: Iterable[Sequence[int]]) -> GradedElement:
        """Sum of the given monomials; repeated monomials cancel in pairs."""
        buckets: dict[int, set[int]] = {}
        for exps in monomials:
            packed = self.encode(tuple(exps))
            if packed is None:
                continue
            d, code = packed
            buckets.setdefault(d, set()).symmetric_difference_update((code,))
        return GradedElement._make(self, buckets)

    def parse(self, text: str) -> GradedElement:
        """Inverse of ``str(element)``: ``"1 + t1*t2 + s1*t3^2"``."""
        text = text.strip()
        if text == "0":
            return self.zero()
        monomials = []
        for term in text.split("+"):
            term = term.strip()
            if not term:
                raise ValueError(f"empty term in {text!r}")
            exps = [0] * len(self.generators)
            if term != "1":
                for factor in term.split("*"):
                    factor = factor.strip()
                    m = re.fullmatch(r"([A-Za-z]\w*?)(?:\^(\d+))?", factor)
                    if m is None:
                        raise ValueError(f"cannot parse factor {factor!r}")
                    exps[self.index(m.group(1))] += int(m.group(2) or 1)
            monomials.append(exps)
        return self.from_monomials(monomials)


def st_ring(n: int, degree_cap: int | None = DEFAULT_CAP) -> RingSignature:
    """``GF(2)[s_1..s_n, t_1..t_n] / (s_i^2)`` with deg s = 1, deg t = 2."""
    gens = [Generator(f"s{i}", 1, True) for i in range(1, n + 1)]
    gens += [Generator(f"t{i}", 2) for i in range(1, n + 1)]
    return RingSignature(gens, degree_cap)


def v_ring(n: int, degree_cap: int | None = DEFAULT_CAP) -> RingSignature:
    """``GF(2)[v_1..v_n]`` with every v in degree 1."""
    return RingSignature([Generator(f"v{i}", 1) for i in range(1, n + 1)], degree_cap)


class GradedElement:
    """An immutable element of a ring described by a :class:`RingSignature`."""

    __slots__ = ("signature", "_terms")

    def __init__(self, signature: RingSignature, terms: Mapping[int, Iterable[int]]):
        self.signature = signature
        self._terms = {d: frozenset(c) for d, c in terms.items() if c}

    @classmethod
    def _make(cls, signature, terms):
        obj = cls.__new__(cls)
        obj.signature = signature
        obj._terms = {d: frozenset(c) for d, c in terms.items() if c}
        return obj

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_one(self) -> bool:
        return self._terms == {0: frozenset((0,))}

    def __len__(self):
        return sum(len(c) for c in self._terms.values())

    def degrees(self) -> list[int]:
        return sorted(self._terms)

    def constant_term(self) -> int:
        return 1 if 0 in self._terms else 0

    def is_homogeneous(self) -> bool:
        return len(self._terms) <= 1

    def codes(self, degree: int) -> frozenset[int]:
        return self._terms.get(degree, frozenset())

    def monomials(self) -> list[tuple[int, ...]]:
        """Exponent vectors in canonical (graded, then lexicographic) order."""
        decode = self.signature.decode
        out = []
        for d in sorted(self._terms):
            exps = [decode(c) for c in self._terms[d]]
            exps.sort(reverse=True)
            out.extend(exps)
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.signature == other.signature and self._terms == other._terms

    def __hash__(self):
        return hash((self.signature, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.signature.names
        parts = []
        for exps in self.monomials():
            factors = [
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
            ]
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"GradedElement({str(self)!r})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = self.signature.one() if other % 2 else self.signature.zero()
        return add(self, other)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return self if other % 2 else self.signature.zero()
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return power(self, e)

    def component(self, degree: int) -> GradedElement:
        return graded_component(self, degree)

    def truncate(self, degree: int) -> GradedElement:
        """Drop every monomial of degree above ``degree``."""
        return GradedElement._make(
            self.signature, {d: c for d, c in self._terms.items() if d <= degree}
        )

    def recast(self, signature: RingSignature) -> GradedElement:
        """The same polynomial viewed in a ring with the same generators but another cap."""
        if signature.generators != self.signature.generators:
            raise SignatureMismatch("recast needs identical generators")
        return signature.from_monomials(self.monomials())


def _check_same(a: GradedElement, b: GradedElement) -> RingSignature:
    if a.signature != b.signature:
        raise SignatureMismatch(f"{a.signature!r} vs {b.signature!r}")
    return a.signature


def add(a: GradedElement, b: GradedElement) -> GradedElement:
    sig = _check_same(a, b)
    terms = dict(a._terms)
    for d, codes in b._terms.items():
        terms[d] = terms[d] ^ codes if d in terms else codes
    return GradedElement._make(sig, terms)


def mul(a: GradedElement, b: GradedElement) -> GradedElement:
    sig = _check_same(a, b)
    if len(b) > len(a):
        a, b = b, a
    cap = sig.degree_cap
    nilmask = sig._nilmask
    guard = sig._guard if cap is None else 0
    out: dict[int, set[int]] = {}
    for db, B in b._terms.items():
        for da, A in a._terms.items():
            d = da + db
            if cap is not None and d > cap:
                continue
            acc = out.setdefault(d, set())
            for y in B:
                ny = y & nilmask
                if ny:
                    shifted = {x + y for x in A if not x & ny}
                else:
                    shifted = {x + y for x in A}
                if guard and any(z & guard for z in shifted):
                    raise OverflowError("exponent overflow in an uncapped ring")
                acc.symmetric_difference_update(shifted)
    return GradedElement._make(sig, out)


def _square(a: GradedElement) -> GradedElement:
    # Frobenius: cross terms vanish, monomials carrying a square-zero generator die
    sig = a.signature
    cap = sig.degree_cap
    nilmask = sig._nilmask
    out = {}
    for d, codes in a._terms.items():
        if cap is not None and 2 * d > cap:
            continue
        sq = {c << 1 for c in codes if not c & nilmask}
        if cap is None and any(c & sig._guard for c in sq):
            raise OverflowError("exponent overflow in an uncapped ring")
        out[2 * d] = sq
    return GradedElement._make(sig, out)


def inverse(a: GradedElement) -> GradedElement:
    """Multiplicative inverse of ``1 + f`` modulo the degree cap.

    Uses ``(1 + f)^-1 = (1 + f)(1 + f^2)(1 + f^4)...``, which is exact once
    ``2^k`` exceeds the cap because ``f`` has no constant term.
    """
    sig = a.signature
    if sig.degree_cap is None:
        raise CapRequired("inverting an element needs a degree cap")
    if not a.constant_term():
        raise ValueError("only elements with constant term 1 are invertible")
    f = add(a, sig.one())
    result = sig.one()
    step = 1
    while step <= sig.degree_cap and f:
        result = mul(result, add(sig.one(), f))
        f = _square(f)
        step *= 2
    return result


def power(a: GradedElement, e: int) -> GradedElement:
    """``a**e`` by square-and-multiply; squaring is the Frobenius map."""
    sig = a.signature
    e = int(e)
    if e < 0:
        a = inverse(a)
        e = -e
    if e == 0:
        return sig.one()
    if sig.degree_cap is None and e > POW_THRESHOLD and not (a.is_one() or a.is_zero()):
        raise CapRequired(f"exponent {e} exceeds {POW_THRESHOLD} in an uncapped ring")
    result = sig.one()
    base = a
    while True:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if not e:
            return result
        base = _square(base)
        if base.is_one():
            return result
        if base.is_zero():
            return base


def graded_component(a: GradedElement, d: int) -> GradedElement:
    return GradedElement._make(a.signature, {d: a._terms[d]} if d in a._terms else {})


def sqrt(a: GradedElement) -> GradedElement:
    """The unique ``b`` with ``b*b == a`` in a ring without square-zero generators."""
    sig = a.signature
    if sig.has_nilpotents:
        raise ValueError("sqrt is only defined on rings without square-zero generators")
    out = {}
    for d, codes in a._terms.items():
        if d % 2 or any(c & sig._lowbits for c in codes):
            bad = next(c for c in codes if c & sig._lowbits or d % 2)
            raise NotAPerfectSquare(f"monomial exponents {sig.decode(bad)} are not all even")
        out[d // 2] = {c >> 1 for c in codes}
    return GradedElement._make(sig, out)


class RingHom:
    """A graded ring map given by the images of the source generators."""

    def __init__(
        self,
        source: RingSignature,
        target: RingSignature,
        images: Mapping[str, GradedElement] | Sequence[GradedElement],
    ):
        if isinstance(images, Mapping):
            missing = set(source.names) - set(images)
            if missing:
                raise ValueError(f"no image given for {sorted(missing)}")
            images = [images[name] for name in source.names]
        images = tuple(images)
        if len(images) != len(source.generators):
            raise ValueError("one image per source generator is required")
        for g, img in zip(source.generators, images):
            if img.signature != target:
                raise SignatureMismatch(f"image of {g.name} lives in the wrong ring")
            if img and img.degrees() != [g.degree]:
                raise ValueError(f"image of {g.name} is not homogeneous of degree {g.degree}")
            if g.nilpotent:
                # a square vanishes iff every monomial carries a square-zero generator
                for codes in img._terms.values():
                    if any(not c & target._nilmask for c in codes):
                        raise ValueError(f"image of {g.name} does not square to zero")
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, a: GradedElement) -> GradedElement:
        return apply_hom(self, a)

    def __repr__(self):
        pairs = ", ".join(f"{n} -> {img}" for n, img in zip(self.source.names, self.images))
        return f"RingHom({pairs})"

    @classmethod
    def identity(cls, sig: RingSignature) -> RingHom:
        return cls(sig, sig, sig.gens())


def apply_hom(h: RingHom, a: GradedElement) -> GradedElement:
    if a.signature != h.source:
        raise SignatureMismatch("element is not in the source ring of the homomorphism")
    target = h.target
    powers: dict[tuple[int, int], GradedElement] = {}
    result = target.zero()
    for exps in a.monomials():
        term = target.one()
        for i, e in enumerate(exps):
            if not e:
                continue
            key = (i, e)
            if key not in powers:
                powers[key] = power(h.images[i], e)
            term = mul(term, powers[key])
            if not term:
                break
        result = add(result, term)
    return result


def _exponent_vectors(sig: RingSignature, d: int):
    gens = sig.generators

    def rec(i, remaining):
        if i == len(gens):
            if remaining == 0:
                yield ()
            return
        g = gens[i]
        top = 1 if g.nilpotent else remaining // g.degree
        for e in range(min(top, remaining // g.degree), -1, -1):
            for rest in rec(i + 1, remaining - e * g.degree):
                yield (e,) + rest

    return rec(0, d)


def monomial_basis(
    sig: RingSignature, d: int, bound: int = DEFAULT_BASIS_BOUND
) -> list[GradedElement]:
    """All monomials of degree exactly ``d``, in canonical order."""
    if sig.degree_cap is not None and d > sig.degree_cap:
        return []
    out = []
    for exps in _exponent_vectors(sig, d):
        out.append(sig.monomial(exps))
        if len(out) > bound:
            raise BasisTooLarge(f"degree {d} has more than {bound} monomials")
    return out


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of bit-vectors packed into ints."""
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                break
            v ^= p
    return len(pivots)


def _as_vectors(elements: Sequence[GradedElement]) -> list[int]:
    columns: dict[tuple[int, int], int] = {}
    rows = []
    for el in elements:
        row = 0
        for d, codes in el._terms.items():
            for c in codes:
                col = columns.setdefault((d, c), len(columns))
                row |= 1 << col
        rows.append(row)
    return rows


def span_dimension(elements: Sequence[GradedElement]) -> int:
    return gf2_rank(_as_vectors(elements))


def kernel_dimension(
    h: RingHom,
    d: int,
    basis: Sequence[GradedElement] | None = None,
    bound: int = DEFAULT_BASIS_BOUND,
) -> int:
    """Dimension of the kernel of ``h`` on degree-``d`` elements.

    With ``basis`` given, the domain is the span of those elements (which may
    be linearly dependent) rather than the whole degree-``d`` component.
    """
    if basis is None:
        basis = monomial_basis(h.source, d, bound)
    elif len(basis) > bound:
        raise BasisTooLarge(f"{len(basis)} spanning elements exceed the bound {bound}")
    for b in basis:
        if b and b.degrees() != [d]:
            raise ValueError(f"spanning element {b} is not homogeneous of degree {d}")
    domain_rank = span_dimension(basis)
    image_rank = gf2_rank(_as_vectors([apply_hom(h, b) for b in basis]))
    return domain_rank - image_rank


def elementary_symmetric(sig: RingSignature, k: int) -> GradedElement:
    """Sum of all products of ``k`` distinct generators of ``sig``."""
    n = len(sig.generators)
    monomials = []
    for idx in itertools.combinations(range(n), k):
        exps = [0] * n
        for i in idx:
            exps[i] = 1
        monomials.append(exps)
    return sig.from_monomials(monomials)


def _partitions(d: int, max_part: int, smallest: int = 1):
    # nondecreasing parts, so (1, 1, 1) < (1, 2) < (3)
    if d == 0:
        yield ()
        return
    for p in range(smallest, min(d, max_part) + 1):
        for rest in _partitions(d - p, max_part, p):
            yield (p,) + rest


def symmetric_invariant_basis(
    n: int, d: int, signature: RingSignature | None = None
) -> list[GradedElement]:
    """Products of elementary symmetric polynomials in ``n`` variables of total degree ``d``."""
    sig = signature if signature is not None else v_ring(n, None)
    if len(sig.generators) != n:
        raise SignatureMismatch(f"signature has {len(sig.generators)} generators, expected {n}")
    elementary = {k: elementary_symmetric(sig, k) for k in range(1, min(n, d) + 1)}
    out = []
    for parts in _partitions(d, n):
        el = sig.one()
        for p in parts:
            el = mul(el, elementary[p])
        out.append(el)
    return out
