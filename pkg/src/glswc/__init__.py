"""Stiefel-Whitney classes of real representations of general linear groups.

The mod-2 classes are computed from character values at the diagonal
involutions ``h_k`` via supercharacter multiplicities of ``C_2^n``.
"""

from .errors import SWCError
from .gf2ring import GradedElement, RingSignature, st_ring, v_ring
from .reps import Cuspidal, DetTwist, DirectSum, Literal, PrincipalSeries, Steinberg, to_rep_input
from .superchar import CharacterVector, build_matrix, decompose
from .swc import FieldCase, RepInput, is_spinorial, total_swc, w1, w2, w4_q1

__all__ = [
    "SWCError",
    "GradedElement",
    "RingSignature",
    "st_ring",
    "v_ring",
    "CharacterVector",
    "build_matrix",
    "decompose",
    "FieldCase",
    "RepInput",
    "total_swc",
    "w1",
    "w2",
    "w4_q1",
    "is_spinorial",
    "PrincipalSeries",
    "Cuspidal",
    "Steinberg",
    "DetTwist",
    "DirectSum",
    "Literal",
    "to_rep_input",
]
