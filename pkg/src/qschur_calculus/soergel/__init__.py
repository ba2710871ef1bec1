"""Soergel diagrams, their functor into S(n,d) and the relation suite."""

from .oracle import oracle_check, oracle_map
from .relations import SOERGEL_FAMILIES, SOERGEL_RELATIONS, relation_sides
from .sigma import base_weight, box_normalize, box_polynomial, sigma, sigma_letters
from .suite import box_normalize_check, soergel_check, soergel_relation_suite
from .textio import format_soergel_word, load_soergel_word, parse_soergel_word
from .words import (
    SoergelAtom,
    SoergelSum,
    SoergelWord,
    build_soergel,
    compose_soergel,
    tensor,
)

__all__ = [
    "SOERGEL_FAMILIES",
    "SOERGEL_RELATIONS",
    "SoergelAtom",
    "SoergelSum",
    "SoergelWord",
    "base_weight",
    "box_normalize",
    "box_normalize_check",
    "box_polynomial",
    "build_soergel",
    "compose_soergel",
    "format_soergel_word",
    "load_soergel_word",
    "oracle_check",
    "oracle_map",
    "parse_soergel_word",
    "relation_sides",
    "sigma",
    "sigma_letters",
    "soergel_check",
    "soergel_relation_suite",
    "tensor",
]
