"""Diagram words for the 2-categories U(gl_n) and S(n,d)."""

from .atoms import (
    ATOM_TABLE,
    DOWN,
    UP,
    Atom,
    Letter,
    atom_degree,
    bubble,
    cap_ef,
    cap_fe,
    cross_dd,
    cross_lr,
    cross_rl,
    cross_uu,
    cup_ef,
    cup_fe,
    dot_down,
    dot_up,
    id_down,
    id_up,
)
from .textio import format_word, load_word, parse_word, word_from_json, word_to_json
from .word import (
    DiagramSum,
    DiagramWord,
    LiteralBubble,
    OneMorphism,
    build_word,
    compose_h,
    compose_sums,
    compose_v,
    degree,
    divided_power_idempotent,
    extend_word,
    find_bubbles,
    is_zero_by_label,
    regions,
    rotate180,
    sideways_expansion,
    sl_sign_translate,
)

__all__ = [
    "ATOM_TABLE",
    "DOWN",
    "UP",
    "Atom",
    "DiagramSum",
    "DiagramWord",
    "Letter",
    "LiteralBubble",
    "OneMorphism",
    "atom_degree",
    "bubble",
    "build_word",
    "cap_ef",
    "cap_fe",
    "compose_h",
    "compose_sums",
    "compose_v",
    "cross_dd",
    "cross_lr",
    "cross_rl",
    "cross_uu",
    "cup_ef",
    "cup_fe",
    "degree",
    "divided_power_idempotent",
    "dot_down",
    "dot_up",
    "extend_word",
    "find_bubbles",
    "format_word",
    "id_down",
    "id_up",
    "is_zero_by_label",
    "load_word",
    "parse_word",
    "regions",
    "rotate180",
    "sideways_expansion",
    "sl_sign_translate",
    "word_from_json",
    "word_to_json",
]
