"""The bimodule 2-representation of S(n,d) and its relation suite."""

from .bubbles import bubble_value, closed_form, thick_bubble, thick_bubble_check
from .evaluate import BimMap, describe_map, eval_diagram, eval_sum, first_difference, maps_equal
from .relations import RELATION_FAMILIES
from .section import BimElement, Section, section
from .suite import (
    check_degree_coherence,
    check_functoriality,
    divided_power_check,
    divided_power_suite,
    relation_suite,
)

__all__ = [
    "RELATION_FAMILIES",
    "BimElement",
    "BimMap",
    "Section",
    "bubble_value",
    "check_degree_coherence",
    "check_functoriality",
    "closed_form",
    "describe_map",
    "divided_power_check",
    "divided_power_suite",
    "eval_diagram",
    "eval_sum",
    "first_difference",
    "maps_equal",
    "relation_suite",
    "section",
    "thick_bubble",
    "thick_bubble_check",
]
