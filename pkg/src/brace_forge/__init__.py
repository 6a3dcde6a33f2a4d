"""Finite skew braces, their lambda groups, character degrees and isoclinism."""

from .braces import (
    SkewBrace,
    annihilator,
    commutator_ideal,
    make_radical_brace,
    make_trivial_brace,
    opposite,
    validate_brace,
)
from .characters import DegreeMultiset, character_degrees, ird, ird_group, linear_character_count
from .errors import BraceForgeError, PropertyViolation, SizeBound, SizeCap, ValidationError
from .groups import FiniteGroup, conjugacy_classes, validate_group
from .isoclinism import brace_isoclinic, group_isoclinic
from .lambda_groups import LambdaGroup, build_lambda_group
from .reps import BraceRep, from_group_rep, to_group_rep, validate_brace_rep

__all__ = [
    "BraceForgeError",
    "BraceRep",
    "DegreeMultiset",
    "FiniteGroup",
    "LambdaGroup",
    "PropertyViolation",
    "SizeBound",
    "SizeCap",
    "SkewBrace",
    "ValidationError",
    "annihilator",
    "brace_isoclinic",
    "build_lambda_group",
    "character_degrees",
    "commutator_ideal",
    "conjugacy_classes",
    "from_group_rep",
    "group_isoclinic",
    "ird",
    "ird_group",
    "linear_character_count",
    "make_radical_brace",
    "make_trivial_brace",
    "opposite",
    "to_group_rep",
    "validate_brace",
    "validate_brace_rep",
    "validate_group",
]
