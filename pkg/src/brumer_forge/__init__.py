"""Exact group-ring toolkit for Stickelberger elements of CM extensions with non-abelian Galois group."""

from .exactnum import Cyclotomic, CyclotomicSubfield
from .group import FiniteGroup, Subgroup
from .character import Character, CharacterTable, builtin_table
from .groupring import GroupRingElement, CentralElement, GroupAlgebra, algebra, parse_element

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic",
    "CyclotomicSubfield",
    "FiniteGroup",
    "Subgroup",
    "Character",
    "CharacterTable",
    "builtin_table",
    "GroupRingElement",
    "CentralElement",
    "GroupAlgebra",
    "algebra",
    "parse_element",
]
