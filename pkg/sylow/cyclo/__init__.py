"""
Exact character arithmetic.

Modules:
- cycint: CycInt, elements of Z[ζ_p]
- class_functions: GroupTable, ClassFunction, inner products, induction,
  conjugacy classes, character tables
- orbit_character: characters of orbit modules (import directly; it depends
  on the characters package)
"""

from sylow.cyclo.class_functions import (
    CharacterTable,
    ClassFunction,
    GroupTable,
    character_table,
    check_linear,
    conjugacy_classes,
    induce,
    inner_product,
    right_transversal,
    sum_class_functions,
)
from sylow.cyclo.cycint import CycInt, cyc_arith

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "CycInt",
    "GroupTable",
    "character_table",
    "check_linear",
    "conjugacy_classes",
    "cyc_arith",
    "induce",
    "inner_product",
    "right_transversal",
    "sum_class_functions",
]
