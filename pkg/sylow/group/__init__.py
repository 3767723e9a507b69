"""
The groups U = G ∩ U_N(q) and Ũ = U_N(q).

Modules:
- elements: GroupElem and GroupTag
- group: ClassicalGroup (form, membership, completion, root elements,
  factorisation, pattern subgroups, enumeration)
"""

from sylow.group.elements import GroupElem, GroupTag
from sylow.group.group import ClassicalGroup, Coordinates, enumerate_group

__all__ = ["ClassicalGroup", "Coordinates", "GroupElem", "GroupTag", "enumerate_group"]
