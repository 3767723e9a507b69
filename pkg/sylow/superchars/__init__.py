"""
André–Neto elementary characters and supercharacters in terms of orbit modules.

Modules:
- elementary: ρ_{i,j}, U_{i,j}, ξ^{i,j}_α and its identification with orbit modules
- basic_sets: basic subsets, their enumeration and supercharacters
- decomposition: verge classes, Ũ-orbits and the U-orbit decomposition
"""

from sylow.superchars.basic_sets import (
    BasicSet,
    basic_set_violations,
    enumerate_basic_sets,
    mirror_closure,
    supercharacter,
)
from sylow.superchars.decomposition import (
    DecompositionReport,
    decompose_AN,
    orthogonality_report,
    tilde_orbit,
    verge_class,
)
from sylow.superchars.elementary import (
    ElementaryCharacters,
    ElementaryDatum,
    ElementaryReport,
    degree_formula,
    elementary_case,
    rho,
)

__all__ = [
    "BasicSet",
    "DecompositionReport",
    "ElementaryCharacters",
    "ElementaryDatum",
    "ElementaryReport",
    "basic_set_violations",
    "decompose_AN",
    "degree_formula",
    "elementary_case",
    "enumerate_basic_sets",
    "mirror_closure",
    "orthogonality_report",
    "rho",
    "supercharacter",
    "tilde_orbit",
    "verge_class",
]
