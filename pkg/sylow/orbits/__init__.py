"""
U-orbits on the character space V̂.

Modules:
- conditions: main/minor/supplementary conditions, arms, legs and places
- engine: BFS orbits, place filling, cores, staircase transform, stabilizers
- classify: classification of staircase orbits by cores
"""

from sylow.orbits.classify import ClassificationReport, OrbitRecord, classify
from sylow.orbits.conditions import (
    Conditions,
    LimbData,
    conditions_of,
    is_main_separated,
    is_staircase,
    limb_positions,
    limbs_and_places,
    main_conditions,
)
from sylow.orbits.engine import Orbit, OrbitEngine

__all__ = [
    "ClassificationReport",
    "Conditions",
    "LimbData",
    "Orbit",
    "OrbitEngine",
    "OrbitRecord",
    "classify",
    "conditions_of",
    "is_main_separated",
    "is_staircase",
    "limb_positions",
    "limbs_and_places",
    "main_conditions",
]
