"""
Positions, regions and Lie types.

Modules:
- types: LieType, Family, Position
- regions: mirror map, region predicates and listings, ε, Gram matrix, closedness
"""

from sylow.geometry.regions import (
    REGION_NAMES,
    closure,
    epsilon,
    gram_matrix,
    in_cc,
    in_kl,
    in_pkl,
    in_pup,
    in_rp,
    in_rpc,
    in_tril,
    in_trir,
    in_up,
    in_ur,
    is_closed,
    mirror,
    mirror_position,
    pup,
    pup_index,
    region_members,
)
from sylow.geometry.types import Family, LieType, Position

__all__ = [
    "REGION_NAMES",
    "Family",
    "LieType",
    "Position",
    "closure",
    "epsilon",
    "gram_matrix",
    "in_cc",
    "in_kl",
    "in_pkl",
    "in_pup",
    "in_rp",
    "in_rpc",
    "in_tril",
    "in_trir",
    "in_up",
    "in_ur",
    "is_closed",
    "mirror",
    "mirror_position",
    "pup",
    "pup_index",
    "region_members",
]
