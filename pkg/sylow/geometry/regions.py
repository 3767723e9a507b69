"""
Position combinatorics: the mirror map, named regions, the sign ε, the
Gram matrix and closedness of position sets.

All positions are 1-based (i, j) with 1 <= i, j <= N. Region listings are
row-major.
"""

from collections.abc import Iterable
from functools import cache

import numpy as np

from sylow.core.errors import GeometryError
from sylow.geometry.types import Family, LieType, Position

REGION_NAMES = (
    "UR",
    "UP",
    "CC",
    "RP",
    "UPC",
    "RPC",
    "pUP",
    "tril",
    "trir",
    "KL",
    "pKL",
    "diag",
)


def mirror(i: int, N: int) -> int:
    """ī = N + 1 - i."""
    if not 1 <= i <= N:
        raise GeometryError(f"index {i} out of range 1..{N}")
    return N + 1 - i


def mirror_position(pos: Position, N: int) -> Position:
    """(i, j) -> (j̄, ī), the position paired with (i, j) by the form."""
    i, j = pos
    return mirror(j, N), mirror(i, N)


def epsilon(i: int, j: int, t: LieType) -> int:
    """-1 exactly for type C when one of i, j is at most n and the other exceeds n."""
    N = t.N
    if not (1 <= i <= N and 1 <= j <= N):
        raise GeometryError(f"position ({i},{j}) out of range for {t}")
    if t.family is Family.C and ((i > t.n) != (j > t.n)):
        return -1
    return 1


def gram_matrix(t: LieType, ctx) -> np.ndarray:
    """S = Σ_{i<=n} e_{iī} + Σ_{i>n} ε e_{iī} over the field ctx."""
    if not t.has_form:
        raise GeometryError("type A carries no form")
    N = t.N
    minus_one = ctx.neg(1)
    S = np.zeros((N, N), dtype=np.int64)
    for i in range(1, N + 1):
        sign = -1 if (t.family is Family.C and i > t.n) else 1
        S[i - 1, mirror(i, N) - 1] = 1 if sign == 1 else minus_one
    return S


# =========================================================
# Region predicates
# =========================================================


def in_ur(pos: Position, t: LieType) -> bool:
    i, j = pos
    return 1 <= i < j <= t.N


def in_up(pos: Position, t: LieType) -> bool:
    i, j = pos
    return 1 <= i < j < mirror(i, t.N) if 1 <= i <= t.N and j <= t.N else False


def in_cc(pos: Position, t: LieType) -> bool:
    i, j = pos
    return in_ur(pos, t) and i == mirror(j, t.N)


def in_rp(pos: Position, t: LieType) -> bool:
    i, j = pos
    return in_ur(pos, t) and mirror(j, t.N) < i


def in_pup(pos: Position, t: LieType) -> bool:
    if t.family is Family.A:
        return in_ur(pos, t)
    if t.family is Family.C:
        return in_up(pos, t) or in_cc(pos, t)
    return in_up(pos, t)


def in_rpc(pos: Position, t: LieType) -> bool:
    """Positions of UR whose entries are determined by the pUP entries."""
    return in_ur(pos, t) and not in_pup(pos, t)


def in_tril(pos: Position, t: LieType) -> bool:
    return in_pup(pos, t) and pos[1] <= t.ntilde


def in_trir(pos: Position, t: LieType) -> bool:
    return in_pup(pos, t) and pos[1] > t.ntilde


def in_kl(pos: Position, t: LieType) -> bool:
    i, j = pos
    return 1 <= i <= t.N and 1 <= j < mirror(i, t.N)


def in_pkl(pos: Position, t: LieType) -> bool:
    if t.family is Family.C:
        return in_kl(pos, t) or in_cc(pos, t)
    return in_kl(pos, t)


_PREDICATES = {
    "UR": in_ur,
    "UP": lambda pos, t: in_ur(pos, t) and in_up(pos, t),
    "CC": in_cc,
    "RP": in_rp,
    "UPC": lambda pos, t: in_ur(pos, t) and (in_up(pos, t) or in_cc(pos, t)),
    "RPC": lambda pos, t: in_rp(pos, t) or in_cc(pos, t),
    "pUP": in_pup,
    "tril": in_tril,
    "trir": in_trir,
    "KL": in_kl,
    "pKL": in_pkl,
    "diag": lambda pos, t: pos[0] == pos[1],
}


@cache
def region_members(name: str, t: LieType) -> tuple[Position, ...]:
    """Positions of a named region in row-major order."""
    if name not in _PREDICATES:
        raise GeometryError(f"unknown region {name!r}; expected one of {', '.join(REGION_NAMES)}")
    predicate = _PREDICATES[name]
    N = t.N
    return tuple(
        (i, j) for i in range(1, N + 1) for j in range(1, N + 1) if predicate((i, j), t)
    )


def pup(t: LieType) -> tuple[Position, ...]:
    return region_members("pUP", t)


def pup_index(t: LieType) -> dict[Position, int]:
    """Row-major index of each pUP position."""
    return {pos: k for k, pos in enumerate(pup(t))}


# =========================================================
# Closed subsets
# =========================================================


def _violations(J: set[Position], t: LieType) -> Iterable[Position]:
    """Positions of pUP that closedness forces into J but are missing."""
    N = t.N
    for i, j in J:
        for jj, k in J:
            if jj == j and (i, k) not in J:
                yield (i, k)
    if t.family is Family.A:
        return
    for i, j in J:
        for a, b in J:
            # (a, b) = (k̄, j̄) with the same j̄
            if b != mirror(j, N):
                continue
            k = mirror(a, N)
            if (i, k) in J:
                continue
            if in_pup((i, k), t):
                yield (i, k)


def is_closed(J: Iterable[Position], t: LieType) -> bool:
    """
    Closedness of J ⊆ pUP:
    (i) (i,j), (j,k) ∈ J ⇒ (i,k) ∈ J;
    (ii) (i,j), (k̄,j̄) ∈ J and (i,k) ∈ pUP ⇒ (i,k) ∈ J (not for type A).
    """
    J = set(J)
    outside = [pos for pos in J if not in_pup(pos, t)]
    if outside:
        raise GeometryError(f"positions {sorted(outside)} are not in pUP for {t}")
    return next(iter(_violations(J, t)), None) is None


def closure(J: Iterable[Position], t: LieType) -> frozenset[Position]:
    """Smallest closed subset of pUP containing J."""
    current = set(J)
    is_closed(current, t)
    while True:
        missing = set(_violations(current, t))
        if not missing:
            return frozenset(current)
        current |= missing
