"""
Combinatorics of a character [A]: main, minor and supplementary conditions,
the core and verge, and the arm/leg/place apparatus of staircase characters.
"""

from dataclasses import dataclass, field

from sylow.characters.linchar import LinChar
from sylow.core.errors import PreconditionError, VerificationError
from sylow.geometry.regions import in_cc, in_pup, mirror, pup
from sylow.geometry.types import Family, LieType, Position


@dataclass(frozen=True)
class Conditions:
    """Main/minor/supplementary conditions, core positions and verge of [A]."""

    mc: tuple[Position, ...]
    lmc: tuple[Position, ...]
    rmc: tuple[Position, ...]
    minc: tuple[Position, ...]
    suppl: tuple[Position, ...]
    core: frozenset[Position]
    verge: LinChar

    @property
    def is_staircase(self) -> bool:
        columns = [j for _, j in self.mc]
        return len(columns) == len(set(columns))

    def main_of_row(self) -> dict[int, int]:
        return dict(self.mc)


def main_conditions(a: LinChar) -> tuple[Position, ...]:
    """Per row, the position of the rightmost nonzero entry."""
    rightmost: dict[int, int] = {}
    for i, j, _ in a.entries:
        rightmost[i] = max(j, rightmost.get(i, 0))
    return tuple(sorted(rightmost.items()))


def conditions_of(a: LinChar, t: LieType) -> Conditions:
    mc = main_conditions(a)
    lmc = tuple(pos for pos in mc if pos[1] <= t.ntilde)
    rmc = tuple(pos for pos in mc if pos[1] > t.ntilde)
    # the minor of an antidiagonal main condition (type C) is diagonal and dropped
    minc = tuple(
        (i, mirror(j, t.N)) for i, j in rmc if in_pup((i, mirror(j, t.N)), t)
    )

    mc_set, minc_set = set(mc), set(minc)
    minor_columns = {j for _, j in minc}
    # per row, the columns of its minor and left-main conditions
    blockers: dict[int, list[int]] = {}
    for i, j in (*minc, *lmc):
        blockers.setdefault(i, []).append(j)

    suppl = tuple(
        (i, j)
        for i, j in pup(t)
        if j <= t.ntilde
        and j in minor_columns
        and any(j < c for c in blockers.get(i, ()))
        and (i, j) not in mc_set
        and (i, j) not in minc_set
    )

    core = set(mc) | set(suppl)
    if t.family is not Family.C:
        core |= minc_set
    return Conditions(
        mc=mc,
        lmc=lmc,
        rmc=rmc,
        minc=minc,
        suppl=suppl,
        core=frozenset(core),
        verge=a.restrict(mc),
    )


def is_staircase(a: LinChar) -> bool:
    columns = [j for _, j in main_conditions(a)]
    return len(columns) == len(set(columns))


# =========================================================
# Arms, legs, limbs and places
# =========================================================


def arm(pos: Position, t: LieType) -> tuple[Position, ...]:
    """A(k,l) of a right main condition: row l̄ of pUP, or the row segment for (k, k̄)."""
    k, l = pos
    if in_cc(pos, t):
        return tuple((k, a) for a in range(k + 1, mirror(k, t.N)) if in_pup((k, a), t))
    lb = mirror(l, t.N)
    return tuple((lb, a) for a in range(lb + 1, t.N + 1) if in_pup((lb, a), t))


def leg(pos: Position, t: LieType) -> tuple[Position, ...]:
    """L(i,j) = {(a, j) ∈ pUP : a > i}, top-down."""
    i, j = pos
    return tuple((a, j) for a in range(i + 1, t.N + 1) if in_pup((a, j), t))


def limb_positions(mc: tuple[Position, ...], t: LieType) -> frozenset[Position]:
    """Limb = (∪ legs) ∪ (∪ arms of right main conditions); no staircase assumption."""
    limb: set[Position] = set()
    for pos in mc:
        limb.update(leg(pos, t))
        if pos[1] > t.ntilde:
            limb.update(arm(pos, t))
    return frozenset(limb)


def is_main_separated(a: LinChar, t: LieType) -> bool:
    """Limb(A) ∩ main(A) = ∅."""
    mc = main_conditions(a)
    return not (limb_positions(mc, t) & set(mc))


@dataclass
class LimbData:
    """
    Arms, legs, reduced legs and places of a staircase character, with the
    bijection φ: Limb -> Pl listed in place-filling order.
    """

    arms: dict[Position, tuple[Position, ...]] = field(default_factory=dict)
    legs: dict[Position, tuple[Position, ...]] = field(default_factory=dict)
    reduced_legs: dict[Position, tuple[Position, ...]] = field(default_factory=dict)
    places_p: dict[Position, tuple[Position, ...]] = field(default_factory=dict)
    places_m: dict[Position, tuple[Position, ...]] = field(default_factory=dict)
    fill_order: list[tuple[Position, Position]] = field(default_factory=list)

    @property
    def limb(self) -> frozenset[Position]:
        return frozenset(pos for pos, _ in self.fill_order)

    @property
    def places(self) -> frozenset[Position]:
        out: set[Position] = set()
        for group in (*self.places_p.values(), *self.places_m.values()):
            out.update(group)
        return frozenset(out)

    @property
    def phi(self) -> dict[Position, Position]:
        return dict(self.fill_order)


def limbs_and_places(c: Conditions, t: LieType) -> LimbData:
    """
    Build the limb/place data of a staircase character.

    Fill order: reduced legs of main conditions from left to right, each
    top-down; then arms of right main conditions from left to right, each
    left to right. φ sends a leg position (a, j) of (i, j) to (i, a) and an
    arm position (l̄, a) of (k, l) to (k, ā).
    """
    if not c.is_staircase:
        raise PreconditionError("limbs and places need a staircase character")
    N = t.N
    data = LimbData()
    for pos in c.rmc:
        data.arms[pos] = arm(pos, t)
    arm_positions = {p for group in data.arms.values() for p in group}
    for pos in c.mc:
        data.legs[pos] = leg(pos, t)
        data.reduced_legs[pos] = tuple(p for p in data.legs[pos] if p not in arm_positions)

    rmc = set(c.rmc)
    for i, j in c.mc:
        places = [(i, b) for b in range(i + 1, j) if in_pup((i, b), t) and (i, b) not in c.core]
        if (i, j) in rmc:
            jb = mirror(j, N)
            data.places_p[(i, j)] = tuple(p for p in places if p[1] < jb)
            data.places_m[(i, j)] = tuple(p for p in places if p[1] >= jb)
        else:
            data.places_p[(i, j)] = tuple(places)

    for i, j in sorted(c.mc, key=lambda pos: pos[1]):
        for a, _ in data.reduced_legs[(i, j)]:
            data.fill_order.append(((a, j), (i, a)))
    for k, l in sorted(c.rmc, key=lambda pos: pos[1]):
        for row, a in data.arms[(k, l)]:
            data.fill_order.append(((row, a), (k, mirror(a, N))))

    targets = [place for _, place in data.fill_order]
    if len(set(targets)) != len(targets) or set(targets) != data.places:
        raise VerificationError(
            "φ is a bijection from Limb to Pl",
            f"limb images {sorted(targets)} vs places {sorted(data.places)}",
        )
    return data
