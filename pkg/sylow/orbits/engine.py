"""
Orbit Engine - U-orbits on V̂ and the machinery that describes them.

Flow: character → conditions → (staircase transform) → limbs/places →
place filling → core.

Orbits are grown by BFS under the root elements x_{ij}(α), applied through
restricted column operations. Staircase orbits are then described
explicitly: every member is reached from the representative by one
root element per limb position, and the place entries parametrise the
orbit.
"""

import logging
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field

from sylow.characters.actions import CharacterSpace
from sylow.characters.linchar import LinChar
from sylow.core.errors import BudgetExceeded, PreconditionError, VerificationError, check
from sylow.geometry.regions import is_closed
from sylow.geometry.types import LieType, Position
from sylow.group.elements import GroupElem, GroupTag
from sylow.orbits.conditions import (
    Conditions,
    LimbData,
    conditions_of,
    limb_positions,
    limbs_and_places,
)

logger = logging.getLogger(__name__)


@dataclass
class Orbit:
    """One U-orbit with its combinatorial metadata."""

    representative: LinChar
    members: frozenset[LinChar]
    conditions: Conditions

    # Staircase orbits only
    core_rep: LinChar | None = None
    limbs: LimbData | None = None

    # Non-staircase orbits: a staircase character with isomorphic orbit module
    staircase_image: LinChar | None = None
    witness: GroupElem | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_staircase(self) -> bool:
        return self.conditions.is_staircase

    @property
    def places(self) -> tuple[Position, ...]:
        return tuple(sorted(self.limbs.places)) if self.limbs else ()


@dataclass
class OrbitEngine:
    """
    Orbit computations over one character space.

    Usage:
        engine = OrbitEngine(CharacterSpace(group))
        orbit = engine.enumerate_orbit(LinChar.unit((1, 4)))
        core = engine.to_core(orbit.representative)
    """

    space: CharacterSpace
    _generators: list[tuple[Position, int]] = field(init=False, default_factory=list)

    def __post_init__(self) -> None:
        nonzero = list(self.space.ctx.nonzero())
        self._generators = [(pos, alpha) for pos in self.space.pup for alpha in nonzero]

    @property
    def t(self) -> LieType:
        return self.space.t

    def conditions(self, a: LinChar) -> Conditions:
        return conditions_of(a, self.t)

    def canonical(self, members) -> LinChar:
        """Lexicographically least member over row-major pUP positions."""
        return min(members, key=lambda b: b.sort_key(self.space.pup))

    # =========================================================
    # BFS orbits
    # =========================================================

    def orbit_members(self, a: LinChar) -> frozenset[LinChar]:
        limit = self.space.group.budget.max_orbit_size
        seen = {a}
        queue = deque([a])
        while queue:
            b = queue.popleft()
            for pos, alpha in self._generators:
                c = self.space.root_action(b, pos, alpha)
                if c not in seen:
                    seen.add(c)
                    if len(seen) > limit:
                        raise BudgetExceeded("orbit BFS", len(seen), limit)
                    queue.append(c)
        return frozenset(seen)

    def enumerate_orbit(self, a: LinChar) -> Orbit:
        """The orbit of [a] with staircase/core or staircase-image metadata attached."""
        members = self.orbit_members(a)
        rep = self.canonical(members)
        c = self.conditions(rep)
        for b in (a, rep):
            check(
                self.conditions(b).mc == c.mc,
                "main conditions are constant on orbits",
                f"{b} has mc {self.conditions(b).mc}, expected {c.mc}",
            )
        orbit = Orbit(representative=rep, members=members, conditions=c)
        if c.is_staircase:
            self._describe_staircase(orbit)
        else:
            orbit.staircase_image, orbit.witness = self.staircase_transform(rep)
        return orbit

    def _describe_staircase(self, orbit: Orbit) -> None:
        c = orbit.conditions
        data = limbs_and_places(c, self.t)
        q = self.space.ctx.q
        check(
            orbit.size == q ** len(data.places),
            "staircase orbit size is q^|Pl|",
            f"|O|={orbit.size}, |Pl|={len(data.places)}",
        )
        cores = [b for b in orbit.members if set(b.support()) <= c.core]
        check(
            len(cores) == 1,
            "every staircase orbit contains precisely one core",
            f"found {len(cores)} cores in the orbit of {orbit.representative}",
        )
        core = self.to_core(orbit.representative)
        check(core == cores[0], "place filling with zeros reaches the core", f"{core} vs {cores[0]}")
        orbit.core_rep = core
        orbit.limbs = data

    def orbit_decomposition(self) -> list[Orbit]:
        """Partition all of V̂ into orbits, sorted by canonical representative."""
        space = self.space
        group = space.group
        if space.size > group.budget.max_group_size:
            raise BudgetExceeded("character space", space.size, group.budget.max_group_size)
        logger.info(f"Decomposing V̂ of {group} ({space.size} characters)")

        visited: set[LinChar] = set()
        orbits = []
        for a in space.characters():
            if a in visited:
                continue
            orbit = self.enumerate_orbit(a)
            visited |= orbit.members
            orbits.append(orbit)
            logger.debug(f"Orbit of {orbit.representative}: size {orbit.size}")

        total = sum(o.size for o in orbits)
        check(total == space.size, "orbits partition V̂", f"{total} vs {space.size}")
        orbits.sort(key=lambda o: o.representative.sort_key(space.pup))
        logger.info(f"Found {len(orbits)} orbits")
        return orbits

    # =========================================================
    # Place filling and cores
    # =========================================================

    def _require_staircase(self, a: LinChar) -> Conditions:
        c = self.conditions(a)
        if not c.is_staircase:
            raise PreconditionError(f"{a} is not a staircase character")
        return c

    def fill_places(self, a: LinChar, values: Mapping[Position, int]) -> LinChar:
        """
        The member of O_a whose place entries are `values`.

        Each limb position x_{as}(β) moves its place affinely in β with
        nonzero slope, and leaves the places filled before it untouched, so
        β is read off from the values at β = 0 and β = 1.
        """
        c = self._require_staircase(a)
        data = limbs_and_places(c, self.t)
        missing = data.places - set(values)
        if missing:
            raise PreconditionError(f"no value given for places {sorted(missing)}")
        F = self.space.ctx

        b = a
        for limb, place in data.fill_order:
            at_zero = b[place]
            slope = F.sub(self.space.root_action(b, limb, 1)[place], at_zero)
            if slope == 0:
                raise VerificationError(
                    "limb positions move their places", f"x{limb} does not move {place}"
                )
            beta = F.div(F.sub(values[place], at_zero), slope)
            b = self.space.root_action(b, limb, beta)
            check(b[place] == values[place], "places are affine in the limb parameter", f"{place}")

        for place in data.places:
            check(
                b[place] == values[place],
                "later limbs keep filled places",
                f"{place}: {b[place]} vs {values[place]}",
            )
        return b

    def to_core(self, a: LinChar) -> LinChar:
        c = self._require_staircase(a)
        data = limbs_and_places(c, self.t)
        core = self.fill_places(a, dict.fromkeys(data.places, 0))
        check(
            set(core.support()) <= c.core,
            "zero places leave a core character",
            f"{core} leaves {sorted(c.core)}",
        )
        m_places = {p for group in data.places_m.values() for p in group}
        if all(a[p] == 0 for p in m_places):
            check(
                core == a.restrict(c.core),
                "with zeros on the minus places the core is a truncation",
                f"{core} vs {a.restrict(c.core)}",
            )
        return core

    # =========================================================
    # Staircase reduction
    # =========================================================

    def staircase_transform(self, a: LinChar) -> tuple[LinChar, GroupElem]:
        """
        A staircase b = w.[a] with w ∈ Ũ_pUP.

        Columns are cleared right to left: the top main condition (i,k) of a
        column kills each lower one (j,k) with x̃_{ij}(A_jk / A_ik). Any main
        condition created by this lies strictly further left.
        """
        F = self.space.ctx
        group = self.space.group
        b = a
        witness = group.identity(GroupTag.TILDE_PATTERN)
        while True:
            columns: dict[int, list[int]] = {}
            for i, k in self.conditions(b).mc:
                columns.setdefault(k, []).append(i)
            shared = [k for k, rows in columns.items() if len(rows) > 1]
            if not shared:
                break
            k = max(shared)
            top, *lower = sorted(columns[k])
            for j in lower:
                beta = F.div(b[(j, k)], b[(top, k)])
                b = self.space.row_op((top, j), beta, b)
                witness = group.multiply(group.tilde_root((top, j), beta), witness)
            logger.debug(f"Cleared column {k} of {a}")
        return b, witness.retag(GroupTag.TILDE_PATTERN)

    # =========================================================
    # Stabilizers
    # =========================================================

    def J_of(self, c: Conditions) -> frozenset[Position]:
        """J(A) = pUP ∖ Limb(A), closed."""
        if not c.is_staircase:
            raise PreconditionError("J(A) needs a staircase character")
        J = frozenset(self.space.pup) - limb_positions(c.mc, self.t)
        check(is_closed(J, self.t), "J(A) is closed", f"J = {sorted(J)}")
        return J

    def stabilizer(self, a: LinChar) -> list[GroupElem]:
        """Stab_U[a] by brute force over U."""
        return [u for u in self.space.group.elements() if self.space.dot_right(a, u) == a]
