"""
Verge modules and the decomposition of André–Neto modules into U-orbits.

For a basic set (D, Φ) the verge A = A(D, Φ) is main separated, its
Ũ-orbit is the verge class 𝒱(A), and under U this class splits into the
orbits of the main-separated cores with verge A. Their characters add up
to ξ_{D,Φ}; when D meets the antidiagonal (type C) ξ_{D,Φ} is only a
constituent of the sum.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from sylow.characters.actions import CharacterSpace
from sylow.characters.linchar import LinChar
from sylow.core.errors import BudgetExceeded, PreconditionError, check
from sylow.cyclo.class_functions import inner_product, sum_class_functions
from sylow.cyclo.orbit_character import orbit_character
from sylow.geometry.regions import region_members
from sylow.orbits.conditions import conditions_of, is_main_separated, main_conditions
from sylow.orbits.engine import OrbitEngine
from sylow.superchars.basic_sets import BasicSet, supercharacter
from sylow.superchars.elementary import ElementaryCharacters

logger = logging.getLogger(__name__)


def tilde_orbit(space: CharacterSpace, a: LinChar) -> frozenset[LinChar]:
    """Õ_a = {[a].x : x ∈ Ũ}, grown by restricted column operations over UR."""
    limit = space.group.budget.max_orbit_size
    generators = [(pos, alpha) for pos in region_members("UR", space.t) for alpha in space.ctx.nonzero()]
    seen = {a}
    queue = deque([a])
    while queue:
        b = queue.popleft()
        for pos, alpha in generators:
            c = space.column_op(b, pos, alpha)
            if c not in seen:
                seen.add(c)
                if len(seen) > limit:
                    raise BudgetExceeded("Ũ-orbit BFS", len(seen), limit)
                queue.append(c)

    if conditions_of(a, space.t).is_staircase:
        check(
            seen == set(verge_class(space, a)),
            "the Ũ-orbit of a staircase character is its verge class",
            f"{a}: |Õ|={len(seen)}",
        )
    return frozenset(seen)


def verge_class(space: CharacterSpace, a: LinChar) -> list[LinChar]:
    """𝒱(a): every [B] with verge(B) = verge(a), free entries left of each main condition."""
    mc = main_conditions(a)
    verge = {(i, j): a[(i, j)] for i, j in mc}
    free = [(i, c) for i, j in mc for c in range(i + 1, j) if (i, c) in space.pup]
    size = space.ctx.q ** len(free)
    limit = space.group.budget.max_orbit_size
    if size > limit:
        raise BudgetExceeded("verge class", size, limit)
    members = []
    for values in product(space.ctx.elements(), repeat=len(free)):
        mapping = dict(verge)
        mapping.update(zip(free, values))
        members.append(LinChar.from_dict(mapping))
    return members


@dataclass
class DecompositionReport:
    """U-orbit decomposition of one André–Neto module."""

    basic_set: str
    verge: LinChar
    tilde_size: int = 0
    cores: list[tuple[LinChar, int]] = field(default_factory=list)
    exact: bool = True
    multiplicity: Fraction = Fraction(0)

    @property
    def orbit_count(self) -> int:
        return len(self.cores)


def decompose_AN(
    bs: BasicSet, engine: OrbitEngine, elementary: ElementaryCharacters
) -> DecompositionReport:
    """
    Split Res_U(ℂÕ_A) into U-orbit modules and compare with ξ_{D,Φ}.

    Equality of characters is checked exactly unless D meets the
    antidiagonal, where only ⟨Σ χ_{O_B}, ξ_{D,Φ}⟩ ≥ 1 is claimed.
    """
    space = engine.space
    t = space.t
    A = bs.verge()
    report = DecompositionReport(basic_set=str(bs), verge=A)
    if not is_main_separated(A, t):
        raise PreconditionError(f"A(D,Φ) = {A} is not main separated")
    check(
        set(A.support()) == set(main_conditions(A)),
        "A(D,Φ) is a verge",
        f"{A}",
    )

    orbit_tilde = tilde_orbit(space, A)
    report.tilde_size = len(orbit_tilde)
    remaining = set(orbit_tilde)
    orbits = []
    while remaining:
        seed = min(remaining, key=lambda b: b.sort_key(space.pup))
        orbit = engine.enumerate_orbit(seed)
        check(orbit.members <= orbit_tilde, "U-orbits refine the Ũ-orbit", f"{seed}")
        remaining -= orbit.members
        core = orbit.core_rep
        check(
            core is not None and is_main_separated(core, t) and conditions_of(core, t).verge == A,
            "the Ũ-orbit splits into orbits of main-separated cores with verge A",
            f"core {core}",
        )
        orbits.append(orbit)
        report.cores.append((core, orbit.size))

    table = elementary.table
    chars = [orbit_character(space, table, o.members) for o in orbits]
    total = sum_class_functions(table, chars)
    check(
        total == orbit_character(space, table, orbit_tilde),
        "Res_U ℂÕ_A is the sum of its U-orbit modules",
        str(bs),
    )
    xi = supercharacter(bs, elementary)
    report.multiplicity = inner_product(total, xi)
    if bs.has_antidiagonal:
        report.exact = total == xi
        check(report.multiplicity >= 1, "ξ_{D,Φ} is a constituent of Res_U ℂÕ_A", str(bs))
    else:
        check(total == xi, "ξ_{D,Φ} is afforded by Res_U ℂÕ_A", str(bs))
    logger.debug(f"{bs}: |Õ|={report.tilde_size} into {report.orbit_count} U-orbits")
    return report


def orthogonality_report(
    sets: list[BasicSet], elementary: ElementaryCharacters
) -> dict[tuple[str, str], Fraction]:
    """⟨ξ_{D,Φ}, ξ_{D',Φ'}⟩ for every pair; nonzero entries signal a failure."""
    chars = [(str(bs), supercharacter(bs, elementary)) for bs in sets]
    out = {}
    for (name1, xi1), (name2, xi2) in combinations(chars, 2):
        value = inner_product(xi1, xi2)
        out[(name1, name2)] = value
        check(value == 0, "distinct supercharacters are orthogonal", f"{name1} vs {name2}")
    return out
