"""
Basic subsets D ⊆ UR and André–Neto supercharacters ξ_{D,Φ}.
"""

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations, product

from sylow.characters.linchar import LinChar
from sylow.core.errors import PreconditionError
from sylow.cyclo.class_functions import ClassFunction
from sylow.geometry.regions import in_pup, in_ur, mirror_position, pup
from sylow.geometry.types import LieType, Position
from sylow.gf.field import FieldCtx
from sylow.superchars.elementary import ElementaryCharacters

logger = logging.getLogger(__name__)


def mirror_closure(positions, t: LieType) -> frozenset[Position]:
    """D = S ∪ {(j̄, ī) : (i,j) ∈ S}; type A has no mirror."""
    positions = frozenset(positions)
    if not t.has_form:
        return positions
    return positions | {mirror_position(pos, t.N) for pos in positions}


def basic_set_violations(D, t: LieType) -> list[str]:
    """Names of the basic-set conditions D fails; empty when D is basic."""
    D = set(D)
    problems = []
    outside = sorted(pos for pos in D if not in_ur(pos, t))
    if outside:
        problems.append(f"positions {outside} are not in UR")
    if t.has_form and any(mirror_position(pos, t.N) not in D for pos in D):
        problems.append("condition (i): D is not mirror symmetric")
    rows = [i for i, _ in D]
    columns = [j for _, j in D]
    if len(rows) != len(set(rows)) or len(columns) != len(set(columns)):
        problems.append("condition (ii): a row or column of UR meets D twice")
    return problems


@dataclass(frozen=True)
class BasicSet:
    """
    A basic subset D together with Φ: D ∩ pUP → F_q^*.

    Stored through Φ alone; D is its mirror closure.
    """

    t: LieType
    phi: tuple[tuple[Position, int], ...]

    @classmethod
    def build(cls, t: LieType, phi: Mapping[Position, int]) -> "BasicSet":
        """Validate and freeze; raises PreconditionError naming the violated condition."""
        off = sorted(pos for pos in phi if not in_pup(pos, t))
        if off:
            raise PreconditionError(f"Φ is defined off pUP at {off}")
        zeros = sorted(pos for pos, v in phi.items() if v == 0)
        if zeros:
            raise PreconditionError(f"Φ must be nonzero, got 0 at {zeros}")
        problems = basic_set_violations(mirror_closure(phi, t), t)
        if problems:
            raise PreconditionError(f"not a basic set: {'; '.join(problems)}")
        return cls(t=t, phi=tuple(sorted(phi.items())))

    @property
    def positions(self) -> tuple[Position, ...]:
        """D ∩ pUP."""
        return tuple(pos for pos, _ in self.phi)

    @property
    def D(self) -> frozenset[Position]:
        return mirror_closure(self.positions, self.t)

    @property
    def has_antidiagonal(self) -> bool:
        """Some (i, ī) lies in D (type C only)."""
        return any(i + j == self.t.N + 1 for i, j in self.positions)

    def verge(self) -> LinChar:
        """A(D, Φ) = Σ Φ(i,j) e_{ij}."""
        return LinChar.from_dict(dict(self.phi))

    def __str__(self) -> str:
        if not self.phi:
            return "∅"
        return "{" + ", ".join(f"{v}@{i},{j}" for (i, j), v in self.phi) + "}"


def enumerate_basic_sets(t: LieType, ctx: FieldCtx) -> Iterator[BasicSet]:
    """Every valid (D, Φ), the empty set first, then by |D ∩ pUP| and position."""
    positions = pup(t)
    nonzero = list(ctx.nonzero())
    for size in range(len(positions) + 1):
        for subset in combinations(positions, size):
            if basic_set_violations(mirror_closure(subset, t), t):
                continue
            for values in product(nonzero, repeat=size):
                yield BasicSet(t=t, phi=tuple(zip(subset, values)))


def supercharacter(bs: BasicSet, elementary: ElementaryCharacters) -> ClassFunction:
    """ξ_{D,Φ} = Π ξ^{i,j}_{Φ(i,j)}; the trivial character for D = ∅."""
    result = ClassFunction.trivial(elementary.table)
    for pos, value in bs.phi:
        result = result * elementary.character(elementary.datum(pos, value))
    result.name = f"ξ_{bs}"
    return result
