"""
Elementary characters ξ^{i,j}_α = Ind_{U_{i,j}}^U(χ^{i,j}_α).

U_{i,j} is the pattern subgroup on J_{i,j} = pUP ∖ ρ_{i,j}, and
χ^{i,j}_α(u) = θ(α u_{ij}) is linear on it. Each elementary character is
matched against orbit modules in one of three ways:

1. (i,j) ∈ tril, or type C with (i,j) ∈ UP: ξ = χ_{O_A} for A = αe_{ij}.
2. types B/D, (i,j) ∈ trir: ξ = Σ_β χ_{O_{A_β}}, A_β = αe_{ij} + βe_{ij̄}.
3. type C, j = ī: ξ is irreducible and occurs once in χ_{O_A}.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from sylow.characters.actions import CharacterSpace
from sylow.characters.linchar import LinChar
from sylow.core.errors import PreconditionError, check
from sylow.cyclo.class_functions import (
    ClassFunction,
    GroupTable,
    check_linear,
    induce,
    inner_product,
    right_transversal,
    sum_class_functions,
)
from sylow.cyclo.cycint import CycInt
from sylow.cyclo.orbit_character import orbit_character
from sylow.geometry.regions import in_cc, in_pup, in_trir, is_closed, mirror, pup
from sylow.geometry.types import Family, LieType, Position
from sylow.group.elements import GroupElem
from sylow.orbits.conditions import main_conditions
from sylow.orbits.engine import OrbitEngine

logger = logging.getLogger(__name__)


def rho(pos: Position, t: LieType) -> frozenset[Position]:
    """
    ρ_{i,j}: the row-i positions left of (i,j) for tril, and for trir the
    row-i positions up to column n plus the row-j̄ positions up to column ñ.
    """
    i, j = pos
    if not in_pup(pos, t):
        raise PreconditionError(f"{pos} is not a pUP position for {t}")
    if not in_trir(pos, t):
        return frozenset((i, k) for k in range(i + 1, j) if in_pup((i, k), t))
    jb = mirror(j, t.N)
    first = {(i, k) for k in range(i + 1, t.n + 1) if in_pup((i, k), t)}
    second = {(jb, l) for l in range(jb + 1, t.ntilde + 1) if in_pup((jb, l), t)}
    return frozenset(first | second)


def elementary_case(pos: Position, t: LieType) -> int:
    """Which of the three orbit identifications applies to (i,j)."""
    if t.family is Family.C and in_cc(pos, t):
        return 3
    if t.family in (Family.B, Family.D) and in_trir(pos, t):
        return 2
    return 1


def degree_formula(pos: Position, t: LieType, q: int) -> int:
    """q^{j-i-1} on UP, q^{n-i} on the antidiagonal."""
    i, j = pos
    if in_cc(pos, t):
        return q ** (t.n - i)
    return q ** (j - i - 1)


@dataclass(frozen=True)
class ElementaryDatum:
    """(i,j) ∈ pUP, α ≠ 0 and the pattern subsets of U_{i,j} and U°_{i,j}."""

    pos: Position
    alpha: int
    rho: frozenset[Position]
    J: frozenset[Position]
    J_circ: frozenset[Position]

    @classmethod
    def build(cls, t: LieType, pos: Position, alpha: int) -> "ElementaryDatum":
        if alpha == 0:
            raise PreconditionError("elementary characters need α ≠ 0")
        r = rho(pos, t)
        J = frozenset(pup(t)) - r
        J_circ = J - {pos}
        check(is_closed(J, t), "J_{i,j} is closed", f"{pos}: J = {sorted(J)}")
        check(is_closed(J_circ, t), "J°_{i,j} is closed", f"{pos}: J° = {sorted(J_circ)}")
        return cls(pos=pos, alpha=alpha, rho=r, J=J, J_circ=J_circ)

    @property
    def label(self) -> str:
        i, j = self.pos
        return f"ξ^{{{i},{j}}}_{self.alpha}"


@dataclass
class ElementaryReport:
    """Outcome of matching one elementary character against orbit modules."""

    pos: Position
    alpha: int
    case: int
    degree: int
    orbit_sizes: list[int] = field(default_factory=list)
    inner_products: dict[str, Fraction] = field(default_factory=dict)


class ElementaryCharacters:
    """
    Elementary characters of one group, cached per (i, j, α).

    Usage:
        elementary = ElementaryCharacters(space, table)
        xi = elementary.character(elementary.datum((1, 4), 1))
    """

    def __init__(self, space: CharacterSpace, table: GroupTable | None = None, seed: int = 0):
        self.space = space
        self.group = space.group
        self.t = space.t
        self.ctx = space.ctx
        self.table = table or GroupTable(space.group)
        self.seed = seed
        self._characters: dict[tuple[Position, int], ClassFunction] = {}

    def datum(self, pos: Position, alpha: int) -> ElementaryDatum:
        return ElementaryDatum.build(self.t, pos, alpha)

    def subgroup(self, d: ElementaryDatum) -> list[GroupElem]:
        return list(self.group.pattern_elements(d.J))

    def chi(self, d: ElementaryDatum, u: GroupElem) -> CycInt:
        """χ^{i,j}_α(u) = θ(α u_{ij})."""
        return CycInt.zeta(self.ctx.p, self.ctx.trace(self.ctx.mul(d.alpha, u[d.pos])))

    def check_normal(self, d: ElementaryDatum) -> bool:
        """U°_{i,j} ⊴ U_{i,j}, checked on root-element generators of both."""
        F = self.ctx
        outer = [self.group.root_element(pos, a) for pos in sorted(d.J) for a in F.nonzero()]
        inner = [self.group.root_element(pos, a) for pos in sorted(d.J_circ) for a in F.nonzero()]
        return all(
            self.group.in_pattern(self.group.conjugate(g, h), d.J_circ) for g in outer for h in inner
        )

    def character(self, d: ElementaryDatum) -> ClassFunction:
        key = (d.pos, d.alpha)
        if key in self._characters:
            return self._characters[key]

        H = self.subgroup(d)
        check_linear(
            self.group, H, lambda u: self.chi(d, u), self.group.budget.sample_pairs, self.seed
        )
        transversal = right_transversal(self.table, H)
        xi = induce(
            self.table,
            lambda y: self.group.in_pattern(y, d.J),
            lambda y: self.chi(d, y),
            transversal,
            d.label,
        )
        q = self.ctx.q
        check(
            xi.degree() == q ** len(d.rho) == degree_formula(d.pos, self.t, q),
            "deg ξ^{i,j}_α = q^|ρ_{i,j}|",
            f"{d.label}: degree {xi.degree()}, |ρ| = {len(d.rho)}",
        )
        self._characters[key] = xi
        return xi

    # =========================================================
    # Orbit modules
    # =========================================================

    def ij_suborbit(self, a: LinChar, d: ElementaryDatum) -> frozenset[LinChar]:
        """
        O^{i,j}_a = {[a].u : u ∈ U_{i,j}} for a core with verge αe_{ij}.

        On it [B]u = χ^{i,j}_α(u) [B].u for every u ∈ U_{i,j}.
        """
        if main_conditions(a) != (d.pos,) or a[d.pos] != d.alpha:
            raise PreconditionError(f"{a} does not have verge {d.alpha}e{d.pos}")
        H = self.subgroup(d)
        members = frozenset(self.space.dot_right(a, u) for u in H)
        p = self.ctx.p
        for b in members:
            check(
                set(b.support()) & d.J == {d.pos} and b[d.pos] == d.alpha,
                "supp(B) ∩ J_{i,j} = {(i,j)} on the (i,j)-suborbit",
                f"{b}",
            )
            for u in H:
                exponent, image = self.space.monomial_right(b, u)
                check(image in members, "the (i,j)-suborbit is U_{i,j}-stable", f"{b}")
                check(
                    CycInt.zeta(p, exponent) == self.chi(d, u),
                    "U_{i,j} acts on the suborbit through χ^{i,j}_α",
                    f"{b}",
                )
        return members

    def identify(self, d: ElementaryDatum, engine: OrbitEngine) -> ElementaryReport:
        """Match ξ^{i,j}_α against the orbit modules of the cores with verge αe_{ij}."""
        xi = self.character(d)
        case = elementary_case(d.pos, self.t)
        report = ElementaryReport(pos=d.pos, alpha=d.alpha, case=case, degree=xi.degree())
        claim = f"{d.label}, case {case}"
        report.inner_products["<xi,xi>"] = inner_product(xi, xi)

        A = LinChar.unit(d.pos, d.alpha)
        if case == 2:
            minor = (d.pos[0], mirror(d.pos[1], self.t.N))
            chars = []
            for beta in self.ctx.elements():
                A_beta = A.replace(minor, beta)
                members = engine.orbit_members(A_beta)
                report.orbit_sizes.append(len(members))
                chi_o = orbit_character(self.space, self.table, members, f"O_{A_beta}")
                report.inner_products[f"<O_{beta},O_{beta}>"] = inner_product(chi_o, chi_o)
                check(
                    report.inner_products[f"<O_{beta},O_{beta}>"] == 1,
                    claim,
                    f"orbit module of {A_beta} is not irreducible",
                )
                chars.append(chi_o)
            for (b1, c1), (b2, c2) in combinations(enumerate(chars), 2):
                value = inner_product(c1, c2)
                report.inner_products[f"<O_{b1},O_{b2}>"] = value
                check(value == 0, claim, f"orbit modules {b1}, {b2} are not orthogonal")
            check(
                sum_class_functions(self.table, chars) == xi,
                claim,
                "ξ differs from the sum of the A_β orbit characters",
            )
            return report

        members = engine.orbit_members(A)
        report.orbit_sizes.append(len(members))
        chi_o = orbit_character(self.space, self.table, members, f"O_{A}")
        report.inner_products["<O,xi>"] = inner_product(chi_o, xi)
        if case == 1:
            check(chi_o == xi, claim, "ξ differs from the orbit character of αe_{ij}")
        check(report.inner_products["<xi,xi>"] == 1, claim, "ξ is not irreducible")
        check(report.inner_products["<O,xi>"] == 1, claim, "ξ does not occur once in the orbit module")
        logger.debug(f"{claim}: degree {report.degree}, orbit sizes {report.orbit_sizes}")
        return report
