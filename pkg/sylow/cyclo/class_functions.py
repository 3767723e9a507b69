"""
Class functions on U with values in Z[ζ_p]: storage, inner products,
induction from subgroups, conjugacy classes and character tables.
"""

import logging
import random
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sylow.core.errors import PreconditionError, VerificationError, check
from sylow.cyclo.cycint import CycInt
from sylow.group.elements import GroupElem
from sylow.group.group import ClassicalGroup

logger = logging.getLogger(__name__)


class GroupTable:
    """
    The elements of U in enumeration order, with index lookup.

    Built once per group and shared by every class function on it.
    """

    def __init__(self, group: ClassicalGroup):
        self.group = group
        self.p = group.ctx.p
        self.elements: tuple[GroupElem, ...] = tuple(group.elements())
        self.index = {g: k for k, g in enumerate(self.elements)}
        self.identity = group.identity()
        self._inverses: list[GroupElem] | None = None
        logger.debug(f"Enumerated {len(self.elements)} elements of {group}")

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def inverses(self) -> list[GroupElem]:
        if self._inverses is None:
            self._inverses = [self.group.invert(g) for g in self.elements]
        return self._inverses


class ClassFunction:
    """
    A function U -> Z[ζ_p], stored on every element.

    Conjugation invariance is checked by `is_class_function`, not assumed.
    """

    def __init__(self, table: GroupTable, values: Sequence[CycInt], name: str = ""):
        if len(values) != len(table):
            raise PreconditionError(f"expected {len(table)} values, got {len(values)}")
        self.table = table
        self.values = tuple(values)
        self.name = name

    @classmethod
    def from_function(
        cls, table: GroupTable, fn: Callable[[GroupElem], CycInt], name: str = ""
    ) -> "ClassFunction":
        return cls(table, [fn(g) for g in table.elements], name)

    @classmethod
    def constant(cls, table: GroupTable, k: int, name: str = "") -> "ClassFunction":
        return cls(table, [CycInt.from_int(table.p, k)] * len(table), name)

    @classmethod
    def trivial(cls, table: GroupTable) -> "ClassFunction":
        return cls.constant(table, 1, "trivial")

    @classmethod
    def regular(cls, table: GroupTable) -> "ClassFunction":
        p = table.p
        values = [
            CycInt.from_int(p, len(table) if g == table.identity else 0) for g in table.elements
        ]
        return cls(table, values, "regular")

    def __call__(self, g: GroupElem) -> CycInt:
        return self.values[self.table.index[g]]

    def degree(self) -> int:
        return self(self.table.identity).rational_part()

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_table(other)
        return ClassFunction(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_table(other)
        return ClassFunction(self.table, [a * b for a, b in zip(self.values, other.values)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    __hash__ = None  # type: ignore[assignment]

    def _same_table(self, other: "ClassFunction") -> None:
        if other.table is not self.table:
            raise PreconditionError("class functions live on different groups")

    def is_class_function(self, conjugators: Iterable[GroupElem] | None = None) -> bool:
        """χ(g u g^{-1}) = χ(u) for every u and every g in a generating set."""
        group = self.table.group
        gens = (
            [g for _, _, g in group.generators()] if conjugators is None else list(conjugators)
        )
        for u, value in zip(self.table.elements, self.values):
            for g in gens:
                if self(group.conjugate(g, u)) != value:
                    return False
        return True


def sum_class_functions(table: GroupTable, chars: Iterable[ClassFunction]) -> ClassFunction:
    total = ClassFunction.constant(table, 0)
    for chi in chars:
        total = total + chi
    return total


def inner_product(chi: ClassFunction, psi: ClassFunction, genuine: bool = True) -> Fraction:
    """
    ⟨χ, ψ⟩ = (1/|U|) Σ_u χ(u) conj(ψ(u)), computed exactly.

    For genuine characters the result must be a nonnegative integer.
    """
    chi._same_table(psi)
    total = CycInt.zero(chi.table.p)
    for a, b in zip(chi.values, psi.values):
        total = total + a * b.conj()
    if not total.is_rational():
        raise VerificationError("inner product is rational", f"got {total}")
    value = total.to_fraction(len(chi.table))
    if genuine:
        check(
            value.denominator == 1 and value >= 0,
            "inner product of characters is a nonnegative integer",
            f"got {value}",
        )
    return value


# =========================================================
# Induction
# =========================================================


def right_transversal(table: GroupTable, subgroup: Sequence[GroupElem]) -> list[GroupElem]:
    """Representatives r with U = ⊔ H r, first in enumeration order."""
    group = table.group
    seen: set[GroupElem] = set()
    reps = []
    for g in table.elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(group.multiply(h, g) for h in subgroup)
    return reps


def check_linear(
    group: ClassicalGroup,
    subgroup: Sequence[GroupElem],
    chi: Callable[[GroupElem], CycInt],
    max_pairs: int,
    seed: int = 0,
) -> None:
    """χ(uv) = χ(u)χ(v) on H: exhaustive when |H|² <= max_pairs, sampled otherwise."""
    elems = list(subgroup)
    if len(elems) ** 2 <= max_pairs:
        pairs: Iterable[tuple[GroupElem, GroupElem]] = ((u, v) for u in elems for v in elems)
    else:
        logger.warning(f"Sampling {max_pairs} pairs for multiplicativity on |H|={len(elems)}")
        rng = random.Random(seed)
        pairs = ((rng.choice(elems), rng.choice(elems)) for _ in range(max_pairs))
    for u, v in pairs:
        if chi(group.multiply(u, v)) != chi(u) * chi(v):
            raise VerificationError("linear character is multiplicative", "χ(uv) ≠ χ(u)χ(v)")


def induce(
    table: GroupTable,
    contains: Callable[[GroupElem], bool],
    chi: Callable[[GroupElem], CycInt],
    transversal: Sequence[GroupElem],
    name: str = "",
) -> ClassFunction:
    """
    Ind_H^U χ for a linear character χ of H.

    ξ(u) = (1/|H|) Σ_{g ∈ U, gug^{-1} ∈ H} χ(gug^{-1}) = Σ_{r ∈ R} χ°(r u r^{-1})
    for a right transversal R (U = ⊔ H r), since χ is constant on H-classes.
    """
    group = table.group
    p = table.p
    reps = [(r, group.invert(r)) for r in transversal]
    values = []
    for u in table.elements:
        total = CycInt.zero(p)
        for r, r_inv in reps:
            y = group.multiply(group.multiply(r, u), r_inv)
            if contains(y):
                total = total + chi(y)
        values.append(total)
    xi = ClassFunction(table, values, name)
    check(
        xi.degree() == len(transversal),
        "induced degree is the index",
        f"ξ(1)={xi.degree()} vs [U:H]={len(transversal)}",
    )
    return xi


# =========================================================
# Conjugacy classes
# =========================================================


def conjugacy_classes(table: GroupTable) -> list[list[GroupElem]]:
    """Classes by closure under conjugation by root elements; ordered by first element."""
    group = table.group
    gens = [g for _, _, g in group.generators()]
    classed: set[GroupElem] = set()
    classes = []
    for u in table.elements:
        if u in classed:
            continue
        members = {u}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = group.conjugate(g, x)
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        classed |= members
        classes.append(sorted(members, key=table.index.__getitem__))
    return classes


# =========================================================
# Character tables
# =========================================================


@dataclass
class CharacterTable:
    """Values of a list of characters on one representative per class."""

    representatives: list[GroupElem]
    class_sizes: list[int]
    values: list[list[CycInt]]  # one row per character, one column per class


def character_table(table: GroupTable, chars: Sequence[ClassFunction]) -> CharacterTable:
    """
    Tabulate `chars` over the conjugacy classes of U.

    Raises VerificationError if some character is not constant on a class.
    """
    classes = conjugacy_classes(table)
    reps = [members[0] for members in classes]
    rows = []
    for chi in chars:
        for members in classes:
            value = chi(members[0])
            check(
                all(chi(g) == value for g in members),
                "characters are constant on conjugacy classes",
                chi.name,
            )
        rows.append([chi(r) for r in reps])
    logger.debug(f"Character table of {len(rows)} characters on {len(reps)} classes")
    return CharacterTable(reps, [len(members) for members in classes], rows)
