"""
The Sylow p-subgroup U = G ∩ U_N(q) of a classical group and the full
unitriangular group Ũ = U_N(q).

U is parametrised by its entries on pUP: every other entry above the
diagonal follows from the recursion that expresses u^R = u^{-1}. Root
elements, pattern subgroups and unique factorisation are built on top of
that parametrisation.
"""

import itertools
import logging
import random
from collections.abc import Iterable, Iterator, Mapping, Sequence

import numpy as np

from sylow.core.config import DEFAULT_BUDGET, Budget
from sylow.core.errors import BudgetExceeded, GeometryError, MembershipError
from sylow.geometry.regions import (
    epsilon,
    in_pup,
    in_ur,
    mirror,
    pup,
    region_members,
)
from sylow.geometry.types import Family, LieType, Position
from sylow.gf.field import FieldCtx
from sylow.group.elements import GroupElem, GroupTag

logger = logging.getLogger(__name__)

Coordinates = dict[Position, int]


class ClassicalGroup:
    """
    Arithmetic in U and Ũ for a fixed type and field.

    Usage:
        G = ClassicalGroup(LieType(Family.B, 2), make_field(3))
        u = G.complete({(1, 2): 1})
        G.is_member(u)  # -> True
    """

    def __init__(self, t: LieType, ctx: FieldCtx, budget: Budget = DEFAULT_BUDGET):
        self.t = t
        self.ctx = ctx
        self.budget = budget
        self.N = t.N
        self.pup = pup(t)
        self.rpc = region_members("RPC", t) if t.has_form else ()
        self.ur = region_members("UR", t)

        N = self.N
        self._eye = np.eye(N, dtype=np.int64)
        self._eye.setflags(write=False)
        # ε as a sign mask for r_dual
        self._eps_negative = np.zeros((N, N), dtype=bool)
        if t.has_form:
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    self._eps_negative[i - 1, j - 1] = epsilon(i, j, t) == -1
        self._rpc_mask = np.zeros((N, N), dtype=bool)
        for i, j in self.rpc:
            self._rpc_mask[i - 1, j - 1] = True

    def __repr__(self) -> str:
        return f"ClassicalGroup({self.t}, q={self.ctx.q})"

    @property
    def order(self) -> int:
        """|U| = q^|pUP|."""
        return self.ctx.q ** len(self.pup)

    @property
    def tilde_order(self) -> int:
        return self.ctx.q ** len(self.ur)

    # =========================================================
    # Basic matrix arithmetic
    # =========================================================

    def identity(self, tag: GroupTag = GroupTag.SYLOW) -> GroupElem:
        return GroupElem.identity(self.N, tag)

    def elem(self, matrix: np.ndarray, tag: GroupTag = GroupTag.TILDE) -> GroupElem:
        return GroupElem.from_matrix(np.asarray(matrix, dtype=np.int64), tag)

    def _check_size(self, *elems: GroupElem) -> None:
        for g in elems:
            if g.N != self.N:
                raise MembershipError(f"dimension mismatch: {g.N} vs {self.N}")

    def multiply(self, a: GroupElem, b: GroupElem) -> GroupElem:
        self._check_size(a, b)
        tag = a.tag if a.tag == b.tag else GroupTag.TILDE
        return GroupElem.from_matrix(self.ctx.matmul(a.matrix, b.matrix), tag)

    def product(self, elems: Iterable[GroupElem]) -> GroupElem:
        result = self.identity(GroupTag.TILDE)
        tags = set()
        for g in elems:
            result = self.multiply(result, g)
            tags.add(g.tag)
        return result.retag(tags.pop()) if len(tags) == 1 else result

    def invert_matrix(self, m: np.ndarray) -> np.ndarray:
        """Inverse of a unitriangular matrix via the finite geometric series in m - 1."""
        F = self.ctx
        neg_x = F.mneg(F.msub(m, self._eye))
        term = self._eye
        acc = self._eye
        for _ in range(self.N - 1):
            term = F.matmul(term, neg_x)
            acc = F.madd(acc, term)
        return acc

    def invert(self, a: GroupElem) -> GroupElem:
        self._check_size(a)
        return GroupElem.from_matrix(self.invert_matrix(a.matrix), a.tag)

    def conjugate(self, g: GroupElem, u: GroupElem) -> GroupElem:
        """g u g^{-1}."""
        return self.multiply(self.multiply(g, u), self.invert(g)).retag(u.tag)

    # =========================================================
    # The form: R-dual and membership
    # =========================================================

    def r_dual(self, A: np.ndarray) -> np.ndarray:
        """(A^R)_{ij} = ε_{ij} A_{j̄ ī}."""
        if not self.t.has_form:
            raise GeometryError("type A carries no form")
        reflected = np.asarray(A)[::-1, ::-1].T
        return np.where(self._eps_negative, self.ctx.mneg(reflected), reflected)

    def is_member(self, g: GroupElem) -> bool:
        """u ∈ U iff (u u^R)_{rs} = 0 on RPC."""
        self._check_size(g)
        if not g.is_unitriangular():
            return False
        if not self.t.has_form:
            return True
        prod = self.ctx.matmul(g.matrix, self.r_dual(g.matrix))
        return not prod[self._rpc_mask].any()

    # =========================================================
    # Coordinates
    # =========================================================

    def complete(self, coords: Mapping[Position, int]) -> GroupElem:
        """
        The unique u ∈ U with u_{ij} = coords[(i,j)] on pUP.

        Missing positions count as zero. RPC entries are filled row by row,
        left to right, so every entry a step needs is already known.
        """
        F, N, t = self.ctx, self.N, self.t
        u = [[0] * N for _ in range(N)]
        for k in range(N):
            u[k][k] = 1
        for pos, value in coords.items():
            if not in_pup(pos, t):
                raise GeometryError(f"{pos} is not a pUP position for {t}")
            if value:
                u[pos[0] - 1][pos[1] - 1] = value

        if t.has_form:
            for r in range(1, N + 1):
                rb = mirror(r, N)
                for s in range(r + 1, N + 1):
                    if in_pup((r, s), t):
                        continue
                    sb = mirror(s, N)
                    total = 0
                    for l in range(r + 1, s):
                        term = F.mul(u[r - 1][l - 1], u[sb - 1][mirror(l, N) - 1])
                        if epsilon(l, s, t) == -1:
                            term = F.neg(term)
                        total = F.add(total, term)
                    if s == rb:
                        # CC in types B/D: 2 u_{r r̄} = -Σ
                        u[r - 1][s - 1] = F.mul(F.neg(total), F.half)
                    else:
                        first = u[sb - 1][rb - 1]
                        if epsilon(r, s, t) == -1:
                            first = F.neg(first)
                        u[r - 1][s - 1] = F.neg(F.add(first, total))
        return GroupElem.from_matrix(np.array(u, dtype=np.int64), GroupTag.SYLOW)

    def extract(self, u: GroupElem) -> Coordinates:
        """Restriction of u to pUP (zeros included)."""
        return {pos: u[pos] for pos in self.pup}

    # =========================================================
    # Root elements
    # =========================================================

    def root_element(self, pos: Position, alpha: int) -> GroupElem:
        """x_{ij}(α) for (i,j) ∈ pUP."""
        t, F, N = self.t, self.ctx, self.N
        if not in_pup(pos, t):
            raise GeometryError(f"{pos} is not a pUP position for {t}")
        i, j = pos
        m = np.eye(N, dtype=np.int64)
        m[i - 1, j - 1] = F.add(m[i - 1, j - 1], alpha)
        if t.family is Family.A:
            return GroupElem.from_matrix(m, GroupTag.SYLOW)

        ib, jb = mirror(i, N), mirror(j, N)
        if t.family is Family.C and j == ib:
            return GroupElem.from_matrix(m, GroupTag.SYLOW)
        if t.family is Family.C and j > t.n:
            m[jb - 1, ib - 1] = F.add(m[jb - 1, ib - 1], alpha)
        else:
            m[jb - 1, ib - 1] = F.sub(m[jb - 1, ib - 1], alpha)
        if t.family is Family.B and j == t.n + 1:
            m[i - 1, ib - 1] = F.neg(F.mul(F.half, F.mul(alpha, alpha)))
        return GroupElem.from_matrix(m, GroupTag.SYLOW)

    def tilde_root(self, pos: Position, alpha: int) -> GroupElem:
        """x̃_{ij}(α) = 1 + α e_{ij}."""
        i, j = pos
        if not (1 <= i < j <= self.N):
            raise GeometryError(f"tilde root needs i < j, got {pos}")
        m = np.eye(self.N, dtype=np.int64)
        m[i - 1, j - 1] = alpha
        return GroupElem.from_matrix(m, GroupTag.TILDE)

    def root_factors(self, pos: Position, alpha: int) -> list[tuple[Position, int]]:
        """
        x_{ij}(α) as a product of tilde root elements, left to right.

        The type B middle-column case factors as
        x̃_{i,n+1}(α) x̃_{n+1,ī}(-α) x̃_{iī}(½α²).
        """
        t, F, N = self.t, self.ctx, self.N
        if not in_pup(pos, t):
            raise GeometryError(f"{pos} is not a pUP position for {t}")
        i, j = pos
        if t.family is Family.A or alpha == 0:
            return [(pos, alpha)]
        ib, jb = mirror(i, N), mirror(j, N)
        if t.family is Family.C and j == ib:
            return [(pos, alpha)]
        if t.family is Family.B and j == t.n + 1:
            return [
                (pos, alpha),
                ((j, ib), F.neg(alpha)),
                ((i, ib), F.mul(F.half, F.mul(alpha, alpha))),
            ]
        mirror_coeff = alpha if (t.family is Family.C and j > t.n) else F.neg(alpha)
        return [(pos, alpha), ((jb, ib), mirror_coeff)]

    def generators(self) -> list[tuple[Position, int, GroupElem]]:
        """All root elements x_{ij}(α), (i,j) ∈ pUP, α ≠ 0."""
        return [
            (pos, alpha, self.root_element(pos, alpha))
            for pos in self.pup
            for alpha in self.ctx.nonzero()
        ]

    # =========================================================
    # Factorisation
    # =========================================================

    def _solve_levels(
        self,
        target: GroupElem,
        order: Sequence[Position],
        factor,
    ) -> list[tuple[Position, int]]:
        """
        Coefficients α with Π_{pos in order} factor(pos, α_pos) = target.

        Works level by level (level = j - i): at the lowest level where the
        running product disagrees with the target, each entry on that level
        depends on its own coefficient with slope 1 and otherwise only on
        lower levels, so it can be read off and corrected.
        """
        F = self.ctx
        coeffs = dict.fromkeys(order, 0)
        for level in sorted({j - i for i, j in order}):
            current = self.product(factor(pos, coeffs[pos]) for pos in order)
            for pos in order:
                if pos[1] - pos[0] == level:
                    coeffs[pos] = F.add(coeffs[pos], F.sub(target[pos], current[pos]))
        rebuilt = self.product(factor(pos, coeffs[pos]) for pos in order)
        if rebuilt != target:
            raise MembershipError("element is not a product over the given positions")
        return [(pos, coeffs[pos]) for pos in order]

    def factorize(
        self, u: GroupElem, order: Sequence[Position] | None = None
    ) -> list[tuple[Position, int]]:
        """Unique α with u = Π x_{ij}(α_{ij}) in the given order of pUP (or of J for u ∈ U_J)."""
        order = list(self.pup if order is None else order)
        outside = [pos for pos in order if not in_pup(pos, self.t)]
        if outside:
            raise GeometryError(f"positions {outside} are not in pUP")
        return self._solve_levels(u, order, self.root_element)

    def factorize_tilde(
        self, x: GroupElem, order: Sequence[Position] | None = None
    ) -> list[tuple[Position, int]]:
        """Unique α with x = Π x̃_{ij}(α_{ij}) in the given order of UR."""
        order = list(self.ur if order is None else order)
        return self._solve_levels(x, order, self.tilde_root)

    def factor_tilde(self, x: GroupElem) -> tuple[GroupElem, GroupElem]:
        """x = x̃ z with x̃ ∈ Ũ_pUP and z ∈ Ũ_J, J = UR ∖ pUP."""
        order = list(self.pup) + [pos for pos in self.ur if not in_pup(pos, self.t)]
        coeffs = self.factorize_tilde(x, order)
        k = len(self.pup)
        x_tilde = self.product(self.tilde_root(pos, a) for pos, a in coeffs[:k])
        z = self.product(self.tilde_root(pos, a) for pos, a in coeffs[k:])
        return x_tilde.retag(GroupTag.TILDE_PATTERN), z.retag(GroupTag.TILDE_PATTERN)

    # =========================================================
    # Pattern subgroups
    # =========================================================

    def in_pattern(self, u: GroupElem, J: Iterable[Position]) -> bool:
        """u ∈ U_J: u ∈ U with pUP entries supported on J."""
        J = set(J)
        return all(u[pos] == 0 for pos in self.pup if pos not in J)

    def in_tilde_pattern(self, u: GroupElem, J: Iterable[Position]) -> bool:
        """u ∈ Ũ_J: entries above the diagonal supported on J."""
        J = set(J)
        return all(pos in J for pos in u.support())

    # =========================================================
    # Enumeration
    # =========================================================

    def _guard(self, what: str, size: int) -> None:
        if size > self.budget.max_group_size:
            raise BudgetExceeded(what, size, self.budget.max_group_size)

    def elements(self) -> Iterator[GroupElem]:
        """All of U, lexicographic over pUP coordinates."""
        yield from self.pattern_elements(self.pup)

    def pattern_elements(self, J: Iterable[Position]) -> Iterator[GroupElem]:
        """All of U_J for a closed J ⊆ pUP, lexicographic over coordinates on J."""
        wanted = set(J)
        positions = [pos for pos in self.pup if pos in wanted]
        self._guard(f"U_J with |J|={len(positions)}", self.ctx.q ** len(positions))
        tag = GroupTag.SYLOW if len(positions) == len(self.pup) else GroupTag.PATTERN
        for values in itertools.product(self.ctx.elements(), repeat=len(positions)):
            yield self.complete(dict(zip(positions, values))).retag(tag)

    def tilde_elements(self, J: Iterable[Position] | None = None) -> Iterator[GroupElem]:
        """All of Ũ (or of Ũ_J), lexicographic over coordinates."""
        wanted = set(self.ur if J is None else J)
        positions = [pos for pos in self.ur if pos in wanted]
        self._guard(f"Ũ_J with |J|={len(positions)}", self.ctx.q ** len(positions))
        tag = GroupTag.TILDE if J is None else GroupTag.TILDE_PATTERN
        for values in itertools.product(self.ctx.elements(), repeat=len(positions)):
            m = np.eye(self.N, dtype=np.int64)
            for (i, j), v in zip(positions, values):
                m[i - 1, j - 1] = v
            yield GroupElem.from_matrix(m, tag)

    def random_element(self, rng: random.Random) -> GroupElem:
        return self.complete({pos: rng.randrange(self.ctx.q) for pos in self.pup})

    def random_tilde_element(self, rng: random.Random) -> GroupElem:
        m = np.eye(self.N, dtype=np.int64)
        for i, j in self.ur:
            m[i - 1, j - 1] = rng.randrange(self.ctx.q)
        return GroupElem.from_matrix(m, GroupTag.TILDE)


def enumerate_group(
    group: ClassicalGroup, which: str | Iterable[Position] = "U"
) -> Iterator[GroupElem]:
    """Enumerate U ("U"), Ũ ("tilde") or the pattern subgroup U_J (J given as positions)."""
    if which == "U":
        return group.elements()
    if which == "tilde":
        return group.tilde_elements()
    if isinstance(which, str):
        raise GeometryError(f"unknown group selector {which!r}")
    J = list(which)
    if all(in_pup(pos, group.t) for pos in J):
        return group.pattern_elements(J)
    if all(in_ur(pos, group.t) for pos in J):
        return group.tilde_elements(J)
    raise GeometryError(f"positions {J} do not index a pattern subgroup")
