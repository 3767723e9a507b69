"""
The U-actions on the character space V̂.

The action on V: A.u = π(A u), with f = π a 1-cocycle for it.
Right action on V̂: [A].u = [π(A u^{-t})], monomial with coefficient
θ(κ(-A, f(u^{-1}))), where f = π is the projection onto pUP and
θ(x) = ζ_p^{Tr x}. Left action of Ũ: u.[A] = [π(u^{-t} A)], plus the left
regular action λ_x of U transported to ℂV̂.

Root elements act by restricted column (right) and row (left) operations;
these fast paths are what orbit enumeration uses.
"""

import logging
from collections.abc import Iterable
from itertools import product

import numpy as np

from sylow.characters.linchar import CharCombination, LinChar
from sylow.core.errors import BudgetExceeded, PreconditionError
from sylow.cyclo.cycint import CycInt
from sylow.geometry.regions import in_pkl, in_pup, region_members
from sylow.geometry.types import Position
from sylow.gf.field import FieldCtx
from sylow.group.elements import GroupElem
from sylow.group.group import ClassicalGroup

logger = logging.getLogger(__name__)


def kappa(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> int:
    """κ(A, B) = tr(A^t B) = Σ A_{ij} B_{ij}."""
    if A.shape != B.shape:
        raise PreconditionError(f"dimension mismatch {A.shape} vs {B.shape}")
    return ctx.dot(A, B)


class CharacterSpace:
    """
    V̂ for a fixed group, with every action of U and Ũ on it.

    Usage:
        space = CharacterSpace(group)
        exponent, b = space.monomial_right(LinChar.unit((1, 4)), u)
    """

    def __init__(self, group: ClassicalGroup):
        self.group = group
        self.ctx = group.ctx
        self.t = group.t
        self.N = group.N
        self.pup = group.pup
        self._pup_set = frozenset(self.pup)
        self._pup_mask = np.zeros((self.N, self.N), dtype=bool)
        for i, j in self.pup:
            self._pup_mask[i - 1, j - 1] = True

    @property
    def size(self) -> int:
        """|V̂| = q^|pUP|."""
        return self.ctx.q ** len(self.pup)

    # =========================================================
    # Projection and the cocycle
    # =========================================================

    def project(self, m: np.ndarray) -> np.ndarray:
        """π: zero every entry outside pUP."""
        return np.where(self._pup_mask, m, 0)

    def to_linchar(self, m: np.ndarray) -> LinChar:
        return LinChar.from_matrix(m, self.pup)

    def cocycle_f(self, u: GroupElem) -> LinChar:
        """f(u) = π(u), a right 1-cocycle for `act`: f(uv) = f(u).v + f(v)."""
        return self.to_linchar(u.matrix)

    def act(self, a: LinChar, u: GroupElem) -> LinChar:
        """A.u = π(A u), the right action of Ũ on V itself (not on V̂)."""
        return self.to_linchar(self.ctx.matmul(a.to_matrix(self.N), u.matrix))

    def add(self, a: LinChar, b: LinChar) -> LinChar:
        """Sum in V."""
        mapping = dict(a.mapping)
        for pos, v in b.mapping.items():
            mapping[pos] = self.ctx.add(mapping.get(pos, 0), v)
        return LinChar.from_dict(mapping)

    def characters(self) -> Iterable[LinChar]:
        """All of V̂ in lexicographic coordinate order."""
        for values in product(self.ctx.elements(), repeat=len(self.pup)):
            yield LinChar.from_dict(dict(zip(self.pup, values)))

    # =========================================================
    # Right action
    # =========================================================

    def _inverse_transpose(self, u: GroupElem) -> np.ndarray:
        return self.group.invert_matrix(u.matrix).T

    def dot_right(self, a: LinChar, u: GroupElem) -> LinChar:
        """[A].u = [π(A u^{-t})]."""
        A = a.to_matrix(self.N)
        return self.to_linchar(self.ctx.matmul(A, self._inverse_transpose(u)))

    def exponent_right(self, a: LinChar, u: GroupElem) -> int:
        """t with coefficient ζ^t: t = Tr κ(-A, f(u^{-1}))."""
        u_inv = self.group.invert_matrix(u.matrix)
        value = 0
        for i, j, v in a.entries:
            value = self.ctx.add(value, self.ctx.mul(v, int(u_inv[i - 1, j - 1])))
        return self.ctx.trace(self.ctx.neg(value))

    def monomial_right(self, a: LinChar, u: GroupElem) -> tuple[int, LinChar]:
        """[A]u = ζ^t [A].u."""
        return self.exponent_right(a, u), self.dot_right(a, u)

    def column_op(self, a: LinChar, pos: Position, alpha: int) -> LinChar:
        """[A].x̃_{ij}(α): add -α times column j to column i, truncated to pUP."""
        i, j = pos
        if alpha == 0:
            return a
        F = self.ctx
        mapping = dict(a.mapping)
        for (r, c), v in a.mapping.items():
            if c == j and (r, i) in self._pup_set:
                mapping[(r, i)] = F.sub(mapping.get((r, i), 0), F.mul(alpha, v))
        return LinChar.from_dict(mapping)

    def root_action(self, a: LinChar, pos: Position, alpha: int) -> LinChar:
        """[A].x_{ij}(α) as successive column operations of the tilde factors."""
        for factor_pos, coeff in self.group.root_factors(pos, alpha):
            a = self.column_op(a, factor_pos, coeff)
        return a

    def root_exponent(self, a: LinChar, pos: Position, alpha: int) -> int:
        """Coefficient exponent of a root element in pUP: Tr(α A_{ij})."""
        return self.ctx.trace(self.ctx.mul(alpha, a[pos]))

    # =========================================================
    # Left actions
    # =========================================================

    def dot_left(self, u: GroupElem, a: LinChar) -> LinChar:
        """u.[A] = [π(u^{-t} A)]."""
        A = a.to_matrix(self.N)
        return self.to_linchar(self.ctx.matmul(self._inverse_transpose(u), A))

    def row_op(self, pos: Position, alpha: int, a: LinChar) -> LinChar:
        """x̃_{ij}(α).[A]: add -α times row i to row j, truncated to pUP."""
        i, j = pos
        if alpha == 0:
            return a
        F = self.ctx
        mapping = dict(a.mapping)
        for (r, c), v in a.mapping.items():
            if r == i and (j, c) in self._pup_set:
                mapping[(j, c)] = F.sub(mapping.get((j, c), 0), F.mul(alpha, v))
        return LinChar.from_dict(mapping)

    def lambda_left_general(self, x: GroupElem, a: LinChar) -> CharCombination:
        """
        λ_x[A] = Σ_u θκ(-x^{-t}A, u) π(u), rewritten in the basis V̂.

        The point v ∈ V equals (1/|V|) Σ_C θκ(C, v) [C], so the coefficient of
        [C] is (1/|V|) Σ_u θ(κ(-x^{-t}A, u) + κ(C, π(u))). Brute force over U
        and V̂.
        """
        size = self.group.order
        limit = self.group.budget.max_group_size
        if size * self.size > limit:
            raise BudgetExceeded("left translate over U × V̂", size * self.size, limit)
        F, p = self.ctx, self.ctx.p
        M = F.mneg(F.matmul(self._inverse_transpose(x), a.to_matrix(self.N)))

        # exponent of θκ(-x^{-t}A, u) and the pUP coordinates of u
        points = []
        for u in self.group.elements():
            points.append((F.trace(F.dot(M, u.matrix)), [u[pos] for pos in self.pup]))

        terms = {}
        for c in self.characters():
            c_vals = [c[pos] for pos in self.pup]
            counts = [0] * p
            for base, coords in points:
                value = 0
                for cv, uv in zip(c_vals, coords):
                    if cv and uv:
                        value = F.add(value, F.mul(cv, uv))
                counts[(base + F.trace(value)) % p] += 1
            coeff = CycInt.from_exponent_counts(p, counts)
            if not coeff.is_zero():
                terms[c] = coeff
        return CharCombination.build(terms, self.size)

    def lambda_left_fast(self, x: GroupElem, a: LinChar) -> tuple[int, LinChar]:
        """λ_x[B] = θκ(-B, x^{-1}) [π(x^{-t}B)], valid when supp(x^{-t}B) ⊆ pKL."""
        F = self.ctx
        x_inv = self.group.invert_matrix(x.matrix)
        M = F.matmul(x_inv.T, a.to_matrix(self.N))
        for r, c in zip(*np.nonzero(M)):
            if not in_pkl((int(r) + 1, int(c) + 1), self.t):
                raise PreconditionError("support leaves pKL")
        exponent = F.trace(F.neg(F.dot(a.to_matrix(self.N), x_inv)))
        return exponent, self.to_linchar(M)

    # =========================================================
    # Group-algebra vectors
    # =========================================================

    def f_star(self, a: LinChar) -> dict[GroupElem, CycInt]:
        """f*[A] = Σ_u θκ(-A, u) u, as its coefficient map on U."""
        F, p = self.ctx, self.ctx.p
        A = a.to_matrix(self.N)
        return {
            u: CycInt.zeta(p, F.trace(F.neg(F.dot(A, u.matrix)))) for u in self.group.elements()
        }

    def monomial_matrix(
        self, u: GroupElem, basis: list[LinChar]
    ) -> list[tuple[int, int]]:
        """Column k of the monomial matrix of u on span(basis): (row index, exponent)."""
        index = {b: k for k, b in enumerate(basis)}
        out = []
        for b in basis:
            exponent, image = self.monomial_right(b, u)
            if image not in index:
                raise PreconditionError("basis is not closed under the action")
            out.append((index[image], exponent))
        return out

    def module_trace(self, u: GroupElem) -> CycInt:
        """Trace of u ∈ Ũ on ℂV̂: Σ θ-coefficients over the [A] with [A].u = [A]."""
        p = self.ctx.p
        counts = [0] * p
        for a in self.characters():
            exponent, image = self.monomial_right(a, u)
            if image == a:
                counts[exponent] += 1
        return CycInt.from_exponent_counts(p, counts)

    def fixed_cosets(self, u: GroupElem) -> int:
        """
        Number of cosets of Ũ_J (J = UR ∖ pUP) fixed by u, the value at u of
        the permutation character of Ũ on Ũ/Ũ_J.
        """
        J = rpc_positions(self)
        hits = 0
        for g in self.group.tilde_elements():
            conj = self.group.multiply(self.group.multiply(self.group.invert(g), u), g)
            if self.group.in_tilde_pattern(conj, J):
                hits += 1
        return hits // (self.ctx.q ** len(J))


def rpc_positions(space: CharacterSpace) -> tuple[Position, ...]:
    """UR ∖ pUP, the positions indexing Ũ_J."""
    return tuple(pos for pos in region_members("UR", space.t) if not in_pup(pos, space.t))
