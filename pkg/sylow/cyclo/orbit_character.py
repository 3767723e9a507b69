"""
Characters of orbit modules ℂO ⊆ ℂV̂.
"""

from collections.abc import Iterable

from sylow.characters.actions import CharacterSpace
from sylow.characters.linchar import LinChar
from sylow.core.errors import BudgetExceeded
from sylow.cyclo.class_functions import ClassFunction, GroupTable
from sylow.cyclo.cycint import CycInt


def orbit_character(
    space: CharacterSpace, table: GroupTable, members: Iterable[LinChar], name: str = ""
) -> ClassFunction:
    """
    χ_O(u) = Σ_{[B] ∈ O, [B].u = [B]} ζ^{Tr κ(-B, f(u^{-1}))}.

    Only the diagonal of the monomial matrix contributes to the trace.
    """
    members = list(members)
    work = len(members) * len(table)
    limit = space.group.budget.max_group_size
    if work > limit:
        raise BudgetExceeded("orbit character evaluations", work, limit)

    F, p, N = space.ctx, table.p, space.N
    dense = [(b, b.to_matrix(N)) for b in members]
    values = []
    for u, u_inv in zip(table.elements, table.inverses):
        inv_t = u_inv.matrix.T
        counts = [0] * p
        for b, B in dense:
            if space.to_linchar(F.matmul(B, inv_t)) != b:
                continue
            value = 0
            for i, j, v in b.entries:
                value = F.add(value, F.mul(v, u_inv[(i, j)]))
            counts[F.trace(F.neg(value))] += 1
        values.append(CycInt.from_exponent_counts(p, counts))
    return ClassFunction(table, values, name)


def monomial_trace(space: CharacterSpace, basis: list[LinChar], u) -> CycInt:
    """Trace of the explicit monomial matrix of u on span(basis)."""
    p = space.ctx.p
    counts = [0] * p
    for k, (row, exponent) in enumerate(space.monomial_matrix(u, basis)):
        if row == k:
            counts[exponent] += 1
    return CycInt.from_exponent_counts(p, counts)
