"""
Linear characters [A] of (V, +) and formal combinations of them.

[A] is the character χ_{-A}: evaluated at B it is θ(κ(-A, B)). The same
sparse matrix type doubles as an element of V itself.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from sylow.core.errors import GeometryError
from sylow.cyclo.cycint import CycInt
from sylow.geometry.types import Position
from sylow.gf.field import FieldCtx, render


@dataclass(frozen=True)
class LinChar:
    """
    A matrix supported on pUP, as a row-major tuple of (i, j, value) with
    value nonzero. Structural equality is matrix equality.
    """

    entries: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_dict(cls, mapping: Mapping[Position, int]) -> "LinChar":
        return cls(tuple((i, j, v) for (i, j), v in sorted(mapping.items()) if v))

    @classmethod
    def from_matrix(cls, m: np.ndarray, positions: Iterable[Position]) -> "LinChar":
        """Truncate a dense matrix to the given positions."""
        return cls(tuple((i, j, int(m[i - 1, j - 1])) for i, j in sorted(positions) if m[i - 1, j - 1]))

    @classmethod
    def unit(cls, pos: Position, value: int = 1) -> "LinChar":
        return cls(((pos[0], pos[1], value),) if value else ())

    @cached_property
    def mapping(self) -> dict[Position, int]:
        return {(i, j): v for i, j, v in self.entries}

    def __getitem__(self, pos: Position) -> int:
        return self.mapping.get(pos, 0)

    def __len__(self) -> int:
        return len(self.entries)

    def support(self) -> list[Position]:
        return [(i, j) for i, j, _ in self.entries]

    def is_zero(self) -> bool:
        return not self.entries

    def to_matrix(self, N: int) -> np.ndarray:
        m = np.zeros((N, N), dtype=np.int64)
        for i, j, v in self.entries:
            if not (1 <= i <= N and 1 <= j <= N):
                raise GeometryError(f"entry ({i},{j}) outside a {N}x{N} matrix")
            m[i - 1, j - 1] = v
        return m

    def restrict(self, positions: Iterable[Position]) -> "LinChar":
        keep = set(positions)
        return LinChar(tuple(e for e in self.entries if (e[0], e[1]) in keep))

    def replace(self, pos: Position, value: int) -> "LinChar":
        mapping = dict(self.mapping)
        mapping[pos] = value
        return LinChar.from_dict(mapping)

    def sort_key(self, positions: Iterable[Position]) -> tuple[int, ...]:
        """Canonical order: values over the given positions, row-major."""
        return tuple(self.mapping.get(pos, 0) for pos in positions)

    def to_json(self, ctx: FieldCtx) -> dict:
        return {"entries": [[i, j, render(ctx, v)] for i, j, v in self.entries]}

    def __str__(self) -> str:
        if not self.entries:
            return "[0]"
        return "[" + " + ".join(f"{v}e{i},{j}" for i, j, v in self.entries) + "]"


@dataclass(frozen=True)
class CharCombination:
    """
    An element Σ c_C [C] of ℂV̂ with coefficients c_C = numerator_C / denominator,
    numerators in Z[ζ_p]. Zero coefficients are never stored; the common
    denominator is reduced against all numerator coordinates.
    """

    terms: tuple[tuple[LinChar, CycInt], ...]
    denominator: int = 1

    @classmethod
    def build(cls, terms: Mapping[LinChar, CycInt], denominator: int = 1) -> "CharCombination":
        kept = {a: c for a, c in terms.items() if not c.is_zero()}
        common = denominator
        for c in kept.values():
            for coord in c.coords:
                common = gcd(common, coord)
        common = abs(common) or 1
        reduced = {a: CycInt(c.p, tuple(x // common for x in c.coords)) for a, c in kept.items()}
        return cls(tuple(sorted(reduced.items(), key=lambda kv: kv[0].entries)), denominator // common)

    @classmethod
    def single(cls, a: LinChar, p: int, exponent: int = 0) -> "CharCombination":
        return cls(((a, CycInt.zeta(p, exponent)),), 1)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, a: LinChar) -> tuple[CycInt | None, int]:
        for b, c in self.terms:
            if b == a:
                return c, self.denominator
        return None, self.denominator
