"""
Group elements: upper unitriangular matrices over F_q.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from sylow.geometry.types import Position


class GroupTag(Enum):
    """Which group an element was produced as a member of."""

    TILDE = "Ũ"
    SYLOW = "U"
    PATTERN = "U_J"
    TILDE_PATTERN = "Ũ_J"


@dataclass(frozen=True)
class GroupElem:
    """
    An N×N unitriangular matrix, stored row-major as encoded field elements.

    Equality and hashing use the matrix only; the tag records provenance.
    """

    N: int
    entries: tuple[int, ...]
    tag: GroupTag = field(default=GroupTag.TILDE, compare=False)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, tag: GroupTag = GroupTag.TILDE) -> "GroupElem":
        return cls(matrix.shape[0], tuple(matrix.ravel().tolist()), tag)

    @classmethod
    def identity(cls, N: int, tag: GroupTag = GroupTag.TILDE) -> "GroupElem":
        return cls.from_matrix(np.eye(N, dtype=np.int64), tag)

    @cached_property
    def matrix(self) -> np.ndarray:
        m = np.array(self.entries, dtype=np.int64).reshape(self.N, self.N)
        m.setflags(write=False)
        return m

    def __getitem__(self, pos: Position) -> int:
        i, j = pos
        return self.entries[(i - 1) * self.N + (j - 1)]

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(self.N, dtype=np.int64)))

    def is_unitriangular(self) -> bool:
        m = self.matrix
        return bool(np.all(np.diag(m) == 1) and not np.tril(m, -1).any())

    def support(self) -> list[Position]:
        """Positions of nonzero entries strictly above the diagonal."""
        m = np.triu(self.matrix, 1)
        return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(m))]

    def retag(self, tag: GroupTag) -> "GroupElem":
        return GroupElem(self.N, self.entries, tag)
