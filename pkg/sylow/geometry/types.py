"""
Lie types and positions.
"""

from dataclasses import dataclass
from enum import Enum

from sylow.core.errors import GeometryError

Position = tuple[int, int]


class Family(Enum):
    """Untwisted classical families (A is the full unitriangular group)."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"


@dataclass(frozen=True)
class LieType:
    """
    A classical type of rank n with its matrix size N and half-size ñ.

    B_n: N = 2n+1, ñ = n+1. C_n, D_n: N = 2n, ñ = n. A_n: N = n+1 and
    every position counts as left of the middle (ñ = N).
    """

    family: Family
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, "family", Family(str(self.family).upper()))
            except ValueError as exc:
                raise GeometryError(f"unknown family {self.family!r}") from exc
        if self.n < 1:
            raise GeometryError(f"rank must be at least 1, got {self.n}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse names like 'B2' or 'C_3'."""
        text = text.replace("_", "").strip()
        try:
            return cls(Family(text[0].upper()), int(text[1:]))
        except (ValueError, IndexError) as exc:
            raise GeometryError(f"cannot parse Lie type {text!r}") from exc

    @property
    def N(self) -> int:
        if self.family is Family.B:
            return 2 * self.n + 1
        if self.family is Family.A:
            return self.n + 1
        return 2 * self.n

    @property
    def ntilde(self) -> int:
        if self.family is Family.B:
            return self.n + 1
        if self.family is Family.A:
            return self.N
        return self.n

    @property
    def has_form(self) -> bool:
        return self.family is not Family.A

    def __str__(self) -> str:
        return f"{self.family.value}_{self.n}"
