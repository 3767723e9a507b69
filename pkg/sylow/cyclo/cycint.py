"""
Exact cyclotomic integers in Z[ζ_p].

Values are kept in the basis 1, ζ, ..., ζ^{p-2}; ζ^{p-1} is eliminated with
1 + ζ + ... + ζ^{p-1} = 0. Coordinates are Python ints, so sums over whole
groups never overflow.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sylow.core.errors import FieldError, VerificationError


@dataclass(frozen=True)
class CycInt:
    """An element of Z[ζ_p] in reduced coordinates."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.p - 1:
            raise FieldError(f"Z[ζ_{self.p}] needs {self.p - 1} coordinates, got {len(self.coords)}")

    # ---------------------------------------------------------
    # Constructors
    # ---------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "CycInt":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_int(cls, p: int, k: int) -> "CycInt":
        return cls(p, (k,) + (0,) * (p - 2))

    @classmethod
    def one(cls, p: int) -> "CycInt":
        return cls.from_int(p, 1)

    @classmethod
    def zeta(cls, p: int, t: int = 1) -> "CycInt":
        """ζ_p^t."""
        counts = [0] * p
        counts[t % p] = 1
        return cls.from_exponent_counts(p, counts)

    @classmethod
    def from_exponent_counts(cls, p: int, counts: Sequence[int]) -> "CycInt":
        """Σ_k counts[k] ζ^k for k = 0..p-1."""
        if len(counts) != p:
            raise FieldError(f"expected {p} exponent counts, got {len(counts)}")
        top = counts[p - 1]
        return cls(p, tuple(int(counts[k]) - int(top) for k in range(p - 1)))

    def exponent_counts(self) -> list[int]:
        return [*self.coords, 0]

    # ---------------------------------------------------------
    # Ring operations
    # ---------------------------------------------------------

    def _coerce(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise FieldError(f"mixed cyclotomic rings: p={self.p} and p={other.p}")
            return other
        return CycInt.from_int(self.p, other)

    def __add__(self, other: "CycInt | int") -> "CycInt":
        other = self._coerce(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other: "CycInt | int") -> "CycInt":
        return self + (-self._coerce(other))

    def __mul__(self, other: "CycInt | int") -> "CycInt":
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        p = self.p
        counts = [0] * p
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        counts[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, counts)

    __rmul__ = __mul__

    def shift(self, t: int) -> "CycInt":
        """Multiply by ζ^t."""
        p = self.p
        counts = [0] * p
        for k, a in enumerate(self.exponent_counts()):
            counts[(k + t) % p] += a
        return CycInt.from_exponent_counts(p, counts)

    def conj(self) -> "CycInt":
        """Complex conjugation ζ -> ζ^{-1}."""
        p = self.p
        counts = [0] * p
        for k, a in enumerate(self.exponent_counts()):
            counts[(-k) % p] += a
        return CycInt.from_exponent_counts(p, counts)

    # ---------------------------------------------------------
    # Queries
    # ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_part(self) -> int:
        """The value as an integer; raises if the value is not rational."""
        if not self.is_rational():
            raise VerificationError("rational value", f"{self} is not a rational integer")
        return self.coords[0]

    def to_fraction(self, denominator: int = 1) -> Fraction:
        """Exact quotient by a positive integer; the value must be rational."""
        return Fraction(self.rational_part(), denominator)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coords):
            if a:
                terms.append(f"{a}" if k == 0 else f"{a}*z^{k}")
        return " + ".join(terms) if terms else "0"


def cyc_arith(a: CycInt, b: CycInt | None, op: str) -> CycInt:
    """add, mul or conj (conj ignores b)."""
    if op == "conj":
        return a.conj()
    if b is None:
        raise FieldError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise FieldError(f"unknown cyclotomic operation {op!r}")
