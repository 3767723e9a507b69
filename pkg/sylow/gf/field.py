"""
Finite field F_q, q = p^e with p an odd prime.

Elements are encoded as integers 0..q-1 whose base-p digits are the
coefficients of the polynomial-basis representation (lowest degree first).
All arithmetic goes through lookup tables built once per field, so
matrices over F_q are plain integer numpy arrays and matrix arithmetic is
table indexing.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cache

import numpy as np
from sympy import Poly, isprime, symbols

from sylow.core.errors import FieldError

logger = logging.getLogger(__name__)

OPS = ("add", "sub", "mul", "div", "neg", "inv")

_X = symbols("x")


# =========================================================
# Polynomials over Z_p (coefficient lists, lowest degree first)
# =========================================================


def _poly(coeffs: list[int], p: int) -> Poly:
    return Poly.from_list(list(coeffs)[::-1] or [0], _X, modulus=p)


def _coeffs(poly: Poly, p: int) -> list[int]:
    return [int(c) % p for c in reversed(poly.all_coeffs())]


def _monic_polys(degree: int, p: int):
    """Monic polynomials of the given degree in lexicographic coefficient order."""
    for low in itertools.product(range(p), repeat=degree):
        yield [*low, 1]


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Irreducibility over Z_p of the polynomial with the given coefficients."""
    if len(modulus) < 2:
        return False
    return bool(Poly.from_list(modulus[::-1], _X, modulus=p).is_irreducible)


def find_modulus(p: int, e: int) -> list[int]:
    """First monic irreducible polynomial of degree e in lexicographic order."""
    if e == 1:
        return [0, 1]
    for candidate in _monic_polys(e, p):
        if is_irreducible(candidate, p):
            return candidate
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")  # unreachable


# =========================================================
# Field context
# =========================================================


class FieldCtx:
    """
    The field F_q with precomputed operation tables.

    Immutable after construction. Element enumeration order is 0, 1, ..., q-1,
    i.e. lexicographic on coefficient vectors read from the top degree down.

    Usage:
        F = make_field(3, 2)
        F.mul(F.inv(5), 5)  # -> 1
    """

    def __init__(self, p: int, e: int = 1):
        if p == 2:
            raise FieldError("even characteristic unsupported")
        if p < 2 or not isprime(p):
            raise FieldError(f"p must be an odd prime, got {p}")
        if e < 1:
            raise FieldError(f"extension degree must be at least 1, got {e}")

        self.p = p
        self.e = e
        self.q = p**e
        self.modulus: tuple[int, ...] = tuple(find_modulus(p, e))

        q = self.q
        coeffs = [self.to_coeffs(a) for a in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        polys = [_poly(c, p) for c in coeffs]
        m = _poly(list(self.modulus), p)
        for a in range(q):
            for b in range(a, q):
                add[a, b] = add[b, a] = self.from_coeffs(
                    [(x + y) % p for x, y in zip(coeffs[a], coeffs[b])]
                )
                mul[a, b] = mul[b, a] = self.from_coeffs(_coeffs((polys[a] * polys[b]).rem(m), p))
        self.add_table = add
        self.mul_table = mul
        self.neg_table = np.array([int(np.flatnonzero(add[a] == 0)[0]) for a in range(q)])
        self.inv_table = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv_table[a] = int(np.flatnonzero(mul[a] == 1)[0])
        self.trace_table = np.array([self._trace_slow(a) for a in range(q)], dtype=np.int64)
        for table in (
            self.add_table,
            self.mul_table,
            self.neg_table,
            self.inv_table,
            self.trace_table,
        ):
            table.setflags(write=False)

        self.zero = 0
        self.one = 1
        self.half = int(self.inv_table[2])
        logger.debug(f"Built F_{q} with modulus {self.modulus}")

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, e={self.e})"

    # ---------------------------------------------------------
    # Encoding
    # ---------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        """Coefficient vector of a, lowest degree first, length e."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs: list[int]) -> int:
        value = 0
        for c in reversed(list(coeffs)[: self.e] + [0] * (self.e - len(coeffs))):
            value = value * self.p + c % self.p
        return value

    def from_int(self, k: int) -> int:
        """Image of the integer k in the prime subfield."""
        return k % self.p

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def element(self, a: int) -> "FieldElem":
        self._check(a)
        return FieldElem(self, a)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of F_{self.q}")

    # ---------------------------------------------------------
    # Scalar arithmetic
    # ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        result = 1
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace Tr(a) in Z_p; the additive character is ζ_p^Tr(a)."""
        return int(self.trace_table[a])

    def _trace_slow(self, a: int) -> int:
        total, power = 0, a
        for _ in range(self.e):
            total = self.add(total, power)
            power = self.frobenius(power)
        if total >= self.p:
            raise FieldError(f"trace of {a} left the prime field")
        return total

    # ---------------------------------------------------------
    # Matrix arithmetic (integer arrays of encoded elements)
    # ---------------------------------------------------------

    def madd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_table[a, b]

    def mneg(self, a: np.ndarray) -> np.ndarray:
        return self.neg_table[a]

    def msub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_table[a, self.neg_table[b]]

    def mscale(self, alpha: int, a: np.ndarray) -> np.ndarray:
        return self.mul_table[alpha, a]

    def mtrace(self, a: np.ndarray) -> np.ndarray:
        return self.trace_table[a]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product over F_q."""
        if a.shape[1] != b.shape[0]:
            raise FieldError(f"shape mismatch {a.shape} x {b.shape}")
        if self.e == 1:
            return (a @ b) % self.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = self.add_table[out, self.mul_table[a[:, k, None], b[None, k, :]]]
        return out

    def dot(self, a: np.ndarray, b: np.ndarray) -> int:
        """Sum of entrywise products of two equally shaped arrays."""
        if self.e == 1:
            return int((a * b).sum() % self.p)
        total = 0
        for x in self.mul_table[a, b].ravel():
            total = int(self.add_table[total, x])
        return total


@cache
def make_field(p: int, e: int = 1) -> FieldCtx:
    """Build (or reuse) the field F_{p^e}."""
    return FieldCtx(p, e)


# =========================================================
# Element wrapper
# =========================================================


@dataclass(frozen=True)
class FieldElem:
    """An element of F_q bound to its context, with operator overloads."""

    ctx: FieldCtx
    value: int

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.to_coeffs(self.value)

    def _other(self, other: "FieldElem | int") -> int:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise FieldError("operands belong to different fields")
            return other.value
        return self.ctx.from_int(other)

    def __add__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.add(self.value, self._other(other)))

    def __sub__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __mul__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.mul(self.value, self._other(other)))

    def __truediv__(self, other: "FieldElem | int") -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.div(self.value, self._other(other)))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, k: int) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.pow(self.value, k))

    def __rsub__(self, other: int) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.sub(self._other(other), self.value))

    def __rtruediv__(self, other: int) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.div(self._other(other), self.value))

    __radd__ = __add__
    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def trace(self) -> int:
        return self.ctx.trace(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElem({self.value} in F_{self.ctx.q})"


def arith(a: FieldElem, b: FieldElem | None, op: str) -> FieldElem:
    """Apply one of add/sub/mul/div/neg/inv; unary ops ignore b."""
    if op not in OPS:
        raise FieldError(f"unknown field operation {op!r}")
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise FieldError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def render(ctx: FieldCtx, a: int) -> str:
    """JSON rendering as the comma-joined coefficient vector, lowest degree first."""
    return ",".join(str(c) for c in ctx.to_coeffs(a))
