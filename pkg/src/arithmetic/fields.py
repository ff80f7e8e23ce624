from dataclasses import dataclass
from functools import cached_property
from math import isqrt
from typing import Literal, Tuple

from src.arithmetic.discriminants import is_fundamental_discriminant
from src.exceptions import InvalidParameterError
from src.utilities.messages import invalid_discriminant_message


@dataclass(frozen=True)
class QuadraticField:
    """
    Q(sqrt(-D)) with -D fundamental, D > 4, D odd or 8 | D.

    The ring of integers has basis {1, omega} with omega = (1 + sqrt(-D))/2
    for D odd and omega = sqrt(-D)/2 for 8 | D; omega^2 = trace*omega - norm.
    """

    D: int

    def __post_init__(self):
        if self.D <= 4 or not is_fundamental_discriminant(-self.D):
            raise InvalidParameterError(invalid_discriminant_message.format(value=-self.D))
        if self.D % 2 == 0 and self.D % 8 != 0:
            raise InvalidParameterError(invalid_discriminant_message.format(value=-self.D))

    @property
    def parity_class(self) -> Literal["odd", "div8"]:
        return "odd" if self.D % 2 else "div8"

    @property
    def omega_kind(self) -> str:
        return "(1+sqrt(-D))/2" if self.D % 2 else "sqrt(-D)/2"

    @property
    def omega_trace(self) -> int:
        return 1 if self.D % 2 else 0

    @property
    def omega_norm(self) -> int:
        return (1 + self.D) // 4 if self.D % 2 else self.D // 4

    @property
    def D_star(self) -> int:
        return self.D if self.D % 2 else 2 * self.D

    @cached_property
    def h(self) -> int:
        from src.arithmetic.forms import class_number

        return class_number(self)

    # coordinates: (u, v) means (u + v sqrt(-D))/2, (x, y) means x + y omega

    def to_basis(self, u: int, v: int) -> Tuple[int, int]:
        if self.D % 2:
            return (u - v) // 2, v
        return u // 2, v

    def from_basis(self, x: int, y: int) -> Tuple[int, int]:
        if self.D % 2:
            return 2 * x + y, y
        return 2 * x, y

    def mul_basis(self, p: Tuple[int, int], q: Tuple[int, int]) -> Tuple[int, int]:
        x1, y1 = p
        x2, y2 = q
        yy = y1 * y2
        return x1 * x2 - self.omega_norm * yy, x1 * y2 + x2 * y1 + self.omega_trace * yy

    def norm_basis(self, x: int, y: int) -> int:
        return x * x + self.omega_trace * x * y + self.omega_norm * y * y

    def is_integral(self, u: int, v: int) -> bool:
        return (u * u + self.D * v * v) % 4 == 0


@dataclass(frozen=True, order=True)
class LatticePoint:
    """alpha = (u + v sqrt(-D))/2 with 4 | u^2 + D v^2."""

    u: int
    v: int
    D: int

    def __post_init__(self):
        if (self.u * self.u + self.D * self.v * self.v) % 4:
            raise InvalidParameterError(f"({self.u}, {self.v}) is not an algebraic integer for D={self.D}")

    @property
    def norm(self) -> int:
        return (self.u * self.u + self.D * self.v * self.v) // 4

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def conjugate(self) -> "LatticePoint":
        return LatticePoint(self.u, -self.v, self.D)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.u, -self.v, self.D)

    def power(self, e: int) -> Tuple[int, int, int]:
        """alpha^e as (U, V, 2^e) with alpha^e = (U + V sqrt(-D)) / 2^e, exact."""
        U, V = 1, 0
        for _ in range(e):
            U, V = U * self.u - self.D * V * self.v, U * self.v + V * self.u
        return U, V, 2**e

    def __complex__(self) -> complex:
        return complex(self.u / 2, self.v * self.D**0.5 / 2)


def rational_point(n: int, D: int) -> LatticePoint:
    return LatticePoint(2 * n, 0, D)


def isqrt_floor(x: float) -> int:
    return isqrt(int(x)) if x >= 0 else -1
