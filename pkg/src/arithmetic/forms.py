from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import List, Union

from src.arithmetic.fields import QuadraticField


@dataclass(frozen=True)
class BinaryQuadraticForm:
    a: int
    b: int
    c: int

    def __repr__(self):
        return f"{self.a}x^2 + {self.b}xy + {self.c}y^2"

    def discriminant(self) -> int:
        return self.b**2 - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        if abs(b) == a or a == c:
            return b >= 0
        return True


@lru_cache(maxsize=1024)
def reduced_forms(D: int) -> List[BinaryQuadraticForm]:
    """Reduced positive definite forms of discriminant -D, using a <= sqrt(D/3)."""
    forms = []
    for a in range(1, isqrt(D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b + D
            if num % (4 * a):
                continue
            form = BinaryQuadraticForm(a, b, num // (4 * a))
            if form.is_reduced():
                forms.append(form)
    return forms


def class_number(field: Union[QuadraticField, int]) -> int:
    D = field.D if isinstance(field, QuadraticField) else field
    return len(reduced_forms(D))
