"""
Fundamental discriminants and the Kronecker symbol.
"""
from functools import lru_cache
from math import gcd

from sympy import factorint
from sympy.ntheory import jacobi_symbol


@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def is_fundamental_discriminant(m: int) -> bool:
    """
    True iff m is the discriminant of a quadratic field: m = 1 mod 4 and
    squarefree, or m = 4n with n = 2, 3 mod 4 and n squarefree. m = 1 is
    excluded.
    """
    if m in (0, 1):
        return False
    if m % 4 == 1:
        return is_squarefree(m)
    if m % 4 == 0:
        n = m // 4
        return n % 4 in (2, 3) and is_squarefree(n)
    return False


def kronecker(a: int, n: int) -> int:
    """
    Full Kronecker symbol (a/n).

    (a/-1) is the sign of a, so (-D/-1) = -1 for D > 0; (a/2) follows the
    mod 8 rule; the odd part is a Jacobi symbol.
    """
    if n == 0:
        return 1 if abs(a) == 1 else 0
    acc = 1
    if n < 0:
        n = -n
        if a < 0:
            acc = -acc
    twos = (n & -n).bit_length() - 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            acc = -acc
        n >>= twos
    if n == 1:
        return acc
    return acc * jacobi_symbol(a % n, n)


def admissible_discriminants(D_max: int, D_min: int = 5):
    """D in [D_min, D_max] with D > 4, -D fundamental and D odd or 8 | D, ascending."""
    return [
        D
        for D in range(max(D_min, 5), D_max + 1)
        if (D % 2 or D % 8 == 0) and is_fundamental_discriminant(-D)
    ]


def admissible_twists(D: int, twists):
    """The twists from ``twists`` that are 1 or fundamental and prime to D, order kept."""
    return [d for d in twists if (d == 1 or is_fundamental_discriminant(d)) and gcd(d, D) == 1]
