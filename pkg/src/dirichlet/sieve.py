"""
Smallest-prime-factor sieve and the arithmetic arrays derived from it.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


@dataclass
class SieveArrays:
    """
    Attributes:
        N: maximum index
        spf: smallest prime factor, spf[n] for n >= 2 (spf[0] = spf[1] = 0)
        liouville: int8 array, liouville[n] = (-1)^Omega(n), liouville[0] = 0
    """

    N: int
    spf: np.ndarray
    liouville: np.ndarray

    @property
    def primes(self) -> np.ndarray:
        n = np.arange(self.N + 1)
        return n[(self.spf == n) & (n >= 2)]


@lru_cache(maxsize=8)
def build_sieve(N: int) -> SieveArrays:
    N = max(int(N), 2)
    spf = np.zeros(N + 1, dtype=np.int64)
    for i in range(2, N + 1):
        if spf[i] == 0:
            spf[i] = i
            if i * i <= N:
                block = spf[i * i :: i]
                block[block == 0] = i
    omega_big = np.zeros(N + 1, dtype=np.int64)
    for n in range(2, N + 1):
        omega_big[n] = omega_big[n // spf[n]] + 1
    liouville = np.where(omega_big % 2, -1, 1).astype(np.int8)
    liouville[0] = 0
    return SieveArrays(N=N, spf=spf, liouville=liouville)
