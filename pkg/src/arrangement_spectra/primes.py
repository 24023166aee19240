"""Primality testing and prime selection for the modular kernels."""

from __future__ import annotations

import random
from typing import Iterator

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10**24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

LOW = 1 << 61
HIGH = 1 << 62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, low: int = LOW, high: int = HIGH) -> int:
    """Uniformly drawn odd candidate in (low, high), advanced to the next prime."""
    while True:
        candidate = rng.randrange(low + 1, high) | 1
        while candidate < high:
            if is_prime(candidate):
                return candidate
            candidate += 2


def primes_below(bound: int = HIGH) -> Iterator[int]:
    """Primes in decreasing order starting just below ``bound``."""
    candidate = bound - 1 if bound % 2 == 0 else bound - 2
    while candidate > 2:
        if is_prime(candidate):
            yield candidate
        candidate -= 2
