"""Cycle types: partitions of k into parts of two kinds.

Unprimed parts are cycle lengths, primed parts are path lengths (arc counts).
``CycleType`` keeps both as non-increasing tuples so that equal types compare
and hash equal.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError, UnsupportedRangeError


@dataclass(frozen=True, order=False)
class CycleType:
    cycles: tuple[int, ...]
    paths: tuple[int, ...]

    def __post_init__(self):
        cycles = tuple(sorted((int(x) for x in self.cycles), reverse=True))
        paths = tuple(sorted((int(x) for x in self.paths), reverse=True))
        if any(x < 1 for x in cycles + paths):
            raise InvalidInputError("parts must be positive integers")
        object.__setattr__(self, "cycles", cycles)
        object.__setattr__(self, "paths", paths)

    @classmethod
    def from_parts(cls, cycles, paths) -> "CycleType":
        return cls(tuple(cycles), tuple(paths))

    @classmethod
    def from_mults(cls, cycle_mults: dict[int, int], path_mults: dict[int, int]) -> "CycleType":
        cycles = [i for i, a in cycle_mults.items() for _ in range(a)]
        paths = [i for i, b in path_mults.items() for _ in range(b)]
        return cls(tuple(cycles), tuple(paths))

    @property
    def k(self) -> int:
        return sum(self.cycles) + sum(self.paths)

    @property
    def s(self) -> int:
        """Number of paths, i.e. of image points outside [k]."""
        return len(self.paths)

    @property
    def cycle_mults(self) -> dict[int, int]:
        return dict(Counter(self.cycles))

    @property
    def path_mults(self) -> dict[int, int]:
        return dict(Counter(self.paths))

    def sort_key(self):
        return (self.s, self.cycles, self.paths)

    def __str__(self) -> str:
        return " ".join([str(i) for i in self.cycles] + [f"{j}'" for j in self.paths])

    def compact(self) -> str:
        """Concatenated form with ascending parts, e.g. ``11'2'``."""
        return "".join([str(i) for i in reversed(self.cycles)] + [f"{j}'" for j in reversed(self.paths)])

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Parse whitespace-separated parts such as ``"1 1 2'"``."""
        cycles, paths = [], []
        for token in text.split():
            primed = token.endswith("'")
            digits = token[:-1] if primed else token
            if not digits.isdigit() or int(digits) < 1:
                raise InvalidInputError(f"bad part {token!r} in cycle type {text!r}")
            (paths if primed else cycles).append(int(digits))
        if not cycles and not paths:
            raise InvalidInputError("empty cycle type")
        return cls(tuple(cycles), tuple(paths))

    @classmethod
    def parse_compact(cls, text: str) -> "CycleType":
        """Parse the single-digit concatenated notation, e.g. ``"21'1'"``."""
        cycles, paths = [], []
        i = 0
        text = text.replace(" ", "")
        while i < len(text):
            if not text[i].isdigit() or text[i] == "0":
                raise InvalidInputError(f"bad compact cycle type {text!r}")
            if i + 1 < len(text) and text[i + 1] == "'":
                paths.append(int(text[i]))
                i += 2
            else:
                cycles.append(int(text[i]))
                i += 1
        if not cycles and not paths:
            raise InvalidInputError("empty cycle type")
        return cls(tuple(cycles), tuple(paths))


def identity_type(k: int) -> CycleType:
    return CycleType((1,) * k, ())


def integer_partitions(m: int, largest: int | None = None):
    """Partitions of m as non-increasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in integer_partitions(m - first, first):
            yield (first,) + rest


# Orderings used in the printed quotient matrices for k = 3 and k = 4.
PAPER_ORDER = {
    3: "111 12 3 111' 21' 11'1' 12' 1'1'1' 1'2' 3'",
    4: (
        "1111 112 22 13 4 1111' 121' 31' 111'1' 21'1' 112' 22' "
        "11'1'1' 11'2' 13' 1'1'1'1' 1'1'2' 2'2' 1'3' 4'"
    ),
}


def enumerate_types(k: int, ordering: str = "canonical") -> list[CycleType]:
    """All cycle types of weight k.

    ``canonical`` sorts by number of paths, then by the cycle partition, then
    by the path partition (partitions compared as non-increasing tuples), which
    puts the identity type first.  ``paper`` reproduces the hand-chosen orders
    of the printed k = 3 and k = 4 matrices.
    """
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    if ordering == "paper":
        if k not in PAPER_ORDER:
            raise UnsupportedRangeError(f"no paper ordering for k={k} (available: 3, 4)")
        return [CycleType.parse_compact(t) for t in PAPER_ORDER[k].split()]
    if ordering != "canonical":
        raise InvalidInputError(f"unknown ordering {ordering!r}")
    types = [
        CycleType(cyc, pth)
        for i in range(k + 1)
        for cyc in integer_partitions(i)
        for pth in integer_partitions(k - i)
    ]
    return sorted(types, key=CycleType.sort_key)


@lru_cache(maxsize=None)
def partition_count(m: int) -> int:
    """p(m) by Euler's pentagonal-number recurrence."""
    if m < 0:
        return 0
    if m == 0:
        return 1
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > m:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(m - g1)
        g2 = j * (3 * j + 1) // 2
        if g2 <= m:
            total += sign * partition_count(m - g2)
        j += 1
    return total


def count_c(k: int) -> int:
    """Number of partitions of k into parts of two kinds."""
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    return sum(partition_count(i) * partition_count(k - i) for i in range(k + 1))


def falling_factorial(m: int, length: int) -> int:
    result = 1
    for i in range(length):
        result *= m - i
    return result


def cell_size(t: CycleType, n: int) -> int:
    """Number of k-permutations of [n] with cycle type ``t``."""
    k = t.k
    if n < k:
        raise InvalidInputError(f"need n >= k, got n={n}, k={k}")
    denom = 1
    for i, a in t.cycle_mults.items():
        denom *= i**a * math.factorial(a)
    for b in t.path_mults.values():
        denom *= math.factorial(b)
    return math.factorial(k) // denom * falling_factorial(n - k, t.s)


def partition_sum_check(n: int, k: int) -> bool:
    return sum(cell_size(t, n) for t in enumerate_types(k)) == falling_factorial(n, k)
