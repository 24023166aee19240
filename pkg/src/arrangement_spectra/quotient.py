"""Quotient matrix of the cycle-type partition of A(n, k), symbolic in n.

Every neighbor count is an affine function of n once k is fixed, so the
matrix is stored with :class:`AffineInN` entries and evaluated per n.

A neighbor of pi changes exactly one arc (u, pi(u)) of its basic graph to
(u, w) where w is outside the image: either a fresh point of [n] (there are
n - k - |B| of them) or the tail of some path.  ``neighbor_distribution``
tallies the resulting types rule by rule.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .cycletypes import CycleType, cell_size, enumerate_types
from .errors import InvalidInputError, UnsupportedRangeError

MAX_K = 8


@dataclass(frozen=True)
class AffineInN:
    """``slope * n + intercept``."""

    slope: int = 0
    intercept: int = 0

    def __add__(self, other: "AffineInN") -> "AffineInN":
        return AffineInN(self.slope + other.slope, self.intercept + other.intercept)

    def scale(self, c: int) -> "AffineInN":
        return AffineInN(c * self.slope, c * self.intercept)

    def __call__(self, n: int) -> int:
        return self.slope * n + self.intercept

    def __bool__(self) -> bool:
        return bool(self.slope or self.intercept)

    def to_json(self) -> dict:
        return {"slope": self.slope, "intercept": self.intercept}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineInN":
        return cls(int(obj["slope"]), int(obj["intercept"]))

    def __str__(self) -> str:
        a, b = self.slope, self.intercept
        if a == 0:
            return str(b)
        lead = "" if a == 1 else "-" if a == -1 else str(a)
        if b == 0:
            return f"{lead}n"
        if a > 0 and b < 0 and b % a == 0:
            return f"{lead}n_{-b // a}"
        return f"{lead}n{b:+d}"


ZERO = AffineInN()


def _remove(parts: Counter, *values: int) -> Counter:
    out = Counter(parts)
    for v in values:
        out[v] -= 1
        if out[v] == 0:
            del out[v]
    return out


def _add(parts: Counter, *values: int) -> Counter:
    out = Counter(parts)
    for v in values:
        if v > 0:
            out[v] += 1
    return out


def _type(cycles: Counter, paths: Counter) -> CycleType:
    return CycleType.from_mults(cycles, paths)


def neighbor_distribution(source: CycleType, k: int) -> dict[CycleType, AffineInN]:
    """Number of neighbors a vertex of type ``source`` has in each type."""
    if source.k != k:
        raise InvalidInputError(f"type {source} has weight {source.k}, expected {k}")
    A = Counter(source.cycles)
    B = Counter(source.paths)
    nb = len(source.paths)
    fresh = AffineInN(1, -k - nb)  # n - k - |B|
    out: dict[CycleType, AffineInN] = {}

    def tally(t: CycleType, count: AffineInN) -> None:
        if count:
            out[t] = out.get(t, ZERO) + count

    # (i) retarget an arc of a cycle of length i
    for i, a in A.items():
        tally(_type(_remove(A, i), _add(B, i)), fresh.scale(i * a))
        for j, b in B.items():
            tally(_type(_remove(A, i), _add(_remove(B, j), i + j)), AffineInN(0, a * b * i))

    # (ii) retarget arc number l of a path of length j
    for j, b in B.items():
        rest = _remove(B, j)
        for l in range(1, j + 1):
            # onto its own tail: closes a cycle of length l
            tally(_type(_add(A, l), _add(rest, j - l)), AffineInN(0, b))
            # onto the tail of another path of length m: the first l arcs
            # join that path, the remaining j - l arcs stay a path
            for m, c in rest.items():
                if m + l == j:
                    continue  # same type, counted with the diagonal
                target = _type(A, _add(_remove(rest, m), m + l, j - l))
                tally(target, AffineInN(0, b * c))
        # onto a fresh point: splits into paths of lengths l and j - l
        for l in range(1, j // 2 + 1):
            if l == j:
                continue
            coef = b if 2 * l == j else 2 * b
            tally(_type(A, _add(rest, l, j - l)), fresh.scale(coef))

    # (iii) neighbors of the same type
    diag = fresh.scale(nb)
    lengths = sorted(B)
    pairs = sum(B[r] * B[t] for x, r in enumerate(lengths) for t in lengths[x + 1:])
    tally(source, diag + AffineInN(0, pairs))
    return out


@dataclass(frozen=True)
class QuotientMatrix:
    k: int
    order: tuple[CycleType, ...]
    entries: tuple[tuple[AffineInN, ...], ...]

    @property
    def size(self) -> int:
        return len(self.order)

    def at(self, n: int) -> list[list[int]]:
        """Entry-wise evaluation with no range check."""
        return [[e(n) for e in row] for row in self.entries]

    def index(self, t: CycleType) -> int:
        return self.order.index(t)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "order": [str(t) for t in self.order],
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuotientMatrix":
        order = tuple(CycleType.parse(t) for t in obj["order"])
        entries = tuple(tuple(AffineInN.from_json(e) for e in row) for row in obj["entries"])
        return cls(int(obj["k"]), order, entries)

    def pretty(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        labels = [t.compact() for t in self.order]
        lw = max(len(s) for s in labels)
        lines = [f"{lab:>{lw}} | " + " ".join(f"{c:>{width}}" for c in row) for lab, row in zip(labels, cells)]
        return "\n".join(lines)


@lru_cache(maxsize=None)
def build_quotient(k: int, ordering: str = "canonical") -> QuotientMatrix:
    if not 1 <= k <= MAX_K:
        raise UnsupportedRangeError(f"quotient matrices are supported for 1 <= k <= {MAX_K}, got k={k}")
    order = tuple(enumerate_types(k, ordering))
    position = {t: i for i, t in enumerate(order)}
    rows = []
    for t in order:
        row = [ZERO] * len(order)
        for target, count in neighbor_distribution(t, k).items():
            row[position[target]] = count
        rows.append(tuple(row))
    return QuotientMatrix(k, order, tuple(rows))


def evaluate(q: QuotientMatrix, n: int) -> list[list[int]]:
    if n < 2 * q.k:
        raise UnsupportedRangeError(
            f"quotient pipeline needs n >= 2k (n={n}, k={q.k}); use the brute-force oracle"
        )
    return q.at(n)


def cell_sizes(q: QuotientMatrix, n: int) -> list[int]:
    return [cell_size(t, n) for t in q.order]
