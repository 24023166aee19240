"""k-permutations and their decomposition into disjoint cycles and paths.

A k-permutation of [n] is an injective map [k] -> [n], stored as the tuple of
its images ``(pi(1), ..., pi(k))`` with 1-based values.  Following the orbits
of the map splits [k] into cycles (orbits that close up inside [k]) and paths
(orbits that start at an element of [k] outside the image and leave [k]).

>>> decompose(KPermutation(7, 5, (2, 6, 7, 5, 4))).render()
'(1 2 6](3 7](4 5)'
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidInputError


@dataclass(frozen=True)
class KPermutation:
    n: int
    k: int
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", image)
        if not 1 <= self.k <= self.n:
            raise InvalidInputError(f"need 1 <= k <= n, got n={self.n}, k={self.k}")
        if len(image) != self.k:
            raise InvalidInputError(f"image has length {len(image)}, expected k={self.k}")
        if any(not 1 <= x <= self.n for x in image):
            raise InvalidInputError(f"image entries must lie in [1, {self.n}]: {image}")
        if len(set(image)) != self.k:
            raise InvalidInputError(f"image entries must be distinct: {image}")

    def __call__(self, u: int) -> int:
        return self.image[u - 1]

    @classmethod
    def parse(cls, text: str, n: int, k: int | None = None) -> "KPermutation":
        """Parse a literal such as ``"2,3,4,6,7"`` (also accepts spaces or parentheses)."""
        cleaned = text.strip().strip("()[]")
        parts = [t for t in cleaned.replace(",", " ").split() if t]
        try:
            image = tuple(int(t) for t in parts)
        except ValueError:
            raise InvalidInputError(f"cannot parse k-permutation literal {text!r}") from None
        if k is None:
            k = len(image)
        return cls(n, k, image)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.image)) + ")"


@dataclass(frozen=True)
class CyclicDecomposition:
    """Cycles ``(u1 ... ul)`` and paths ``(u1 ... ul v]``.

    A path is stored with its head ``v`` as the last entry, so a path with
    ``l`` arcs is a sequence of length ``l + 1``.
    """

    cycles: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def arc_count(self) -> int:
        return sum(len(c) for c in self.cycles) + sum(len(p) - 1 for p in self.paths)

    def canonical(self) -> "CyclicDecomposition":
        cycles = sorted((_rotate_min_first(c) for c in self.cycles), key=lambda c: (len(c), c[0]))
        paths = sorted((tuple(p) for p in self.paths), key=lambda p: (len(p), p[0]))
        return CyclicDecomposition(tuple(cycles), tuple(paths))

    def render(self) -> str:
        """Cycle/path notation, components listed by their first element."""
        parts = [(c[0], "(" + " ".join(map(str, c)) + ")") for c in self.cycles]
        parts += [(p[0], "(" + " ".join(map(str, p)) + "]") for p in self.paths]
        return "".join(text for _, text in sorted(parts))


@dataclass(frozen=True)
class BasicGraph:
    vertices: frozenset[int]
    arcs: frozenset[tuple[int, int]]

    def degree(self, v: int) -> int:
        # a loop contributes 2
        return sum((a == v) + (b == v) for a, b in self.arcs)

    def components(self) -> list[tuple[int, bool]]:
        """Sorted ``(arc count, is_cycle)`` signatures of the connected components."""
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.arcs:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        sigs = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            arcs = sum(1 for a, _ in self.arcs if a in comp)
            sigs.append((arcs, arcs == len(comp)))
        return sorted(sigs)


def _rotate_min_first(cycle) -> tuple[int, ...]:
    cycle = tuple(cycle)
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def decompose(p: KPermutation) -> CyclicDecomposition:
    k = p.k
    image = set(p.image)
    seen: set[int] = set()
    paths = []
    for tail in range(1, k + 1):
        if tail in image:
            continue
        seq = [tail]
        v = p(tail)
        while v <= k:
            seq.append(v)
            v = p(v)
        seq.append(v)
        seen.update(seq[:-1])
        paths.append(tuple(seq))
    cycles = []
    for start in range(1, k + 1):
        if start in seen:
            continue
        seq = [start]
        seen.add(start)
        v = p(start)
        while v != start:
            seq.append(v)
            seen.add(v)
            v = p(v)
        cycles.append(tuple(seq))
    return CyclicDecomposition(tuple(cycles), tuple(paths)).canonical()


def recompose(d: CyclicDecomposition, n: int, k: int) -> KPermutation:
    """Inverse of :func:`decompose`."""
    image: dict[int, int] = {}
    heads = []
    for cycle in d.cycles:
        if not cycle:
            raise InvalidInputError("empty cycle")
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            if not 1 <= u <= k:
                raise InvalidInputError(f"cycle element {u} outside [1, {k}]")
            if u in image:
                raise InvalidInputError(f"element {u} repeated")
            image[u] = v
    for path in d.paths:
        if len(path) < 2:
            raise InvalidInputError(f"path {path} needs at least one arc")
        *body, head = path
        if not k < head <= n:
            raise InvalidInputError(f"path head {head} outside [{k + 1}, {n}]")
        for u, v in zip(body, path[1:]):
            if not 1 <= u <= k:
                raise InvalidInputError(f"path element {u} outside [1, {k}]")
            if u in image:
                raise InvalidInputError(f"element {u} repeated")
            image[u] = v
        heads.append(head)
    if len(set(heads)) != len(heads):
        raise InvalidInputError("path heads repeated")
    if sorted(image) != list(range(1, k + 1)):
        raise InvalidInputError(f"decomposition does not cover [1, {k}] exactly once")
    return KPermutation(n, k, tuple(image[u] for u in range(1, k + 1)))


def cycle_type(p: KPermutation):
    from .cycletypes import CycleType

    d = decompose(p)
    return CycleType.from_parts([len(c) for c in d.cycles], [len(q) - 1 for q in d.paths])


def basic_graph(p: KPermutation) -> BasicGraph:
    vertices = frozenset(range(1, p.k + 1)) | frozenset(p.image)
    arcs = frozenset((u, p(u)) for u in range(1, p.k + 1))
    return BasicGraph(vertices, arcs)


def all_kpermutations(n: int, k: int) -> Iterator[KPermutation]:
    """V(n, k) in lexicographic order of image vectors."""
    for image in itertools.permutations(range(1, n + 1), k):
        yield KPermutation(n, k, image)


def component_signature(d: CyclicDecomposition) -> Counter:
    return Counter([(len(c), True) for c in d.cycles] + [(len(q) - 1, False) for q in d.paths])
