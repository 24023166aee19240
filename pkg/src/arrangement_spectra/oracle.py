"""Brute-force graphs and certified spectra for small instances.

Spectra are certified rather than trusted: a floating-point eigensolve
proposes integer candidates, and each candidate's multiplicity is confirmed
as the nullity of ``A - lambda I`` over GF(p) for a random prime p > 2**61.
A spectrum is returned only when the float cluster sizes and the modular
nullities agree and add up to the vertex count.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import reverse_cuthill_mckee

from . import kernels
from .cycletypes import CycleType, cell_size, enumerate_types, falling_factorial
from .errors import BudgetExceededError, ConsistencyError, InvalidInputError
from .kperm import KPermutation, cycle_type
from .primes import random_prime
from .quotient import AffineInN, QuotientMatrix, build_quotient
from .spectra import Spectrum, closed_form_spectrum, smallest_eigenvalue_bound

DEFAULT_BUDGET = 100_000
# dense modular elimination is quadratic in memory and cubic in time
DENSE_LIMIT = 6_000
CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class ArrangementGraph:
    n: int
    k: int
    vertices: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def kpermutation(self, index: int) -> KPermutation:
        return KPermutation(self.n, self.k, self.vertices[index])

    def edges(self):
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def matrix(self) -> sp.csr_matrix:
        return adjacency_matrix(self.adjacency)


def adjacency_matrix(adjacency: Sequence[Sequence[int]]) -> sp.csr_matrix:
    indptr = np.zeros(len(adjacency) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in adjacency])
    indices = np.fromiter(itertools.chain.from_iterable(adjacency), dtype=np.int64, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.int64)
    return sp.csr_matrix((data, indices, indptr), shape=(len(adjacency), len(adjacency)))


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetExceededError(f"{what} has {count} vertices, over the budget of {budget}")


def build_arrangement_graph(n: int, k: int, budget: int = DEFAULT_BUDGET) -> ArrangementGraph:
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got n={n}, k={k}")
    _check_budget(falling_factorial(n, k), budget, f"A({n},{k})")
    vertices = tuple(itertools.permutations(range(1, n + 1), k))
    index = {v: i for i, v in enumerate(vertices)}
    symbols = range(1, n + 1)
    adjacency = []
    for v in vertices:
        free = [x for x in symbols if x not in v]
        nbrs = []
        for pos in range(k):
            head, tail = v[:pos], v[pos + 1:]
            nbrs.extend(index[head + (x,) + tail] for x in free)
        adjacency.append(tuple(sorted(nbrs)))
    return ArrangementGraph(n, k, vertices, tuple(adjacency))


def build_johnson_graph(n: int, k: int) -> sp.csr_matrix:
    """Adjacency of J(n, k) on k-subsets in lexicographic order."""
    subsets = list(itertools.combinations(range(n), k))
    index = {s: i for i, s in enumerate(subsets)}
    adjacency = []
    for s in subsets:
        nbrs = []
        rest = [x for x in range(n) if x not in s]
        for out in s:
            kept = [x for x in s if x != out]
            nbrs.extend(index[tuple(sorted(kept + [x]))] for x in rest)
        adjacency.append(sorted(nbrs))
    return adjacency_matrix(adjacency)


# ---------------------------------------------------------------- spectra

@dataclass(frozen=True)
class Certificate:
    eigenvalue: int
    float_count: int
    nullities: tuple[tuple[int, int], ...]  # (prime, nullity) for each prime tried


@dataclass(frozen=True)
class CertifiedSpectrum:
    pairs: tuple[tuple[int, int], ...]
    certificates: tuple[Certificate, ...]


def _float_clusters(dense: np.ndarray) -> tuple[Counter, list[float]]:
    values = np.linalg.eigvalsh(dense.astype(float))
    counts: Counter = Counter()
    stray = []
    for x in values:
        r = int(round(float(x)))
        if abs(x - r) <= CLUSTER_TOL:
            counts[r] += 1
        else:
            stray.append(float(x))
    return counts, stray


def _modular_nullity(dense: np.ndarray, lam: int, p: int) -> int:
    shifted = dense - lam * np.eye(dense.shape[0], dtype=np.int64)
    return dense.shape[0] - kernels.rank_mod(shifted, p)


def certified_spectrum(matrix: sp.spmatrix, seed: int = 0, dense_limit: int = DENSE_LIMIT) -> CertifiedSpectrum:
    """Integer spectrum of a symmetric 0/1 (or integer) matrix with modular certificates."""
    size = matrix.shape[0]
    if size > dense_limit:
        raise BudgetExceededError(f"certified spectra are limited to {dense_limit} vertices, got {size}")
    csr = sp.csr_matrix(matrix)
    # a bandwidth-reducing order keeps the eliminations short
    perm = reverse_cuthill_mckee(csr, symmetric_mode=True)
    dense = csr[perm][:, perm].toarray().astype(np.int64)
    counts, stray = _float_clusters(dense)
    if stray:
        raise ConsistencyError(
            f"{len(stray)} eigenvalues are not within {CLUSTER_TOL} of an integer, e.g. {stray[:3]}"
        )
    rng = random.Random(seed)
    certificates = []
    pairs = []
    for lam in sorted(counts):
        p = random_prime(rng)
        tried = [(p, _modular_nullity(dense, lam, p))]
        if tried[0][1] != counts[lam]:
            q = random_prime(rng)
            tried.append((q, _modular_nullity(dense, lam, q)))
        certificates.append(Certificate(lam, counts[lam], tuple(tried)))
        # the nullity over GF(p) never undercounts; agreement of the float
        # cluster with the last prime is required
        nullity = tried[-1][1]
        if nullity != counts[lam]:
            raise ConsistencyError(
                f"eigenvalue {lam}: float cluster of size {counts[lam]} but nullities {tried}"
            )
        pairs.append((lam, nullity))
    total = sum(m for _, m in pairs)
    if total != size:
        raise ConsistencyError(f"certified multiplicities sum to {total}, expected {size}")
    return CertifiedSpectrum(tuple(pairs), tuple(certificates))


def exact_spectrum(g: ArrangementGraph, seed: int = 0, dense_limit: int = DENSE_LIMIT) -> Spectrum:
    cert = certified_spectrum(g.matrix(), seed, dense_limit)
    spectrum = Spectrum(cert.pairs, g.size, g.n, g.k)
    return spectrum.check_invariants()


# ---------------------------------------------------------------- equitability

@dataclass(frozen=True)
class EquitableReport:
    ok: bool
    n: int
    measured: QuotientMatrix  # constant entries, rows/columns over nonempty cells
    census: dict[CycleType, int]
    witness: tuple | None = None  # (cell i, cell j, vertex a, count a, vertex b, count b)

    def matches_prediction(self) -> bool:
        """Measured matrix equals the symbolic quotient restricted to the nonempty cells."""
        predicted = build_quotient(self.measured.k)
        n = self.n
        pos = {t: i for i, t in enumerate(predicted.order)}
        for a, ta in enumerate(self.measured.order):
            for b, tb in enumerate(self.measured.order):
                if self.measured.entries[a][b](n) != predicted.entries[pos[ta]][pos[tb]](n):
                    return False
        return True

    def census_matches(self) -> bool:
        return all(cell_size(t, self.n) == c for t, c in self.census.items()) and all(
            cell_size(t, self.n) == 0 or t in self.census for t in enumerate_types(self.measured.k)
        )


def verify_equitable(g: ArrangementGraph) -> EquitableReport:
    types = [cycle_type(g.kpermutation(i)) for i in range(g.size)]
    census = Counter(types)
    order = [t for t in enumerate_types(g.k) if t in census]
    pos = {t: i for i, t in enumerate(order)}
    cells = [pos[t] for t in types]
    rows: dict[int, tuple[int, tuple[int, ...]]] = {}
    witness = None
    for v, nbrs in enumerate(g.adjacency):
        counts = [0] * len(order)
        for u in nbrs:
            counts[cells[u]] += 1
        counts_t = tuple(counts)
        c = cells[v]
        if c not in rows:
            rows[c] = (v, counts_t)
        elif rows[c][1] != counts_t and witness is None:
            first, first_counts = rows[c]
            j = next(j for j in range(len(order)) if first_counts[j] != counts_t[j])
            witness = (str(order[c]), str(order[j]), first, first_counts[j], v, counts_t[j])
    entries = tuple(tuple(AffineInN(0, x) for x in rows[i][1]) for i in range(len(order)))
    return EquitableReport(witness is None, g.n, QuotientMatrix(g.k, tuple(order), entries),
                           dict(census), witness)


# ---------------------------------------------------------------- incidence identity

@dataclass(frozen=True)
class IncidenceReport:
    ok: bool
    rows: int
    cols: int
    identity_holds: bool
    min_eigenvalue: int
    min_multiplicity: int
    bound: int
    detail: str = ""


def build_h_graph(n: int, k: int) -> tuple[list[tuple[int, int]], set[frozenset]]:
    """Vertices (part, index) of K_{n,...,n} minus same-index edges, and its edge set."""
    vertices = [(i, j) for i in range(1, k + 1) for j in range(1, n + 1)]
    edges = {
        frozenset((a, b))
        for a, b in itertools.combinations(vertices, 2)
        if a[0] != b[0] and a[1] != b[1]
    }
    return vertices, edges


def clique_incidence(n: int, k: int) -> tuple[sp.csr_matrix, list[tuple], list[frozenset]]:
    """Incidence of (k-1)-cliques against k-cliques of H_{n,k}.

    A k-clique takes one vertex per part with distinct indices, i.e. it is
    the set ``{(i, pi(i))}`` of a k-permutation; columns follow the
    lexicographic order of the k-permutations.
    """
    _, edges = build_h_graph(n, k)
    columns = []
    for image in itertools.permutations(range(1, n + 1), k):
        clique = frozenset((i + 1, x) for i, x in enumerate(image))
        columns.append(clique)
    for clique in columns:
        for a, b in itertools.combinations(clique, 2):
            if frozenset((a, b)) not in edges:
                raise ConsistencyError(f"{sorted(clique)} is not a clique of H({n},{k})")
    row_index: dict[frozenset, int] = {}
    row_keys: list[tuple] = []
    r_idx, c_idx = [], []
    for c, clique in enumerate(columns):
        for vertex in sorted(clique):
            face = clique - {vertex}
            key = face
            if key not in row_index:
                row_index[key] = len(row_keys)
                row_keys.append(tuple(sorted(face)))
            r_idx.append(row_index[key])
            c_idx.append(c)
    m = sp.csr_matrix((np.ones(len(r_idx), dtype=np.int64), (r_idx, c_idx)),
                      shape=(len(row_keys), len(columns)))
    return m, row_keys, columns


def incidence_check(n: int, k: int, spectrum: Spectrum | None = None, budget: int = DEFAULT_BUDGET,
                    seed: int = 0) -> IncidenceReport:
    """Check M^T M - kI = A(n, k) and the multiplicity bound for -k."""
    if n < 2 * k:
        raise InvalidInputError(f"incidence check needs n >= 2k, got n={n}, k={k}")
    g = build_arrangement_graph(n, k, budget)
    m, row_keys, columns = clique_incidence(n, k)
    problems = []
    if m.shape != (falling_factorial(n, k - 1) * k, falling_factorial(n, k)):
        problems.append(f"M has shape {m.shape}")
    if not np.all(np.asarray(m.sum(axis=0)).ravel() == k):
        problems.append("some column of M does not have exactly k ones")
    gram = (m.T @ m - k * sp.identity(m.shape[1], dtype=np.int64, format="csr")).tocsr()
    gram.eliminate_zeros()
    diff = (gram - g.matrix()).tocoo()
    diff.eliminate_zeros()
    identity_holds = diff.nnz == 0
    if not identity_holds:
        i, j = int(diff.row[0]), int(diff.col[0])
        problems.append(
            f"M^T M - kI differs from the adjacency at ({g.vertices[i]}, {g.vertices[j]}): "
            f"{gram[i, j]} vs {g.matrix()[i, j]}"
        )
    if spectrum is None:
        spectrum = exact_spectrum(g, seed)
    lam, mult = spectrum.min
    bound_lam, bound = smallest_eigenvalue_bound(n, k)
    if lam != bound_lam:
        problems.append(f"smallest eigenvalue is {lam}, expected {bound_lam}")
    if mult < bound:
        problems.append(f"multiplicity of {lam} is {mult}, below the bound {bound}")
    return IncidenceReport(not problems, m.shape[0], m.shape[1], identity_holds, lam, mult, bound,
                           "; ".join(problems))


# ---------------------------------------------------------------- line graph

@dataclass(frozen=True)
class LineGraphReport:
    ok: bool
    transfer_csv: str
    closed_form_csv: str
    oracle_csv: str
    isomorphic: bool
    base_spectrum: tuple[tuple[int, int], ...]


def line_graph_transfer(base: Sequence[tuple[int, int]], degree: int, vertices: int, edges: int) -> Spectrum:
    """Line-graph spectrum of a ``degree``-regular graph from its own spectrum."""
    pairs = [(lam + degree - 2, m) for lam, m in base]
    pairs.append((-2, edges - vertices))
    return Spectrum.from_pairs(pairs, nu=edges)


def line_graph_check(n: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> LineGraphReport:
    """A(n, 2) as the line graph of K_{n,n} minus a perfect matching."""
    if n < 3:
        raise InvalidInputError(f"line-graph check needs n >= 3, got n={n}")
    # H_n: x_i = i - 1, y_j = n + j - 1, joined when i != j
    h_edges = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    h_adj: list[list[int]] = [[] for _ in range(2 * n)]
    for i, j in h_edges:
        h_adj[i - 1].append(n + j - 1)
        h_adj[n + j - 1].append(i - 1)
    base = certified_spectrum(adjacency_matrix([sorted(a) for a in h_adj]), seed)
    nu, eps, r = 2 * n, len(h_edges), n - 1
    lifted = line_graph_transfer(base.pairs, r, nu, eps)
    transfer = Spectrum(lifted.pairs, lifted.nu, n, 2)

    g = build_arrangement_graph(n, 2, budget)
    # edge (x_i, y_j) <-> 2-permutation (i, j); edges meet iff they share i or j
    index = {v: a for a, v in enumerate(g.vertices)}
    by_endpoint = defaultdict(list)
    for i, j in h_edges:
        by_endpoint[("x", i)].append(index[(i, j)])
        by_endpoint[("y", j)].append(index[(i, j)])
    line_adj: list[set[int]] = [set() for _ in range(g.size)]
    for members in by_endpoint.values():
        for a, b in itertools.permutations(members, 2):
            line_adj[a].add(b)
    isomorphic = all(tuple(sorted(s)) == g.adjacency[a] for a, s in enumerate(line_adj))

    oracle = exact_spectrum(g, seed)
    formula = closed_form_spectrum(n, 2)
    texts = (transfer.to_csv(), formula.to_csv(), oracle.to_csv())
    ok = isomorphic and texts[0] == texts[1] == texts[2]
    return LineGraphReport(ok, *texts, isomorphic, base.pairs)
