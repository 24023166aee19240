"""Exact spectra of arrangement graphs.

The main route evaluates the symbolic quotient matrix at n, finds its
integer eigenvalues, and converts each into a multiplicity in the whole
graph.  Because A(n, k) is walk-regular and the identity type is a singleton
cell, the multiplicity of an eigenvalue equals ``nu * sum_j (x_j)_1**2`` over
an orthonormal eigenbasis ``x_j`` of the symmetrized quotient.  Writing
``x = S v`` with ``S = diag(sqrt(|V_i|))`` keeps everything rational: the
vectors ``v`` are orthogonal under the cell-size-weighted inner product and
``(x_j)_1**2 = (v_j)_1**2 / <v_j, v_j>_W``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import closed_forms, exact
from .cycletypes import cell_size, falling_factorial, identity_type
from .errors import ConsistencyError, InvalidInputError, UnsupportedRangeError
from .quotient import QuotientMatrix, build_quotient, evaluate


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, ascending; ``nu`` is the vertex count."""

    pairs: tuple[tuple[int, int], ...]
    nu: int
    n: int | None = None
    k: int | None = None

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n: int | None = None, k: int | None = None,
                   nu: int | None = None) -> "Spectrum":
        """Merge equal eigenvalues, drop zero multiplicities, reject negative totals."""
        merged: dict[int, int] = defaultdict(int)
        for lam, m in pairs:
            merged[int(lam)] += int(m)
        bad = {lam: m for lam, m in merged.items() if m < 0}
        if bad:
            raise ConsistencyError(f"negative multiplicities after merging: {bad}")
        out = tuple(sorted((lam, m) for lam, m in merged.items() if m))
        total = sum(m for _, m in out)
        return cls(out, total if nu is None else nu, n, k)

    @property
    def eigenvalues(self) -> list[int]:
        return [lam for lam, _ in self.pairs]

    def multiplicity(self, lam: int) -> int:
        return dict(self.pairs).get(lam, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def min(self) -> tuple[int, int]:
        return self.pairs[0]

    @property
    def max(self) -> tuple[int, int]:
        return self.pairs[-1]

    def invariant_failures(self) -> list[str]:
        """Violated spectral identities (empty when all hold)."""
        failures = []
        total = sum(m for _, m in self.pairs)
        if total != self.nu:
            failures.append(f"multiplicities sum to {total}, expected {self.nu}")
        if any(m <= 0 for _, m in self.pairs):
            failures.append("non-positive multiplicity")
        if [lam for lam, _ in self.pairs] != sorted({lam for lam, _ in self.pairs}):
            failures.append("eigenvalues not strictly ascending")
        if self.n is None or self.k is None:
            return failures
        n, k = self.n, self.k
        nu = falling_factorial(n, k)
        degree = k * (n - k)
        if self.nu != nu:
            failures.append(f"nu = {self.nu}, expected (n)_k = {nu}")
        trace = sum(lam * m for lam, m in self.pairs)
        if trace != 0:
            failures.append(f"trace is {trace}, expected 0")
        square = sum(lam * lam * m for lam, m in self.pairs)
        if square != nu * degree:
            failures.append(f"sum of squares is {square}, expected {nu * degree}")
        if n > k and self.pairs and self.max != (degree, 1):
            failures.append(f"largest eigenvalue {self.max}, expected ({degree}, 1)")
        return failures

    def check_invariants(self) -> "Spectrum":
        failures = self.invariant_failures()
        if failures:
            raise ConsistencyError(f"spectrum of A({self.n},{self.k}): " + "; ".join(failures))
        return self

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "nu": self.nu,
            "pairs": [{"lambda": lam, "mult": m} for lam, m in self.pairs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Spectrum":
        pairs = tuple((int(p["lambda"]), int(p["mult"])) for p in obj["pairs"])
        return cls(pairs, int(obj["nu"]), obj.get("n"), obj.get("k"))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda", "mult"])
        writer.writerows(self.pairs)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, n: int | None = None, k: int | None = None) -> "Spectrum":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["lambda", "mult"]:
            raise InvalidInputError("csv spectrum must start with a 'lambda,mult' header")
        pairs = tuple((int(a), int(b)) for a, b in rows[1:] if a or b)
        return cls(pairs, sum(m for _, m in pairs), n, k)

    def pretty(self) -> str:
        head = f"A({self.n},{self.k}): {self.nu} vertices, {len(self.pairs)} distinct eigenvalues"
        width = max((len(str(lam)) for lam, _ in self.pairs), default=1)
        return "\n".join([head] + [f"  {lam:>{width}}  x{m}" for lam, m in self.pairs])


@dataclass(frozen=True)
class WeightedEigenbasis:
    eigenvalue: int
    vectors: tuple[tuple[Fraction, ...], ...]
    weights: tuple[int, ...]

    def norms(self) -> list[Fraction]:
        return [exact.weighted_inner(v, v, self.weights) for v in self.vectors]

    def failures(self, qn: Sequence[Sequence[int]]) -> list[str]:
        out = []
        for idx, v in enumerate(self.vectors):
            for i, row in enumerate(qn):
                lhs = sum((a * x for a, x in zip(row, v) if a and x), Fraction(0))
                if lhs != self.eigenvalue * v[i]:
                    out.append(f"vector {idx} is not an eigenvector (row {i})")
                    break
        for a in range(len(self.vectors)):
            for b in range(a + 1, len(self.vectors)):
                if exact.weighted_inner(self.vectors[a], self.vectors[b], self.weights):
                    out.append(f"vectors {a} and {b} are not orthogonal")
        return out


@dataclass(frozen=True)
class QuotientRoots:
    roots: list[tuple[int, int]]
    residual: list[int]
    charpoly: list[int] = field(repr=False)

    @property
    def splits(self) -> bool:
        return len(self.residual) == 1

    def diagnostic(self) -> str:
        if self.splits:
            return "characteristic polynomial splits over the integers"
        return (f"characteristic polynomial has a factor of degree {len(self.residual) - 1} "
                f"without integer roots: {self.residual[::-1]} (leading coefficient first)")


def quotient_eigenvalues(qn: Sequence[Sequence[int]]) -> QuotientRoots:
    """Integer eigenvalues of an evaluated quotient matrix with their algebraic multiplicities."""
    cp = exact.charpoly(qn)
    radius = exact.row_norm_bound(qn)
    roots, residual = exact.integer_roots(cp, radius)
    return QuotientRoots(roots, residual, cp)


@dataclass(frozen=True)
class MultiplicityRecord:
    """How one quotient eigenvalue turns into a graph multiplicity."""

    eigenvalue: int
    quotient_multiplicity: int
    basis: WeightedEigenbasis
    weighted_sum: Fraction  # sum_j (v_j)_1^2 / <v_j, v_j>_W
    multiplicity: int

    def describe(self, nu: int) -> str:
        terms = []
        for v, norm in zip(self.basis.vectors, self.basis.norms()):
            shown = str(norm) if norm.denominator == 1 else f"({norm})"
            terms.append(f"({v[0]})^2/{shown}")
        return (f"lambda={self.eigenvalue}: quotient multiplicity {self.quotient_multiplicity}; "
                f"{nu} * [{' + '.join(terms)}] = {nu} * {self.weighted_sum} = {self.multiplicity}")


@dataclass(frozen=True)
class QuotientDerivation:
    spectrum: Spectrum
    records: tuple[MultiplicityRecord, ...]

    def trace_lines(self) -> list[str]:
        return [r.describe(self.spectrum.nu) for r in self.records]


def derive_spectrum(q: QuotientMatrix, n: int) -> QuotientDerivation:
    k = q.k
    qn = evaluate(q, n)
    if q.order[0] != identity_type(k):
        raise InvalidInputError("the identity type must be the first cell")
    weights = tuple(cell_size(t, n) for t in q.order)
    nu = falling_factorial(n, k)
    found = quotient_eigenvalues(qn)
    if not found.splits:
        raise ConsistencyError(f"A({n},{k}): {found.diagnostic()}")
    size = len(qn)
    records = []
    for lam, alg in found.roots:
        shifted = [[qn[i][j] - (lam if i == j else 0) for j in range(size)] for i in range(size)]
        null = exact.nullspace(shifted)
        if len(null) != alg:
            raise ConsistencyError(
                f"A({n},{k}), lambda={lam}: eigenspace dimension {len(null)} but algebraic multiplicity {alg}"
            )
        vectors = exact.weighted_gram_schmidt(null, weights)
        basis = WeightedEigenbasis(lam, tuple(tuple(v) for v in vectors), weights)
        total = sum((v[0] * v[0] / norm for v, norm in zip(vectors, basis.norms())), Fraction(0))
        mult = nu * total
        if mult.denominator != 1 or mult <= 0:
            raise ConsistencyError(f"A({n},{k}), lambda={lam}: multiplicity {mult} is not a positive integer")
        records.append(MultiplicityRecord(lam, alg, basis, total, int(mult)))
    spectrum = Spectrum.from_pairs(((r.eigenvalue, r.multiplicity) for r in records), n, k, nu)
    spectrum.check_invariants()
    return QuotientDerivation(spectrum, tuple(records))


def graph_multiplicities(q: QuotientMatrix, n: int) -> Spectrum:
    return derive_spectrum(q, n).spectrum


def quotient_spectrum(n: int, k: int, ordering: str = "canonical") -> Spectrum:
    return graph_multiplicities(build_quotient(k, ordering), n)


def johnson_spectrum(n: int, k: int) -> Spectrum:
    if not 0 <= k <= n:
        raise InvalidInputError(f"need 0 <= k <= n, got n={n}, k={k}")
    pairs = [((k - i) * (n - k - i) - i, math.comb(n, i) - (math.comb(n, i - 1) if i else 0)) for i in range(k + 1)]
    return Spectrum.from_pairs(pairs)


def johnson_containment_check(s: Spectrum, n: int, k: int) -> bool:
    have = s.as_dict()
    return all(have.get(lam, 0) >= m for lam, m in johnson_spectrum(n, k).pairs)


def smallest_eigenvalue_bound(n: int, k: int) -> tuple[int, int]:
    if n < 2 * k:
        raise InvalidInputError(f"the bound needs n >= 2k, got n={n}, k={k}")
    return -k, falling_factorial(n, k - 1) * (n - 2 * k + 1)


@dataclass(frozen=True)
class TableTerm:
    eigenvalue_expr: str
    multiplicity_expr: str
    eigenvalue: int
    multiplicity: Fraction


def closed_form_terms(n: int, k: int, corrected: bool = True) -> list[TableTerm]:
    if k not in closed_forms.TABLES:
        raise UnsupportedRangeError(f"closed forms exist for 1 <= k <= 7, got k={k}")
    if n < closed_forms.VALID_FROM[k]:
        raise InvalidInputError(f"closed form for k={k} needs n >= {closed_forms.VALID_FROM[k]}, got n={n}")
    terms = []
    for lam_expr, mult_expr in closed_forms.family(k, corrected):
        lam = closed_forms.evaluate(lam_expr, n)
        terms.append(TableTerm(lam_expr, mult_expr, int(lam), closed_forms.evaluate(mult_expr, n)))
    return terms


def closed_form_spectrum(n: int, k: int, corrected: bool = True) -> Spectrum:
    """Spectrum from the embedded tables; ``corrected=False`` uses the printed entries verbatim."""
    terms = closed_form_terms(n, k, corrected)
    bad = [t for t in terms if t.multiplicity.denominator != 1]
    if bad:
        raise ConsistencyError(
            f"closed form for A({n},{k}) gives non-integer multiplicities: "
            + ", ".join(f"{t.eigenvalue_expr} -> {t.multiplicity}" for t in bad)
        )
    spectrum = Spectrum.from_pairs(((t.eigenvalue, int(t.multiplicity)) for t in terms), n, k,
                                   falling_factorial(n, k))
    return spectrum


@dataclass(frozen=True)
class TableMismatch:
    """Disagreement at one eigenvalue; ``terms`` lists the table entries landing there."""

    eigenvalue: int
    terms: tuple[tuple[str, str], ...]
    table_multiplicity: Fraction
    actual_multiplicity: int

    def __str__(self) -> str:
        entries = ", ".join(f"({a})^[{b}]" for a, b in self.terms) or "(none)"
        return (f"lambda={self.eigenvalue}: table {self.table_multiplicity} from {entries}, "
                f"computed {self.actual_multiplicity}")


def compare_with_table(s: Spectrum, n: int, k: int, corrected: bool = False) -> list[TableMismatch]:
    """Per-eigenvalue comparison of a computed spectrum against the embedded table.

    Table entries whose eigenvalues coincide at this n are pooled, so a
    mismatch names every entry that contributed to it.
    """
    groups: dict[int, list[TableTerm]] = defaultdict(list)
    for t in closed_form_terms(n, k, corrected):
        groups[t.eigenvalue].append(t)
    actual = s.as_dict()
    out = []
    for lam in sorted(set(groups) | set(actual)):
        members = groups.get(lam, [])
        table = sum((t.multiplicity for t in members), Fraction(0))
        if table != actual.get(lam, 0):
            out.append(TableMismatch(lam, tuple((t.eigenvalue_expr, t.multiplicity_expr) for t in members),
                                     table, actual.get(lam, 0)))
    return out
