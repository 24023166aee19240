import json
from fractions import Fraction

import numpy as np
import pytest

from arrangement_spectra import ConsistencyError, InvalidInputError, UnsupportedRangeError
from arrangement_spectra.cycletypes import CycleType, falling_factorial
from arrangement_spectra.oracle import build_johnson_graph
from arrangement_spectra.quotient import AffineInN, QuotientMatrix, build_quotient, evaluate
from arrangement_spectra.spectra import (
    Spectrum,
    closed_form_spectrum,
    closed_form_terms,
    compare_with_table,
    derive_spectrum,
    graph_multiplicities,
    johnson_containment_check,
    johnson_spectrum,
    quotient_eigenvalues,
    quotient_spectrum,
    smallest_eigenvalue_bound,
)


def record(derivation, lam):
    return next(r for r in derivation.records if r.eigenvalue == lam)


def test_quotient_eigenvalues_k3():
    roots = dict(quotient_eigenvalues(evaluate(build_quotient(3), 6)).roots)
    assert roots[9] == 1
    assert roots[-3] == 3


def test_quotient_eigenvalues_k1():
    for n in range(2, 9):
        found = quotient_eigenvalues(evaluate(build_quotient(1), n))
        assert found.splits
        assert found.roots == sorted([(n - 1, 1), (-1, 1)])


def test_quotient_eigenvalues_k4():
    roots = dict(quotient_eigenvalues(evaluate(build_quotient(4), 8)).roots)
    assert sum(roots.values()) == 20
    assert roots[-4] == 5
    # 15 eigenvalue families, some of which coincide for small n
    assert len(roots) == 12
    assert len(dict(quotient_eigenvalues(evaluate(build_quotient(4), 12)).roots)) == 15


def test_quotient_eigenvalues_reports_residual():
    found = quotient_eigenvalues([[1, 1], [1, 0]])
    assert not found.splits
    assert found.residual == [-1, -1, 1]
    assert "degree 2" in found.diagnostic()


def test_non_splitting_quotient_is_a_consistency_error():
    one, zero = AffineInN(0, 1), AffineInN()
    q = QuotientMatrix(1, (CycleType((1,), ()), CycleType((), (1,))), ((one, one), (one, zero)))
    with pytest.raises(ConsistencyError):
        graph_multiplicities(q, 2)


def test_identity_cell_must_come_first():
    q = build_quotient(3, "paper")
    reordered = QuotientMatrix(3, q.order[::-1], tuple(row[::-1] for row in q.entries[::-1]))
    with pytest.raises(InvalidInputError):
        graph_multiplicities(reordered, 6)


@pytest.mark.parametrize("n", [7, 8, 10])
def test_worked_multiplicity_k3(n):
    d = derive_spectrum(build_quotient(3), n)
    assert record(d, 2 * n - 9).multiplicity == n - 1
    top = record(d, 3 * n - 9)
    assert top.multiplicity == 1
    assert all(x == top.basis.vectors[0][0] for x in top.basis.vectors[0])


def test_worked_multiplicity_k4():
    n = 9
    assert record(derive_spectrum(build_quotient(4), n), 2 * n - 8).multiplicity == 5 * n * (n - 3) // 2 + 3
    # at n = 8 the family 3n-16 also lands on 8
    shared = {t.eigenvalue_expr: t.multiplicity for t in closed_form_terms(8, 4) if t.eigenvalue == 8}
    assert shared == {"2n-8": 103, "3n-16": 7}
    assert record(derive_spectrum(build_quotient(4), 8), 8).multiplicity == 110


@pytest.mark.parametrize("n, k", [(6, 3), (9, 3), (8, 4), (10, 4)])
def test_eigenbases_are_exact(n, k):
    q = build_quotient(k)
    qn = evaluate(q, n)
    d = derive_spectrum(q, n)
    for r in d.records:
        assert r.basis.failures(qn) == []
        assert len(r.basis.vectors) == r.quotient_multiplicity
        assert isinstance(r.weighted_sum, Fraction)


def test_trace_lines():
    lines = derive_spectrum(build_quotient(3), 6).trace_lines()
    # 2n-9 and n-3 coincide at n = 6
    assert len(lines) == 7
    assert lines[-1].startswith("lambda=9:")
    assert lines[-1].endswith("= 1")


def test_quotient_pipeline_needs_n_at_least_2k():
    with pytest.raises(UnsupportedRangeError):
        quotient_spectrum(5, 3)


@pytest.mark.parametrize("k, ns", [(2, range(4, 12)), (3, range(6, 14)), (4, range(8, 12))])
def test_quotient_matches_closed_forms(k, ns):
    for n in ns:
        assert quotient_spectrum(n, k) == closed_form_spectrum(n, k)


def test_paper_ordering_gives_same_spectrum():
    assert quotient_spectrum(9, 4, "paper") == quotient_spectrum(9, 4)


def test_johnson_spectrum_examples():
    assert johnson_spectrum(5, 2).as_dict() == {6: 1, 1: 4, -2: 5}
    assert johnson_spectrum(7, 0).as_dict() == {0: 1}
    assert johnson_spectrum(6, 3).as_dict() == {9: 1, 3: 5, -1: 9, -3: 5}
    with pytest.raises(InvalidInputError):
        johnson_spectrum(3, 4)


@pytest.mark.parametrize("n, k", [(5, 2), (6, 3), (7, 3), (7, 5), (8, 6)])
def test_johnson_spectrum_matches_matrix(n, k):
    # k > n/2 exercises the cancelling multiplicities
    values = np.rint(np.linalg.eigvalsh(build_johnson_graph(n, k).toarray())).astype(int)
    expected = Spectrum.from_pairs((int(v), 1) for v in values)
    assert johnson_spectrum(n, k) == expected


def test_johnson_containment():
    assert johnson_containment_check(quotient_spectrum(8, 4), 8, 4)
    for n in range(2, 7):
        s = closed_form_spectrum(n, 1)
        assert s.as_dict() == johnson_spectrum(n, 1).as_dict()
        assert johnson_containment_check(s, n, 1)
    assert not johnson_containment_check(Spectrum.from_pairs([(0, 1)]), 4, 2)


def test_smallest_eigenvalue_bound():
    assert smallest_eigenvalue_bound(8, 4) == (-4, 336)
    assert smallest_eigenvalue_bound(6, 3) == (-3, 30)
    for k in range(1, 6):
        assert smallest_eigenvalue_bound(2 * k, k) == (-k, falling_factorial(2 * k, k - 1))
    with pytest.raises(InvalidInputError):
        smallest_eigenvalue_bound(5, 3)


@pytest.mark.parametrize("k", range(5, 8))
def test_larger_k_invariants_and_bound(k):
    n = 2 * k
    s = quotient_spectrum(n, k)
    assert s.invariant_failures() == []
    lam, bound = smallest_eigenvalue_bound(n, k)
    assert s.min[0] == lam and s.min[1] >= bound
    assert johnson_containment_check(s, n, k)


def test_closed_form_examples():
    assert closed_form_spectrum(4, 2).as_dict() == {-2: 5, 0: 3, 2: 3, 4: 1}
    assert closed_form_spectrum(4, 3).as_dict() == {-3: 1, -2: 6, -1: 3, 0: 4, 1: 3, 2: 6, 3: 1}
    s = closed_form_spectrum(7, 4)
    assert len(s.pairs) == 13 and s.multiplicity(-4) == 225


def test_closed_form_range_errors():
    with pytest.raises(UnsupportedRangeError):
        closed_form_spectrum(20, 8)
    with pytest.raises(InvalidInputError):
        closed_form_spectrum(9, 5)
    with pytest.raises(InvalidInputError):
        closed_form_spectrum(2, 2)


def test_printed_tables_mismatch_only_at_misprints():
    mismatches = compare_with_table(quotient_spectrum(10, 5), 10, 5)
    assert mismatches
    assert all(any(expr == "2n-14" for expr, _ in m.terms) for m in mismatches)
    assert compare_with_table(quotient_spectrum(10, 5), 10, 5, corrected=True) == []
    assert "table" in str(mismatches[0])


def test_closed_form_terms_expose_expressions():
    terms = closed_form_terms(6, 3)
    assert sum(int(t.multiplicity) for t in terms) == 120
    assert any(t.eigenvalue_expr == "2n-9" for t in terms)


def test_from_pairs_merges_and_rejects_negative():
    s = Spectrum.from_pairs([(1, 2), (-1, 1), (1, 3), (0, 0)])
    assert s.pairs == ((-1, 1), (1, 5))
    assert Spectrum.from_pairs([(3, 2), (3, -2), (1, 1)]).pairs == ((1, 1),)
    with pytest.raises(ConsistencyError):
        Spectrum.from_pairs([(1, 1), (1, -2)])


def test_invariant_failures_detect_errors():
    good = quotient_spectrum(6, 3)
    assert good.invariant_failures() == []
    assert good.check_invariants() is good
    bad = Spectrum(((-3, 60), (9, 60)), 120, 6, 3)
    assert any("sum of squares" in f for f in bad.invariant_failures())
    with pytest.raises(ConsistencyError):
        bad.check_invariants()


def test_serialization_roundtrips():
    s = quotient_spectrum(6, 3)
    assert Spectrum.from_json(json.loads(s.dumps())) == s
    assert Spectrum.from_csv(s.to_csv(), 6, 3) == s
    assert s.to_csv().splitlines()[0] == "lambda,mult"
    assert s.to_json()["pairs"][0] == {"lambda": s.min[0], "mult": s.min[1]}
    assert s.pretty().startswith("A(6,3): 120 vertices, 7 distinct eigenvalues")
    with pytest.raises(InvalidInputError):
        Spectrum.from_csv("a,b\n1,2\n")
