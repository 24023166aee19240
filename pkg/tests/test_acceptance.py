"""The twelve acceptance criteria, each timed against its own bound.

A pass/fail line per criterion is printed in the "acceptance criteria"
section of the pytest summary.  Every criterion computes what it needs from
scratch so its timing is honest; only criterion 9 reuses the spectra of 5-8,
since its bound is incremental.
"""

from collections import Counter

from arrangement_spectra import closed_forms
from arrangement_spectra.cycletypes import cell_size, count_c, enumerate_types, falling_factorial
from arrangement_spectra.kperm import all_kpermutations, cycle_type, decompose, recompose
from arrangement_spectra.oracle import (
    build_arrangement_graph,
    exact_spectrum,
    incidence_check,
    line_graph_check,
    verify_equitable,
)
from arrangement_spectra.quotient import AffineInN, build_quotient
from arrangement_spectra.spectra import (
    closed_form_spectrum,
    closed_form_terms,
    compare_with_table,
    johnson_containment_check,
    quotient_spectrum,
    smallest_eigenvalue_bound,
)
from conftest import ACCEPTANCE_NOTES
from printed_matrices import PRINTED, parse_matrix

# spectra produced by criteria 5-8, consumed by criterion 9
PRODUCED: dict[tuple[int, int], object] = {}

SMALL_CASES = {
    (4, 3): {-3: 1, -2: 6, -1: 3, 0: 4, 1: 3, 2: 6, 3: 1},
    (5, 3): {-3: 14, -2: 5, -1: 12, 1: 14, 2: 6, 4: 8, 6: 1},
    (5, 4): {-4: 1, -3: 12, -2: 28, -1: 4, 0: 30, 1: 4, 2: 28, 3: 12, 4: 1},
    (6, 4): {-4: 42, -3: 48, -2: 39, -1: 32, 0: 45, 1: 48, 2: 42, 4: 48, 6: 15, 8: 1},
    (7, 4): {-4: 225, -3: 14, -2: 105, -1: 60, 0: 84, 1: 42, 2: 150, 3: 20, 4: 42, 5: 6, 6: 73, 9: 18, 12: 1},
}

CLOSED_FORM_RANGES = {2: range(6, 13), 3: range(6, 16), 4: range(8, 16)}


def test_criterion_01_two_kind_partition_counts(criterion):
    with criterion(1, "c(k) for k = 0..9", 1.0):
        assert [count_c(k) for k in range(10)] == [1, 2, 5, 10, 20, 36, 65, 110, 185, 300]


def test_criterion_02_cell_sizes(criterion):
    with criterion(2, "cell sizes vs census, and sum over types", 10.0):
        for k in range(1, 5):
            for n in range(k, 9):
                census = Counter(cycle_type(p) for p in all_kpermutations(n, k))
                for t in enumerate_types(k):
                    assert cell_size(t, n) == census.get(t, 0), (n, k, t)
        for k in range(1, 8):
            for n in range(k, 21):
                assert sum(cell_size(t, n) for t in enumerate_types(k)) == falling_factorial(n, k)


def test_criterion_03_printed_quotient_matrices(criterion):
    with criterion(3, "quotient matrices for k = 3, 4 entry-for-entry", 1.0):
        for k in (3, 4):
            q = build_quotient.__wrapped__(k, "paper")
            assert [list(row) for row in q.entries] == parse_matrix(PRINTED[k])


def test_criterion_04_equitability(criterion):
    with criterion(4, "equitable partition measured on A(6,3), A(7,3), A(8,4), A(9,4)", 120.0):
        for n, k in [(6, 3), (7, 3), (8, 4), (9, 4)]:
            report = verify_equitable(build_arrangement_graph(n, k))
            assert report.ok, report.witness
            assert report.census_matches()
            assert list(report.measured.order) == enumerate_types(k)
            assert report.matches_prediction()


def test_criterion_05_small_case_spectra(criterion):
    with criterion(5, "oracle spectra of A(4,3), A(5,3), A(5,4), A(6,4), A(7,4)", 300.0):
        for (n, k), expected in SMALL_CASES.items():
            s = exact_spectrum(build_arrangement_graph(n, k))
            assert s.as_dict() == expected, (n, k)
            PRODUCED[(n, k, "oracle")] = s


def _coincident(n: int, k: int, expr: str) -> int:
    """Closed-form multiplicity of other families that land on the same value at this n."""
    terms = closed_form_terms(n, k)
    lam = next(t.eigenvalue for t in terms if t.eigenvalue_expr == expr)
    return sum(int(t.multiplicity) for t in terms if t.eigenvalue == lam and t.eigenvalue_expr != expr)


def test_criterion_06_closed_form_agreement(criterion):
    with criterion(6, "quotient pipeline vs closed forms for k = 2, 3, 4", 60.0):
        for k, ns in CLOSED_FORM_RANGES.items():
            for n in ns:
                s = quotient_spectrum(n, k)
                assert s == closed_form_spectrum(n, k), (n, k)
                if k == 3:
                    assert s.multiplicity(2 * n - 9) == n - 1 + _coincident(n, k, "2n-9")
                if k == 4:
                    assert s.multiplicity(2 * n - 8) == 5 * n * (n - 3) // 2 + 3 + _coincident(n, k, "2n-8")
                PRODUCED[(n, k, "quotient")] = s


def test_criterion_07_cross_method(criterion):
    with criterion(7, "quotient pipeline vs oracle on A(6,3), A(7,3), A(8,4)", 300.0):
        for n, k in [(6, 3), (7, 3), (8, 4)]:
            q = quotient_spectrum(n, k)
            o = exact_spectrum(build_arrangement_graph(n, k))
            assert q == o, (n, k)
            PRODUCED[(n, k, "oracle")] = o


def test_criterion_08_larger_k(criterion):
    report = []
    with criterion(8, "k = 5, 6, 7: invariants and per-entry table report", 120.0):
        seen_typos = set()
        for k, size in [(5, 36), (6, 65), (7, 110)]:
            assert build_quotient(k).size == size
            for n in range(2 * k, 2 * k + 4):
                s = quotient_spectrum(n, k)
                assert s.invariant_failures() == []
                PRODUCED[(n, k, "quotient")] = s
                for m in compare_with_table(s, n, k):
                    report.append(f"A({n},{k}) {m}")
                    typos = {(k, lam) for lam, _ in m.terms} & set(closed_forms.CORRECTIONS)
                    # every disagreement must involve an entry known to be misprinted
                    assert typos, f"A({n},{k}): unexpected mismatch {m}"
                    seen_typos |= typos
                # with the misprints replaced, everything agrees
                assert compare_with_table(s, n, k, corrected=True) == []
        assert seen_typos == set(closed_forms.CORRECTIONS)
    ACCEPTANCE_NOTES.append("criterion 8, disagreements with the printed tables (all misprints):")
    ACCEPTANCE_NOTES.extend("  " + line for line in report)


def _produced():
    if not any(key[:2] == (7, 4) for key in PRODUCED):
        for (n, k) in SMALL_CASES:
            PRODUCED[(n, k, "oracle")] = exact_spectrum(build_arrangement_graph(n, k))
    if not any(key[1] == 7 for key in PRODUCED):
        for k, ns in CLOSED_FORM_RANGES.items():
            for n in ns:
                PRODUCED[(n, k, "quotient")] = quotient_spectrum(n, k)
        for k in (5, 6, 7):
            for n in range(2 * k, 2 * k + 4):
                PRODUCED[(n, k, "quotient")] = quotient_spectrum(n, k)
    return PRODUCED


def test_criterion_09_johnson_containment(criterion):
    spectra = _produced()
    with criterion(9, f"Johnson containment over {len(spectra)} spectra", 10.0):
        for (n, k, _), s in spectra.items():
            assert johnson_containment_check(s, n, k), (n, k)


def test_criterion_10_smallest_eigenvalue(criterion):
    with criterion(10, "smallest eigenvalue and incidence identity on A(6,2), A(6,3), A(8,4)", 120.0):
        for n, k in [(6, 2), (6, 3), (8, 4)]:
            r = incidence_check(n, k)
            assert r.identity_holds, r.detail
            assert r.min_eigenvalue == -k
            assert r.bound == smallest_eigenvalue_bound(n, k)[1]
            assert r.min_multiplicity >= r.bound
            assert r.ok, r.detail


def test_criterion_11_line_graph(criterion):
    with criterion(11, "line graph route for n = 3..9", 30.0):
        for n in range(3, 10):
            r = line_graph_check(n)
            assert r.isomorphic
            assert r.transfer_csv == r.closed_form_csv == r.oracle_csv, n
            assert r.ok


def test_criterion_12_property_suite(criterion):
    with criterion(12, "roundtrip over V(n,k), row sums and symmetry for k <= 7", 60.0):
        for k in range(1, 5):
            for n in range(k, 9):
                for p in all_kpermutations(n, k):
                    assert recompose(decompose(p), n, k) == p
        for k in range(1, 8):
            q = build_quotient(k)
            for row in q.entries:
                total = AffineInN()
                for e in row:
                    total = total + e
                assert total == AffineInN(k, -k * k)
            # |V_i| q_ij has degree at most k + 1 in n, so k + 2 points decide it
            for n in range(2 * k, 2 * k + k + 2):
                w = [cell_size(t, n) for t in q.order]
                qn = q.at(n)
                for i in range(q.size):
                    for j in range(i + 1, q.size):
                        assert w[i] * qn[i][j] == w[j] * qn[j][i], (k, n, i, j)
