import functools
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arrangement_spectra import oracle  # noqa: E402

ACCEPTANCE_RESULTS: list[tuple] = []
ACCEPTANCE_NOTES: list[str] = []


@functools.lru_cache(maxsize=None)
def _oracle_spectrum(n: int, k: int):
    return oracle.exact_spectrum(oracle.build_arrangement_graph(n, k))


@pytest.fixture(scope="session")
def oracle_spectrum():
    """Cached certified spectrum of A(n, k) shared by the unit tests."""
    return _oracle_spectrum


@pytest.fixture
def criterion():
    """Time a criterion block, enforce its bound and log a pass/fail line."""

    @contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            ACCEPTANCE_RESULTS.append((number, title, False, elapsed, limit, f"{type(exc).__name__}: {exc}"))
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed <= limit
        ACCEPTANCE_RESULTS.append((number, title, ok, elapsed, limit, "" if ok else "time bound exceeded"))
        assert ok, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, limit, note in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {number:>2}. {title} ({elapsed:.2f}s / {limit:g}s)"
        if note:
            line += f" - {note[:300]}"
        terminalreporter.write_line(line)
    for note in ACCEPTANCE_NOTES:
        terminalreporter.write_line(note)
