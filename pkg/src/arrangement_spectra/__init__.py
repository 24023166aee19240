"""Exact spectra of arrangement graphs via the cycle-type equitable partition."""

from .cycletypes import CycleType, cell_size, count_c, enumerate_types
from .errors import (
    ArrangementError,
    BudgetExceededError,
    ConsistencyError,
    InvalidInputError,
    UnsupportedRangeError,
)
from .kperm import KPermutation, cycle_type, decompose, recompose
from .oracle import build_arrangement_graph, exact_spectrum, verify_equitable
from .quotient import AffineInN, QuotientMatrix, build_quotient, evaluate
from .spectra import (
    Spectrum,
    closed_form_spectrum,
    graph_multiplicities,
    johnson_spectrum,
    quotient_spectrum,
)

__all__ = [
    "AffineInN",
    "ArrangementError",
    "BudgetExceededError",
    "ConsistencyError",
    "CycleType",
    "InvalidInputError",
    "KPermutation",
    "QuotientMatrix",
    "Spectrum",
    "UnsupportedRangeError",
    "build_arrangement_graph",
    "build_quotient",
    "cell_size",
    "closed_form_spectrum",
    "count_c",
    "cycle_type",
    "decompose",
    "enumerate_types",
    "evaluate",
    "exact_spectrum",
    "graph_multiplicities",
    "johnson_spectrum",
    "quotient_spectrum",
    "recompose",
    "verify_equitable",
]
