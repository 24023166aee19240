"""Backend selection for the GF(p) kernels.

The compiled extension is used when it imports; otherwise, or when the
``ARRANGEMENT_SPECTRA_PURE`` environment variable is set, the pure-Python
module is used.  Both expose ``rank_mod``, ``rref_mod`` and ``charpoly_mod``.
"""

from __future__ import annotations

import contextlib
import os
from typing import Iterator

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _kernels_c
except ImportError:  # pragma: no cover - depends on the build
    _kernels_c = None

MAX_MODULUS = 1 << 63

_BACKENDS = {"python": _kernels_py}
if _kernels_c is not None:
    _BACKENDS["cython"] = _kernels_c

if os.environ.get("ARRANGEMENT_SPECTRA_PURE") or _kernels_c is None:
    _active = _kernels_py
else:
    _active = _kernels_c


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def get_backend() -> str:
    return _active.BACKEND


def set_backend(name: str) -> None:
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


@contextlib.contextmanager
def use_backend(name: str) -> Iterator[None]:
    previous = get_backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _reduce(matrix, p: int):
    if not 2 < p < MAX_MODULUS:
        raise ValueError("modulus must be an odd prime below 2**63")
    if isinstance(matrix, np.ndarray) and matrix.dtype.kind in "iu":
        reduced = np.mod(matrix.astype(np.int64, copy=False), p)
        return reduced if _active is _kernels_c else reduced.tolist()
    rows = [[int(x) % p for x in row] for row in matrix]
    return rows


def rank_mod(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    rows = _reduce(matrix, p)
    if len(rows) == 0:
        return 0
    return _active.rank_mod(rows, p)


def rref_mod(matrix, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p) and its pivot columns."""
    rows = _reduce(matrix, p)
    if len(rows) == 0:
        return [], []
    return _active.rref_mod(rows, p)


def charpoly_mod(matrix, p: int) -> list[int]:
    """det(xI - M) over GF(p), coefficients from constant term upward."""
    rows = _reduce(matrix, p)
    if len(rows) == 0:
        return [1]
    return _active.charpoly_mod(rows, p)
