"""Pure-Python modular kernels.

Reference implementations of the dense linear algebra over GF(p) used by the
oracle (rank certification) and by the multi-modular exact pipeline (RREF and
characteristic polynomials).  The compiled ``_kernels`` extension implements
the same three functions with identical semantics; ``kernels`` picks one at
import time.

All functions take a list of rows of Python ints already reduced into
``[0, p)`` and never mutate their input.
"""

from __future__ import annotations

BACKEND = "python"


def rank_mod(rows: list[list[int]], p: int) -> int:
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    # one past the last nonzero column of each row
    hi = []
    for r in m:
        last = 0
        for j in range(ncols - 1, -1, -1):
            if r[j]:
                last = j + 1
                break
        hi.append(last)
    rank = 0
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        hi[rank], hi[piv] = hi[piv], hi[rank]
        prow = m[rank]
        end = hi[rank]
        inv = pow(prow[c], -1, p)
        tail = [x * inv % p for x in prow[c + 1:end]]
        for i in range(rank + 1, nrows):
            r = m[i]
            f = r[c]
            if f:
                r[c + 1:end] = [(a - f * b) % p for a, b in zip(r[c + 1:end], tail)]
                r[c] = 0
                if end > hi[i]:
                    hi[i] = end
        rank += 1
        if rank == nrows:
            break
    return rank


def rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[c], -1, p)
        prow[c:] = [x * inv % p for x in prow[c:]]
        tail = prow[c + 1:]
        for i in range(nrows):
            if i == rank:
                continue
            r = m[i]
            f = r[c]
            if f:
                r[c + 1:] = [(a - f * b) % p for a, b in zip(r[c + 1:], tail)]
                r[c] = 0
        pivots.append(c)
        rank += 1
        if rank == nrows:
            break
    return m, pivots


def charpoly_mod(rows: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial det(xI - M) mod p, coefficients low to high.

    Similarity reduction to upper Hessenberg form followed by the standard
    three-term-free recurrence on leading principal blocks.
    """
    h = [list(r) for r in rows]
    n = len(h)
    for m in range(1, n - 1):
        piv = -1
        for i in range(m, n):
            if h[i][m - 1]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != m:
            h[m], h[piv] = h[piv], h[m]
            for r in h:
                r[m], r[piv] = r[piv], r[m]
        tinv = pow(h[m][m - 1], -1, p)
        rm = h[m]
        for i in range(m + 1, n):
            u = h[i][m - 1] * tinv % p
            if not u:
                continue
            ri = h[i]
            for j in range(m - 1, n):
                ri[j] = (ri[j] - u * rm[j]) % p
            for r in h:
                r[m] = (r[m] + u * r[i]) % p

    polys: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        d = h[m - 1][m - 1]
        cur = [0] * (m + 1)
        for e, c in enumerate(prev):
            cur[e + 1] = (cur[e + 1] + c) % p
            cur[e] = (cur[e] - d * c) % p
        t = 1
        for i in range(m - 1, 0, -1):
            t = t * h[i][i - 1] % p
            if not t:
                break
            coef = h[i - 1][m - 1] * t % p
            if coef:
                for e, c in enumerate(polys[i - 1]):
                    cur[e] = (cur[e] - coef * c) % p
        polys.append(cur)
    return polys[n]
