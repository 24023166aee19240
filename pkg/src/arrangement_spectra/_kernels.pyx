# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled GF(p) kernels for primes p < 2**63.

Same contract as ``_kernels_py``.  Row updates use Shoup's precomputed
quotient so the inner loop needs one high multiply and no division.
"""

import numpy as np

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    typedef unsigned __int128 arrsp_u128;
    static inline uint64_t arrsp_mulmod(uint64_t a, uint64_t b, uint64_t p) {
        return (uint64_t)(((arrsp_u128)a * b) % p);
    }
    static inline uint64_t arrsp_shoup(uint64_t w, uint64_t p) {
        return (uint64_t)(((arrsp_u128)w << 64) / p);
    }
    static inline uint64_t arrsp_mulhi(uint64_t a, uint64_t b) {
        return (uint64_t)(((arrsp_u128)a * b) >> 64);
    }
    """
    uint64_t arrsp_mulmod(uint64_t a, uint64_t b, uint64_t p) nogil
    uint64_t arrsp_shoup(uint64_t w, uint64_t p) nogil
    uint64_t arrsp_mulhi(uint64_t a, uint64_t b) nogil

BACKEND = "cython"


cdef inline uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p) noexcept nogil:
    cdef uint64_t r = 1
    while e:
        if e & 1:
            r = arrsp_mulmod(r, a, p)
        a = arrsp_mulmod(a, a, p)
        e >>= 1
    return r


cdef inline uint64_t _inv(uint64_t a, uint64_t p) noexcept nogil:
    return _powmod(a, p - 2, p)


cdef inline void _axpy_neg(uint64_t* dst, const uint64_t* src, Py_ssize_t n,
                           uint64_t f, uint64_t p) noexcept nogil:
    # dst[j] = dst[j] - f * src[j]  (mod p)
    cdef uint64_t fs = arrsp_shoup(f, p)
    cdef uint64_t t, a
    cdef Py_ssize_t j
    for j in range(n):
        t = f * src[j] - arrsp_mulhi(fs, src[j]) * p
        if t >= p:
            t -= p
        a = dst[j]
        dst[j] = a - t if a >= t else a + (p - t)


def _as_array(rows, uint64_t p):
    if isinstance(rows, np.ndarray) and rows.dtype.kind in "iu":
        return np.array(rows, dtype=np.uint64, order="C")
    a = np.array(rows, dtype=object)
    if a.ndim != 2:
        a = a.reshape(len(rows), -1)
    return np.ascontiguousarray(a.astype(np.uint64))


def rank_mod(rows, p):
    cdef uint64_t pp = p
    arr = _as_array(rows, pp)
    cdef uint64_t[:, ::1] m = arr
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, c, i, piv, j, itmp
    cdef uint64_t inv, f, tmp
    # hi[i]: one past the last nonzero column of row i; bounds the row updates
    # so banded inputs cost O(n * b**2) instead of O(n**3).
    hi_arr = np.zeros(nrows, dtype=np.intp)
    cdef Py_ssize_t[::1] hi = hi_arr
    with nogil:
        for i in range(nrows):
            for j in range(ncols - 1, -1, -1):
                if m[i, j]:
                    hi[i] = j + 1
                    break
        for c in range(ncols):
            piv = -1
            for i in range(rank, nrows):
                if m[i, c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(c, ncols):
                    tmp = m[rank, j]
                    m[rank, j] = m[piv, j]
                    m[piv, j] = tmp
                itmp = hi[rank]
                hi[rank] = hi[piv]
                hi[piv] = itmp
            inv = _inv(m[rank, c], pp)
            for j in range(c, hi[rank]):
                m[rank, j] = arrsp_mulmod(m[rank, j], inv, pp)
            for i in range(rank + 1, nrows):
                f = m[i, c]
                if f:
                    _axpy_neg(&m[i, c], &m[rank, c], hi[rank] - c, f, pp)
                    if hi[rank] > hi[i]:
                        hi[i] = hi[rank]
            rank += 1
            if rank == nrows:
                break
    return int(rank)


def rref_mod(rows, p):
    cdef uint64_t pp = p
    arr = _as_array(rows, pp)
    cdef uint64_t[:, ::1] m = arr
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t rank = 0, c, i, piv, j
    cdef uint64_t inv, f, tmp
    pivots = []
    for c in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if m[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        with nogil:
            if piv != rank:
                for j in range(c, ncols):
                    tmp = m[rank, j]
                    m[rank, j] = m[piv, j]
                    m[piv, j] = tmp
            inv = _inv(m[rank, c], pp)
            for j in range(c, ncols):
                m[rank, j] = arrsp_mulmod(m[rank, j], inv, pp)
            for i in range(nrows):
                if i == rank:
                    continue
                f = m[i, c]
                if f:
                    _axpy_neg(&m[i, c], &m[rank, c], ncols - c, f, pp)
        pivots.append(int(c))
        rank += 1
        if rank == nrows:
            break
    return [[int(x) for x in row] for row in arr], pivots


def charpoly_mod(rows, p):
    cdef uint64_t pp = p
    cdef uint64_t[:, ::1] h = _as_array(rows, pp)
    cdef Py_ssize_t n = h.shape[0]
    cdef Py_ssize_t m, i, j, piv, e
    cdef uint64_t tinv, u, tmp, d, t, coef
    if n == 0:
        return [1]
    with nogil:
        for m in range(1, n - 1):
            piv = -1
            for i in range(m, n):
                if h[i, m - 1]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != m:
                for j in range(n):
                    tmp = h[m, j]
                    h[m, j] = h[piv, j]
                    h[piv, j] = tmp
                for j in range(n):
                    tmp = h[j, m]
                    h[j, m] = h[j, piv]
                    h[j, piv] = tmp
            tinv = _inv(h[m, m - 1], pp)
            for i in range(m + 1, n):
                u = arrsp_mulmod(h[i, m - 1], tinv, pp)
                if not u:
                    continue
                _axpy_neg(&h[i, m - 1], &h[m, m - 1], n - m + 1, u, pp)
                for j in range(n):
                    if h[j, i]:
                        tmp = arrsp_mulmod(u, h[j, i], pp) + h[j, m]
                        h[j, m] = tmp - pp if tmp >= pp else tmp

    polys_arr = np.zeros((n + 1, n + 1), dtype=np.uint64)
    cdef uint64_t[:, ::1] polys = polys_arr
    with nogil:
        polys[0, 0] = 1
        for m in range(1, n + 1):
            d = h[m - 1, m - 1]
            # cur = x * prev - d * prev
            for e in range(m):
                polys[m, e + 1] = polys[m - 1, e]
            if d:
                _axpy_neg(&polys[m, 0], &polys[m - 1, 0], m, d, pp)
            t = 1
            for i in range(m - 1, 0, -1):
                t = arrsp_mulmod(t, h[i, i - 1], pp)
                if not t:
                    break
                coef = arrsp_mulmod(h[i - 1, m - 1], t, pp)
                if coef:
                    _axpy_neg(&polys[m, 0], &polys[i - 1, 0], i, coef, pp)
    return [int(x) for x in polys_arr[n, :]]
