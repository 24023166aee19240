"""Exact integer/rational linear algebra on small dense matrices.

Characteristic polynomials and nullspaces are computed modulo several
62-bit primes with the :mod:`kernels` backend and lifted back to Z or Q:

* characteristic polynomial: Chinese remaindering against an a-priori bound
  on the coefficients, so the result is exact without any verification step;
* nullspace: rational reconstruction of the reduced-echelon basis, accepted
  only after checking ``M v == 0`` in exact arithmetic.  The basis has as
  many vectors as the nullity modulo p, which bounds the rational nullity
  from above, so a verified basis is complete.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from . import kernels
from .primes import primes_below

Matrix = Sequence[Sequence[int]]

MAX_NULLSPACE_PRIMES = 40


def _primes():
    return primes_below()


def _symmetric(x: int, m: int) -> int:
    x %= m
    return x - m if x > m // 2 else x


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    # m1, m2 coprime; result in [0, m1*m2)
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t


def row_norm_bound(m: Matrix) -> int:
    return max((sum(abs(int(x)) for x in row) for row in m), default=0)


def charpoly(m: Matrix) -> list[int]:
    """det(xI - M) for an integer matrix whose eigenvalues are real.

    Coefficients are returned from the constant term upward.  Every
    eigenvalue is bounded by the maximum absolute row sum R, so the
    coefficient of x**(n-i) is at most C(n, i) * R**i in absolute value.
    """
    n = len(m)
    r = max(row_norm_bound(m), 1)
    bound = max(math.comb(n, i) * r**i for i in range(n + 1))
    modulus = 1
    coeffs = [0] * (n + 1)
    for p in _primes():
        cp = kernels.charpoly_mod(m, p)
        coeffs = [_crt(c, modulus, d, p) for c, d in zip(coeffs, cp)]
        modulus *= p
        if modulus > 2 * bound:
            break
    return [_symmetric(c, modulus) for c in coeffs]


def poly_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[int], root: int) -> list[int]:
    # divide by (x - root); coeffs low to high, remainder assumed zero
    n = len(coeffs) - 1
    out = [0] * n
    carry = coeffs[n]
    for i in range(n - 1, -1, -1):
        out[i] = carry
        carry = coeffs[i] + carry * root
    return out


def integer_roots(coeffs: Sequence[int], radius: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Integer roots with multiplicity, searched in [-radius, radius].

    Nonzero candidates are screened by divisibility of the lowest nonzero
    coefficient.  Returns ``(roots, residual)`` where ``residual`` is the
    cofactor left after removing every root found (``[1]`` when the
    polynomial splits over Z).
    """
    poly = list(coeffs)
    roots = []
    zeros = 0
    while len(poly) > 1 and poly[0] == 0:
        poly = poly[1:]
        zeros += 1
    if zeros:
        roots.append((0, zeros))
    for lam in range(-radius, radius + 1):
        if lam == 0 or len(poly) == 1:
            continue
        if poly[0] % lam:
            continue
        mult = 0
        while len(poly) > 1 and poly_eval(poly, lam) == 0:
            poly = _deflate(poly, lam)
            mult += 1
        if mult:
            roots.append((lam, mult))
    return sorted(roots), poly


def _ratrecon(u: int, m: int) -> Fraction | None:
    """Rational a/b with a = b*u mod m and |a|, b <= sqrt(m/2), if one exists."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, u % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _is_null(m: Matrix, v: Sequence[Fraction]) -> bool:
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    iv = [int(x * den) for x in v]
    return all(sum(a * b for a, b in zip(row, iv) if a and b) == 0 for row in m)


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of the rational nullspace of an integer matrix.

    Basis vector ``f`` has a 1 in free column ``f`` and zeros in the other
    free columns (the reduced-echelon basis), so the result is canonical.
    """
    ncols = len(m[0]) if m else 0
    best_rank = -1
    pivots: list[int] = []
    acc: list[list[int]] = []
    modulus = 1
    for count, p in enumerate(_primes()):
        if count >= MAX_NULLSPACE_PRIMES:
            break
        rref, piv = kernels.rref_mod(m, p)
        if len(piv) < best_rank or (len(piv) == best_rank and piv != pivots):
            continue
        free = [j for j in range(ncols) if j not in set(piv)]
        residues = [[(-rref[r][f]) % p for r in range(len(piv))] for f in free]
        if len(piv) > best_rank:
            best_rank, pivots, acc, modulus = len(piv), piv, residues, p
        else:
            acc = [[_crt(a, modulus, b, p) for a, b in zip(va, vb)] for va, vb in zip(acc, residues)]
            modulus *= p
        if not free:
            return []
        basis = []
        for f, vals in zip(free, acc):
            v = [Fraction(0)] * ncols
            v[f] = Fraction(1)
            for r, c in enumerate(pivots):
                x = _ratrecon(vals[r], modulus)
                if x is None:
                    break
                v[c] = x
            else:
                basis.append(v)
                continue
            break
        if len(basis) == len(free) and all(_is_null(m, v) for v in basis):
            return basis
    return nullspace_fraction(m)


def nullspace_fraction(m: Matrix) -> list[list[Fraction]]:
    """Plain Gauss-Jordan over Fractions; slow reference path."""
    rows = [[Fraction(int(x)) for x in row] for row in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis


def weighted_inner(u: Sequence[Fraction], v: Sequence[Fraction], weights: Sequence[int]) -> Fraction:
    return sum((w * a * b for w, a, b in zip(weights, u, v) if a and b), Fraction(0))


def weighted_gram_schmidt(vectors: Sequence[Sequence[Fraction]], weights: Sequence[int]) -> list[list[Fraction]]:
    """Orthogonalize under <u, v> = sum_i w_i u_i v_i (no normalization)."""
    out: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for v in vectors:
        u = [Fraction(x) for x in v]
        for b, nb in zip(out, norms):
            c = weighted_inner(u, b, weights) / nb
            if c:
                u = [x - c * y for x, y in zip(u, b)]
        nu = weighted_inner(u, u, weights)
        if nu == 0:
            raise ValueError("vectors are linearly dependent")
        out.append(u)
        norms.append(nu)
    return out
