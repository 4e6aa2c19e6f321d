"""Exact integer linear algebra: Hermite normal form, solving, kernels."""
from __future__ import annotations


def _xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite(rows, ncols=None):
    """Row Hermite normal form with transform.

    Returns ``(H, U, pivots)`` with ``U @ A == H``, ``U`` unimodular, ``H`` in
    row echelon form with positive pivots and entries above each pivot
    reduced into ``[0, pivot)``.  ``pivots[k]`` is the pivot column of row k
    for the first ``len(pivots)`` rows; the remaining rows of ``H`` are zero.
    """
    A = [list(r) for r in rows]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if A[i][c]]
        if not nz:
            continue
        # fold every nonzero entry of column c into row r by extended gcd
        i0 = min(nz, key=lambda i: abs(A[i][c]))
        A[r], A[i0] = A[i0], A[r]
        U[r], U[i0] = U[i0], U[r]
        for i in range(r + 1, m):
            b = A[i][c]
            if not b:
                continue
            a = A[r][c]
            g, s, t = _xgcd(a, b)
            ua, ub = a // g, b // g
            ra, ri = A[r], A[i]
            A[r] = [s * x + t * y for x, y in zip(ra, ri)]
            A[i] = [-ub * x + ua * y for x, y in zip(ra, ri)]
            va, vi = U[r], U[i]
            U[r] = [s * x + t * y for x, y in zip(va, vi)]
            U[i] = [-ub * x + ua * y for x, y in zip(va, vi)]
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        pivots.append(c)
        r += 1
    return A, U, pivots


class IntegerSystem:
    """Factorisation of an integer matrix ``M`` for repeated solves of ``M x = b``.

    The factorisation is computed once; each solve is a forward substitution.
    """

    def __init__(self, matrix, ncols):
        self.nrows = len(matrix)
        self.ncols = ncols
        # transpose: rows of At are columns of M
        At = [[matrix[i][j] for i in range(self.nrows)] for j in range(ncols)]
        H, U, pivots = hermite(At, self.nrows)
        self.H = H
        self.U = U
        self.pivots = pivots
        self.rank = len(pivots)

    def kernel(self):
        """Rows spanning the integer kernel of ``M`` (not reduced)."""
        return [list(self.U[k]) for k in range(self.rank, self.ncols)]

    def solve(self, b):
        """One integer solution of ``M x = b`` or ``None``."""
        H, pivots = self.H, self.pivots
        y = []
        for j, c in enumerate(pivots):
            acc = b[c] - sum(H[k][c] * y[k] for k in range(j))
            p = H[j][c]
            if acc % p:
                return None
            y.append(acc // p)
        for c in range(self.nrows):
            if sum(H[k][c] * y[k] for k in range(self.rank)) != b[c]:
                return None
        x = [0] * self.ncols
        for k, yk in enumerate(y):
            if yk:
                row = self.U[k]
                for i in range(self.ncols):
                    x[i] += yk * row[i]
        return x


class Lattice:
    """Integer lattice with a canonical Hermite basis."""

    def __init__(self, vectors, dim):
        self.dim = dim
        H, _, pivots = hermite(vectors, dim) if vectors else ([], [], [])
        self.basis = [list(H[k]) for k in range(len(pivots))]
        self.pivots = pivots

    @property
    def rank(self):
        return len(self.basis)

    def coordinates(self, v):
        """Coordinates of ``v`` in the basis; ``None`` if ``v`` is not in the lattice."""
        w = list(v)
        coords = []
        for row, c in zip(self.basis, self.pivots):
            if w[c] % row[c]:
                return None
            q = w[c] // row[c]
            coords.append(q)
            if q:
                w = [x - q * y for x, y in zip(w, row)]
        if any(w):
            return None
        return coords

    def reduce(self, v):
        """Canonical representative of ``v`` modulo the lattice."""
        w = list(v)
        for row, c in zip(self.basis, self.pivots):
            q = w[c] // row[c]
            if q:
                w = [x - q * y for x, y in zip(w, row)]
        return w

    def combine(self, coords):
        out = [0] * self.dim
        for q, row in zip(coords, self.basis):
            if q:
                out = [x + q * y for x, y in zip(out, row)]
        return out


def rank_q(rows):
    """Rank over the rationals."""
    _, _, pivots = hermite(rows, len(rows[0]) if rows else 0)
    return len(pivots)
