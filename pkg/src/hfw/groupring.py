"""Linear algebra over the group rings F2[Z^r].

Elements are finite sets of exponent vectors (coefficients are 0 or 1).
Matrices are sparse maps ``(row, col) -> element`` in the convention that
column ``j`` holds the image of basis vector ``j``; a differential ``d``
therefore has ``d[y, x]`` equal to the coefficient of ``y`` in ``d(x)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np


class MultivariateUnsupported(ValueError):
    pass


class NotNilpotent(ValueError):
    pass


class PairingNotIdentityLike(ValueError):
    pass


# ----------------------------------------------------------------------
# elements


class GroupRingElement:
    """An element of F2[Z^r] as a frozen set of exponent tuples."""

    __slots__ = ("support",)

    def __init__(self, support=()):
        s = set()
        for v in support:
            v = tuple(v)
            if v in s:
                s.remove(v)
            else:
                s.add(v)
        self.support = frozenset(s)

    @classmethod
    def monomial(cls, v):
        return cls([tuple(v)])

    @classmethod
    def one(cls, r):
        return cls([(0,) * r])

    def __add__(self, other):
        out = GroupRingElement()
        out.support = self.support ^ other.support
        return out

    __sub__ = __add__

    def __mul__(self, other):
        acc = set()
        for a in self.support:
            for b in other.support:
                v = tuple(x + y for x, y in zip(a, b))
                if v in acc:
                    acc.remove(v)
                else:
                    acc.add(v)
        out = GroupRingElement()
        out.support = frozenset(acc)
        return out

    def __bool__(self):
        return bool(self.support)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def __repr__(self):
        return f"GroupRingElement({format_element(self)})"

    def is_unit(self):
        return len(self.support) == 1

    def inverse(self):
        if not self.is_unit():
            raise ValueError("not a unit")
        (v,) = self.support
        return GroupRingElement.monomial(tuple(-x for x in v))

    def augment(self):
        return len(self.support) % 2

    def rank(self):
        for v in self.support:
            return len(v)
        return None


def gr_add(a, b):
    return a + b


def gr_mul(a, b):
    return a * b


def gr_is_unit(a):
    return a.is_unit()


def format_element(a, names="t"):
    if not a.support:
        return "0"
    terms = []
    for v in sorted(a.support):
        if not any(v):
            terms.append("1")
            continue
        parts = []
        for k, e in enumerate(v):
            if not e:
                continue
            name = names[k] if len(names) > k and len(v) <= len(names) else f"t{k + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
        terms.append("*".join(parts))
    return " + ".join(terms)


# ----------------------------------------------------------------------
# sparse matrices


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)  # (i, j) -> GroupRingElement
    rank: int = 0  # number of group-ring variables

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    @classmethod
    def zeros(cls, nrows, ncols, rank=0):
        return cls(nrows, ncols, {}, rank)

    @classmethod
    def identity(cls, n, rank=0):
        one = GroupRingElement.one(rank)
        return cls(n, n, {(i, i): one for i in range(n)}, rank)

    @classmethod
    def from_f2(cls, array, rank=0):
        a = np.asarray(array) % 2
        one = GroupRingElement.one(rank)
        entries = {(int(i), int(j)): one for i, j in zip(*np.nonzero(a))}
        return cls(a.shape[0], a.shape[1], entries, rank)

    def get(self, i, j):
        return self.entries.get((i, j), GroupRingElement())

    def set(self, i, j, value):
        if value:
            self.entries[(i, j)] = value
        else:
            self.entries.pop((i, j), None)

    def add_to(self, i, j, value):
        self.set(i, j, self.get(i, j) + value)

    def __add__(self, other):
        out = SparseMatrix(self.nrows, self.ncols, dict(self.entries), self.rank)
        for (i, j), v in other.entries.items():
            out.add_to(i, j, v)
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                acc[key] = acc.get(key, GroupRingElement()) + a * b
        return SparseMatrix(self.nrows, other.ncols, acc, max(self.rank, other.rank))

    def is_zero(self):
        return not self.entries

    def block(self, rows, cols):
        rpos = {r: k for k, r in enumerate(rows)}
        cpos = {c: k for k, c in enumerate(cols)}
        out = {}
        for (i, j), v in self.entries.items():
            if i in rpos and j in cpos:
                out[(rpos[i], cpos[j])] = v
        return SparseMatrix(len(rows), len(cols), out, self.rank)

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()}, self.rank)

    def augment(self):
        """Image under e^v -> 1, as a numpy 0/1 array."""
        a = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for (i, j), v in self.entries.items():
            a[i, j] = v.augment()
        return a

    def to_json(self):
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[i, j, [list(e) for e in sorted(v.support)]]
                        for (i, j), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data):
        entries = {}
        rank = 0
        for i, j, monos in data["entries"]:
            e = GroupRingElement(tuple(m) for m in monos)
            if monos:
                rank = len(monos[0])
            entries[(i, j)] = entries.get((i, j), GroupRingElement()) + e
        rows = data["rows"]
        cols = data["cols"]
        nrows = rows if isinstance(rows, int) else len(rows)
        ncols = cols if isinstance(cols, int) else len(cols)
        return cls(nrows, ncols, entries, rank)

    def dumps(self):
        return json.dumps(self.to_json())

    def dense(self):
        return [[self.get(i, j) for j in range(self.ncols)] for i in range(self.nrows)]


def d_squared_check(m: SparseMatrix) -> bool:
    return (m @ m).is_zero()


# ----------------------------------------------------------------------
# F2 linear algebra


def f2_rank(a) -> int:
    """Rank over F2 of a 0/1 numpy array (Gaussian elimination on packed rows)."""
    a = np.array(a, dtype=np.uint8) % 2
    if a.size == 0:
        return 0
    rows = [int("".join(map(str, r)), 2) if len(r) else 0 for r in a.tolist()]
    rank = 0
    pivots = []
    for r in rows:
        for p in pivots:
            if r ^ p < r:
                r ^= p
        if r:
            pivots.append(r)
            pivots.sort(reverse=True)
            rank += 1
    return rank


def f2_homology_dim(d) -> int:
    """Dimension of ker d / im d for a square 0/1 differential."""
    d = np.asarray(d) % 2
    n = d.shape[0]
    return n - 2 * f2_rank(d)


# ----------------------------------------------------------------------
# cancellation


@dataclass
class BlockComplex:
    """A differential with a cancelling pairing ``A[i] -> B[i]``.

    ``A``, ``B`` and ``H`` partition ``range(d.nrows)``; ``filtration`` is an
    optional value per generator used only for ordering and reporting.
    """

    d: SparseMatrix
    A: list
    B: list
    H: list
    filtration: dict | None = None


def _unit_inverse_matrix(M: SparseMatrix):
    """Inverse of a square matrix that is unit diagonal plus nilpotent."""
    n = M.nrows
    rank = M.rank
    diag_inv = {}
    for i in range(n):
        u = M.get(i, i)
        if not u.is_unit():
            raise PairingNotIdentityLike(f"pairing entry {i} is {format_element(u)}")
        diag_inv[(i, i)] = u.inverse()
    Dinv = SparseMatrix(n, n, diag_inv, rank)
    off = SparseMatrix(n, n, {k: v for k, v in M.entries.items() if k[0] != k[1]}, rank)
    N = Dinv @ off  # M = D (I + N)
    total = SparseMatrix.identity(n, rank)
    power = SparseMatrix.identity(n, rank)
    for _ in range(n):
        power = power @ N
        if power.is_zero():
            break
        total = total + power
    else:
        if not power.is_zero():
            raise NotNilpotent("off-diagonal part of the pairing block is not nilpotent")
    # (I + N)^{-1} = sum N^i in characteristic 2
    return total @ Dinv


def cancellation_reduce(c: BlockComplex):
    """Return ``(H, l + p (I+k)^{-1} n)`` for the block decomposition ``c``."""
    d = c.d
    if len(c.A) != len(c.B):
        raise PairingNotIdentityLike("A and B differ in size")
    M = d.block(c.B, c.A)
    p = d.block(c.H, c.A)
    n = d.block(c.B, c.H)
    l = d.block(c.H, c.H)
    if not c.A:
        reduced = l
    else:
        Minv = _unit_inverse_matrix(M)
        reduced = l + p @ Minv @ n
    if d_squared_check(d) and not d_squared_check(reduced):
        raise AssertionError("reduced differential does not square to zero")
    return list(c.H), reduced


def greedy_pairing(d: SparseMatrix, order=None):
    """Maximal matching of unit entries, scanning generators in ``order``.

    Returns ``(A, B)`` with ``d[B[i], A[i]]`` a unit.
    """
    order = list(order) if order is not None else list(range(d.nrows))
    used = set()
    A, B = [], []
    targets = {}
    for (i, j), v in d.entries.items():
        if v.is_unit() and i != j:
            targets.setdefault(j, []).append(i)
    rank_of = {g: k for k, g in enumerate(order)}
    for a in order:
        if a in used:
            continue
        for b in sorted(targets.get(a, ()), key=lambda g: rank_of.get(g, g)):
            if b not in used:
                A.append(a)
                B.append(b)
                used.update((a, b))
                break
    return A, B


def reduce_f2(d):
    """Cancel a maximal unit pairing of an F2 differential repeatedly until none remain."""
    m = SparseMatrix.from_f2(d)
    keep = list(range(m.nrows))
    while True:
        A, B = greedy_pairing(m)
        if not A:
            return keep, m
        H = [g for g in range(m.nrows) if g not in set(A) | set(B)]
        try:
            H, m = cancellation_reduce(BlockComplex(m, A, B, H))
        except (NotNilpotent, PairingNotIdentityLike):
            A, B = A[:1], B[:1]
            H = [g for g in range(m.nrows) if g not in set(A) | set(B)]
            H, m = cancellation_reduce(BlockComplex(m, A, B, H))
        keep = [keep[h] for h in H]


# ----------------------------------------------------------------------
# univariate Laurent polynomials over F2


class Laurent:
    """sum of t^(shift + i) over the set bits i of ``mask`` (mask odd or zero)."""

    __slots__ = ("mask", "shift")

    def __init__(self, mask=0, shift=0):
        if mask:
            low = (mask & -mask).bit_length() - 1
            mask >>= low
            shift += low
        else:
            shift = 0
        self.mask = mask
        self.shift = shift

    @classmethod
    def from_exponents(cls, exps):
        exps = list(exps)
        if not exps:
            return cls()
        low = min(exps)
        mask = 0
        for e in exps:
            mask ^= 1 << (e - low)
        return cls(mask, low)

    @classmethod
    def from_element(cls, a: GroupRingElement):
        exps = []
        for v in a.support:
            if len(v) > 1 and any(v[1:]):
                raise MultivariateUnsupported("more than one group-ring variable")
            exps.append(v[0] if v else 0)
        return cls.from_exponents(exps)

    def to_element(self):
        return GroupRingElement([(e,) for e in self.exponents()])

    def exponents(self):
        out = []
        m, i = self.mask, 0
        while m:
            if m & 1:
                out.append(self.shift + i)
            m >>= 1
            i += 1
        return out

    @property
    def width(self):
        return self.mask.bit_length() - 1 if self.mask else -1

    def __bool__(self):
        return self.mask != 0

    def __eq__(self, other):
        return self.mask == other.mask and self.shift == other.shift

    def __hash__(self):
        return hash((self.mask, self.shift))

    def __add__(self, other):
        if not self.mask:
            return other
        if not other.mask:
            return self
        low = min(self.shift, other.shift)
        return Laurent((self.mask << (self.shift - low)) ^ (other.mask << (other.shift - low)), low)

    __sub__ = __add__

    def __mul__(self, other):
        return Laurent(_clmul(self.mask, other.mask), self.shift + other.shift)

    def is_unit(self):
        return self.mask == 1

    def normalized(self):
        """Associate with lowest exponent 0."""
        return Laurent(self.mask, 0)

    def divmod(self, other):
        """``self = q*other + r`` with width(r) < width(other)."""
        if not other:
            raise ZeroDivisionError
        q, r = _poly_divmod(self.mask, other.mask)
        return Laurent(q, self.shift - other.shift), Laurent(r, self.shift)

    def __repr__(self):
        return f"Laurent({format_laurent(self)})"


def format_laurent(a: Laurent, name="t"):
    if not a:
        return "0"
    terms = []
    for e in a.exponents():
        terms.append("1" if e == 0 else (name if e == 1 else f"{name}^{e}"))
    return " + ".join(terms)


def _clmul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _poly_divmod(a, b):
    db = b.bit_length()
    q = 0
    while a and a.bit_length() >= db:
        s = a.bit_length() - db
        q ^= 1 << s
        a ^= b << s
    return q, a


ZERO = Laurent()
ONE = Laurent(1, 0)


def _mono(k):
    return Laurent(1, k)


@dataclass
class SNFResult:
    factors: list  # nonzero invariant factors, normalised, each dividing the next
    U: list  # row transform (list of lists of Laurent)
    V: list  # column transform
    D: list  # U m V
    nrows: int
    ncols: int


def _to_laurent_matrix(m):
    if isinstance(m, SparseMatrix):
        rows = [[ZERO] * m.ncols for _ in range(m.nrows)]
        for (i, j), v in m.entries.items():
            rows[i][j] = Laurent.from_element(v)
        return rows
    return [[x if isinstance(x, Laurent) else Laurent.from_exponents(x) for x in row] for row in m]


def mat_mul(a, b):
    n, k = len(a), len(b)
    p = len(b[0]) if b else 0
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if not x:
                continue
            row = b[t]
            for j in range(p):
                if row[j]:
                    out[i][j] = out[i][j] + x * row[j]
    return out


def _identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def snf_laurent(m) -> SNFResult:
    """Smith normal form over F2[t, 1/t] with transforms ``U m V = D``."""
    A = [list(r) for r in _to_laurent_matrix(m)]
    nr = len(A)
    nc = len(A[0]) if A else (m.ncols if isinstance(m, SparseMatrix) else 0)
    U = _identity(nr)
    V = _identity(nc)

    def row_op(dst, src, f):  # row dst += f * row src
        A[dst] = [x + f * y if y else x for x, y in zip(A[dst], A[src])]
        U[dst] = [x + f * y if y else x for x, y in zip(U[dst], U[src])]

    def col_op(dst, src, f):  # col dst += f * col src
        for row in A:
            if row[src]:
                row[dst] = row[dst] + f * row[src]
        for row in V:
            if row[src]:
                row[dst] = row[dst] + f * row[src]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] and (best is None or A[i][j].width < A[best[0]][best[1]].width):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            changed = False
            for i in range(t + 1, nr):
                if A[i][t]:
                    q, r = A[i][t].divmod(p)
                    row_op(i, t, q)
                    if r:
                        swap_rows(t, i)
                        changed = True
                        break
            if changed:
                continue
            for j in range(t + 1, nc):
                if A[t][j]:
                    q, r = A[t][j].divmod(p)
                    col_op(j, t, q)
                    if r:
                        swap_cols(t, j)
                        changed = True
                        break
            if changed:
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i][j] and A[i][j].divmod(p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, ONE)
        # normalise the pivot to lowest exponent 0
        p = A[t][t]
        if p.shift:
            unit = _mono(-p.shift)
            A[t] = [unit * x for x in A[t]]
            U[t] = [unit * x for x in U[t]]
        t += 1
    factors = [A[i][i] for i in range(min(nr, nc)) if A[i][i]]
    return SNFResult(factors, U, V, A, nr, nc)


def _poly_det(rows):
    """Determinant over F2[t] of a square matrix of polynomial bitmasks (Bareiss)."""
    M = [list(r) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _clmul(M[i][j], M[k][k]) ^ _clmul(M[i][k], M[k][j])
                q, r = _poly_divmod(num, prev)
                assert r == 0
                M[i][j] = q
        prev = M[k][k]
    return M[n - 1][n - 1]


def laurent_det(rows) -> Laurent:
    n = len(rows)
    if n == 0:
        return ONE
    total_shift = 0
    shifted = []
    for row in rows:
        low = min((x.shift for x in row if x), default=0)
        total_shift += low
        shifted.append([(x.mask << (x.shift - low)) if x else 0 for x in row])
    return Laurent(_poly_det(shifted), total_shift)


def verify_snf(m, res: SNFResult) -> bool:
    """Check ``U m V = D``, diagonality, unit determinants and divisibility."""
    A = _to_laurent_matrix(m)
    if not A:
        return True
    prod = mat_mul(mat_mul(res.U, A), res.V)
    for i in range(res.nrows):
        for j in range(res.ncols):
            if prod[i][j] != res.D[i][j]:
                return False
            if i != j and res.D[i][j]:
                return False
    if not laurent_det(res.U).is_unit() or not laurent_det(res.V).is_unit():
        return False
    fs = res.factors
    for a, b in zip(fs, fs[1:]):
        if b.divmod(a)[1]:
            return False
    for f in fs:
        if f.shift != 0:
            return False
    return True


@dataclass
class HomologyModule:
    free_rank: int
    torsion: list  # non-unit invariant factors (Laurent)
    f2_dimension: int | None  # None when infinite

    @property
    def nonzero(self):
        return self.free_rank > 0 or bool(self.torsion)

    def describe(self, name="t"):
        parts = []
        if self.free_rank:
            parts.append(f"F2[{name},{name}^-1]^{self.free_rank}")
        for f in self.torsion:
            parts.append(f"F2[{name},{name}^-1]/({format_laurent(f, name)})")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "free_rank": self.free_rank,
            "torsion": [f.exponents() for f in self.torsion],
            "f2_dimension": self.f2_dimension,
            "nonzero": self.nonzero,
            "description": self.describe(),
        }


def homology_univariate(d) -> HomologyModule:
    """Homology of a square differential over F2[t, 1/t]."""
    res = snf_laurent(d)
    n = res.nrows
    k = len(res.factors)
    torsion = [f for f in res.factors if not f.is_unit()]
    free = n - 2 * k
    if free < 0:
        raise ValueError("differential does not square to zero")
    dim = sum(f.width for f in torsion) if free == 0 else None
    return HomologyModule(free, torsion, dim)


def certify_nonvanishing(d: SparseMatrix) -> bool:
    """True if the augmented F2 complex has nonzero homology (implies nonvanishing)."""
    a = d.augment()
    return a.shape[0] - 2 * f2_rank(a) > 0
