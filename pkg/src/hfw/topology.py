"""Periodic domains, admissibility, area assignments and relative Spin^c."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .diagram import Arc, Diagram, Generator, Traversal, as_generator, enumerate_generators, _parse_arc
from .exactlp import linprog
from .intlinalg import IntegerSystem, Lattice, rank_q


class NotPeriodic(ValueError):
    pass


class PathInvalid(ValueError):
    pass


class Infeasible(ValueError):
    pass


class NotAdmissible(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"NotAdmissible: positive periodic domain {witness}")


def basepoint_indices(diag: Diagram, basepoints=None):
    ids = diag.basepoints if basepoints is None else basepoints
    idx = diag.region_index
    out = []
    for b in ids:
        if b not in idx:
            raise ValueError(f"unknown region {b!r}")
        out.append(idx[b])
    return tuple(out)


# ----------------------------------------------------------------------
# the boundary system


class DomainSystem:
    """Corner-boundary equations of domains for a fixed basepoint set.

    Row layout: one alpha row and one beta row per intersection point
    (in ``diag.points`` order), then one row per basepoint.
    """

    def __init__(self, diag: Diagram, basepoints):
        self.diag = diag
        self.basepoints = tuple(basepoints)
        self.nregions = len(diag.regions)
        self.point_row = {p.id: k for k, p in enumerate(diag.points)}
        npts = len(diag.points)
        coef = diag.arc_coefficients
        index = diag.arc_index
        rows = []
        for kind in ("A", "B"):
            for p in diag.points:
                curve = p.alpha if kind == "A" else p.beta
                prev = index[Arc(kind, curve, diag.predecessor(kind, curve, p.id))]
                here = index[Arc(kind, curve, p.id)]
                row = [0] * self.nregions
                for r, c in coef.get(prev, {}).items():
                    row[r] += c
                for r, c in coef.get(here, {}).items():
                    row[r] -= c
                rows.append(row)
        for b in self.basepoints:
            row = [0] * self.nregions
            row[b] = 1
            rows.append(row)
        self.matrix = rows
        self.npts = npts
        self.system = IntegerSystem(rows, self.nregions)
        self.lattice = Lattice(self.system.kernel(), self.nregions)

    def rhs(self, x: Generator, y: Generator):
        b = [0] * len(self.matrix)
        n = self.npts
        for p in x.points:
            b[self.point_row[p]] -= 1
            b[n + self.point_row[p]] += 1
        for p in y.points:
            b[self.point_row[p]] += 1
            b[n + self.point_row[p]] -= 1
        return b

    def satisfies(self, D, x, y):
        b = self.rhs(x, y)
        return all(sum(a * v for a, v in zip(row, D)) == t for row, t in zip(self.matrix, b))

    def connecting(self, x, y):
        """A domain from ``x`` to ``y`` avoiding the basepoints, or ``None``."""
        return self.system.solve(self.rhs(x, y))


def domain_system(diag: Diagram, basepoints=None) -> DomainSystem:
    key = ("domain_system", basepoint_indices(diag, basepoints))
    cache = diag._cache
    if key not in cache:
        cache[key] = DomainSystem(diag, key[1])
    return cache[key]


# ----------------------------------------------------------------------
# periodic domains


@dataclass(frozen=True)
class PeriodicBasis:
    basis: tuple  # tuple of domain vectors (tuples over regions)
    beta_boundaries: tuple  # per basis element, coefficients of beta_1..beta_d
    region_ids: tuple

    @property
    def rank(self):
        return len(self.basis)

    def to_json(self):
        return {
            "rank": self.rank,
            "regions": list(self.region_ids),
            "basis": [list(v) for v in self.basis],
            "beta_boundaries": [list(c) for c in self.beta_boundaries],
        }


def curve_coefficients(diag: Diagram, D):
    """Coefficient of every arc in the oriented boundary of ``D``."""
    coef = diag.arc_coefficients
    out = []
    for a in range(len(diag.arcs)):
        out.append(sum(c * D[r] for r, c in coef.get(a, {}).items()))
    return out


def _curve_sum(diag, D, kind):
    values = curve_coefficients(diag, D)
    index = diag.arc_index
    result = []
    for i in range(1, diag.d + 1):
        cs = {values[index[a]] for a in diag.curve_arcs(kind, i)}
        if len(cs) != 1:
            raise NotPeriodic(f"boundary of the domain does not close along {kind}{i}")
        result.append(cs.pop())
    return result


def beta_boundary(diag: Diagram, D):
    """Integer vector ``c`` with ``d_beta D = sum c_j beta_j``."""
    _curve_sum(diag, D, "A")
    return _curve_sum(diag, D, "B")


def alpha_boundary(diag: Diagram, D):
    return _curve_sum(diag, D, "A")


def periodic_domains(diag: Diagram, basepoints=None) -> PeriodicBasis:
    system = domain_system(diag, basepoints)
    basis = tuple(tuple(v) for v in system.lattice.basis)
    return PeriodicBasis(basis, tuple(tuple(beta_boundary(diag, v)) for v in basis),
                         tuple(diag.region_ids))


# ----------------------------------------------------------------------
# admissibility and areas


def _primitive(values):
    den = 1
    for v in values:
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


def check_weak_admissibility(diag: Diagram, basepoints=None):
    """Return ``(True, None)`` or ``(False, witness)`` with a one-signed periodic domain."""
    pb = periodic_domains(diag, basepoints)
    r = pb.rank
    if r == 0:
        return True, None
    R = len(diag.regions)
    # lambda free; D = sum lambda_j P_j >= 0; sum of D = 1
    A_ub = [[-pb.basis[j][k] for j in range(r)] for k in range(R)]
    b_ub = [0] * R
    A_eq = [[sum(pb.basis[j]) for j in range(r)]]
    res = linprog([0] * r, A_ub, b_ub, A_eq, [1], free=range(r))
    if res.status != "optimal":
        return True, None
    lam = _primitive(res.x)
    witness = [sum(lam[j] * pb.basis[j][k] for j in range(r)) for k in range(R)]
    return False, witness


def area_assignment(diag: Diagram, large=(), small=(), basepoints=None,
                    epsilon=Fraction(1, 100), K=100):
    """Positive rational areas with every periodic domain of area zero.

    Regions in ``small`` get area below ``epsilon`` times every other area;
    regions in ``large`` get area above ``K`` times every other area.
    Minimises the total area so trivial cases return all ones.
    """
    pb = periodic_domains(diag, basepoints)
    idx = diag.region_index
    R = len(diag.regions)
    small_ix = {idx[s] for s in small}
    large_ix = {idx[s] for s in large}
    if small_ix & large_ix:
        raise Infeasible("a region cannot be both small and large")
    others = [k for k in range(R) if k not in small_ix and k not in large_ix]
    # variables: areas, then lo (min of others), then hi (max of others)
    n = R + 2
    LO, HI = R, R + 1
    A_ub, b_ub = [], []

    def row(terms):
        v = [Fraction(0)] * n
        for k, c in terms.items():
            v[k] += c
        return v

    for k in range(R):
        A_ub.append(row({k: -1}))
        b_ub.append(-1)
    for k in others:
        A_ub.append(row({LO: 1, k: -1}))
        b_ub.append(0)
        A_ub.append(row({k: 1, HI: -1}))
        b_ub.append(0)
    for s in small_ix:
        # area_s + 1 <= epsilon * lo
        A_ub.append(row({s: 1, LO: -Fraction(epsilon)}))
        b_ub.append(-1)
    for g in large_ix:
        # area_g >= K * hi + 1
        A_ub.append(row({g: -1, HI: K}))
        b_ub.append(-1)
    if not others:
        A_ub.append(row({LO: 1}))
        b_ub.append(1)
        A_ub.append(row({HI: 1}))
        b_ub.append(1)
    A_eq = [list(P) + [0, 0] for P in pb.basis]
    b_eq = [0] * len(A_eq)
    res = linprog([1] * R + [0, 0], A_ub, b_ub, A_eq, b_eq)
    if res.status != "optimal":
        ok, witness = check_weak_admissibility(diag, basepoints)
        detail = "" if ok else f"; positive periodic domain {witness}"
        raise Infeasible("no area assignment satisfies the constraints" + detail)
    return {diag.regions[k].id: res.x[k] for k in range(R)}


def area(areas, diag, D):
    return sum((areas[r.id] * D[k] for k, r in enumerate(diag.regions)), Fraction(0))


# ----------------------------------------------------------------------
# relative Spin^c


@dataclass(frozen=True)
class GradingPath:
    traversals: tuple

    @classmethod
    def parse(cls, diag, text):
        toks = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0]
            col = 1
            for tok in line.split():
                col = line.index(tok, col - 1) + 1
                toks.append(_parse_arc(diag, tok, col, lineno))
        return cls(tuple(toks))


def validate_path(diag: Diagram, path: GradingPath, x0: Generator):
    """Raise :class:`PathInvalid` unless ``path`` is a simple arc-path through ``x0``."""
    ts = path.traversals
    if not ts:
        verts = set()
    else:
        verts = [diag.start(ts[0])]
        for a, b in zip(ts, ts[1:]):
            if diag.end(a) != diag.start(b):
                raise PathInvalid(f"path is disconnected after {a}")
        verts += [diag.end(t) for t in ts]
        if len(set(verts)) != len(verts):
            raise PathInvalid("path revisits a point")
        verts = set(verts)
    missing = [p for p in x0.points if p not in verts]
    if ts and missing:
        raise PathInvalid(f"path misses base generator points {missing}")
    if not ts and len(set(x0.points)) > 1:
        raise PathInvalid("empty path cannot join several base generator points")
    for kind in ("A", "B"):
        for i in range(1, diag.d + 1):
            used = {t.arc for t in ts if t.arc.kind == kind and t.arc.curve == i}
            if not used:
                continue
            arcs = diag.curve_arcs(kind, i)
            if len(used) == len(arcs):
                raise PathInvalid(f"path covers all of {kind}{i}")
            flags = [a in used for a in arcs]
            runs = sum(1 for k in range(len(flags)) if flags[k] and not flags[k - 1])
            if runs != 1:
                raise PathInvalid(f"path meets {kind}{i} in a disconnected set")


def _alpha_arc_pairing(diag, t, j):
    """Signed crossings of an alpha traversal with the left push-off of beta_j."""
    pmap = diag.point_map
    p, q = t.arc.tail, diag.head(t.arc)
    total = 0
    if pmap[q].beta == j and diag.sign(q) == 1:
        total += 1
    if pmap[p].beta == j and diag.sign(p) == -1:
        total += -1
    return total if t.forward else -total


def epsilon_cycle(diag: Diagram, x0: Generator, x: Generator, path: GradingPath | None = None):
    """Traversals of the 1-cycle joining ``x0`` to ``x`` along alpha, back along beta."""
    pmap = diag.point_map
    out = []
    for i in range(diag.d):
        p, q = x0.points[i], x.points[i]
        while p != q:
            out.append((Arc("A", i + 1, p), True))
            p = diag.successor("A", i + 1, p)
    y = {pmap[p].beta: p for p in x.points}
    y0 = {pmap[p].beta: p for p in x0.points}
    for j in range(1, diag.d + 1):
        p, q = y[j], y0[j]
        while p != q:
            out.append((Arc("B", j, p), True))
            p = diag.successor("B", j, p)
    if path is not None and path.traversals:
        ts = path.traversals
        seq = [diag.start(ts[0])] + [diag.end(t) for t in ts]
        pos = {v: k for k, v in enumerate(seq)}
        for i in range(diag.d):
            a, b = pos[y0[i + 1]], pos[x0.points[i]]
            if a <= b:
                out.extend((t.arc, t.forward) for t in ts[a:b])
            else:
                out.extend((t.arc, not t.forward) for t in reversed(ts[b:a]))
    return out


def beta_pairings(diag: Diagram, x0: Generator, x: Generator, path=None):
    """``<epsilon(x0, x), beta_k>`` for k = 1..d.

    Beta arcs miss the push-offs of every beta curve, so only alpha arcs
    contribute.
    """
    cycle = epsilon_cycle(diag, x0, x, path)
    out = []
    for k in range(1, diag.d + 1):
        s = 0
        for arc, forward in cycle:
            if arc.kind == "A":
                s += _alpha_arc_pairing(diag, Traversal(arc, forward), k)
        out.append(s)
    return out


def spinc_relative(diag: Diagram, path, x0, x, basepoints=None):
    """Relative Spin^c vector of ``x`` with respect to ``x0``."""
    x0 = as_generator(diag, x0)
    x = as_generator(diag, x)
    if path is not None:
        validate_path(diag, path, x0)
    pb = periodic_domains(diag, basepoints)
    pair = beta_pairings(diag, x0, x, path)
    return tuple(sum(c * e for c, e in zip(row, pair)) for row in pb.beta_boundaries)


def spinc_absolute(diag, path, x0, x, basepoints=None):
    rel = spinc_relative(diag, path, x0, x, basepoints)
    if diag.offset is None:
        return rel
    return tuple(a + b for a, b in zip(rel, diag.offset))


def partition_by_spinc(diag: Diagram, path=None, x0=None, basepoints=None):
    gens = enumerate_generators(diag)
    if not gens:
        return {}
    x0 = gens[0] if x0 is None else as_generator(diag, x0)
    if path is not None:
        validate_path(diag, path, x0)
    classes = {}
    for g in gens:
        classes.setdefault(spinc_relative(diag, path, x0, g, basepoints), []).append(g)
    return classes


def format_triple(t):
    return "(" + ",".join(str(v) for v in t) + ")"


def parse_triple(text):
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(int(v) for v in text.split(","))


def thurston_conclusion(classes) -> bool:
    """Decide whether two nonvanishing classes with zero first entry are independent.

    ``classes`` is an iterable of ``(triple, nonvanishing)`` pairs.  Images
    are taken in the quotient by the first coordinate axis.
    """
    images = [tuple(t[1:]) for t, nonzero in classes if nonzero and t and t[0] == 0]
    images = [v for v in images if any(v)]
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if rank_q([list(images[i]), list(images[j])]) == 2:
                return True
    return False
