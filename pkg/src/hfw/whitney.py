"""Whitney disk classes: domains, Maslov index, positivity, shapes and counts."""
from __future__ import annotations

import fnmatch
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .diagram import Diagram, Generator, as_generator, enumerate_generators
from .exactlp import linprog
from .topology import NotAdmissible, area, check_weak_admissibility, domain_system


class MalformedDomain(ValueError):
    pass


class EndpointMismatch(ValueError):
    pass


@dataclass(frozen=True)
class DiskClass:
    source: Generator
    target: Generator
    domain: tuple

    def to_json(self, diag=None):
        out = {"from": str(self.source), "to": str(self.target), "domain": list(self.domain)}
        if diag is not None:
            out["support"] = {r.id: v for r, v in zip(diag.regions, self.domain) if v}
            out["maslov"] = maslov_index(diag, self)
        return out


@dataclass(frozen=True)
class ConnectingSet:
    """Affine lattice ``base + span(periods)`` of domains from x to y."""

    base: tuple
    periods: tuple

    def __contains__(self, D):
        diff = [a - b for a, b in zip(D, self.base)]
        from .intlinalg import Lattice
        return Lattice([list(p) for p in self.periods], len(self.base)).coordinates(diff) is not None


def connecting_domains(diag: Diagram, x, y, basepoints=None):
    """Domains of classes in pi_2(x, y) avoiding the basepoints, or ``None``."""
    x = as_generator(diag, x)
    y = as_generator(diag, y)
    system = domain_system(diag, basepoints)
    base = system.connecting(x, y)
    if base is None:
        return None
    base = system.lattice.reduce(base)
    return ConnectingSet(tuple(base), tuple(tuple(p) for p in system.lattice.basis))


# ----------------------------------------------------------------------
# Maslov index


def point_multiplicity(diag: Diagram, D, pid):
    """Average multiplicity of ``D`` over the four quadrants at ``pid``."""
    quads = diag.corners[pid]
    return Fraction(sum(D[regs[0]] for regs in quads.values()), 4)


def euler_measure(diag: Diagram, D):
    return sum((diag.euler_measure(r) * D[r] for r in range(len(D)) if D[r]), Fraction(0))


def check_class(diag: Diagram, phi: DiskClass):
    system = domain_system(diag, ())
    if len(phi.domain) != len(diag.regions) or not system.satisfies(phi.domain, phi.source, phi.target):
        raise MalformedDomain(f"domain does not connect {phi.source} to {phi.target}")


def maslov_index(diag: Diagram, phi: DiskClass, check=True) -> int:
    """Euler measure plus the point measures at both endpoints."""
    if check:
        check_class(diag, phi)
    D = phi.domain
    mu = euler_measure(diag, D)
    for p in phi.source.points:
        mu += point_multiplicity(diag, D, p)
    for p in phi.target.points:
        mu += point_multiplicity(diag, D, p)
    if mu.denominator != 1:
        raise MalformedDomain(f"non-integral index {mu}")
    return int(mu)


# ----------------------------------------------------------------------
# lattice points of polytopes


def lattice_points(base, periods, lower=None, upper=None):
    """Integer ``lam`` with ``lower <= base + lam @ periods <= upper`` (bounded case).

    Bounds are per-coordinate lists; ``None`` entries mean unbounded.
    Raises :class:`NotAdmissible` if the set is unbounded.
    """
    R = len(base)
    r = len(periods)
    lower = lower if lower is not None else [0] * R
    upper = upper if upper is not None else [None] * R

    def feasible_box(fixed):
        # constraints on the free coordinates lam[len(fixed):]
        k = len(fixed)
        A_ub, b_ub = [], []
        for i in range(R):
            const = base[i] + sum(fixed[j] * periods[j][i] for j in range(k))
            coeffs = [periods[j][i] for j in range(k, r)]
            if lower[i] is not None:
                A_ub.append([-c for c in coeffs])
                b_ub.append(const - lower[i])
            if upper[i] is not None:
                A_ub.append(coeffs)
                b_ub.append(upper[i] - const)
        return A_ub, b_ub

    def check(point):
        D = [base[i] + sum(point[j] * periods[j][i] for j in range(r)) for i in range(R)]
        for i in range(R):
            if lower[i] is not None and D[i] < lower[i]:
                return None
            if upper[i] is not None and D[i] > upper[i]:
                return None
        return D

    if r == 0:
        D = check([])
        return [([], D)] if D is not None else []

    out = []

    def recurse(fixed):
        k = len(fixed)
        if k == r:
            D = check(fixed)
            if D is not None:
                out.append((list(fixed), D))
            return
        A_ub, b_ub = feasible_box(fixed)
        nfree = r - k
        if not A_ub:
            raise NotAdmissible(None)
        c = [0] * nfree
        c[0] = 1
        lo = linprog(c, A_ub, b_ub, free=range(nfree))
        if lo.status == "infeasible":
            return
        hi = linprog([-v for v in c], A_ub, b_ub, free=range(nfree))
        if lo.status == "unbounded" or hi.status == "unbounded":
            raise NotAdmissible(None)
        for v in range(math.ceil(lo.x[0]), math.floor(hi.x[0]) + 1):
            fixed.append(v)
            recurse(fixed)
            fixed.pop()

    recurse([])
    return out


def positive_classes(diag: Diagram, x, y, index=1, areas=None, basepoints=None, upper=None):
    """All positive classes in pi_2(x, y) of the given index avoiding the basepoints."""
    x = as_generator(diag, x)
    y = as_generator(diag, y)
    conn = connecting_domains(diag, x, y, basepoints)
    if conn is None:
        return []
    if conn.periods and upper is None:
        ok, witness = check_weak_admissibility(diag, basepoints)
        if not ok:
            raise NotAdmissible(witness)
    found = []
    for _, D in lattice_points(conn.base, conn.periods, upper=upper):
        phi = DiskClass(x, y, tuple(D))
        if index is None or maslov_index(diag, phi, check=False) == index:
            found.append(phi)
    if areas is not None and found:
        values = {area(areas, diag, phi.domain) for phi in found}
        if len(values) != 1:
            raise ValueError("areas do not vanish on the periodic domains")
    found.sort(key=lambda phi: phi.domain)
    return found


def juxtapose(diag: Diagram, phi1: DiskClass, phi2: DiskClass) -> DiskClass:
    if phi1.target != phi2.source:
        raise EndpointMismatch(f"{phi1.target} != {phi2.source}")
    return DiskClass(phi1.source, phi2.target, tuple(a + b for a, b in zip(phi1.domain, phi2.domain)))


def degenerations(diag: Diagram, psi: DiskClass, areas=None, basepoints=None):
    """Ordered pairs of positive index-1 classes whose juxtaposition is ``psi``."""
    out = []
    D = list(psi.domain)
    for w in enumerate_generators(diag):
        for phi1 in positive_classes(diag, psi.source, w, 1, None, basepoints, upper=D):
            rest = tuple(a - b for a, b in zip(D, phi1.domain))
            phi2 = DiskClass(w, psi.target, rest)
            system = domain_system(diag, ())
            if min(rest) < 0 or not system.satisfies(rest, w, psi.target):
                continue
            if maslov_index(diag, phi2, check=False) == 1:
                out.append((phi1, phi2))
    return out


# ----------------------------------------------------------------------
# shapes


@dataclass(frozen=True)
class ShapeSignature:
    kind: str  # Bigon, Rectangle, PhiKLN, PhiNM, GenusOneTwoEdge, Unknown
    params: tuple = ()
    genus: int | None = None
    components: int | None = None
    edges: tuple = ()  # corners per boundary component
    obtuse: tuple = ()  # obtuse corners per boundary component
    interior: int = 0
    reason: str = ""

    @property
    def name(self):
        if self.params:
            return f"{self.kind}({','.join(str(p) for p in self.params)})"
        return self.kind

    @property
    def key(self):
        if self.genus is None:
            return f"unknown/{self.reason}"
        return (f"g{self.genus}/b{self.components}/e{','.join(map(str, self.edges))}"
                f"/o{','.join(map(str, self.obtuse))}/i{self.interior}")

    def to_json(self):
        return {"kind": self.kind, "params": list(self.params), "name": self.name, "key": self.key}


def _unknown(reason, **kw):
    return ShapeSignature("Unknown", reason=reason, **kw)


def classify_shape(diag: Diagram, phi: DiskClass) -> ShapeSignature:
    D = phi.domain
    if any(v not in (0, 1) for v in D):
        return _unknown("multiplicity")
    if not any(D):
        return _unknown("empty")
    support = {r for r, v in enumerate(D) if v}
    pmap = diag.point_map
    corners = diag.corners

    # quadrant pattern at each point
    status = {}
    for p in diag.points:
        quads = corners[p.id]
        inside = {q for q, regs in quads.items() if D[regs[0]]}
        n = len(inside)
        if n == 0:
            continue
        if n == 2:
            (a1, b1), (a2, b2) = sorted(inside)
            if a1 != a2 and b1 != b2:
                return _unknown("pinch")
        status[p.id] = (n, inside)

    # boundary arcs: exactly one side inside
    coef = diag.arc_coefficients
    sides = {}
    for region_index, region in enumerate(diag.regions):
        for comp in region.boundary:
            for t in comp:
                sides.setdefault(t.arc, []).append(region_index)
    boundary_arcs = [a for a in diag.arcs if sum(1 for r in sides[a] if r in support) == 1]
    closure_arcs = [a for a in diag.arcs if any(r in support for r in sides[a])]

    chi = len(status) - len(closure_arcs)
    for r in support:
        region = diag.regions[r]
        chi += 2 - 2 * region.genus - len(region.boundary)

    # connectivity of the support through interior arcs
    parent = {r: r for r in support}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for a in diag.arcs:
        rs = [r for r in sides[a] if r in support]
        if len(rs) == 2:
            parent[find(rs[0])] = find(rs[1])
    if len({find(r) for r in support}) != 1:
        return _unknown("disconnected")

    # boundary components as cycles in the boundary graph
    adj = {}
    for a in boundary_arcs:
        u, v = a.tail, diag.head(a)
        adj.setdefault(u, []).append(a)
        adj.setdefault(v, []).append(a)
    seen = set()
    comps = []
    for a0 in boundary_arcs:
        if a0 in seen:
            continue
        verts = set()
        stack = [a0]
        seen.add(a0)
        while stack:
            a = stack.pop()
            for v in (a.tail, diag.head(a)):
                verts.add(v)
                for b in adj[v]:
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
        comps.append(verts)
    b = len(comps)
    if (2 - b - chi) % 2:
        return _unknown("euler")
    genus = (2 - b - chi) // 2

    acute = {p for p, (n, _) in status.items() if n == 1}
    obtuse = {p for p, (n, _) in status.items() if n == 3}
    interior = sorted(p for p, (n, _) in status.items() if n == 4)
    edges = []
    obtuse_per = []
    for verts in comps:
        edges.append(sum(1 for v in verts if v in acute or v in obtuse))
        obtuse_per.append(sum(1 for v in verts if v in obtuse))
    order = sorted(range(b), key=lambda k: (edges[k], obtuse_per[k]))
    comps = [comps[k] for k in order]
    edges = tuple(edges[k] for k in order)
    obtuse_per = tuple(obtuse_per[k] for k in order)
    info = dict(genus=genus, components=b, edges=edges, obtuse=obtuse_per, interior=len(interior))

    def pair(pid):
        p = pmap[pid]
        return (p.alpha, p.beta)

    total_obtuse = sum(obtuse_per)
    if genus == 0 and b == 1 and total_obtuse == 0 and not interior:
        if edges == (2,):
            return ShapeSignature("Bigon", (), **info)
        if edges == (4,):
            return ShapeSignature("Rectangle", (), **info)
    if genus == 0 and b == 2 and total_obtuse == 1 and all(e % 2 == 0 and e > 0 for e in edges):
        kk = [k for k in range(2) if obtuse_per[k] == 1][0]
        corner = next(p for p in comps[kk] if p in obtuse)
        if all(pair(p) == pair(corner) for p in interior):
            k_edges = edges[1 - kk] // 2
            l_edges = edges[kk] // 2
            return ShapeSignature("PhiKLN", (k_edges, l_edges, 1 + len(interior)), **info)
    if genus == 0 and b == 3 and edges == (2, 2, 2) and total_obtuse == 2:
        counts = []
        pairs = []
        for k in range(3):
            if obtuse_per[k]:
                corner = next(p for p in comps[k] if p in obtuse)
                pairs.append(pair(corner))
                counts.append(2 + sum(1 for p in interior if pair(p) == pair(corner)))
        if len(pairs) == 2 and all(pair(p) in pairs for p in interior):
            n, m = sorted(counts, reverse=True)
            return ShapeSignature("PhiNM", (n, m), **info)
    if genus == 1 and b == 1 and edges == (2,) and total_obtuse == 0 and len(interior) == 1:
        u = interior[0]
        if u in phi.source.points and u in phi.target.points:
            return ShapeSignature("GenusOneTwoEdge", (), **info)
    return _unknown("no-rule", **info)


# ----------------------------------------------------------------------
# count rules


@dataclass(frozen=True)
class CountRule:
    pattern: str
    count: int

    def matches(self, sig: ShapeSignature):
        return (fnmatch.fnmatchcase(sig.name, self.pattern)
                or fnmatch.fnmatchcase(sig.kind, self.pattern)
                or fnmatch.fnmatchcase(sig.key, self.pattern))


class RulesSyntaxError(ValueError):
    pass


def parse_rules(text):
    rules = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] != "rule" or parts[2] != "count" or parts[3] not in ("0", "1"):
            raise RulesSyntaxError(f"line {lineno}: expected 'rule <pattern> count <0|1>'")
        rules.append(CountRule(parts[1], int(parts[3])))
    return rules


def default_rules():
    text = resources.files("hfw").joinpath("data/default.rules").read_text(encoding="utf-8")
    return parse_rules(text)


def load_rules(path=None):
    """User rules (if any) take precedence over the shipped table."""
    rules = []
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            rules = parse_rules(fh.read())
    return rules + default_rules()


def count_holomorphic(sig: ShapeSignature, rules=None):
    """Return 0, 1, or ``None`` when no rule applies."""
    if rules is None:
        rules = default_rules()
    for rule in rules:
        if rule.matches(sig):
            return rule.count
    return None
