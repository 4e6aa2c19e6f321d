"""Combinatorial multi-pointed Heegaard diagrams.

A diagram is stored region-first: every region of the complement of the
curves carries a genus and one cyclic boundary word per boundary
component.  Boundary words are read with the region on the left, so each
arc of a curve is traversed once forwards and once backwards over the
whole diagram.

The ``.hd`` text format is line oriented::

    diagram s3
    genus 1
    curves 1
    point p alpha 1 beta 1 index 1
    alpha 1 : p
    beta 1 : p
    region D0 genus 0 : ( A1[p->p] B1[p->p] A1~[p->p] B1~[p->p] )
    basepoints : D0

An arc token ``A<i>[p->q]`` moves from ``p`` to ``q`` along alpha_i.  When
both directions are possible (curves with one or two points) the forward
reading is taken; ``A<i>~[p->q]`` forces the backward one.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple


class DiagramError(ValueError):
    """Base class for malformed diagram input."""


class DiagramSyntaxError(DiagramError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class UndeclaredReference(DiagramError):
    def __init__(self, name, line=None, column=None):
        self.name = name
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"UndeclaredReference({name!r}){where}")


class DuplicateId(DiagramError):
    def __init__(self, name, line=None, column=None):
        self.name = name
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"DuplicateId({name!r}){where}")


@dataclass(frozen=True)
class IntersectionPoint:
    id: str
    alpha: int
    beta: int
    index: int


class Arc(NamedTuple):
    """Arc of a curve from ``tail`` to the next point along the curve."""

    kind: str  # "A" or "B"
    curve: int
    tail: str


class Traversal(NamedTuple):
    arc: Arc
    forward: bool


@dataclass(frozen=True)
class Region:
    id: str
    genus: int
    boundary: tuple  # tuple of components, each a tuple of Traversal


@dataclass(frozen=True)
class Generator:
    """One intersection point per alpha curve; ``points[i]`` lies on alpha_{i+1}."""

    points: tuple

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __str__(self):
        return "(" + " ".join(self.points) + ")"

    @classmethod
    def parse(cls, text):
        parts = [p for p in re.split(r"[\s,()]+", text) if p]
        return cls(tuple(parts))


class Violation(NamedTuple):
    code: str
    entity: str
    detail: str


def _natural_key(s):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


@dataclass(frozen=True)
class Diagram:
    name: str
    genus: int
    d: int
    points: tuple  # IntersectionPoint, canonical order
    alpha_orders: tuple  # alpha_orders[i] is the cyclic order along alpha_{i+1}
    beta_orders: tuple
    regions: tuple
    basepoints: tuple  # region ids, the first one is the distinguished z
    offset: tuple | None = None
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    # ------------------------------------------------------------------
    # lookups

    @property
    def point_map(self):
        c = self._cache
        if "point_map" not in c:
            c["point_map"] = {p.id: p for p in self.points}
        return c["point_map"]

    @property
    def region_index(self):
        c = self._cache
        if "region_index" not in c:
            c["region_index"] = {r.id: k for k, r in enumerate(self.regions)}
        return c["region_index"]

    @property
    def region_ids(self):
        return [r.id for r in self.regions]

    def order(self, kind, curve):
        return (self.alpha_orders if kind == "A" else self.beta_orders)[curve - 1]

    def successor(self, kind, curve, pid):
        table = self._cache.setdefault("succ", {})
        key = (kind, curve)
        if key not in table:
            order = self.order(kind, curve)
            table[key] = {p: order[(k + 1) % len(order)] for k, p in enumerate(order)}
        return table[key][pid]

    def predecessor(self, kind, curve, pid):
        table = self._cache.setdefault("pred", {})
        key = (kind, curve)
        if key not in table:
            order = self.order(kind, curve)
            table[key] = {p: order[(k - 1) % len(order)] for k, p in enumerate(order)}
        return table[key][pid]

    def head(self, arc):
        return self.successor(arc.kind, arc.curve, arc.tail)

    def start(self, t):
        return t.arc.tail if t.forward else self.head(t.arc)

    def end(self, t):
        return self.head(t.arc) if t.forward else t.arc.tail

    @property
    def arcs(self):
        c = self._cache
        if "arcs" not in c:
            arcs = []
            for kind, orders in (("A", self.alpha_orders), ("B", self.beta_orders)):
                for i, order in enumerate(orders, start=1):
                    arcs.extend(Arc(kind, i, p) for p in order)
            c["arcs"] = tuple(arcs)
            c["arc_index"] = {a: k for k, a in enumerate(arcs)}
        return c["arcs"]

    @property
    def arc_index(self):
        self.arcs
        return self._cache["arc_index"]

    def curve_arcs(self, kind, curve):
        return [Arc(kind, curve, p) for p in self.order(kind, curve)]

    def region_of_basepoint(self, rid):
        return self.region_index[rid]

    def intersection_matrix(self):
        m = [[0] * self.d for _ in range(self.d)]
        for p in self.points:
            m[p.alpha - 1][p.beta - 1] += 1
        return m

    # ------------------------------------------------------------------
    # derived local structure

    @property
    def arc_coefficients(self):
        """``{arc_index: {region_index: signed count}}`` of boundary occurrences."""
        c = self._cache
        if "arc_coef" not in c:
            table = {}
            for r, region in enumerate(self.regions):
                for comp in region.boundary:
                    for t in comp:
                        a = self.arc_index.get(t.arc)
                        if a is None:
                            continue
                        row = table.setdefault(a, {})
                        row[r] = row.get(r, 0) + (1 if t.forward else -1)
            c["arc_coef"] = table
        return c["arc_coef"]

    @property
    def corners(self):
        """``{point: {(alpha_ray, beta_ray): [region_index, ...]}}``.

        A quadrant is named by the alpha ray and beta ray bounding it; a ray
        is +1 when it leaves the point along the curve orientation.
        """
        c = self._cache
        if "corners" not in c:
            c["corners"], c["corner_signs"] = self._scan_corners()
        return c["corners"]

    @property
    def corner_signs(self):
        self.corners
        return self._cache["corner_signs"]

    def _scan_corners(self):
        corners = {p.id: {} for p in self.points}
        signs = {p.id: [] for p in self.points}
        for r, region in enumerate(self.regions):
            for comp in region.boundary:
                n = len(comp)
                for k in range(n):
                    t_in, t_out = comp[k], comp[(k + 1) % n]
                    v = self.end(t_in)
                    if v != self.start(t_out) or t_in.arc.kind == t_out.arc.kind:
                        continue
                    d_in = 1 if t_in.forward else -1
                    d_out = 1 if t_out.forward else -1
                    if t_in.arc.kind == "A":
                        quadrant = (-d_in, d_out)
                        sign = d_in * d_out
                    else:
                        quadrant = (d_out, -d_in)
                        sign = -d_in * d_out
                    corners.setdefault(v, {}).setdefault(quadrant, []).append(r)
                    signs.setdefault(v, []).append(sign)
        return corners, signs

    def sign(self, pid):
        """Local intersection sign of alpha and beta at ``pid``."""
        s = self.corner_signs.get(pid) or [1]
        return s[0]

    def quadrant_region(self, pid, quadrant):
        return self.corners[pid][quadrant][0]

    def corner_count(self, r):
        region = self.regions[r]
        count = 0
        for comp in region.boundary:
            n = len(comp)
            for k in range(n):
                if comp[k].arc.kind != comp[(k + 1) % n].arc.kind:
                    count += 1
        return count

    def euler_measure(self, r):
        """Euler measure of region ``r``; every region corner is a right angle."""
        region = self.regions[r]
        chi = 2 - 2 * region.genus - len(region.boundary)
        return Fraction(chi) - Fraction(self.corner_count(r), 4)

    def euler_characteristic(self):
        v = len(self.points)
        e = len(self.arcs)
        faces = sum(2 - 2 * r.genus - len(r.boundary) for r in self.regions)
        return v - e + faces

    def base_generator(self):
        gens = enumerate_generators(self)
        return gens[0] if gens else None


# ----------------------------------------------------------------------
# parsing and serialisation

_TOKEN = re.compile(r"\S+")
_ARC = re.compile(r"^([AB])(\d+)(~?)\[([^\]\-]+)->([^\]]+)\]$")


def _tokens(line):
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]


def _int(tok, lineno):
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise DiagramSyntaxError(f"expected integer, got {text!r}", lineno, col) from None


def _expect(toks, k, word, lineno):
    if k >= len(toks) or toks[k][0] != word:
        col = toks[k][1] if k < len(toks) else (toks[-1][1] + len(toks[-1][0]) if toks else 1)
        raise DiagramSyntaxError(f"expected {word!r}", lineno, col)


def parse_diagram(text: str) -> Diagram:
    """Parse ``.hd`` text into a :class:`Diagram`."""
    name = None
    genus = None
    d = None
    raw_points = []
    orders = {"A": {}, "B": {}}
    raw_regions = []
    basepoints = None
    offset = None

    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        head = toks[0][0]
        if head == "diagram":
            if len(toks) != 2:
                raise DiagramSyntaxError("usage: diagram <name>", lineno, toks[0][1])
            name = toks[1][0]
        elif head == "genus":
            if len(toks) != 2:
                raise DiagramSyntaxError("usage: genus <G>", lineno, toks[0][1])
            genus = _int(toks[1], lineno)
        elif head == "curves":
            if len(toks) != 2:
                raise DiagramSyntaxError("usage: curves <d>", lineno, toks[0][1])
            d = _int(toks[1], lineno)
        elif head == "point":
            if len(toks) != 8:
                raise DiagramSyntaxError(
                    "usage: point <id> alpha <i> beta <j> index <k>", lineno, toks[0][1])
            _expect(toks, 2, "alpha", lineno)
            _expect(toks, 4, "beta", lineno)
            _expect(toks, 6, "index", lineno)
            raw_points.append((toks[1], _int(toks[3], lineno), _int(toks[5], lineno),
                               _int(toks[7], lineno), lineno))
        elif head in ("alpha", "beta"):
            if len(toks) < 3:
                raise DiagramSyntaxError(f"usage: {head} <i> : <id> ...", lineno, toks[0][1])
            _expect(toks, 2, ":", lineno)
            kind = "A" if head == "alpha" else "B"
            i = _int(toks[1], lineno)
            if i in orders[kind]:
                raise DuplicateId(f"{head} {i}", lineno, toks[1][1])
            orders[kind][i] = ([t for t, _ in toks[3:]], [(t, c) for t, c in toks[3:]], lineno)
        elif head == "region":
            if len(toks) < 5:
                raise DiagramSyntaxError("usage: region <id> genus <g> : ( ... )", lineno, toks[0][1])
            _expect(toks, 2, "genus", lineno)
            _expect(toks, 4, ":", lineno)
            comps = []
            current = None
            for tok, col in toks[5:]:
                if tok == "(":
                    if current is not None:
                        raise DiagramSyntaxError("nested '('", lineno, col)
                    current = []
                elif tok == ")":
                    if current is None:
                        raise DiagramSyntaxError("unbalanced ')'", lineno, col)
                    comps.append(current)
                    current = None
                else:
                    if current is None:
                        raise DiagramSyntaxError(f"arc {tok!r} outside parentheses", lineno, col)
                    current.append((tok, col))
            if current is not None:
                raise DiagramSyntaxError("unclosed '('", lineno, toks[-1][1])
            raw_regions.append((toks[1], _int(toks[3], lineno), comps, lineno))
        elif head == "basepoints":
            _expect(toks, 1, ":", lineno)
            basepoints = [(t, c, lineno) for t, c in toks[2:]]
        elif head == "offset":
            _expect(toks, 1, ":", lineno)
            offset = tuple(_int(t, lineno) for t in toks[2:])
        else:
            raise DiagramSyntaxError(f"unknown statement {head!r}", lineno, toks[0][1])

    if name is None:
        raise DiagramSyntaxError("missing 'diagram' line")
    if genus is None:
        raise DiagramSyntaxError("missing 'genus' line")
    if d is None:
        raise DiagramSyntaxError("missing 'curves' line")
    if basepoints is None:
        raise DiagramSyntaxError("missing 'basepoints' line")

    pmap = {}
    for (pid, col), a, b, k, lineno in raw_points:
        if pid in pmap:
            raise DuplicateId(pid, lineno, col)
        if not (1 <= a <= d):
            raise UndeclaredReference(f"alpha {a}", lineno, col)
        if not (1 <= b <= d):
            raise UndeclaredReference(f"beta {b}", lineno, col)
        pmap[pid] = IntersectionPoint(pid, a, b, k)

    alpha_orders, beta_orders = [], []
    for kind, target in (("A", alpha_orders), ("B", beta_orders)):
        for i in range(1, d + 1):
            if i not in orders[kind]:
                word = "alpha" if kind == "A" else "beta"
                raise UndeclaredReference(f"{word} {i}")
            ids, located, lineno = orders[kind][i]
            for pid, col in located:
                if pid not in pmap:
                    raise UndeclaredReference(pid, lineno, col)
            target.append(tuple(ids))
        extra = set(orders[kind]) - set(range(1, d + 1))
        if extra:
            word = "alpha" if kind == "A" else "beta"
            raise UndeclaredReference(f"{word} {min(extra)}", orders[kind][min(extra)][2])

    points = tuple(sorted(pmap.values(), key=lambda p: (p.alpha, p.beta, p.index, _natural_key(p.id))))
    skeleton = Diagram(name, genus, d, points, tuple(alpha_orders), tuple(beta_orders), (), (), offset)

    regions = []
    seen = set()
    for (rid, col), g, comps, lineno in raw_regions:
        if rid in seen:
            raise DuplicateId(rid, lineno, col)
        seen.add(rid)
        boundary = []
        for comp in comps:
            boundary.append(tuple(_parse_arc(skeleton, tok, c, lineno) for tok, c in comp))
        regions.append(Region(rid, g, tuple(boundary)))
    regions.sort(key=lambda r: _natural_key(r.id))

    bps = []
    for rid, col, lineno in basepoints:
        if rid not in seen:
            raise UndeclaredReference(rid, lineno, col)
        if rid in bps:
            raise DuplicateId(rid, lineno, col)
        bps.append(rid)

    return Diagram(name, genus, d, points, tuple(alpha_orders), tuple(beta_orders),
                   tuple(regions), tuple(bps), offset)


def _parse_arc(diag, tok, col, lineno):
    m = _ARC.match(tok)
    if not m:
        raise DiagramSyntaxError(f"malformed arc {tok!r}", lineno, col)
    kind, curve, backward, p, q = m.group(1), int(m.group(2)), m.group(3), m.group(4), m.group(5)
    if not (1 <= curve <= diag.d):
        raise UndeclaredReference(f"{'alpha' if kind == 'A' else 'beta'} {curve}", lineno, col)
    for pid in (p, q):
        if pid not in diag.point_map:
            raise UndeclaredReference(pid, lineno, col)
    order = diag.order(kind, curve)
    if p not in order or q not in order:
        raise DiagramSyntaxError(f"{tok!r}: point not on {kind}{curve}", lineno, col)
    fwd_ok = diag.successor(kind, curve, p) == q
    bwd_ok = diag.successor(kind, curve, q) == p
    if backward:
        if not bwd_ok:
            raise DiagramSyntaxError(f"{tok!r}: no backward arc from {p} to {q}", lineno, col)
        return Traversal(Arc(kind, curve, q), False)
    if fwd_ok:
        return Traversal(Arc(kind, curve, p), True)
    if bwd_ok:
        return Traversal(Arc(kind, curve, q), False)
    raise DiagramSyntaxError(f"{tok!r}: {p} and {q} are not consecutive on {kind}{curve}", lineno, col)


def arc_token(diag, t):
    p, q = diag.start(t), diag.end(t)
    ambiguous = not t.forward and diag.successor(t.arc.kind, t.arc.curve, p) == q
    return f"{t.arc.kind}{t.arc.curve}{'~' if ambiguous else ''}[{p}->{q}]"


def _canonical_word(diag, comp):
    tokens = [arc_token(diag, t) for t in comp]
    if not tokens:
        return tokens
    rotations = [tokens[k:] + tokens[:k] for k in range(len(tokens))]
    return min(rotations, key=lambda w: [_natural_key(x) for x in w])


def serialize(diag: Diagram) -> str:
    """Canonical ``.hd`` text for ``diag``."""
    out = [f"diagram {diag.name}", f"genus {diag.genus}", f"curves {diag.d}"]
    for p in sorted(diag.points, key=lambda p: (p.alpha, p.beta, p.index, _natural_key(p.id))):
        out.append(f"point {p.id} alpha {p.alpha} beta {p.beta} index {p.index}")
    for i, order in enumerate(diag.alpha_orders, start=1):
        out.append(f"alpha {i} : " + " ".join(order))
    for j, order in enumerate(diag.beta_orders, start=1):
        out.append(f"beta {j} : " + " ".join(order))
    for region in sorted(diag.regions, key=lambda r: _natural_key(r.id)):
        words = sorted((_canonical_word(diag, c) for c in region.boundary),
                       key=lambda w: [_natural_key(x) for x in w])
        body = " ".join("( " + " ".join(w) + " )" for w in words)
        out.append(f"region {region.id} genus {region.genus} : {body}".rstrip())
    out.append("basepoints : " + " ".join(diag.basepoints))
    if diag.offset is not None:
        out.append("offset : " + " ".join(str(v) for v in diag.offset))
    return "\n".join(out) + "\n"


def canonical(text: str) -> str:
    return serialize(parse_diagram(text))


def load_diagram(path) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


# ----------------------------------------------------------------------
# validation


def validate(diag: Diagram) -> list:
    """Return every violated diagram invariant; an empty list means valid."""
    report = []
    pmap = diag.point_map

    if not diag.basepoints:
        report.append(Violation("NoBasepoint", diag.name, "basepoint set is empty"))

    triples = {}
    for p in diag.points:
        key = (p.alpha, p.beta, p.index)
        if key in triples:
            report.append(Violation("IndexClash", p.id, f"shares (alpha, beta, index) with {triples[key]}"))
        triples[key] = p.id

    for kind, orders in (("A", diag.alpha_orders), ("B", diag.beta_orders)):
        for i, order in enumerate(orders, start=1):
            if not order:
                report.append(Violation("EmptyCurve", f"{kind}{i}", "curve has no intersection points"))
            for pid in order:
                p = pmap[pid]
                owner = p.alpha if kind == "A" else p.beta
                if owner != i:
                    report.append(Violation("PointOrder", pid, f"listed on {kind}{i} but belongs to {kind}{owner}"))
            for pid in set(order):
                if order.count(pid) > 1:
                    report.append(Violation("PointOrder", pid, f"appears {order.count(pid)} times on {kind}{i}"))
    for p in diag.points:
        for kind, owner in (("A", p.alpha), ("B", p.beta)):
            if p.id not in diag.order(kind, owner):
                report.append(Violation("PointOrder", p.id, f"missing from the order of {kind}{owner}"))
    if any(v.code == "PointOrder" for v in report):
        return report

    # arc usage
    usage = {a: [] for a in diag.arcs}
    for region in diag.regions:
        for comp in region.boundary:
            for t in comp:
                usage.setdefault(t.arc, []).append((region.id, t.forward))
    for arc, uses in usage.items():
        name = f"{arc.kind}{arc.curve}[{arc.tail}->{diag.head(arc)}]"
        if len(uses) > 2:
            report.append(Violation("ArcOveruse", name, f"borders {len(uses)} region sides"))
        elif len(uses) < 2:
            report.append(Violation("ArcUnderuse", name, f"borders {len(uses)} region sides"))
        elif uses[0][1] == uses[1][1]:
            report.append(Violation("ArcOrientation", name, "both sides traverse the arc in the same direction"))

    # corners
    for region in diag.regions:
        for c, comp in enumerate(region.boundary):
            if not comp:
                report.append(Violation("CornerMismatch", region.id, f"boundary component {c} is empty"))
            for k in range(len(comp)):
                t_in, t_out = comp[k], comp[(k + 1) % len(comp)]
                if diag.end(t_in) != diag.start(t_out):
                    report.append(Violation("CornerMismatch", region.id,
                                            f"component {c}: arcs {k} and {k + 1} do not meet"))
                elif t_in.arc.kind == t_out.arc.kind:
                    report.append(Violation("CornerMismatch", region.id,
                                            f"component {c}: arcs {k} and {k + 1} do not alternate"))

    for pid, quads in diag.corners.items():
        for q in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            owners = quads.get(q, [])
            if len(owners) != 1:
                report.append(Violation("QuadrantConflict", pid,
                                        f"quadrant {q} owned {len(owners)} times"))
        signs = set(diag.corner_signs.get(pid, []))
        if len(signs) > 1:
            report.append(Violation("SignConflict", pid, "corners disagree on the crossing sign"))

    chi = diag.euler_characteristic()
    if chi != 2 - 2 * diag.genus:
        report.append(Violation("EulerCharacteristic", diag.name,
                                f"regions give chi={chi}, declared genus {diag.genus} needs {2 - 2 * diag.genus}"))
    return report


def report_json(diag, violations, generator_count=None) -> str:
    return json.dumps({
        "diagram": diag.name,
        "violations": [v._asdict() for v in violations],
        "generator_count": generator_count,
    }, indent=2)


# ----------------------------------------------------------------------
# generators


def _candidates(diag):
    pts = sorted(diag.points, key=lambda p: (p.alpha, p.beta, p.index, _natural_key(p.id)))
    per_alpha = [[] for _ in range(diag.d)]
    for p in pts:
        per_alpha[p.alpha - 1].append(p)
    return per_alpha


def enumerate_generators(diag: Diagram) -> list:
    """All matchings of alpha curves to beta curves through intersection points."""
    cached = diag._cache.get("generators")
    if cached is not None:
        return list(cached)
    per_alpha = _candidates(diag)
    out = []
    chosen = []

    def extend(i, used):
        if i == diag.d:
            out.append(Generator(tuple(chosen)))
            return
        for p in per_alpha[i]:
            bit = 1 << (p.beta - 1)
            if used & bit:
                continue
            chosen.append(p.id)
            extend(i + 1, used | bit)
            chosen.pop()

    extend(0, 0)
    diag._cache["generators"] = tuple(out)
    return list(out)


def count_generators(diag: Diagram) -> int:
    """Permanent of the intersection-count matrix, by memoised backtracking."""
    m = diag.intersection_matrix()
    d = diag.d
    memo = {}

    def count(i, used):
        if i == d:
            return 1
        key = (i, used)
        if key not in memo:
            total = 0
            for j in range(d):
                if m[i][j] and not used & (1 << j):
                    total += m[i][j] * count(i + 1, used | (1 << j))
            memo[key] = total
        return memo[key]

    return count(0, 0)


def generator_betas(diag, gen):
    pmap = diag.point_map
    return tuple(pmap[p].beta for p in gen.points)


def is_generator(diag, gen: Generator) -> bool:
    pmap = diag.point_map
    if len(gen.points) != diag.d:
        return False
    for i, pid in enumerate(gen.points, start=1):
        if pid not in pmap or pmap[pid].alpha != i:
            return False
    return sorted(generator_betas(diag, gen)) == list(range(1, diag.d + 1))


def as_generator(diag, spec) -> Generator:
    """Accept a Generator, an iterable of point ids in any order, or text."""
    if isinstance(spec, Generator):
        ids = list(spec.points)
    elif isinstance(spec, str):
        ids = list(Generator.parse(spec).points)
    else:
        ids = list(spec)
    pmap = diag.point_map
    for pid in ids:
        if pid not in pmap:
            raise UndeclaredReference(pid)
    ids.sort(key=lambda pid: pmap[pid].alpha)
    gen = Generator(tuple(ids))
    if not is_generator(diag, gen):
        raise DiagramError(f"{gen} is not a generator")
    return gen


def iter_points(diag, ids: Iterable[str]):
    pmap = diag.point_map
    return [pmap[i] for i in ids]
