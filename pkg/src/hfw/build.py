"""Build region-first diagrams from curve orders and crossing signs.

The curves form a 4-valent ribbon graph once every crossing carries a sign:
going counter-clockwise around a crossing of sign s the rays are alpha
forward, beta in direction s, alpha backward, beta in direction -s.
Tracing faces with the face on the left yields one cyclic boundary word
per face.  Faces become disc regions unless they are merged, which is how
annuli and other non-disc regions are produced.
"""
from __future__ import annotations

from .diagram import Arc, Diagram, IntersectionPoint, Region, Traversal, arc_token, _natural_key


def _ray_to_traversal(skel, kind, curve, v, direction):
    """Traversal leaving ``v`` along the given ray."""
    if direction > 0:
        return Traversal(Arc(kind, curve, v), True)
    return Traversal(Arc(kind, curve, skel.predecessor(kind, curve, v)), False)


def _incoming_ray(skel, t):
    """Ray at the end point of ``t`` pointing back along ``t``."""
    return (t.arc.kind, -1 if t.forward else 1)


def trace_faces(skel: Diagram, signs: dict) -> list:
    """Return the faces of the ribbon graph as lists of traversals."""
    pmap = skel.point_map

    def rotation(v):
        s = signs[v]
        return [("A", 1), ("B", s), ("A", -1), ("B", -s)]

    def next_traversal(t):
        v = skel.end(t)
        rot = rotation(v)
        k = rot.index(_incoming_ray(skel, t))
        kind, direction = rot[(k - 1) % 4]
        p = pmap[v]
        curve = p.alpha if kind == "A" else p.beta
        return _ray_to_traversal(skel, kind, curve, v, direction)

    seen = set()
    faces = []
    for arc in skel.arcs:
        for forward in (True, False):
            start = Traversal(arc, forward)
            if start in seen:
                continue
            face = []
            t = start
            while t not in seen:
                seen.add(t)
                face.append(t)
                t = next_traversal(t)
            if t != start:
                raise ValueError("face tracing did not close up")
            faces.append(face)
    return faces


def skeleton(name, alpha_orders, beta_orders, index_of=None):
    """Diagram without regions, with points inferred from the curve orders."""
    d = len(alpha_orders)
    if len(beta_orders) != d:
        raise ValueError("alpha and beta counts differ")
    alpha_of = {p: i for i, order in enumerate(alpha_orders, start=1) for p in order}
    beta_of = {p: j for j, order in enumerate(beta_orders, start=1) for p in order}
    if set(alpha_of) != set(beta_of):
        raise ValueError("alpha and beta orders mention different points")
    counter = {}
    points = []
    for p in sorted(alpha_of, key=_natural_key):
        key = (alpha_of[p], beta_of[p])
        if index_of and p in index_of:
            k = index_of[p]
        else:
            counter[key] = counter.get(key, 0) + 1
            k = counter[key]
        points.append(IntersectionPoint(p, alpha_of[p], beta_of[p], k))
    points.sort(key=lambda p: (p.alpha, p.beta, p.index, _natural_key(p.id)))
    return Diagram(name, 0, d, tuple(points), tuple(tuple(o) for o in alpha_orders),
                   tuple(tuple(o) for o in beta_orders), (), ())


def parse_traversal(skel, token):
    from .diagram import _parse_arc
    return _parse_arc(skel, token, 1, None)


def build_diagram(name, alpha_orders, beta_orders, signs, merges=(), basepoints=(),
                  region_names=None, offset=None, index_of=None):
    """Trace faces and assemble a :class:`Diagram`.

    ``merges`` is a list of ``(selectors, genus)``; each selector is an arc
    token naming a traversal on the face to merge.  ``basepoints`` are
    selectors too, or region ids of the form ``D<k>``.  Regions are named
    ``D0, D1, ...`` in face discovery order unless ``region_names`` maps a
    selector to a name.
    """
    skel = skeleton(name, alpha_orders, beta_orders, index_of)
    faces = trace_faces(skel, signs)
    face_of = {}
    for f, face in enumerate(faces):
        for t in face:
            face_of[t] = f

    def locate(selector):
        return face_of[parse_traversal(skel, selector)]

    group_of = {f: f for f in range(len(faces))}
    genus_of = {}
    for selectors, genus in merges:
        fs = [locate(s) for s in selectors]
        root = group_of[fs[0]]
        for f in fs:
            old = group_of[f]
            for g, r in group_of.items():
                if r == old:
                    group_of[g] = root
        genus_of[root] = genus

    roots = []
    for f in range(len(faces)):
        if group_of[f] not in roots:
            roots.append(group_of[f])
    names = {root: f"D{k}" for k, root in enumerate(roots)}
    for selector, rid in (region_names or {}).items():
        names[group_of[locate(selector)]] = rid

    regions = []
    for root in roots:
        comps = tuple(tuple(faces[f]) for f in range(len(faces)) if group_of[f] == root)
        regions.append(Region(names[root], genus_of.get(root, 0), comps))
    regions.sort(key=lambda r: _natural_key(r.id))

    ids = {r.id for r in regions}
    bps = []
    for b in basepoints:
        bps.append(b if b in ids else names[group_of[locate(b)]])

    v = len(skel.points)
    e = 2 * v
    chi = v - e + sum(2 - 2 * r.genus - len(r.boundary) for r in regions)
    if chi % 2:
        raise ValueError("odd Euler characteristic")
    genus = (2 - chi) // 2
    return Diagram(name, genus, skel.d, skel.points, skel.alpha_orders, skel.beta_orders,
                   tuple(regions), tuple(bps), offset)


def face_words(diag):
    """Human readable boundary words, keyed by region id."""
    return {r.id: [[arc_token(diag, t) for t in comp] for comp in r.boundary] for r in diag.regions}
