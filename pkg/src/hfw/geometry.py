"""Curves drawn in the plane with handles, turned into combinatorial diagrams.

A surface of genus g is modelled as the plane with g handles.  Handle h
has two feet, circles ``(center, radius)``; a curve that enters the first
foot at angle theta leaves the second foot at angle pi - theta (the mirror
gluing keeps the surface orientable).  Curves only cross in the plane, so
crossing orders and signs are computed from planar polylines and the
faces are recovered by ribbon-graph tracing.
"""
from __future__ import annotations

import math

import numpy as np

from .build import build_diagram


class Handle:
    def __init__(self, c1, c2, radius=1.0):
        self.feet = (np.asarray(c1, float), np.asarray(c2, float))
        self.radius = radius

    def point(self, side, theta):
        c = self.feet[side]
        return c + self.radius * np.array([math.cos(theta), math.sin(theta)])


class Curve:
    """Polyline pieces of one closed curve.

    A closed curve without handle passages is a single piece closed up on
    itself; otherwise consecutive pieces are joined through handles.
    """

    def __init__(self, pieces, closed):
        self.pieces = [np.asarray(p, float) for p in pieces]
        self.closed = closed


def circle(center, radius, start=0.0, ccw=True, samples=240):
    ts = np.linspace(0, 2 * math.pi, samples, endpoint=False) + start
    if not ccw:
        ts = -ts + 2 * start
    pts = np.stack([center[0] + radius * np.cos(ts), center[1] + radius * np.sin(ts)], axis=1)
    return Curve([pts], True)


def polygon(points, samples_per_unit=8):
    """Closed planar polygon through ``points``."""
    pts = []
    n = len(points)
    for k in range(n):
        p = np.asarray(points[k], float)
        q = np.asarray(points[(k + 1) % n], float)
        m = max(1, int(np.linalg.norm(q - p) * samples_per_unit))
        for s in range(m):
            pts.append(p + (q - p) * s / m)
    return Curve([np.array(pts)], True)


def through_handles(waypoints, handles, samples_per_unit=8):
    """Polyline pieces for a closed curve described by waypoints.

    ``waypoints`` is a list whose items are points ``(x, y)`` or handle
    passages ``("h", k, side, theta)``: the curve walks into foot ``side``
    of handle ``k`` at angle ``theta`` and continues from the other foot at
    the mirrored angle.  The list is read cyclically.
    """
    pieces = []
    current = []

    def add_point(p):
        p = np.asarray(p, float)
        if current:
            q = current[-1]
            n = max(1, int(np.linalg.norm(p - q) * samples_per_unit))
            for k in range(1, n + 1):
                current.append(q + (p - q) * k / n)
        else:
            current.append(p)

    # rotate so the list starts right after a handle passage, if any
    idx = [k for k, w in enumerate(waypoints) if isinstance(w, tuple) and w and w[0] == "h"]
    if idx:
        k0 = idx[0]
        h = waypoints[k0]
        wp = waypoints[k0 + 1:] + waypoints[:k0 + 1]
        handle = handles[h[1]]
        add_point(handle.point(1 - h[2], math.pi - h[3]))
    else:
        wp = list(waypoints)
    for w in wp:
        if isinstance(w, tuple) and w and w[0] == "h":
            _, k, side, theta = w
            handle = handles[k]
            add_point(handle.point(side, theta))
            pieces.append(np.array(current))
            current = []
            if w is not wp[-1]:
                add_point(handle.point(1 - side, math.pi - theta))
        else:
            add_point(w)
    if current:
        if not idx:
            add_point(current[0])
        pieces.append(np.array(current))
    return Curve(pieces, not idx)


def _segments(pieces, closed):
    segs = []
    for p in pieces:
        pts = p
        if closed:
            pts = np.vstack([p, p[:1]])
        for k in range(len(pts) - 1):
            segs.append((pts[k], pts[k + 1]))
    a = np.array([s[0] for s in segs])
    b = np.array([s[1] for s in segs])
    return a, b


def _curve_segments(curve):
    return _segments(curve.pieces, curve.closed)


def _intersections(A0, A1, B0, B1):
    """All proper crossings between segment sets; returns (i, j, s, t)."""
    r = A1 - A0  # (n, 2)
    s = B1 - B0  # (m, 2)
    qp = B0[None, :, :] - A0[:, None, :]  # (n, m, 2)
    denom = r[:, None, 0] * s[None, :, 1] - r[:, None, 1] * s[None, :, 0]
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (qp[..., 0] * s[None, :, 1] - qp[..., 1] * s[None, :, 0]) / denom
        u = (qp[..., 0] * r[:, None, 1] - qp[..., 1] * r[:, None, 0]) / denom
    mask = (denom != 0) & (t >= 0) & (t < 1) & (u >= 0) & (u < 1)
    ii, jj = np.nonzero(mask)
    return [(int(i), int(j), float(t[i, j]), float(u[i, j]), float(denom[i, j])) for i, j in zip(ii, jj)]


def diagram_from_curves(name, alphas, betas, basepoint_points=(), names=None, merges=(),
                        region_names=None):
    """Compute crossings of planar curves and build a :class:`Diagram`.

    ``alphas`` and ``betas`` are lists of curves, each a list of polyline
    pieces (see :func:`through_handles`).  ``names`` maps a crossing key
    ``(i, j, k)`` (alpha i, beta j, k-th crossing along alpha i among those
    with beta j) to a point id.  ``basepoint_points`` are planar points; the
    region containing each becomes a basepoint.
    """
    for group in (alphas, betas):
        for i, c1 in enumerate(group):
            for c2 in group[i + 1:]:
                a0, a1 = _curve_segments(c1)
                b0, b1 = _curve_segments(c2)
                if _intersections(a0, a1, b0, b1):
                    raise ValueError("curves of the same colour intersect")
    crossings = []  # (alpha, beta, alpha_param, beta_param, sign, point)
    for i, ca in enumerate(alphas):
        a0, a1 = _curve_segments(ca)
        for j, cb in enumerate(betas):
            b0, b1 = _curve_segments(cb)
            for si, sj, t, u, den in _intersections(a0, a1, b0, b1):
                pt = a0[si] + t * (a1[si] - a0[si])
                crossings.append((i + 1, j + 1, si + t, sj + u, 1 if den > 0 else -1, pt))
    # name the points
    ids = {}
    index_of = {}
    counts = {}
    for c in sorted(crossings, key=lambda c: (c[0], c[2])):
        key = (c[0], c[1])
        counts[key] = counts.get(key, 0) + 1
        k = counts[key]
        pid = (names or {}).get((c[0], c[1], k), f"x{c[0]}_{c[1]}_{k}")
        ids[id(c)] = pid
        index_of[pid] = k
    d = len(alphas)
    alpha_orders = [[ids[id(c)] for c in sorted((c for c in crossings if c[0] == i), key=lambda c: c[2])]
                    for i in range(1, d + 1)]
    beta_orders = [[ids[id(c)] for c in sorted((c for c in crossings if c[1] == j), key=lambda c: c[3])]
                   for j in range(1, d + 1)]
    signs = {ids[id(c)]: c[4] for c in crossings}
    positions = {ids[id(c)]: c[5] for c in crossings}
    params = {}
    for c in crossings:
        params.setdefault(("A", c[0]), {})[ids[id(c)]] = c[2]
        params.setdefault(("B", c[1]), {})[ids[id(c)]] = c[3]
    diag = build_diagram(name, alpha_orders, beta_orders, signs, merges=merges,
                         region_names=region_names, index_of=index_of)
    diag._cache["params"] = params
    if basepoint_points:
        bps = [locate_region(diag, positions, alphas, betas, p) for p in basepoint_points]
        diag = build_diagram(name, alpha_orders, beta_orders, signs, merges=merges,
                             basepoints=bps, region_names=region_names, index_of=index_of)
        diag._cache["params"] = params
    diag._cache["positions"] = positions
    return diag


def locate_region(diag, positions, alphas, betas, point):
    """Region id containing a planar point, found by shooting a ray to a curve.

    The ray goes in the +x direction; the first curve segment hit gives an
    arc and a side, hence a traversal with the region on its left.
    """
    from .diagram import arc_token

    p = np.asarray(point, float)
    best = None
    for kind, group in (("A", alphas), ("B", betas)):
        for i, curve in enumerate(group, start=1):
            pieces = curve.pieces
            closed = curve.closed
            param = 0
            for piece in pieces:
                pts = np.vstack([piece, piece[:1]]) if closed else piece
                for k in range(len(pts) - 1):
                    q0, q1 = pts[k], pts[k + 1]
                    if (q0[1] - p[1]) * (q1[1] - p[1]) > 0 or q0[1] == q1[1]:
                        param += 1
                        continue
                    t = (p[1] - q0[1]) / (q1[1] - q0[1])
                    x = q0[0] + t * (q1[0] - q0[0])
                    if x > p[0] and (best is None or x < best[0]):
                        going_up = q1[1] > q0[1]
                        best = (x, kind, i, param + t, going_up)
                    param += 1
    if best is None:
        raise ValueError(f"no curve to the right of {point}")
    _, kind, i, s, going_up = best
    # find the arc containing parameter s on the curve
    orders = diag.alpha_orders if kind == "A" else diag.beta_orders
    order = orders[i - 1]
    params = diag._cache.get("params")
    if params is None:
        raise RuntimeError("curve parameters unavailable")
    key = (kind, i)
    ps = params[key]
    # arc from point with the largest parameter <= s
    before = [pid for pid in order if ps[pid] <= s]
    tail = max(before, key=lambda pid: ps[pid]) if before else max(order, key=lambda pid: ps[pid])
    from .diagram import Arc, Traversal
    arc = Arc(kind, i, tail)
    # the point lies to the left of the curve when the curve goes up at the hit
    t = Traversal(arc, going_up)
    for r in diag.regions:
        for comp in r.boundary:
            if t in comp:
                return r.id
    raise ValueError(f"traversal {arc_token(diag, t)} not found")
