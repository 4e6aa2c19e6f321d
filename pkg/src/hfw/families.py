"""Constructions of the golden diagrams shipped in ``hfw/data``.

The small closed examples (S^3, S^1 x S^2, lens spaces) are written down
directly.  The three-basepoint torus diagram and the two lemma families are
built from their intersection patterns: the cyclic orders and crossing
signs are drawn from a seeded random search until the traced surface has
the required genus, the basepoints make the diagram admissible, and every
positive index-one class has a known count.  The search is deterministic
for a given seed, so the shipped files can be regenerated exactly.
"""
from __future__ import annotations

import random
from pathlib import Path

from .build import build_diagram
from .diagram import Diagram, serialize
from .floer import ComplexError, UnknownDiskCount, build_complex, complex_homology
from .topology import NotAdmissible, check_weak_admissibility, partition_by_spinc

DATA = Path(__file__).with_name("data")


def sphere() -> Diagram:
    """Genus-one diagram of S^3: one alpha and one beta meeting once."""
    return build_diagram("sphere", [["x"]], [["x"]], {"x": 1}, basepoints=["D0"])


def s1xs2() -> Diagram:
    """Two bigons and an annulus; the basepoint sits in the annulus."""
    return build_diagram("s1xs2", [["x", "y"]], [["x", "y"]], {"x": 1, "y": -1},
                         merges=[(["A1[x->y]", "A1~[x->y]"], 0)],
                         basepoints=["A1[x->y]"],
                         region_names={"A1[x->y]": "annulus", "A1[y->x]": "bigon1",
                                       "A1~[y->x]": "bigon2"})


def lens(p: int) -> Diagram:
    pts = [f"x{i}" for i in range(1, p + 1)]
    return build_diagram(f"lens{p}", [pts], [pts], {q: 1 for q in pts}, basepoints=["D0"])


def figure7() -> Diagram:
    """Genus-one diagram with three basepoints and six generators.

    Points: x, y on alpha1/beta1; t, s on alpha1/beta2; v, w on
    alpha2/beta1; u on alpha2/beta2.
    """
    signs = {"x": 1, "y": -1, "t": 1, "s": -1, "v": 1, "w": -1, "u": 1}
    index = {"x": 1, "y": 2, "t": 1, "s": 2, "v": 1, "w": 2, "u": 1}
    return build_diagram("figure7", [["x", "y", "t", "s"], ["u", "v", "w"]],
                         [["x", "y", "v", "w"], ["u", "t", "s"]], signs,
                         basepoints=["D0", "D1", "D2"], index_of=index)


def lemma41_pattern(n: int):
    """Alpha point lists and beta index per point for the genus-three family.

    Generators are (x_i, r, r'), (x_i, r, s'), (x_i, s, r'), (x_i, s, s')
    for i = 1..n+1 together with (t, t', r'), (t, t', s'), (u, r, u'),
    (u, s, u'); primes are spelled with a trailing ``p``.
    """
    a1 = [f"x{i}" for i in range(1, n + 2)] + ["t", "u"]
    beta = {f"x{i}": 1 for i in range(1, n + 2)}
    beta.update({"t": 2, "u": 3, "r": 2, "s": 2, "tp": 1, "rp": 3, "sp": 3, "up": 1})
    return [a1, ["r", "s", "tp"], ["rp", "sp", "up"]], beta


def lemma42_pattern(n: int, m: int):
    """Alpha point lists and beta index per point for the genus-six family."""
    a3 = ["r1", "r2", "r3"] + [f"x{i}" for i in range(1, n + 1)]
    a4 = ["s"] + [f"y{j}" for j in range(1, m + 1)]
    beta = {"t1": 1, "t2": 4, "t3": 2, "t4": 3, "t5": 4, "u1": 1, "u2": 4, "u3": 2, "u4": 4,
            "r1": 1, "r2": 4, "r3": 2, "s": 4}
    beta.update({f"x{i}": 3 for i in range(1, n + 1)})
    beta.update({f"y{j}": 2 for j in range(1, m + 1)})
    return [["t1", "t2", "t3", "t4", "t5"], ["u1", "u2", "u3", "u4"], a3, a4], beta


def _homology_total(diag):
    total = 0
    arrows = 0
    for key in partition_by_spinc(diag):
        cx = build_complex(diag, spinc=key)
        h = complex_homology(cx.d, cx.rank)
        if h.f2_dimension is None:
            return None, None
        total += h.f2_dimension
        arrows += len(cx.d.entries)
    return total, arrows


def search(name, alphas, beta, genus, nbasepoints, accept, seed=0, attempts=400, placements=30):
    """Seeded search for orders, signs and basepoints realizing a pattern.

    ``accept(total_dimension, arrow_count)`` filters the finished diagram.
    """
    rng = random.Random(seed)
    d = len(alphas)
    for _ in range(attempts):
        ao = [list(a) for a in alphas]
        for a in ao:
            rng.shuffle(a)
        bo = [[p for a in ao for p in a if beta[p] == j] for j in range(1, d + 1)]
        for b in bo:
            rng.shuffle(b)
        signs = {p: rng.choice((1, -1)) for a in ao for p in a}
        try:
            diag = build_diagram(name, ao, bo, signs)
        except ValueError:
            continue
        if diag.genus != genus:
            continue
        for _ in range(placements):
            Z = rng.sample(list(diag.region_ids), nbasepoints)
            dz = build_diagram(name, ao, bo, signs, basepoints=Z)
            try:
                if not check_weak_admissibility(dz)[0]:
                    continue
                total, arrows = _homology_total(dz)
            except (UnknownDiskCount, NotAdmissible, ComplexError):
                continue
            if total is not None and accept(total, arrows):
                return dz
    raise RuntimeError(f"no realization of {name} found")


def lemma41(n: int, seed=0) -> Diagram:
    """Genus-three, three-basepoint diagram with acyclic complex and nonzero differential."""
    alphas, beta = lemma41_pattern(n)
    return search(f"lemma41_n{n}", alphas, beta, 3, 3, lambda tot, arr: tot == 0 and arr > 0, seed)


def lemma42(n: int, m: int, seed=0) -> Diagram:
    """Genus-six, one-basepoint diagram with the generator pattern of the second family."""
    alphas, beta = lemma42_pattern(n, m)
    return search(f"lemma42_n{n}_m{m}", alphas, beta, 6, 1, lambda tot, arr: arr > 0, seed)


def golden():
    """Name -> diagram for every shipped golden file."""
    out = {"sphere": sphere(), "s1xs2": s1xs2(), "lens2": lens(2), "lens3": lens(3),
           "figure7": figure7()}
    for n in (1, 2):
        out[f"lemma41_n{n}"] = lemma41(n)
    for n in (1, 2):
        for m in (1, 2):
            out[f"lemma42_n{n}_m{m}"] = lemma42(n, m)
    return out


def write_golden(directory=DATA):
    directory = Path(directory)
    for name, diag in golden().items():
        (directory / f"{name}.hd").write_text(serialize(diag))


def load_golden(name) -> Diagram:
    from .diagram import load_diagram
    return load_diagram(DATA / f"{name}.hd")


GOLDEN_NAMES = ["sphere", "s1xs2", "lens2", "lens3", "figure7", "lemma41_n1", "lemma41_n2",
                "lemma42_n1_m1", "lemma42_n1_m2", "lemma42_n2_m1", "lemma42_n2_m2"]
