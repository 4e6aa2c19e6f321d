"""Shared constructions for the test suite."""
from __future__ import annotations

import itertools
import random
from pathlib import Path

from hfw.build import build_diagram

DATA = Path(__file__).resolve().parents[1] / "src" / "hfw" / "data"


def random_diagram(seed, d=None, max_count=3, name="random"):
    """Diagram from random cyclic orders and crossing signs.

    Returns ``(diagram, counts)`` where ``counts[i][j] = |alpha_i cap beta_j|``.
    """
    rng = random.Random(seed)
    d = d or rng.randint(1, 4)
    while True:
        counts = [[rng.randint(0, max_count) for _ in range(d)] for _ in range(d)]
        if all(sum(r) for r in counts) and all(sum(c) for c in zip(*counts)):
            break
    alphas = [[] for _ in range(d)]
    beta_of = {}
    index_of = {}
    for i in range(d):
        for j in range(d):
            for k in range(counts[i][j]):
                pid = f"p{i + 1}{j + 1}{k + 1}"
                alphas[i].append(pid)
                beta_of[pid] = j
                index_of[pid] = k + 1
    for a in alphas:
        rng.shuffle(a)
    betas = [[p for a in alphas for p in a if beta_of[p] == j] for j in range(d)]
    for b in betas:
        rng.shuffle(b)
    signs = {p: rng.choice((1, -1)) for p in beta_of}
    diag = build_diagram(name, alphas, betas, signs, basepoints=["D0"], index_of=index_of)
    return diag, counts


def naive_permanent(counts):
    d = len(counts)
    total = 0
    for perm in itertools.permutations(range(d)):
        prod = 1
        for i in range(d):
            prod *= counts[i][perm[i]]
        total += prod
    return total


def naive_f2_rank(rows):
    """Row reduction over F2 on lists of 0/1 lists (independent of numpy)."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] % 2), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % 2:
                rows[r] = [(a + b) % 2 for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def random_filtered_complex(seed, max_size=40):
    """A random F2 complex with a filtration-compatible cancelling pairing.

    Returns ``(d, A, B, filtration)``: ``d`` is a 0/1 numpy array with
    ``d @ d = 0 (mod 2)``; ``d[B[i], A[i]] = 1`` drops the filtration by a
    small amount and every other arrow drops it by at least 1 - 2/10, so the
    pairing block is identity plus nilpotent.
    """
    import numpy as np
    from fractions import Fraction

    rng = random.Random(seed)
    n = rng.randint(2, max_size)
    n_cancel = rng.randint(0, n // 2)
    n_kept = rng.randint(0, (n - 2 * n_cancel) // 2)
    levels = {}
    A, B, kept = [], [], []
    ids = list(range(n))
    rng.shuffle(ids)
    it = iter(ids)
    for _ in range(n_cancel):
        a, b = next(it), next(it)
        A.append(a)
        B.append(b)
    for _ in range(n_kept):
        kept.append((next(it), next(it)))
    free = list(it)
    D0 = np.zeros((n, n), dtype=np.int64)
    for a, b in zip(A, B):
        lv = rng.randint(0, 8)
        levels[a] = Fraction(lv)
        levels[b] = Fraction(lv) - Fraction(1, 10)
        D0[b, a] = 1
    for a, b in kept:
        lv = rng.randint(1, 8)
        levels[a] = Fraction(lv)
        levels[b] = Fraction(lv - rng.randint(1, 3)) - Fraction(1, 10) * rng.randint(0, 1)
        D0[b, a] = 1
    for g in free:
        levels[g] = Fraction(rng.randint(0, 8)) - Fraction(1, 10) * rng.randint(0, 1)
    # change of basis P = I + N with N strictly dropping the filtration by >= 1 - 1/10
    N = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if levels[i] <= levels[j] - Fraction(9, 10) and rng.random() < 0.3:
                N[i, j] = 1
    P = np.eye(n, dtype=np.int64) + N
    Pinv = np.eye(n, dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for _ in range(n):
        power = (power @ N) % 2
        if not power.any():
            break
        Pinv = (Pinv + power) % 2
    d = (P @ D0 @ Pinv) % 2
    return d, A, B, levels
