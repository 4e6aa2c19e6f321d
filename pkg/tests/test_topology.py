from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog as scipy_linprog

from hfw.build import build_diagram
from hfw.diagram import enumerate_generators
from hfw.exactlp import linprog
from hfw.families import GOLDEN_NAMES, load_golden
from hfw.topology import (GradingPath, Infeasible, PathInvalid, area, area_assignment, beta_boundary,
                          check_weak_admissibility, curve_coefficients, partition_by_spinc, periodic_domains,
                          spinc_relative, thurston_conclusion)
from hfw.whitney import connecting_domains

from helpers import DATA


def test_ranks():
    assert periodic_domains(load_golden("sphere")).rank == 0
    assert periodic_domains(load_golden("lens3")).rank == 0
    assert periodic_domains(load_golden("figure7")).rank == 0
    pb = periodic_domains(load_golden("s1xs2"))
    assert pb.rank == 1
    P = dict(zip(pb.region_ids, pb.basis[0]))
    assert {k: v for k, v in P.items() if v} in ({"bigon1": 1, "bigon2": -1}, {"bigon1": -1, "bigon2": 1})


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_periodic_elements_close_up(name):
    diag = load_golden(name)
    pb = periodic_domains(diag)
    idx = diag.region_index
    for P, bd in zip(pb.basis, pb.beta_boundaries):
        assert all(P[idx[z]] == 0 for z in diag.basepoints)
        assert tuple(beta_boundary(diag, P)) == tuple(bd)
        assert curve_coefficients(diag, P) is not None


def test_beta_boundary_of_zero():
    diag = load_golden("s1xs2")
    assert list(beta_boundary(diag, [0, 0, 0])) == [0]
    pb = periodic_domains(diag)
    assert abs(pb.beta_boundaries[0][0]) == 1


def test_admissibility():
    assert check_weak_admissibility(load_golden("sphere")) == (True, None)
    assert check_weak_admissibility(load_golden("s1xs2"))[0]
    # basepoint in a bigon: the periodic domain becomes one-signed
    diag = build_diagram("bad", [["x", "y"]], [["x", "y"]], {"x": 1, "y": -1},
                         merges=[(["A1[x->y]", "A1~[x->y]"], 0)], basepoints=["A1[y->x]"])
    ok, witness = check_weak_admissibility(diag)
    assert not ok
    assert all(v >= 0 for v in witness) or all(v <= 0 for v in witness)
    assert any(witness)
    with pytest.raises(Infeasible):
        area_assignment(diag)


def test_area_assignments():
    areas = area_assignment(load_golden("figure7"))
    assert set(areas.values()) == {1}
    s = load_golden("s1xs2")
    areas = area_assignment(s)
    assert areas["bigon1"] == areas["bigon2"]
    P = periodic_domains(s).basis[0]
    assert area(areas, s, P) == 0
    f = load_golden("figure7")
    areas = area_assignment(f, large=["D3"], small=["D4"])
    others = [v for k, v in areas.items() if k not in ("D3", "D4")]
    assert areas["D3"] > 100 * max(others) and areas["D4"] < min(others) / 100


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_exact_lp_agrees_with_scipy(seed):
    rng = np.random.default_rng(seed)
    n, m = rng.integers(2, 5), rng.integers(1, 5)
    A = rng.integers(-3, 4, size=(m, n))
    b = rng.integers(0, 6, size=m)
    c = rng.integers(-3, 4, size=n)
    # box keeps the problem bounded
    A_ub = np.vstack([A, np.eye(n, dtype=int)])
    b_ub = np.concatenate([b, np.full(n, 5)])
    ours = linprog(c.tolist(), A_ub.tolist(), b_ub.tolist())
    ref = scipy_linprog(c, A_ub=A_ub, b_ub=b_ub, bounds=[(0, None)] * n, method="highs")
    assert (ours.status == "optimal") == (ref.status == 0)
    if ref.status == 0:
        assert abs(float(ours.value) - ref.fun) < 1e-7
        x = [Fraction(v) for v in ours.x]
        assert all(sum(a * v for a, v in zip(row, x)) <= bb for row, bb in zip(A_ub.tolist(), b_ub.tolist()))


def test_lp_infeasible():
    assert linprog([1], [[1]], [-1]).status == "infeasible"


def test_spinc_base_is_zero_and_partition():
    s = load_golden("s1xs2")
    assert spinc_relative(s, None, "(x)", "(x)") == (0,)
    classes = partition_by_spinc(s)
    assert list(classes.values()) == [list(enumerate_generators(s))]
    lens3 = load_golden("lens3")
    assert len(partition_by_spinc(lens3)) == 1
    fig = load_golden("figure7")
    parts = partition_by_spinc(fig, GradingPath.parse(fig, (DATA / "figure7.path").read_text()), "(x u)")
    assert list(parts) == [()] and len(parts[()]) == 6


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_spinc_differences_path_independent(name):
    diag = load_golden(name)
    gens = enumerate_generators(diag)
    x0 = gens[0]
    s0 = {g: spinc_relative(diag, None, x0, g) for g in gens}
    s1 = {g: spinc_relative(diag, None, gens[-1], g) for g in gens}
    for g in gens:
        for h in gens:
            assert tuple(a - b for a, b in zip(s0[g], s0[h])) == tuple(a - b for a, b in zip(s1[g], s1[h]))


def test_three_basepoint_torus_paths_agree():
    fig = load_golden("figure7")
    p1 = GradingPath.parse(fig, (DATA / "figure7.path").read_text())
    p2 = GradingPath.parse(fig, "B1[x->y] B1[y->v] A2[v->u]")
    gens = enumerate_generators(fig)
    assert [spinc_relative(fig, p1, "(x u)", g) for g in gens] == [spinc_relative(fig, p2, "(x u)", g) for g in gens]


def test_invalid_path():
    fig = load_golden("figure7")
    with pytest.raises(PathInvalid):
        spinc_relative(fig, GradingPath.parse(fig, "A1[x->y]"), "(x u)", "(y u)")


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_connecting_domains_imply_equal_spinc(name):
    diag = load_golden(name)
    gens = enumerate_generators(diag)[:8]
    for x in gens:
        for y in gens:
            if connecting_domains(diag, x, y, ()) is not None:
                assert spinc_relative(diag, None, gens[0], x) == spinc_relative(diag, None, gens[0], y)


def test_lens_torsion_breaks_converse():
    # H_1 of L(3,1) is torsion, so all generators share the relative class
    # even though no domain joins distinct generators
    diag = load_golden("lens3")
    gens = enumerate_generators(diag)
    assert len(partition_by_spinc(diag)) == 1
    assert connecting_domains(diag, gens[0], gens[1], ()) is None


def test_thurston_conclusion():
    assert thurston_conclusion([((0, 1, 7), True), ((0, -1, -8), True)])
    assert not thurston_conclusion([((0, 1, 7), True)])
    assert not thurston_conclusion([((0, 2, 4), True), ((0, 1, 2), True)])
    assert not thurston_conclusion([((0, 1, 7), True), ((0, -1, -8), False)])
