import random

import pytest
from hfw.diagram import enumerate_generators, parse_diagram
from hfw.families import GOLDEN_NAMES, load_golden
from hfw.floer import build_complex
from hfw.topology import partition_by_spinc, periodic_domains
from hfw.whitney import (CountRule, DiskClass, EndpointMismatch, RulesSyntaxError, classify_shape,
                         connecting_domains, count_holomorphic, default_rules, degenerations, juxtapose,
                         load_rules, maslov_index, parse_rules, positive_classes)

from helpers import DATA, random_diagram

# (seed, source, target, expected shape) found by scanning random diagrams
SHAPE_FIXTURES = [
    (300, "(p111 p223 p332)", "(p111 p221 p333)", "PhiKLN(1,1,1)"),
    (1527, "(p111 p221 p332)", "(p113 p232 p321)", "PhiKLN(2,1,1)"),
    (1750, "(p112 p221 p331)", "(p111 p232 p322)", "PhiKLN(1,2,1)"),
    (1927, "(p113 p231 p322)", "(p112 p232 p321)", "PhiNM(2,2)"),
    (2428, "(p121 p211 p331)", "(p121 p212 p331)", "GenusOneTwoEdge"),
]


def only_class(diag, x, y):
    found = positive_classes(diag, x, y, 1, None, diag.basepoints)
    assert len(found) == 1
    return found[0]


def test_s1xs2_bigons():
    s = load_golden("s1xs2")
    found = positive_classes(s, "(y)", "(x)", 1, None, s.basepoints)
    assert len(found) == 2
    assert all(classify_shape(s, phi).kind == "Bigon" for phi in found)
    assert all(maslov_index(s, phi) == 1 for phi in found)
    assert positive_classes(s, "(x)", "(y)", 1, None, s.basepoints) == []


def test_sphere_has_no_index_one_classes():
    s = load_golden("sphere")
    assert positive_classes(s, "(x)", "(x)", 1, None, s.basepoints) == []


def test_connecting_domains():
    s = load_golden("s1xs2")
    same = connecting_domains(s, "(x)", "(x)")
    assert not any(same.base) and len(same.periods) == 1
    other = connecting_domains(s, "(x)", "(y)")
    assert sum(abs(v) for v in other.base) == 1
    fig = load_golden("figure7")
    # the genus-one class joins (x u) to (y u)
    assert connecting_domains(fig, "(x u)", "(y u)") is not None


def test_three_basepoint_torus_classes():
    fig = load_golden("figure7")
    gens = enumerate_generators(fig)
    shapes = {}
    for x in gens:
        for y in gens:
            for phi in positive_classes(fig, x, y, 1, None, fig.basepoints):
                shapes[(str(x), str(y))] = classify_shape(fig, phi)
    assert len(shapes) == 8
    assert shapes[("(x u)", "(y u)")].kind == "GenusOneTwoEdge"
    assert shapes[("(x u)", "(s w)")].kind == "Rectangle"
    assert sum(1 for s in shapes.values() if s.kind == "Bigon") == 4
    assert {s.key for s in shapes.values() if s.kind == "Unknown"} == {"g1/b1/e4/o2/i0"}


def test_rectangle_and_genus_one_index():
    fig = load_golden("figure7")
    assert maslov_index(fig, only_class(fig, "(x u)", "(s w)")) == 1
    assert maslov_index(fig, only_class(fig, "(x u)", "(y u)")) == 1


@pytest.mark.parametrize("seed,x,y,name", SHAPE_FIXTURES)
def test_special_shapes(seed, x, y, name):
    diag, _ = random_diagram(seed, max_count=3)
    phi = only_class(diag, x, y)
    sig = classify_shape(diag, phi)
    assert sig.name == name
    assert maslov_index(diag, phi) == 1
    assert count_holomorphic(sig) == 1


def test_multiplicity_two_is_unknown():
    fig = load_golden("figure7")
    phi = DiskClass(*enumerate_generators(fig)[:2], (0, 0, 0, 2, 0, 0, 0))
    sig = classify_shape(fig, phi)
    assert sig.kind == "Unknown"
    assert count_holomorphic(sig) is None


def test_classification_ignores_region_names():
    text = (DATA / "figure7.hd").read_text()
    renamed = text
    for k in range(7):
        renamed = renamed.replace(f"D{k}", f"R{6 - k}x")
    a = parse_diagram(text)
    b = parse_diagram(renamed)
    for x in enumerate_generators(a):
        for y in enumerate_generators(a):
            ka = sorted(classify_shape(a, p).key for p in positive_classes(a, x, y, 1, None, a.basepoints))
            kb = sorted(classify_shape(b, p).key for p in positive_classes(b, x, y, 1, None, b.basepoints))
            assert ka == kb


def test_rules():
    rules = parse_rules("rule g1/b1/e4/o2/i0 count 1\n# comment\nrule Phi* count 0\n")
    assert rules == [CountRule("g1/b1/e4/o2/i0", 1), CountRule("Phi*", 0)]
    with pytest.raises(RulesSyntaxError):
        parse_rules("rule Bigon count 2")
    user = load_rules(DATA / "figure7.rules")
    assert user[0].pattern == "g1/b1/e4/o2/i0"
    assert user[1:] == default_rules()
    kinds = {r.pattern for r in default_rules()}
    assert kinds == {"Bigon", "Rectangle", "PhiKLN*", "PhiNM*", "GenusOneTwoEdge"}


def test_juxtapose():
    fig = load_golden("figure7")
    phi = only_class(fig, "(t v)", "(t w)")
    zero = DiskClass(phi.target, phi.target, (0,) * len(fig.regions))
    assert juxtapose(fig, phi, zero) == phi
    with pytest.raises(EndpointMismatch):
        juxtapose(fig, phi, phi)


def test_degenerations_three_basepoint_torus():
    fig = load_golden("figure7")
    gens = enumerate_generators(fig)
    psis = [psi for x in gens for y in gens for psi in positive_classes(fig, x, y, 2, None, fig.basepoints)]
    assert psis
    for psi in psis:
        pairs = degenerations(fig, psi, None, fig.basepoints)
        assert len(pairs) == 2
        for a, b in pairs:
            assert juxtapose(fig, a, b) == psi


def test_sphere_has_no_degenerations():
    s = load_golden("sphere")
    zero = DiskClass(*enumerate_generators(s) * 2, (0,))
    assert degenerations(s, zero, None, s.basepoints) == []


@pytest.mark.parametrize("name", ["s1xs2", "lens3", "figure7", "lemma41_n1", "lemma42_n1_m1"])
def test_boundary_parity(name):
    diag = load_golden(name)
    rules = load_rules(DATA / "figure7.rules") if name == "figure7" else default_rules()
    for gens in partition_by_spinc(diag).values():
        for x in gens:
            for y in gens:
                for psi in positive_classes(diag, x, y, 2, None, diag.basepoints):
                    total = 0
                    for a, b in degenerations(diag, psi, None, diag.basepoints):
                        total += count_holomorphic(classify_shape(diag, a), rules) * \
                            count_holomorphic(classify_shape(diag, b), rules)
                    assert total % 2 == 0


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_positive_classes_avoid_basepoints(name):
    diag = load_golden(name)
    idx = diag.region_index
    for gens in partition_by_spinc(diag).values():
        for x in gens[:6]:
            for y in gens[:6]:
                for phi in positive_classes(diag, x, y, 1, None, diag.basepoints):
                    assert min(phi.domain) >= 0
                    assert all(phi.domain[idx[z]] == 0 for z in diag.basepoints)


def test_maslov_additivity_on_100_pairs():
    checked = 0
    seed = 0
    while checked < 100:
        seed += 1
        diag, _ = random_diagram(seed, max_count=3)
        if periodic_domains(diag).rank:
            continue
        gens = enumerate_generators(diag)
        if not gens or len(gens) > 30:
            continue
        rng = random.Random(seed)
        x, y, w = (rng.choice(gens) for _ in range(3))
        c1 = connecting_domains(diag, x, y)
        c2 = connecting_domains(diag, y, w)
        if c1 is None or c2 is None:
            continue
        p1 = DiskClass(x, y, c1.base)
        p2 = DiskClass(y, w, c2.base)
        glued = juxtapose(diag, p1, p2)
        assert glued.domain == tuple(a + b for a, b in zip(p1.domain, p2.domain))
        assert maslov_index(diag, glued) == maslov_index(diag, p1) + maslov_index(diag, p2)
        checked += 1


def test_basepoint_monotonicity():
    fig = load_golden("figure7")
    rules = load_rules(DATA / "figure7.rules")
    small = build_complex(fig, ("D0", "D1", "D2"), rules=rules)
    large = build_complex(fig, ("D0", "D1", "D2", "D3"), rules=rules)
    assert set(large.d.entries) <= set(small.d.entries)
