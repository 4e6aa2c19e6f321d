import copy

import pytest

from hfw import replicate
from hfw.groupring import GroupRingElement


def test_star_formula():
    ok, tr = replicate.verify_star_formula()
    assert ok and tr["symbolic_equal"] and not tr["evaluation_mismatches"]
    assert "b1+b2+b3b5+b4b5+c3c5+c4c5" in tr["star"]


def test_eight_generator_sweep():
    ok, tr = replicate.verify_section5()
    assert ok and tr["counterexample"] is None and tr["relation_count"] == 13
    for fam, info in tr["dropped_family"].items():
        assert info["counterexample"] is not None, fam


def test_dropped_family_counterexample_breaks_star():
    _, example = replicate.sweep_eight_generator(drop=("b-counts-equal",))
    bits = {k: __import__("numpy").array([v], dtype="uint8") for k, v in example.items()}
    rel = replicate._s5_relations(bits)
    assert all(int(a[0]) == 0 for fam, rs in rel.items() if fam != "b-counts-equal" for _, a in rs)
    assert any(int(a[0]) for _, a in replicate._s5_star(bits))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_genus_three_family(n):
    ok, tr = replicate.verify_lemma41(n)
    assert ok
    assert tr["typed"]["solutions"] == [dict.fromkeys(tr["typed"]["types"], 1)]
    assert tr["generators"] == 4 * (n + 1) + 4


def test_genus_three_family_forces_equal_counts_at_two():
    _, tr = replicate.verify_lemma41(2)
    assert tr["claims"]["m2_2 = m4_2 (independent unknowns)"]


def test_genus_three_family_range():
    with pytest.raises(replicate.ParameterOutOfRange):
        replicate.verify_lemma41(5)
    with pytest.raises(replicate.ParameterOutOfRange):
        replicate.verify_lemma41(0)


def test_four_by_four_completions_certify():
    ok, tr = replicate.verify_section6()
    assert ok and tr["V_cancels"] and tr["square_zero"] > 0


def test_v_entries_cancel_for_both_values():
    for V in (0, 1):
        m = replicate.four_by_four_matrix({}, None, V)
        assert m.get(2, 0) == GroupRingElement()


def test_unit_entry_breaks_certificate():
    ok, tr = replicate.verify_section6(one_plus_t=GroupRingElement([(1,)]))
    assert not ok and tr["failures"]


def test_extended_disk_identities():
    ok, tr = replicate.verify_lemma61_degenerations()
    assert ok and tr["psi3_equals_psi6"]
    assert replicate.lemma61_parity_only()


def test_extended_disk_data_perturbed():
    data = copy.deepcopy(replicate.load_lemma61_data())
    data["components"]["b2"] = {"A": 2}
    assert not replicate.verify_lemma61_degenerations(data)[0]


def test_extended_disk_data_missing(tmp_path):
    with pytest.raises(replicate.GoldenDataMissing):
        replicate.load_lemma61_data(tmp_path / "absent.json")
