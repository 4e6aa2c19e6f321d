from hfw.diagram import serialize
from hfw.families import DATA, GOLDEN_NAMES, golden, lemma41_pattern, lemma42_pattern


def test_shipped_golden_files_regenerate_exactly():
    built = golden()
    assert sorted(built) == sorted(GOLDEN_NAMES)
    for name, diag in built.items():
        assert serialize(diag) == (DATA / f"{name}.hd").read_text(), name


def test_patterns_have_expected_point_counts():
    alphas, beta = lemma41_pattern(3)
    assert [len(a) for a in alphas] == [6, 3, 3]
    assert set(beta) == {p for a in alphas for p in a}
    alphas, beta = lemma42_pattern(2, 3)
    assert [len(a) for a in alphas] == [5, 4, 5, 4]
