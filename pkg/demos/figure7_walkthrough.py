"""The three-basepoint torus diagram: classes, shapes and homology.

Two genus-one classes with four edges have no count in the shipped
table; building without extra rules stops with UnknownDiskCount, and the
diagram's own rules file supplies the count.
"""
from hfw.diagram import enumerate_generators
from hfw.families import DATA, load_golden
from hfw.floer import UnknownDiskCount, build_complex, complex_homology, reduce_basepoints
from hfw.whitney import classify_shape, load_rules, positive_classes

diag = load_golden("figure7")
gens = enumerate_generators(diag)
print(len(gens), "generators:", " ".join(str(g) for g in gens))

for x in gens:
    for y in gens:
        for phi in positive_classes(diag, x, y, 1, None, diag.basepoints):
            support = [r.id for r, v in zip(diag.regions, phi.domain) if v]
            print(f"  {x} -> {y}  {'+'.join(support):8s} {classify_shape(diag, phi).name}")

try:
    build_complex(diag)
except UnknownDiskCount as exc:
    print("without rules:", exc)

rules = load_rules(DATA / "figure7.rules")
cx = build_complex(diag, rules=rules)
print("homology:", complex_homology(cx.d, cx.rank).describe())

red = reduce_basepoints(diag, ("D0", "D1", "D2", "D3"), ("D0", "D1", "D2"), rules=rules)
print("after cancelling", len(red.A), "pairs, kept", [str(g) for g in red.complex.generators],
      "homology", complex_homology(red.complex.d, 0).describe())
