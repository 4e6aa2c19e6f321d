"""Twisted coefficients on the two-bigon diagram of S^1 x S^2.

The two bigons from (y) to (x) differ by the periodic domain, so over
F2[t, 1/t] they add up to 1 + t instead of cancelling.
"""
from hfw.families import load_golden
from hfw.floer import build_complex, homology
from hfw.groupring import format_element
from hfw.topology import check_weak_admissibility, periodic_domains
from hfw.whitney import classify_shape, positive_classes

diag = load_golden("s1xs2")
pb = periodic_domains(diag)
print("periodic domains:", pb.rank, dict(zip(pb.region_ids, pb.basis[0])))
print("weakly admissible:", check_weak_admissibility(diag)[0])

for phi in positive_classes(diag, "(y)", "(x)", 1, None, diag.basepoints):
    print("class", phi.domain, classify_shape(diag, phi).name)

cx = build_complex(diag)
for (i, j), v in cx.d.entries.items():
    print(f"d{cx.generators[j]} = ({format_element(v)}) {cx.generators[i]}")
print("twisted homology:", homology(diag).describe())
print("untwisted homology:", homology(diag, twisted=False).describe())
