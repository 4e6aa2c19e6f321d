"""Twisted chain complexes of diagrams and their homology."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import Diagram, Generator, as_generator, enumerate_generators
from .groupring import (BlockComplex, GroupRingElement, NotNilpotent,
                        PairingNotIdentityLike, SparseMatrix, cancellation_reduce, certify_nonvanishing,
                        f2_rank, format_laurent, greedy_pairing, homology_univariate)
from .topology import Infeasible, area, area_assignment, basepoint_indices, domain_system, partition_by_spinc
from .whitney import DiskClass, classify_shape, count_holomorphic, default_rules, positive_classes


class UnknownDiskCount(ValueError):
    def __init__(self, phi: DiskClass, shape, diag=None):
        self.phi = phi
        self.shape = shape
        support = {}
        if diag is not None:
            support = {r.id: v for r, v in zip(diag.regions, phi.domain) if v}
        super().__init__(f"UnknownDiskCount: {phi.source} -> {phi.target}, shape {shape.key}, domain {support}")


class DecompositionFailed(ValueError):
    pass


class ComplexError(AssertionError):
    pass


@dataclass
class TwistedComplex:
    generators: list
    d: SparseMatrix
    rank: int
    basepoints: tuple
    spinc: tuple
    provenance: dict = field(default_factory=dict)  # (row, col) -> list of (domain, shape, count)
    filtration: dict = field(default_factory=dict)  # generator index -> Fraction

    def untwisted(self):
        """The complex with every monomial sent to 1."""
        return SparseMatrix.from_f2(self.d.augment())

    def to_json(self, diag=None):
        out = {
            "generators": [str(g) for g in self.generators],
            "basepoints": list(self.basepoints),
            "spinc": list(self.spinc),
            "rank": self.rank,
            "matrix": self.d.to_json(),
            "filtration": {str(self.generators[k]): str(v) for k, v in self.filtration.items()},
        }
        out["matrix"]["rows"] = [str(g) for g in self.generators]
        out["matrix"]["cols"] = [str(g) for g in self.generators]
        prov = []
        for (i, j), items in sorted(self.provenance.items()):
            for dom, shape, count in items:
                entry = {"from": str(self.generators[j]), "to": str(self.generators[i]),
                         "shape": shape, "count": count, "domain": list(dom)}
                if diag is not None:
                    entry["support"] = {r.id: v for r, v in zip(diag.regions, dom) if v}
                prov.append(entry)
        out["provenance"] = prov
        return out


def _class_generators(diag, spinc, x0):
    classes = partition_by_spinc(diag, None, x0)
    if spinc is None:
        x0g = enumerate_generators(diag)[0] if x0 is None else as_generator(diag, x0)
        for key, gens in classes.items():
            if x0g in gens:
                return key, gens
    spinc = tuple(spinc)
    return spinc, list(classes.get(spinc, []))


def reference_domains(diag: Diagram, gens):
    """Canonical domain from a component representative to each generator.

    Generators that cannot be joined by any domain avoiding the declared
    basepoints get separate representatives.
    """
    system = domain_system(diag)
    refs = {}
    component = {}
    reps = []
    for g in gens:
        for c, rep in enumerate(reps):
            D = system.connecting(rep, g)
            if D is not None:
                refs[g] = tuple(system.lattice.reduce(D))
                component[g] = c
                break
        else:
            reps.append(g)
            refs[g] = tuple([0] * len(diag.regions))
            component[g] = len(reps) - 1
    return refs, component


def build_complex(diag: Diagram, basepoints=None, spinc=None, rules=None, x0=None, areas=None):
    """Differential over F2[Z^r] of one Spin^c class.

    Classes are counted when they avoid every region in ``basepoints``
    (default: the declared basepoints, which the set must contain).
    Exponents are coordinates in the periodic lattice of the declared
    basepoints, measured against per-generator reference domains.
    """
    Z = tuple(diag.basepoints if basepoints is None else basepoints)
    missing = set(diag.basepoints) - set(Z)
    if missing:
        raise ValueError(f"basepoint set must contain the declared basepoints {sorted(missing)}")
    basepoint_indices(diag, Z)
    rules = default_rules() if rules is None else rules
    spinc, gens = _class_generators(diag, spinc, x0)
    system = domain_system(diag)
    lattice = system.lattice
    r = lattice.rank
    refs, component = reference_domains(diag, gens)
    if areas is None:
        try:
            areas = area_assignment(diag)
        except Infeasible:
            areas = None
    filtration = {}
    if areas is not None:
        for k, g in enumerate(gens):
            filtration[k] = -area(areas, diag, refs[g])
    n = len(gens)
    d = SparseMatrix(n, n, {}, r)
    provenance = {}
    for j, x in enumerate(gens):
        for i, y in enumerate(gens):
            if component[x] != component[y]:
                continue
            for phi in positive_classes(diag, x, y, 1, None, Z):
                shape = classify_shape(diag, phi)
                count = count_holomorphic(shape, rules)
                if count is None:
                    raise UnknownDiskCount(phi, shape, diag)
                provenance.setdefault((i, j), []).append((phi.domain, shape.name, count))
                if not count:
                    continue
                loop = [a + b - c for a, b, c in zip(refs[x], phi.domain, refs[y])]
                coords = lattice.coordinates(loop)
                if coords is None:
                    raise ComplexError("domain difference is not periodic")
                d.add_to(i, j, GroupRingElement.monomial(tuple(coords)))
    if not (d @ d).is_zero():
        raise ComplexError("differential does not square to zero")
    return TwistedComplex(gens, d, r, Z, tuple(spinc), provenance, filtration)


@dataclass
class FloerHomology:
    ring: str  # "F2", "F2[t,1/t]" or "F2[Z^r]"
    free_rank: int | None
    torsion: list
    f2_dimension: int | None
    nonzero: bool | None
    certified: bool

    def describe(self):
        if self.ring == "F2":
            return f"F2^{self.f2_dimension}" if self.f2_dimension else "0"
        if self.ring.startswith("F2[t"):
            parts = []
            if self.free_rank:
                parts.append(f"F2[t,t^-1]^{self.free_rank}")
            parts += [f"F2[t,t^-1]/({t})" for t in self.torsion]
            return " + ".join(parts) if parts else "0"
        return "nonzero (certified)" if self.certified else "undetermined"

    def to_json(self):
        return {"ring": self.ring, "free_rank": self.free_rank, "torsion": self.torsion,
                "f2_dimension": self.f2_dimension, "nonzero": self.nonzero,
                "certified_nonvanishing": self.certified, "description": self.describe()}


def _single_variable(d: SparseMatrix):
    """Index of the only group-ring variable that occurs, or ``None``."""
    used = set()
    for v in d.entries.values():
        for e in v.support:
            used.update(k for k, x in enumerate(e) if x)
    if len(used) > 1:
        return False
    return used.pop() if used else None


def complex_homology(d: SparseMatrix, rank: int) -> FloerHomology:
    cert = certify_nonvanishing(d)
    if rank == 0:
        a = d.augment()
        dim = a.shape[0] - 2 * f2_rank(a)
        return FloerHomology("F2", dim, [], dim, dim > 0, cert)
    var = _single_variable(d)
    if var is False:
        return FloerHomology(f"F2[Z^{rank}]", None, [], None, True if cert else None, cert)
    entries = {}
    for key, v in d.entries.items():
        entries[key] = GroupRingElement((e[var] if var is not None else 0,) for e in v.support)
    uni = SparseMatrix(d.nrows, d.ncols, entries, 1)
    mod = homology_univariate(uni)
    return FloerHomology("F2[t,1/t]", mod.free_rank, [format_laurent(f) for f in mod.torsion],
                         mod.f2_dimension, mod.nonzero, cert)


def homology(diag: Diagram, basepoints=None, spinc=None, rules=None, twisted=True, x0=None):
    cx = build_complex(diag, basepoints, spinc, rules, x0)
    if not twisted:
        return complex_homology(cx.untwisted(), 0)
    return complex_homology(cx.d, cx.rank)


@dataclass
class Reduction:
    complex: TwistedComplex
    z1: TwistedComplex
    z2: TwistedComplex
    A: list
    B: list
    H: list
    correction_entries: int


def reduce_basepoints(diag: Diagram, z1, z2, spinc=None, rules=None, x0=None) -> Reduction:
    """Cancel the unit pairing of the ``z1`` complex inside the ``z2`` complex."""
    z1 = tuple(z1)
    z2 = tuple(z2)
    if not set(z2) <= set(z1):
        raise ValueError("z2 must be a subset of z1")
    touched = set(z1)
    small = [r.id for r in diag.regions if r.id not in touched]
    large = [z for z in z1 if z not in z2]
    try:
        areas = area_assignment(diag, large=large, small=small)
    except Infeasible:
        try:
            areas = area_assignment(diag)
        except Infeasible:
            areas = None
    c1 = build_complex(diag, z1, spinc, rules, x0, areas)
    c2 = build_complex(diag, z2, spinc, rules, x0, areas)
    n = len(c1.generators)
    order = sorted(range(n), key=lambda k: (c1.filtration.get(k, Fraction(0)), k))
    A, B = greedy_pairing(c1.d, order)
    H = [g for g in range(n) if g not in set(A) | set(B)]
    try:
        Hk, reduced = cancellation_reduce(BlockComplex(c2.d, A, B, H, c2.filtration))
    except (NotNilpotent, PairingNotIdentityLike) as exc:
        raise DecompositionFailed(str(exc)) from exc
    dprime = c2.d + c1.d
    gens = [c2.generators[h] for h in Hk]
    out = TwistedComplex(gens, reduced, c2.rank, z2, c2.spinc, {},
                         {k: c2.filtration[h] for k, h in enumerate(Hk) if h in c2.filtration})
    return Reduction(out, c1, c2, A, B, Hk, len(dprime.entries))
