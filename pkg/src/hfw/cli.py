"""Command line entry point: ``hfw <subcommand> ...``.

Exit codes: 0 success, 1 a check came out false, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import replicate
from .diagram import DiagramError, count_generators, enumerate_generators, load_diagram, validate
from .floer import ComplexError, DecompositionFailed, UnknownDiskCount, build_complex, complex_homology, reduce_basepoints
from .groupring import format_element
from .topology import (GradingPath, Infeasible, NotAdmissible, NotPeriodic, PathInvalid, check_weak_admissibility,
                       format_triple, parse_triple, partition_by_spinc, periodic_domains)
from .whitney import RulesSyntaxError, load_rules

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _ids(text):
    return tuple(t for t in text.replace(",", " ").split() if t)


def _emit(args, payload, text):
    """Print ``text``, or the JSON payload when --json was given."""
    target = getattr(args, "json", None)
    if target is None:
        print(text)
        return
    dumped = json.dumps(payload, indent=2, default=str)
    if target == "-":
        print(dumped)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(dumped + "\n")
        print(text)


def _spinc(text):
    if text is None:
        return None
    try:
        return parse_triple(text)
    except ValueError as exc:
        raise InputError(f"bad Spin^c vector {text!r}") from exc


def _matrix_text(cx):
    lines = []
    for (i, j), v in sorted(cx.d.entries.items()):
        lines.append(f"  d{cx.generators[j]} -> {cx.generators[i]} : {format_element(v)}")
    return lines


# ----------------------------------------------------------------------
# subcommands


def cmd_validate(args):
    diag = load_diagram(args.file)
    violations = validate(diag)
    n = count_generators(diag) if not violations else None
    payload = {"diagram": diag.name, "violations": [v._asdict() for v in violations], "generator_count": n}
    if violations:
        text = "\n".join(f"{v.code} {v.entity}: {v.detail}" for v in violations)
    else:
        text = f"{diag.name}: valid (genus {diag.genus}, {n} generators)"
    _emit(args, payload, text)
    return FAILED if violations else OK


def cmd_gens(args):
    diag = load_diagram(args.file)
    n = count_generators(diag)
    if args.count_only:
        _emit(args, {"diagram": diag.name, "generator_count": n}, str(n))
        return OK
    gens = enumerate_generators(diag)
    _emit(args, {"diagram": diag.name, "generator_count": n, "generators": [str(g) for g in gens]},
          "\n".join(str(g) for g in gens))
    return OK


def cmd_periodic(args):
    diag = load_diagram(args.file)
    pb = periodic_domains(diag)
    lines = [f"rank {pb.rank}"]
    for v, c in zip(pb.basis, pb.beta_boundaries):
        dom = " ".join(f"{k:+d}{r}" for r, k in zip(pb.region_ids, v) if k)
        bd = " ".join(f"{k:+d}beta{j}" for j, k in enumerate(c, start=1) if k) or "0"
        lines.append(f"  {dom}   d_b = {bd}")
    _emit(args, pb.to_json(), "\n".join(lines))
    return OK


def cmd_admissible(args):
    diag = load_diagram(args.file)
    ok, witness = check_weak_admissibility(diag)
    payload = {"diagram": diag.name, "admissible": ok, "witness": witness}
    text = "weakly admissible" if ok else f"not admissible; one-signed periodic domain {witness}"
    _emit(args, payload, text)
    return OK if ok else FAILED


def cmd_spinc(args):
    diag = load_diagram(args.file)
    path = None
    if args.path:
        with open(args.path, encoding="utf-8") as fh:
            path = GradingPath.parse(diag, fh.read())
    pb = periodic_domains(diag)
    classes = partition_by_spinc(diag, path, args.base)
    payload = {"rank": pb.rank, "basis": [list(v) for v in pb.basis],
               "classes": {format_triple(k): [str(g) for g in v] for k, v in classes.items()}}
    text = "\n".join(f"{format_triple(k)}: {len(v)} generators  " + " ".join(str(g) for g in v)
                     for k, v in sorted(classes.items()))
    _emit(args, payload, text)
    return OK


def _rules(args):
    return load_rules(args.rules) if getattr(args, "rules", None) else None


def cmd_complex(args):
    diag = load_diagram(args.file)
    z = _ids(args.basepoints) if args.basepoints else None
    cx = build_complex(diag, z, _spinc(args.spinc), _rules(args))
    lines = [f"Spin^c {format_triple(cx.spinc)}, basepoints {' '.join(cx.basepoints)}, "
             f"{len(cx.generators)} generators, group ring rank {cx.rank}"]
    lines += _matrix_text(cx) or ["  d = 0"]
    _emit(args, cx.to_json(diag), "\n".join(lines))
    return OK


def cmd_reduce(args):
    diag = load_diagram(args.file)
    red = reduce_basepoints(diag, _ids(args.z1), _ids(args.z2), _spinc(args.spinc), _rules(args))
    direct = complex_homology(red.z2.d, red.z2.rank)
    reduced = complex_homology(red.complex.d, red.complex.rank)
    agree = direct.describe() == reduced.describe()
    payload = {"pairs": [[str(red.z1.generators[a]), str(red.z1.generators[b])] for a, b in zip(red.A, red.B)],
               "H": [str(g) for g in red.complex.generators], "reduced": red.complex.to_json(),
               "homology_reduced": reduced.to_json(), "homology_direct": direct.to_json(), "agree": agree}
    lines = [f"cancelled {len(red.A)} pairs; H = {' '.join(str(g) for g in red.complex.generators) or '(empty)'}"]
    lines += _matrix_text(red.complex)
    lines.append(f"homology: reduced {reduced.describe()}, direct {direct.describe()}")
    _emit(args, payload, "\n".join(lines))
    return OK if agree else FAILED


def cmd_homology(args):
    diag = load_diagram(args.file)
    keys = [_spinc(args.spinc)] if args.spinc is not None else sorted(partition_by_spinc(diag))
    out = {}
    lines = []
    for key in keys:
        cx = build_complex(diag, spinc=key, rules=_rules(args))
        h = complex_homology(cx.d, cx.rank)
        out[format_triple(cx.spinc)] = h.to_json()
        lines.append(f"{format_triple(cx.spinc)}: {h.describe()}")
    _emit(args, {"diagram": diag.name, "homology": out}, "\n".join(lines))
    return OK


def cmd_replicate(args):
    which = args.which
    if which == "star":
        ok, tr = replicate.verify_star_formula()
        text = f"star = {tr['star']}"
    elif which == "s5":
        ok, tr = replicate.verify_section5()
        text = (f"{tr['assignments']} assignments, {tr['survivors']} satisfy the {tr['relation_count']} relations, "
                f"counterexample: {tr['counterexample']}")
    elif which == "lemma41":
        if args.n is None:
            raise InputError("lemma41 needs --n")
        ok, tr = replicate.verify_lemma41(args.n)
        text = "\n".join(f"  {k}: {v}" for k, v in tr["claims"].items())
    elif which == "s6":
        ok, tr = replicate.verify_section6()
        text = (f"{tr['square_zero']} of {tr['completions']} completions square to zero; "
                f"V cancels: {tr['V_cancels']}; failures: {tr['failure_count']}")
    else:
        ok, tr = replicate.verify_lemma61_degenerations(replicate.load_lemma61_data(args.data) if args.data else None)
        text = "\n".join(f"  {i['lhs']} = {i['rhs']}: {i['holds']}" for i in tr["identities"])
        text += f"\n  #psi3 = #psi6 derived: {tr['psi3_equals_psi6']}"
    _emit(args, {"check": which, "ok": ok, "transcript": tr}, f"{which}: {'true' if ok else 'false'}\n{text}")
    return OK if ok else FAILED


# ----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="hfw", description="Twisted hat Heegaard Floer workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, with_file=True):
        p = sub.add_parser(name, help=help_)
        if with_file:
            p.add_argument("file", help=".hd diagram file")
        p.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT",
                       help="structured output (to OUT, or stdout when no file is given)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check diagram invariants")
    p = add("gens", cmd_gens, "list generators")
    p.add_argument("--count-only", action="store_true")
    add("periodic", cmd_periodic, "periodic domain basis")
    add("admissible", cmd_admissible, "weak admissibility")
    p = add("spinc", cmd_spinc, "relative Spin^c classes")
    p.add_argument("--base", required=True, help="base generator, e.g. 'x,u'")
    p.add_argument("--path", help=".path grading path file")
    p = add("complex", cmd_complex, "twisted chain complex of one Spin^c class")
    p.add_argument("--spinc")
    p.add_argument("--basepoints")
    p.add_argument("--rules")
    p = add("reduce", cmd_reduce, "cancel the z1 pairing inside the z2 complex")
    p.add_argument("--z1", required=True)
    p.add_argument("--z2", required=True)
    p.add_argument("--spinc")
    p.add_argument("--rules")
    p = add("homology", cmd_homology, "homology per Spin^c class")
    p.add_argument("--spinc")
    p.add_argument("--rules")
    p = add("replicate", cmd_replicate, "run a symbolic verification", with_file=False)
    p.add_argument("which", choices=["s5", "s6", "star", "lemma41", "lemma61"])
    p.add_argument("--n", type=int)
    p.add_argument("--data", help="alternative fragment data for lemma61")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ComplexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    except (InputError, DiagramError, OSError, RulesSyntaxError, PathInvalid, NotPeriodic, NotAdmissible,
            Infeasible, UnknownDiskCount, DecompositionFailed, replicate.ParameterOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
