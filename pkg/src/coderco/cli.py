"""Command-line interface.

Exit codes: 0 success (including "obstructed" and "blocked" answers),
1 axiom failure or dimension overflow, 2 parse error or bad arguments,
3 internal error.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import __version__, config
from .coalg import CoderPair
from .cohomology import coder_cohomology, hochschild_cohomology, les_check
from .comodule import BicomodulePair, check_bicomodule, check_comodule_pair, coadjoint
from .deform import (Deformation, Gauge, apply_gauge, check_equivalence, extend, infinitesimal, obstruction,
                     sample_deformation, trivialize, validate_deformation)
from .duality import DerPair, check_der_pair, dual_coder_pair, dual_der_pair
from .errors import (AxiomViolationError, DimensionOverflowError, InternalInconsistencyError, ParseError,
                     ShapeMismatchError)
from .examples import EXAMPLE_NAMES, build
from .report import Report
from .serialize import cochain_entries, dumps, dumps_data, fmt, load, to_data

EXIT_OK, EXIT_AXIOM, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    """Bad arguments or the wrong kind of input file (exit 2)."""


def _load(path, kind=None, dim_c=None):
    obj = load(path, dim_c)
    if kind is not None and not isinstance(obj, kind):
        raise UsageError(f"{path}: expected a {kind.__name__} file, got {type(obj).__name__}")
    return obj


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_data(report: Report) -> dict:
    return {"ok": report.ok, "failures": [
        {"identity": f.identity, "order": f.order, "entries": [[i, j, fmt(v)] for i, j, v in f.locations()]}
        for f in report.failures]}


def _print_report(report: Report) -> int:
    if report.ok:
        print("pass")
        return EXIT_OK
    for f in report.failures:
        print(f.describe(limit=20))
    return EXIT_AXIOM


def _coder_cochain_data(x, d: int) -> dict:
    out = {"degree": x.degree, "f": cochain_entries(x.f.map, d, x.f.degree)}
    if x.g is not None:
        out["g"] = cochain_entries(x.g.map, d, x.g.degree)
    return out


def _coords(v):
    return None if v is None else [fmt(c) for c in v]


# commands -------------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        obj = load(args.path, _base_dim(args.base))
    except AxiomViolationError as exc:
        return _print_report(exc.report)
    if isinstance(obj, CoderPair):
        return _print_report(Report())
    if isinstance(obj, BicomodulePair):
        if args.base is None:
            raise UsageError("validating a bicomodule_pair needs --base CODER_PAIR_FILE")
        base = _load(args.base, CoderPair)
        return _print_report(Report(check_bicomodule(base.coalgebra, obj.bicomodule).failures
                                    + check_comodule_pair(base, obj).failures))
    if isinstance(obj, Deformation):
        return _print_report(validate_deformation(obj))
    if isinstance(obj, DerPair):
        return _print_report(check_der_pair(obj))
    return _print_report(Report())  # a gauge is valid once it parses


def _base_dim(base):
    return None if base is None else _load(base, CoderPair).dim


def cmd_cohomology(args) -> int:
    cp = _load(args.path, CoderPair)
    if args.module == "coadjoint":
        mp = coadjoint(cp)
    else:
        mp = _load(args.module, BicomodulePair, cp.dim)
        report = Report(check_bicomodule(cp.coalgebra, mp.bicomodule).failures
                        + check_comodule_pair(cp, mp).failures)
        if not report:
            raise AxiomViolationError(report)
    if args.nmax < 1:
        raise UsageError("--nmax must be at least 1")
    coder = coder_cohomology(cp, mp, args.nmax)
    data = {"coder": coder.to_dict(args.timings),
            "hochschild": hochschild_cohomology(cp.coalgebra, mp.bicomodule, args.nmax).to_dict(args.timings)}
    if args.les:
        data["les"] = les_check(cp, mp, args.nmax, coder).to_dict()
    _emit(dumps_data(data), args.output)
    return EXIT_OK


def cmd_deform(args) -> int:
    sub = args.deform_cmd
    if sub == "sample":
        cp = _load(args.path, CoderPair)
        seed = config.default_seed() if args.seed is None else args.seed
        d = sample_deformation(cp, args.order, random.Random(seed))
        _emit(dumps(d), args.output)
        return EXIT_OK
    d = _load(args.path, Deformation)
    if sub == "validate":
        return _print_report(validate_deformation(d))
    if sub == "infinitesimal":
        inf = infinitesimal(d)
        _emit(dumps_data({"order": inf.order, "is_cocycle": inf.is_cocycle,
                          "cochain": _coder_cochain_data(inf.cochain, d.dim)}), None)
        return EXIT_OK
    if sub == "obstruct":
        ob = obstruction(d)
        _emit(dumps_data({"order": d.order + 1, "is_cocycle": ob.is_cocycle, "is_zero": ob.is_zero(),
                          "ob_c": cochain_entries(ob.ob_c, d.dim, 3),
                          "ob_psi": cochain_entries(ob.ob_psi, d.dim, 2)}), None)
        return EXIT_OK
    if sub == "extend":
        res = extend(d)
        if res.extended:
            if args.output:
                _emit(dumps(res.deformation), args.output)
                _emit(dumps_data({"status": "extended", "order": res.deformation.order, "file": args.output}), None)
            else:
                _emit(dumps(res.deformation), None)
        else:
            _emit(dumps_data({"status": "obstructed", "order": d.order + 1,
                              "class_coordinates": _coords(res.class_coordinates)}), None)
        return EXIT_OK
    if sub == "trivialize":
        res = trivialize(d, args.budget)
        if res.trivialized:
            if args.output:
                _emit(dumps(res.gauge), args.output)
                _emit(dumps_data({"status": "trivialized", "order": res.gauge.order, "file": args.output}), None)
            else:
                _emit(dumps(res.gauge), None)
        else:
            _emit(dumps_data({"status": "blocked", "order": res.order,
                              "class_coordinates": _coords(res.class_coordinates),
                              "cochain": _coder_cochain_data(res.blocking, d.dim)}), None)
        return EXIT_OK
    if sub == "gauge":
        g = _load(args.gauge, Gauge)
        _emit(dumps(apply_gauge(d, g)), args.output)
        return EXIT_OK
    if sub == "equivalent":
        other = _load(args.other, Deformation)
        g = _load(args.gauge, Gauge)
        return _print_report(check_equivalence(d, other, g))
    raise UsageError(f"unknown deform subcommand {sub}")


def cmd_dualize(args) -> int:
    obj = _load(args.path)
    if isinstance(obj, CoderPair):
        out = dual_der_pair(obj)
    elif isinstance(obj, DerPair):
        out = dual_coder_pair(obj)
    else:
        raise UsageError("dualize takes a coder_pair or der_pair file")
    _emit(dumps(out), args.output)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.name not in EXAMPLE_NAMES:
        raise UsageError(f"unknown example {args.name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
    try:
        cp = build(args.name, tuple(args.params))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(dumps(cp), args.output)
    return EXIT_OK


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coderco", description="Exact computations for Coder pairs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the axioms of a structure file")
    v.add_argument("path")
    v.add_argument("--base", help="coder_pair file (required for bicomodule_pair files)")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("cohomology", help="Hochschild and Coder cohomology as JSON")
    c.add_argument("path", help="coder_pair file")
    c.add_argument("--module", default="coadjoint", help="'coadjoint' or a bicomodule_pair file")
    c.add_argument("--nmax", type=int, default=2)
    c.add_argument("--les", action="store_true", help="include the long-exact-sequence table")
    c.add_argument("--timings", action="store_true", help="include per-degree timings (not deterministic)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_cohomology)

    d = sub.add_parser("deform", help="deformation tools")
    dsub = d.add_subparsers(dest="deform_cmd", required=True)
    for name, helptext in [("validate", "check the coefficient identities"),
                           ("infinitesimal", "first nonzero coefficient and its cocycle certificate"),
                           ("obstruct", "obstruction cochains and their cocycle certificate"),
                           ("extend", "extend by one order or report the obstruction class"),
                           ("trivialize", "gauge to the trivial deformation or report the blocking class"),
                           ("gauge", "apply a gauge file"),
                           ("equivalent", "check that a gauge relates two deformations"),
                           ("sample", "seeded random deformation of a coder_pair file")]:
        s = dsub.add_parser(name, help=helptext)
        s.add_argument("path")
        if name == "equivalent":
            s.add_argument("other")
        if name in ("gauge", "equivalent"):
            s.add_argument("gauge")
        if name == "trivialize":
            s.add_argument("--budget", type=int, default=3)
        if name == "sample":
            s.add_argument("--order", type=int, default=2)
            s.add_argument("--seed", type=int)
        if name in ("extend", "trivialize", "gauge", "sample"):
            s.add_argument("-o", "--output")
    d.set_defaults(func=cmd_deform)

    u = sub.add_parser("dualize", help="transpose a coder_pair into a der_pair or back")
    u.add_argument("path")
    u.add_argument("-o", "--output")
    u.set_defaults(func=cmd_dualize)

    e = sub.add_parser("example", help="write a named example coder_pair file")
    e.add_argument("name")
    e.add_argument("params", nargs="*", type=int)
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, ShapeMismatchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AxiomViolationError as exc:
        for f in exc.report.failures:
            print(f.describe(limit=20))
        return EXIT_AXIOM
    except DimensionOverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_AXIOM
    except InternalInconsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - the exit-code contract is total
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
