"""Command-line interface: ``unref <subcommand> ...``."""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import List, Optional

from . import harness
from .bijection import (
    CASES,
    NT4,
    TRIANGULAR,
    BijectionCase,
    ConstraintViolation,
    admissible_cases,
    backward,
    classify,
    demonstrate_exclusion,
    forward,
    verify_bijection,
)
from .criteria import doubling_cells, is_unrefinable_definitional, is_unrefinable_geometric
from .maximal import enumerate_unrefinable, max_missing_subfamily, maximal_unrefinable
from .numset import format_set, from_partition, is_semigroup, parse_set, to_partition
from .parallel import default_jobs
from .partitions import PARITIES, PartClassFilter, enumerate_distinct, parse_parts, triangular_decompose
from .young import YoungDiagram, kn_inverse, kn_transform, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> List[int]:
    body = text.strip().strip("()[]")
    try:
        return [int(x) for x in body.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise harness.IoFailure(str(exc)) from exc
    with fh:
        yield fh


def _fmt(args, default: str = "json") -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    return args.format or default


# enumerate -------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    N = args.weight
    if N < 1:
        raise UsageError("--weight must be positive")
    maximal = None
    if args.unrefinable or args.maximal or args.max_missing:
        if args.parity != "all" or args.max_part is not None:
            raise UsageError("--parity/--max-part apply to plain distinct-part enumeration only")
        if args.maximal or args.max_missing:
            maximal = maximal_unrefinable(N, method=args.method, jobs=args.jobs)
            stream = max_missing_subfamily(maximal) if args.max_missing else maximal
        else:
            stream = enumerate_unrefinable(N, jobs=args.jobs)
            if args.min_parts > 2:
                stream = (p for p in stream if p.t >= args.min_parts)
    else:
        filt = PartClassFilter(min_parts=args.min_parts, max_part=args.max_part, parity=args.parity)
        stream = enumerate_distinct(N, filt)
    with _output(args.out) as out:
        harness.emit_partitions(stream, _fmt(args), out, maximal=maximal)
    return EXIT_OK


# check -----------------------------------------------------------------------


def cmd_check(args) -> int:
    p = parse_parts(args.partition)
    wd = triangular_decompose(p.weight)
    rec = {"parts": list(p.parts), "weight": p.weight, "n": wd.n, "d": wd.d}
    verdicts = []
    if args.method in ("def", "both"):
        v = is_unrefinable_definitional(p)
        rec["definitional"] = v.to_dict()
        verdicts.append(v.unrefinable)
    if args.method in ("geo", "both"):
        v = is_unrefinable_geometric(p)
        rec["geometric"] = v.to_dict()
        rec["doubling_cells"] = [list(c) for c in doubling_cells(p)]
        verdicts.append(v.unrefinable)
    rec["unrefinable"] = verdicts[0]
    if len(set(verdicts)) > 1:
        rec["agree"] = False
    print(_dump(rec))
    return EXIT_OK if len(set(verdicts)) == 1 else EXIT_FAIL


# kn --------------------------------------------------------------------------


def _set_record(s) -> dict:
    ok, witness = is_semigroup(s)
    rec = {
        "set": format_set(s),
        "gaps": list(s.gaps),
        "frobenius": s.frobenius,
        "genus": s.genus,
        "multiplicity": s.multiplicity,
        "semigroup": ok,
    }
    if witness is not None:
        rec["witness"] = list(witness)
    return rec


def cmd_kn(args) -> int:
    if args.inverse:
        if not args.rows:
            raise UsageError("--inverse needs --rows")
        y = YoungDiagram.of(_ints(args.rows))
        s = kn_inverse(y)
        rec = {"rows": list(y.rows), **_set_record(s), "partition": list(to_partition(s).parts)}
    else:
        if args.set:
            s = parse_set(args.set)
        elif args.partition:
            s = from_partition(parse_parts(args.partition))
        else:
            raise UsageError("kn needs --set or --partition")
        y = kn_transform(s)
        rec = {
            **_set_record(s),
            "rows": list(y.rows),
            "first_column_hooks": list(y.hooks.first_column),
            "first_row_hooks": list(y.hooks.first_row),
        }
    print(_dump(rec))
    return EXIT_OK


# render ----------------------------------------------------------------------


def _diagram_from_args(args) -> YoungDiagram:
    given = [x for x in (args.partition, args.set, args.rows) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --partition, --set, --rows")
    if args.partition:
        return kn_transform(from_partition(parse_parts(args.partition)))
    if args.set:
        return kn_transform(parse_set(args.set))
    return YoungDiagram.of(_ints(args.rows))


def cmd_render(args) -> int:
    y = _diagram_from_args(args)
    mode = "hooks" if args.hooks else "cells"
    if args.format == "png":
        if not args.out:
            raise UsageError("--format png needs --out")
        from .plotting import save_diagram

        try:
            save_diagram(y, args.out, hooks=args.hooks)
        except OSError as exc:
            raise harness.IoFailure(str(exc)) from exc
        return EXIT_OK
    text = render(y, mode, args.format)
    with _output(args.out) as out:
        out.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


# bijection -------------------------------------------------------------------


def _case_from_args(args, eta: Optional[List[int]] = None) -> BijectionCase:
    k = args.k
    if k is None:
        if args.case == TRIANGULAR:
            k = (args.n + 1) // 2
        elif eta is not None:
            k = sum(eta) if args.case == NT4 else (sum(eta) - 2) // 2
        else:
            raise UsageError(f"--k is required for case {args.case}")
    return BijectionCase(args.case, args.n, k)


def cmd_bij_forward(args) -> int:
    p = parse_parts(args.partition)
    case = classify(p)
    eta = forward(p, case)
    print(_dump({
        "parts": list(p.parts),
        "case": case.to_dict(),
        "eta": list(eta.parts),
        "improper": eta.improper,
        "in_target_family": eta.in_target_family(),
    }))
    return EXIT_OK


def cmd_bij_backward(args) -> int:
    eta = _ints(args.eta)
    case = _case_from_args(args, eta)
    lam = backward(eta, case, allow_improper=args.allow_improper)
    print(_dump({"eta": sorted(eta), "case": case.to_dict(), "parts": list(lam.parts),
                 "weight": lam.weight}))
    return EXIT_OK


def cmd_bij_verify(args) -> int:
    case = _case_from_args(args)
    rep = verify_bijection(case, method=args.method)
    fmt = _fmt(args, "json")
    with _output(args.out) as out:
        if fmt == "json":
            out.write(_dump(rep.to_dict()) + "\n")
        else:
            status = "PASS" if rep.passed else "FAIL"
            out.write(f"{case.case} n={case.n} k={case.k} weight={case.weight}: {status}  "
                      f"mup={len(rep.mup)} max-missing={len(rep.ubar)} "
                      f"target={len(case.target_family())}\n")
            for lam, eta in sorted(rep.images.items()):
                out.write(f"  {tuple(lam)} -> {tuple(eta)}\n")
            for name, ok in sorted(rep.checks.items()):
                out.write(f"  {name}: {'ok' if ok else 'FAILED'}\n")
            for f in rep.failures:
                out.write("  failure: " + _dump(f) + "\n")
    if args.figdir:
        from .plotting import bijection_figure

        bijection_figure(rep, args.figdir)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_bij_exclusion(args) -> int:
    eta = _ints(args.eta) if args.eta else None
    case = _case_from_args(args)
    if eta is None and not case.excluded_eta:
        raise UsageError(f"{case.case} n={case.n} k={case.k} excludes nothing; pass --eta")
    demos = demonstrate_exclusion(case, eta)
    for d in demos:
        print(_dump(d))
    if args.figdir:
        from .plotting import exclusion_figure

        os.makedirs(args.figdir, exist_ok=True)
        for d in demos:
            tag = "_".join(map(str, d["eta"]))
            exclusion_figure(d, os.path.join(args.figdir, f"exclusion_{case.case}_n{case.n}_{tag}.png"))
    return EXIT_OK


def cmd_bij_cases(args) -> int:
    for c in admissible_cases(args.max_weight):
        print(_dump(c.to_dict()))
    return EXIT_OK


# verify / oeis-check ---------------------------------------------------------


def cmd_verify(args) -> int:
    names = list(harness.SUITES) if args.suite == "all" else [args.suite]
    fmt = _fmt(args, "text")
    ok = True
    with _output(args.out) as out:
        for name in names:
            rep = harness.run_suite(
                name, max_weight=args.max_weight, jobs=args.jobs, method=args.method,
                max_frobenius=args.max_frobenius, max_cells=args.max_cells,
            )
            harness.emit_report(rep, fmt, out)
            ok &= rep.passed
            if args.figdir:
                from .plotting import report_figures

                report_figures(rep, args.figdir)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oeis(args) -> int:
    try:
        with open(args.bfile, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise harness.IoFailure(str(exc)) from exc
    rep = harness.oeis_check(harness.parse_bfile(text), args.max, jobs=args.jobs)
    harness.emit_report(rep, _fmt(args, "text"), sys.stdout)
    if args.figdir:
        from .plotting import report_figures

        report_figures(rep, args.figdir)
    return EXIT_OK if rep.passed else EXIT_FAIL


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="unref",
        description="Unrefinable partitions, numerical sets and hook-length diagrams.",
        allow_abbrev=False,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def jobs(p):
        p.add_argument("--jobs", type=int, default=default_jobs(),
                       help="worker processes (default: $UNREF_JOBS or 1)")

    def fmt(p, choices=("json", "csv", "text")):
        p.add_argument("--format", choices=choices, default=None)
        p.add_argument("--json", action="store_true", help="shorthand for --format json")
        p.add_argument("--csv", action="store_true", help="shorthand for --format csv")

    p = sub.add_parser("enumerate", help="list partitions into distinct parts", allow_abbrev=False)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--unrefinable", action="store_true")
    p.add_argument("--maximal", action="store_true", help="only those with the largest possible largest part")
    p.add_argument("--max-missing", action="store_true", help="maximal ones attaining the missing-part bound")
    p.add_argument("--method", choices=("exhaustive", "pinned"), default="exhaustive")
    p.add_argument("--min-parts", type=int, default=1)
    p.add_argument("--max-part", type=int, default=None)
    p.add_argument("--parity", choices=PARITIES, default="all")
    p.add_argument("--out", default=None)
    fmt(p)
    jobs(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="decide unrefinability", allow_abbrev=False)
    p.add_argument("--partition", required=True)
    p.add_argument("--method", choices=("def", "geo", "both"), default="both")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("kn", help="numerical set to diagram, or back", allow_abbrev=False)
    p.add_argument("--set", default=None, help='members up to F+1 then "->", e.g. 0,3,4,7,9,->')
    p.add_argument("--partition", default=None)
    p.add_argument("--rows", default=None)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_kn)

    p = sub.add_parser("render", help="draw a diagram", allow_abbrev=False)
    p.add_argument("--partition", default=None)
    p.add_argument("--set", default=None)
    p.add_argument("--rows", default=None)
    p.add_argument("--hooks", action="store_true")
    p.add_argument("--format", choices=("ascii", "svg", "png"), default="ascii")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bijection", help="forward/backward maps and their verification", allow_abbrev=False)
    bsub = p.add_subparsers(dest="action", required=True)

    def case_args(q, need_n=True):
        q.add_argument("--case", choices=CASES, required=True)
        q.add_argument("--n", type=int, required=need_n)
        q.add_argument("--k", type=int, default=None)

    q = bsub.add_parser("forward", allow_abbrev=False)
    q.add_argument("--partition", required=True)
    q.set_defaults(func=cmd_bij_forward)

    q = bsub.add_parser("backward", allow_abbrev=False)
    q.add_argument("--eta", required=True)
    case_args(q)
    q.add_argument("--allow-improper", action="store_true")
    q.set_defaults(func=cmd_bij_backward)

    q = bsub.add_parser("verify", allow_abbrev=False)
    case_args(q)
    q.add_argument("--method", choices=("exhaustive", "pinned"), default="exhaustive")
    q.add_argument("--format", choices=("json", "text"), default=None)
    q.add_argument("--json", action="store_true")
    q.add_argument("--out", default=None)
    q.add_argument("--figdir", default=None, help="write diagram figures here")
    q.set_defaults(func=cmd_bij_verify)

    q = bsub.add_parser("exclusion", allow_abbrev=False)
    case_args(q)
    q.add_argument("--eta", default=None)
    q.add_argument("--figdir", default=None)
    q.set_defaults(func=cmd_bij_exclusion)

    q = bsub.add_parser("cases", allow_abbrev=False)
    q.add_argument("--max-weight", type=int, default=153)
    q.set_defaults(func=cmd_bij_cases)

    p = sub.add_parser("verify", help="run verification suites", allow_abbrev=False)
    p.add_argument("--suite", choices=harness.SUITES + ("all",), default="all")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--method", choices=("exhaustive", "pinned"), default="exhaustive")
    p.add_argument("--max-frobenius", type=int, default=20)
    p.add_argument("--max-cells", type=int, default=20)
    p.add_argument("--out", default=None)
    p.add_argument("--figdir", default=None, help="write report figures here")
    fmt(p)
    jobs(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis-check", help="compare counts with an OEIS b-file", allow_abbrev=False)
    p.add_argument("--bfile", required=True)
    p.add_argument("--max", type=int, default=40)
    p.add_argument("--figdir", default=None)
    fmt(p)
    jobs(p)
    p.set_defaults(func=cmd_oeis)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (harness.IoFailure, OSError) as exc:
        print(f"unref: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError) as exc:
        print(f"unref: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstraintViolation as exc:
        print(f"unref: construction check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
