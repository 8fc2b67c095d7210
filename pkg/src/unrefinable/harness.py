"""Verification suites, OEIS b-file ingestion and report emission."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from typing import IO, Dict, Iterable, List, Optional

from .bijection import (
    NT4,
    NT5,
    TRIANGULAR,
    BijectionCase,
    admissible_cases,
    demonstrate_exclusion,
    diagram_of,
    forward,
    verify_bijection,
)
from .criteria import (
    _agree_range,
    is_unrefinable,
    is_unrefinable_definitional,
    is_unrefinable_geometric,
)
from .maximal import (
    bound_for_weight,
    enumerate_unrefinable,
    exceptional,
    max_missing_subfamily,
    maximal_unrefinable,
)
from .numset import NumericalSet, from_partition, to_partition
from .parallel import fork_join
from .partitions import (
    PROPER,
    DistinctPartition,
    _trusted,
    enumerate_distinct,
    missing_parts,
    triangular,
    triangular_decompose,
)
from .young import diagrams, is_self_conjugate, kn_inverse, kn_transform, quasi_symmetric_profile

SUITES = ("counts", "equivalence", "roundtrips", "structure", "exceptions")

DEFAULT_CAPS = {
    "counts": 120,
    "equivalence": 60,
    "roundtrips": 153,
    "structure": 120,
    "exceptions": 153,
}


class UnknownSuite(ValueError):
    pass


class MalformedLine(ValueError):
    def __init__(self, line_no: int, line: str, reason: str):
        super().__init__(f"line {line_no}: {reason}: {line!r}")
        self.line_no = line_no


class IoFailure(OSError):
    pass


@dataclass
class VerificationReport:
    suite: str
    params: Dict[str, object] = field(default_factory=dict)
    instances: int = 0
    failures: List[dict] = field(default_factory=list)
    rows: List[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **record) -> None:
        self.failures.append(record)

    def to_dict(self) -> dict:
        # wall time is left out so payloads are byte-stable across runs
        return {
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
            "rows": self.rows,
        }


def _parts(p) -> list:
    return list(p.parts if isinstance(p, DistinctPartition) else p)


# counts ----------------------------------------------------------------------


def _count_instance(args) -> dict:
    label, n, d, k, method = args
    N = triangular(n) - d
    mup = maximal_unrefinable(N, method=method)
    bound = bound_for_weight(N).bound
    if label == "triangular-even":
        expected = 1
        target = None
    else:
        case = BijectionCase(label, n, k)
        target = len(case.target_family())
        expected = target + (1 if label == NT4 else 0)
    return {
        "case": label,
        "n": n,
        "d": d,
        "k": k,
        "weight": N,
        "largest": mup[0].largest,
        "bound": bound,
        "target_size": target,
        "expected": expected,
        "got": len(mup),
        "mup": [list(p.parts) for p in mup],
    }


def _suite_counts(rep: VerificationReport, max_weight: int, method: str, jobs: int) -> None:
    items = []
    n = 7
    while triangular(n) <= max_weight:
        if n % 2 == 0:
            items.append(("triangular-even", n, 0, None, method))
        n += 1
    for c in admissible_cases(max_weight):
        items.append((c.case, c.n, c.d, c.k, method))
    items.sort(key=lambda x: (triangular(x[1]) - x[2], x[0]))
    for row in fork_join(_count_instance, items, jobs):
        rep.instances += 1
        ok = row["got"] == row["expected"]
        row["pass"] = ok and row["largest"] == row["bound"]
        rep.rows.append(row)
        if row["largest"] != row["bound"]:
            rep.fail(input={"weight": row["weight"]}, check="largest_part",
                     expected=row["bound"], got=row["largest"])
        if not ok:
            rep.fail(input={"case": row["case"], "n": row["n"], "k": row["k"]},
                     check="count", expected=row["expected"], got=row["got"])
        if row["case"] == "triangular-even":
            pi = list(exceptional("pi", row["n"]).partition.parts)
            if row["mup"] != [pi]:
                rep.fail(input={"n": row["n"]}, check="unique_pi", expected=[pi], got=row["mup"])


# equivalence -----------------------------------------------------------------


def _agree_weight(N: int) -> tuple:
    count = sum(1 for _ in enumerate_distinct(N, PROPER)) if N >= 3 else 0
    bad = _agree_range((N, 1, N)) if N >= 3 else None
    return N, count, bad


def _suite_equivalence(rep: VerificationReport, max_weight: int, jobs: int) -> None:
    # the biggest weights dominate, so hand them out first
    weights = list(range(max_weight, 0, -1))
    results = sorted(fork_join(_agree_weight, weights, jobs))
    for N, count, bad in results:
        rep.instances += count
        rep.rows.append({"weight": N, "partitions": count, "agree": bad is None})
        if bad is not None:
            rep.fail(input=list(bad), check="verdicts_agree", expected="equal verdicts", got="divergent")


# roundtrips ------------------------------------------------------------------


def _kn_roundtrip_frobenius(F: int) -> tuple:
    bad = None
    count = 0
    for mask in range(1 << (F - 1)):
        gaps = tuple(g for g in range(1, F) if (mask >> (g - 1)) & 1) + (F,)
        s = NumericalSet(gaps)
        count += 1
        if bad is None and kn_inverse(kn_transform(s)) != s:
            bad = list(gaps)
    return F, count, bad


def _bijection_roundtrip(args) -> dict:
    case, n, k, method = args
    rep = verify_bijection(BijectionCase(case, n, k), method=method)
    keep = ("backward_forward", "forward_backward", "injective", "surjective", "backward_in_ubar")
    return {
        "case": case,
        "n": n,
        "k": k,
        "weight": rep.case.weight,
        "ubar": len(rep.ubar),
        "checks": {c: rep.checks[c] for c in keep if c in rep.checks},
        "failures": [f for f in rep.failures if f["check"] in keep],
    }


def _suite_roundtrips(
    rep: VerificationReport, max_weight: int, max_frobenius: int, max_cells: int,
    method: str, jobs: int,
) -> None:
    for F, count, bad in fork_join(_kn_roundtrip_frobenius, list(range(1, max_frobenius + 1)), jobs):
        rep.instances += count
        rep.rows.append({"check": "kn_inverse_after_kn", "frobenius": F, "sets": count, "pass": bad is None})
        if bad is not None:
            rep.fail(input=bad, check="kn_inverse_after_kn")
    for cells in range(1, max_cells + 1):
        count, ok = 0, True
        for y in diagrams(cells):
            count += 1
            back = kn_transform(kn_inverse(y))
            if back != y:
                ok = False
                rep.fail(input=list(y.rows), check="kn_after_kn_inverse", got=list(back.rows))
        rep.instances += count
        rep.rows.append({"check": "kn_after_kn_inverse", "cells": cells, "diagrams": count, "pass": ok})
    for N in range(1, 41):
        for p in enumerate_distinct(N):
            rep.instances += 1
            if to_partition(from_partition(p)) != p:
                rep.fail(input=_parts(p), check="partition_set_roundtrip")
    items = [(c.case, c.n, c.k, method) for c in admissible_cases(max_weight)]
    for row in fork_join(_bijection_roundtrip, items, jobs):
        rep.instances += row["ubar"]
        row["pass"] = not row["failures"]
        for f in row.pop("failures"):
            rep.fail(input={"case": row["case"], "n": row["n"], "k": row["k"], **f})
        rep.rows.append(row)


# structure -------------------------------------------------------------------


def structure_violations(lam: DistinctPartition, case: BijectionCase) -> List[str]:
    """Names of the structural properties of a max-missing element that fail."""
    bad = []
    y = diagram_of(lam)
    H = y.hooks
    n, k = case.n, case.k
    L = lam.largest
    # complement pairing around the largest part
    for x in range(1, L):
        if 2 * x == L:
            if x in lam:
                bad.append("half_of_largest_is_part")
        elif (x in lam) == ((L - x) in lam):
            bad.append("complement_pairing")
            break
    if lam.t != n - 2:
        bad.append("part_count")
    if any(H.h(i, j) != H.h(i, 1) + H.h(1, j) - H.h(1, 1) for i, j, _ in H.cells() if i > 1 and j > 1):
        bad.append("interior_hook_identity")
    if case.case == NT5:
        if not is_self_conjugate(y):
            bad.append("self_conjugate")
        if y.cell_count != 2 * n - 3 + 2 * k:
            bad.append("cell_count")
        if any(h % 2 == 0 for h in H.diagonal):
            bad.append("odd_diagonal")
        return bad
    try:
        prof = quasi_symmetric_profile(y, n)
    except ValueError:
        return bad + ["quasi_symmetric_profile"]
    z = prof.z
    want_cells = 3 * n - 3 if case.case == TRIANGULAR else 2 * n - 4 + 2 * k
    if y.cell_count != want_cells:
        bad.append("cell_count")
    if sum(prof.extra_column_hooks) != k:
        bad.append("extra_column_sum")
    R, C = y.rows, y.column_heights
    col = lambda j: C[j - 1] if j <= len(C) else 0
    if any(R[i - 1] != col(i) + 1 for i in range(1, z + 1)):
        bad.append("rows_vs_columns_inside")
    if any(R[i - 1] != col(i + 1) for i in range(z + 1, len(R) + 1)):
        bad.append("rows_vs_columns_below")
    if any(H.h(i, j) != H.h(j, i) for i in range(1, z + 1) for j in range(1, z + 1)):
        bad.append("square_hook_symmetry")
    for i, j, h in H.cells():
        if i > z and j <= z and not (y.has_cell(j, i + 1) and H.h(j, i + 1) == h):
            bad.append("shifted_hook_symmetry")
            break
    if any(H.h(i, i) != 2 * H.h(i, z + 1) for i in range(1, z + 1)):
        bad.append("diagonal_doubling")
    return bad


def _structure_case(args) -> dict:
    case, n, k, method = args
    c = BijectionCase(case, n, k)
    ubar = max_missing_subfamily(maximal_unrefinable(c.weight, method=method))
    out = []
    for lam in ubar:
        v = structure_violations(lam, c)
        out.append({"partition": list(lam.parts), "cells": diagram_of(lam).cell_count, "violations": v})
    return {"case": case, "n": n, "k": k, "weight": c.weight, "elements": out}


def _suite_structure(rep: VerificationReport, max_weight: int, method: str, jobs: int) -> None:
    items = [(c.case, c.n, c.k, method) for c in admissible_cases(max_weight)]
    for row in fork_join(_structure_case, items, jobs):
        ok = True
        for el in row["elements"]:
            rep.instances += 1
            if el["violations"]:
                ok = False
                rep.fail(input=el["partition"], case=row["case"], n=row["n"], k=row["k"],
                         check="structure", got=el["violations"])
        rep.rows.append({
            "case": row["case"], "n": row["n"], "k": row["k"], "weight": row["weight"],
            "elements": len(row["elements"]),
            "cell_counts": sorted({el["cells"] for el in row["elements"]}),
            "pass": ok,
        })


# exceptions ------------------------------------------------------------------


def _suite_exceptions(rep: VerificationReport, max_weight: int) -> None:
    def record(label: str, ok: bool, **detail):
        rep.instances += 1
        rep.rows.append({"check": label, "pass": ok, **detail})
        if not ok:
            rep.fail(check=label, **detail)

    n = 7
    while triangular(n) - 4 <= max_weight:
        for kind in ("pi", "sigma", "tau"):
            ex = exceptional(kind, n)
            p = ex.partition
            ok = (
                p.weight == ex.expected_weight
                and is_unrefinable_definitional(p).unrefinable
                and is_unrefinable_geometric(p).unrefinable
            )
            record(f"{kind}_unrefinable", ok, n=n, input=list(p.parts))
        n += 1
    zetas = [(c.n, c.k) for c in admissible_cases(max_weight) if c.case == NT4]
    if (19, 6) not in zetas:
        zetas.append((19, 6))
    for n, k in zetas:
        ex = exceptional("zeta", n, k)
        p = ex.partition
        if n == 2 * k + 2:
            # d = 3: k + 2k = 3k with both summands missing, so sigma takes its place
            record("zeta_refinable_at_d3", not is_unrefinable(p), n=n, k=k, input=list(p.parts))
            continue
        eta = forward(p, BijectionCase(NT4, n, k))
        ok = (
            p.weight == ex.expected_weight
            and is_unrefinable(p)
            and is_unrefinable_geometric(p).unrefinable
            and eta.improper
            and eta.parts == (k,)
        )
        record("zeta_improper_image", ok, n=n, k=k, input=list(p.parts), got=list(eta.parts))
    # exclusions: every excluded eta must break under the raw construction
    for c in admissible_cases(max(max_weight, triangular(15))):
        if not c.excluded_eta:
            continue
        for demo in demonstrate_exclusion(c):
            ok = (not demo["geometric_unrefinable"]) and (not demo["unrefinable"])
            record("exclusion_breaks", ok, case=c.case, n=c.n, k=c.k,
                   input=demo["eta"], got=demo["partition"], offending=demo["offending_hooks"])


# dispatch --------------------------------------------------------------------


def run_suite(
    name: str,
    max_weight: Optional[int] = None,
    jobs: int = 1,
    method: str = "exhaustive",
    max_frobenius: int = 20,
    max_cells: int = 20,
) -> VerificationReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cap = DEFAULT_CAPS[name] if max_weight is None else max_weight
    params: Dict[str, object] = {"max_weight": cap}
    if name in ("counts", "roundtrips", "structure"):
        params["method"] = method
    if name == "roundtrips":
        params.update(max_frobenius=max_frobenius, max_cells=max_cells)
    rep = VerificationReport(name, params)
    t0 = time.perf_counter()
    if name == "counts":
        _suite_counts(rep, cap, method, jobs)
    elif name == "equivalence":
        _suite_equivalence(rep, cap, jobs)
    elif name == "roundtrips":
        _suite_roundtrips(rep, cap, max_frobenius, max_cells, method, jobs)
    elif name == "structure":
        _suite_structure(rep, cap, method, jobs)
    else:
        _suite_exceptions(rep, cap)
    rep.wall_time = time.perf_counter() - t0
    return rep


# OEIS b-files ----------------------------------------------------------------


@dataclass(frozen=True)
class BFile:
    entries: Dict[int, int]


def parse_bfile(text: str) -> BFile:
    """Parse OEIS b-file text: ``index value`` per line, ``#`` comments, blanks ignored."""
    entries: Dict[int, int] = {}
    last = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedLine(no, raw, "expected 'index value'")
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedLine(no, raw, "non-integer field") from None
        if val < 0:
            raise MalformedLine(no, raw, "negative value")
        if last is not None and idx <= last:
            raise MalformedLine(no, raw, "indices must increase")
        entries[idx] = val
        last = idx
    return BFile(entries)


def _unrefinable_counts(N: int) -> tuple:
    proper = sum(1 for _ in enumerate_unrefinable(N)) if N >= 3 else 0
    single = 1 if is_unrefinable(_trusted((N,))) else 0
    return N, proper, proper + single


def oeis_check(bfile: BFile, max_index: int, jobs: int = 1) -> VerificationReport:
    """Compare unrefinable-partition counts with b-file entries up to ``max_index``.

    Counts are computed with and without the single-part partition; an entry
    passes if it matches either, and the rows say which.
    """
    rep = VerificationReport("oeis-check", {"max": max_index})
    t0 = time.perf_counter()
    idx = [i for i in sorted(bfile.entries) if 1 <= i <= max_index]
    matched = set()
    for N, proper, with_single in fork_join(_unrefinable_counts, idx, jobs):
        rep.instances += 1
        val = bfile.entries[N]
        conv = [name for name, c in (("t>=2", proper), ("t>=1", with_single)) if c == val]
        matched.update(conv)
        row = {"index": N, "file": val, "computed_t_ge_2": proper, "computed_t_ge_1": with_single,
               "matches": conv}
        rep.rows.append(row)
        if not conv:
            rep.fail(input=N, expected=val, got={"t>=2": proper, "t>=1": with_single})
    # a file can only follow one convention; disagreement between rows is a failure
    if rep.rows:
        common = set.intersection(*(set(r["matches"]) for r in rep.rows))
        rep.params["convention"] = sorted(common) if common else "inconsistent"
        if not common and not rep.failures:
            rep.fail(check="convention", got=sorted(matched))
    rep.wall_time = time.perf_counter() - t0
    return rep


# emission --------------------------------------------------------------------

CSV_HEADER = ("parts", "weight", "n", "d", "lambda_t", "missing_count", "unrefinable", "maximal")


def partition_record(p: DistinctPartition) -> dict:
    wd = triangular_decompose(p.weight)
    return {"parts": list(p.parts), "weight": p.weight, "n": wd.n, "d": wd.d}


def _csv_row(p: DistinctPartition, maximal: Optional[set]) -> list:
    wd = triangular_decompose(p.weight)
    is_max = "" if maximal is None else str(p.parts in maximal).lower()
    return [
        ",".join(map(str, p.parts)), p.weight, wd.n, wd.d, p.largest,
        missing_parts(p).m, str(is_unrefinable(p)).lower(), is_max,
    ]


def emit_partitions(
    stream: Iterable[DistinctPartition],
    fmt: str,
    out: IO[str],
    maximal: Optional[Iterable[DistinctPartition]] = None,
) -> int:
    """Write a partition stream; returns how many were written."""
    mx = None if maximal is None else {p.parts for p in maximal}
    count = 0
    try:
        if fmt == "json":
            for p in stream:
                out.write(json.dumps(partition_record(p)) + "\n")
                count += 1
        elif fmt == "csv":
            w = csv.writer(out, delimiter=";", lineterminator="\n")
            w.writerow(CSV_HEADER)
            for p in stream:
                w.writerow(_csv_row(p, mx))
                count += 1
        elif fmt == "text":
            for p in stream:
                wd = triangular_decompose(p.weight)
                out.write(f"{p}  weight={p.weight} n={wd.n} d={wd.d} largest={p.largest} "
                          f"missing={missing_parts(p).m}\n")
                count += 1
        else:
            raise ValueError(f"unknown format {fmt!r}")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc
    return count


def _scalar(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def emit_report(rep: VerificationReport, fmt: str, out: IO[str]) -> None:
    try:
        if fmt == "json":
            out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
        elif fmt == "csv":
            keys: List[str] = []
            for r in rep.rows:
                keys.extend(k for k in r if k not in keys)
            w = csv.writer(out, delimiter=";", lineterminator="\n")
            w.writerow(["suite"] + keys)
            for r in rep.rows:
                w.writerow([rep.suite] + [_scalar(r.get(k, "")) for k in keys])
        elif fmt == "text":
            out.write(render_text(rep))
        else:
            raise ValueError(f"unknown format {fmt!r}")
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def render_text(rep: VerificationReport) -> str:
    buf = io.StringIO()
    status = "PASS" if rep.passed else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in rep.params.items())
    buf.write(f"{rep.suite}: {status}  instances={rep.instances}  {params}  "
              f"time={rep.wall_time:.2f}s\n")
    if rep.rows:
        keys: List[str] = []
        for r in rep.rows:
            keys.extend(k for k in r if k not in keys and k != "mup")
        table = [[_scalar(r.get(k, "")) for k in keys] for r in rep.rows]
        widths = [max(len(k), *(len(row[i]) for row in table)) for i, k in enumerate(keys)]
        buf.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for row in table:
            buf.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    for f in rep.failures:
        buf.write("failure: " + json.dumps(f, sort_keys=True) + "\n")
    return buf.getvalue()
