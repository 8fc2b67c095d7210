"""Bijections between max-missing maximal unrefinable partitions and distinct-part partitions.

Three families, named by the shape of their Young diagrams:

* ``triangular``: weight ``T_n`` with ``n = 2k - 1``, largest part ``2n - 4``;
  quasi-symmetric diagram, the extra column reads a partition of ``k``.
* ``nt5``: weight ``T_n - (n - 2k)``, largest part ``2n - 5``; self-conjugate
  diagram whose diagonal hooks (after the first) are distinct odd parts of ``2k + 2``.
* ``nt4``: weight ``T_n - (n - 2k + 1)``, largest part ``2n - 4``; quasi-symmetric
  again, the extra column reads a partition of ``k``.

``eta`` is always kept ascending; along the diagonal it is laid out descending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .criteria import is_unrefinable_definitional, is_unrefinable_geometric
from .maximal import (
    attains_missing_bound,
    exceptional,
    max_missing_subfamily,
    maximal_unrefinable,
)
from .numset import from_partition, to_partition
from .partitions import (
    PartClassFilter,
    DistinctPartition,
    enumerate_distinct,
    make_partition,
    missing_parts,
    triangular,
    triangular_decompose,
)
from .young import (
    ShapeMismatch,
    YoungDiagram,
    from_frobenius,
    is_self_conjugate,
    kn_inverse,
    kn_transform,
    quasi_symmetric_profile,
)

TRIANGULAR, NT5, NT4 = "triangular", "nt5", "nt4"
CASES = (TRIANGULAR, NT5, NT4)


class Unclassifiable(ValueError):
    pass


class ExcludedEta(ValueError):
    pass


class ConstraintViolation(AssertionError):
    pass


@dataclass(frozen=True)
class BijectionCase:
    case: str
    n: int
    k: int

    def __post_init__(self):
        c, n, k = self.case, self.n, self.k
        if c == TRIANGULAR:
            ok = n == 2 * k - 1 and k >= 4
        elif c == NT5:
            ok = 2 <= 2 * k <= n - 4
        elif c == NT4:
            ok = 8 <= 2 * k <= n - 2
        else:
            raise ValueError(f"unknown case {c!r}")
        if not ok:
            raise Unclassifiable(f"({c}, n={n}, k={k}) is outside the admissible range")

    @property
    def d(self) -> int:
        return {TRIANGULAR: 0, NT5: self.n - 2 * self.k, NT4: self.n - 2 * self.k + 1}[self.case]

    @property
    def weight(self) -> int:
        return triangular(self.n) - self.d

    @property
    def largest(self) -> int:
        return 2 * self.n - 5 if self.case == NT5 else 2 * self.n - 4

    @property
    def target_weight(self) -> int:
        return 2 * self.k + 2 if self.case == NT5 else self.k

    @property
    def target_parity(self) -> str:
        return "odd" if self.case == NT5 else "all"

    @property
    def excluded_eta(self) -> FrozenSet[Tuple[int, ...]]:
        if self.case == TRIANGULAR:
            a, b = 3, self.k - 3
            if b >= 1 and a != b:
                return frozenset({tuple(sorted((a, b)))})
            return frozenset()
        if self.case == NT5 and 2 * self.k == self.n - 4:
            return frozenset({(1, 2 * self.k + 1)})
        return frozenset()

    def target_family(self) -> List[DistinctPartition]:
        filt = PartClassFilter(min_parts=2, parity=self.target_parity)
        return list(enumerate_distinct(self.target_weight, filt))

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "weight": self.weight,
            "largest": self.largest,
            "target_weight": self.target_weight,
            "target_parity": self.target_parity,
            "excluded_eta": [list(e) for e in sorted(self.excluded_eta)],
        }


@dataclass(frozen=True)
class EtaPartition:
    partition: DistinctPartition
    case: BijectionCase

    @property
    def parts(self) -> Tuple[int, ...]:
        return self.partition.parts

    @property
    def l(self) -> int:
        return self.partition.t

    @property
    def improper(self) -> bool:
        # the single-part image (k) marks zeta in the nt4 family
        return self.partition.t < 2

    def in_target_family(self) -> bool:
        p = self.partition
        if p.weight != self.case.target_weight:
            return False
        if self.case.target_parity == "odd" and any(x % 2 == 0 for x in p.parts):
            return False
        return True


def classify(lam: DistinctPartition) -> BijectionCase:
    wd = triangular_decompose(lam.weight)
    n, d = wd.n, wd.d
    if d == 0:
        if n % 2 == 0:
            raise Unclassifiable(f"T_{n} with n even has only the exceptional maximal partition")
        return BijectionCase(TRIANGULAR, n, (n + 1) // 2)
    if d in (1, 2):
        raise Unclassifiable(f"d={d} is not covered by any bijection")
    if lam.largest == 2 * n - 5 and (n - d) % 2 == 0:
        return BijectionCase(NT5, n, (n - d) // 2)
    if lam.largest == 2 * n - 4 and (n - d) % 2 == 1:
        return BijectionCase(NT4, n, (n - d + 1) // 2)
    raise Unclassifiable(f"largest part {lam.largest} does not match T_{n}-{d}")


def diagram_of(lam: DistinctPartition) -> YoungDiagram:
    return kn_transform(from_partition(lam))


def forward(lam: DistinctPartition, case: Optional[BijectionCase] = None) -> EtaPartition:
    """Read ``eta`` off the diagram: the extra column (quasi-symmetric cases) or
    the diagonal after the corner (self-conjugate case)."""
    case = classify(lam) if case is None else case
    y = diagram_of(lam)
    if case.case == NT5:
        if lam.largest != 2 * case.n - 5:
            raise ShapeMismatch(f"largest part {lam.largest} != 2n-5 = {2 * case.n - 5}")
        if not is_self_conjugate(y):
            raise ShapeMismatch("diagram is not self-conjugate")
        values = y.hooks.diagonal[1:]
    else:
        if lam.largest != 2 * case.n - 4:
            raise ShapeMismatch(f"largest part {lam.largest} != 2n-4 = {2 * case.n - 4}")
        values = quasi_symmetric_profile(y, case.n).extra_column_hooks
    if not values:
        raise ShapeMismatch("diagram has nothing beyond the corner cell")
    try:
        eta = make_partition(values)
    except ValueError as exc:
        raise ShapeMismatch(f"hooks {values} do not form a distinct partition") from exc
    out = EtaPartition(eta, case)
    if not out.in_target_family():
        raise ShapeMismatch(f"{eta} is not in the target family of {case.case}")
    return out


def eta_diagram(eta: Sequence[int], case: BijectionCase) -> YoungDiagram:
    """Diagram fixed by the corner hook and the diagonal hooks built from ``eta``.

    Quasi-symmetric: corner hook ``2n - 4``, diagonal hooks ``2 * eta``, arm = leg + 1.
    Self-conjugate: corner hook ``2n - 5``, diagonal hooks ``eta``, arm = leg.
    """
    desc = sorted(eta, reverse=True)
    n = case.n
    if case.case == NT5:
        diag = [2 * n - 5] + desc
        arms = [(h - 1) // 2 for h in diag]
        legs = arms
    else:
        diag = [2 * n - 4] + [2 * e for e in desc]
        arms = [h // 2 for h in diag]
        legs = [a - 1 for a in arms]
    return from_frobenius(arms, legs)


def complement_recipe(eta: Sequence[int], case: BijectionCase) -> DistinctPartition:
    """Closed form for the partition whose diagram is :func:`eta_diagram`."""
    n = case.n
    if case.case == NT5:
        L = 2 * n - 5
        drop = {(L - e) // 2 for e in eta}
        add = [(L + e) // 2 for e in eta]
    else:
        L = 2 * n - 4
        drop = {n - 2 - e for e in eta}
        add = [n - 2 + e for e in eta]
    parts = [x for x in range(1, n - 2) if x not in drop] + sorted(add) + [L]
    return make_partition(parts)


@dataclass(frozen=True)
class RawConstruction:
    eta: Tuple[int, ...]
    diagram: YoungDiagram
    partition: DistinctPartition


def construct_raw(eta: Sequence[int], case: BijectionCase) -> RawConstruction:
    """Build the diagram from ``eta``, invert the KN map, and cross-check with the
    closed form.  No unrefinability or weight assertions."""
    y = eta_diagram(eta, case)
    lam = to_partition(kn_inverse(y))
    recipe = complement_recipe(eta, case)
    if lam != recipe:
        raise ConstraintViolation(f"diagram route gives {lam}, closed form gives {recipe}")
    return RawConstruction(tuple(sorted(eta)), y, lam)


def _check_backward(raw: RawConstruction, case: BijectionCase) -> None:
    n, lam, y = case.n, raw.partition, raw.diagram
    hg = y.hooks
    desc = sorted(raw.eta, reverse=True)
    problems = []
    if hg.h(1, 1) != case.largest:
        problems.append(f"corner hook {hg.h(1, 1)} != {case.largest}")
    want_diag = [case.largest] + ([2 * e for e in desc] if case.case != NT5 else desc)
    if list(hg.diagonal) != want_diag:
        problems.append(f"diagonal hooks {hg.diagonal} != {tuple(want_diag)}")
    shift = 0 if case.case == NT5 else 1
    for i in range(1, len(want_diag) + 1):
        if y.arm(i, i) != y.leg(i, i) + shift:
            problems.append(f"cell ({i},{i}): arm {y.arm(i, i)} != leg {y.leg(i, i)} + {shift}")
    if lam.weight != case.weight:
        problems.append(f"weight {lam.weight} != {case.weight}")
    if lam.t != n - 2:
        problems.append(f"{lam.t} parts, expected n-2 = {n - 2}")
    want_missing = n - 3 if case.case == NT5 else n - 2
    if missing_parts(lam).m != want_missing:
        problems.append(f"{missing_parts(lam).m} missing parts, expected {want_missing}")
    if case.case != NT5 and (n - 2) in lam:
        problems.append("n-2 is a part")
    d = is_unrefinable_definitional(lam)
    g = is_unrefinable_geometric(lam)
    if not d.unrefinable or not g.unrefinable:
        problems.append(f"refinable (witness {d.witness}, offending hooks {g.offending_hooks})")
    if problems:
        raise ConstraintViolation(f"backward({raw.eta}) -> {lam}: " + "; ".join(problems))


def backward(eta, case: BijectionCase, allow_improper: bool = False) -> DistinctPartition:
    """Partition of the case's weight whose diagram encodes ``eta``.

    ``allow_improper`` admits the single part ``(k)`` in the nt4 family, whose
    image is the zeta partition.
    """
    parts = eta.parts if isinstance(eta, (EtaPartition, DistinctPartition)) else tuple(eta)
    e = EtaPartition(make_partition(parts), case)
    if not e.in_target_family():
        raise ValueError(f"{e.partition} is not in the target family of {case.case}")
    if e.improper and not (allow_improper and case.case == NT4):
        raise ValueError(f"{e.partition} has a single part")
    if e.parts in case.excluded_eta:
        raise ExcludedEta(f"{e.partition} is excluded for {case.case} n={case.n} k={case.k}")
    raw = construct_raw(e.parts, case)
    _check_backward(raw, case)
    return raw.partition


def demonstrate_exclusion(case: BijectionCase, eta: Optional[Sequence[int]] = None) -> List[dict]:
    """Run the raw construction on excluded ``eta`` values and report why they fail."""
    etas = [tuple(eta)] if eta is not None else sorted(case.excluded_eta)
    out = []
    for e in etas:
        raw = construct_raw(e, case)
        lam = raw.partition
        d = is_unrefinable_definitional(lam)
        g = is_unrefinable_geometric(lam)
        out.append(
            {
                "eta": list(e),
                "partition": list(lam.parts),
                "weight": lam.weight,
                "expected_weight": case.weight,
                "unrefinable": d.unrefinable,
                "geometric_unrefinable": g.unrefinable,
                "witness": list(d.witness) if d.witness else None,
                "offending_hooks": [list(c) for c in (g.offending_hooks or ())],
            }
        )
    return out


def admissible_cases(max_weight: int) -> List[BijectionCase]:
    out = []
    n = 7
    while triangular(n) - (n - 1) <= max_weight:
        if n % 2 and triangular(n) <= max_weight:
            out.append(BijectionCase(TRIANGULAR, n, (n + 1) // 2))
        for k in range(1, (n - 4) // 2 + 1):
            c = BijectionCase(NT5, n, k)
            if c.weight <= max_weight:
                out.append(c)
        for k in range(4, (n - 2) // 2 + 1):
            c = BijectionCase(NT4, n, k)
            if c.weight <= max_weight:
                out.append(c)
        n += 1
    return out


@dataclass
class BijectionReport:
    case: BijectionCase
    mup: List[DistinctPartition] = field(default_factory=list)
    ubar: List[DistinctPartition] = field(default_factory=list)
    images: Dict[Tuple[int, ...], Tuple[int, ...]] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, name: str, ok: bool, **detail) -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok:
            self.failures.append({"check": name, **detail})

    def to_dict(self) -> dict:
        return {
            "case": self.case.to_dict(),
            "mup_count": len(self.mup),
            "ubar_count": len(self.ubar),
            "mup": [list(p.parts) for p in self.mup],
            "images": [[list(k), list(v)] for k, v in sorted(self.images.items())],
            "checks": dict(sorted(self.checks.items())),
            "failures": self.failures,
            "passed": self.passed,
        }


def verify_bijection(case: BijectionCase, method: str = "exhaustive") -> BijectionReport:
    """Brute-force both sides and check the correspondence and its count identity."""
    rep = BijectionReport(case)
    rep.mup = maximal_unrefinable(case.weight, method=method)
    top = rep.mup[0].largest
    rep.check("largest_part", top == case.largest, expected=case.largest, got=top)
    rep.ubar = max_missing_subfamily(rep.mup)
    n, k = case.n, case.k

    target = {p.parts for p in case.target_family()}
    allowed = target - case.excluded_eta
    improper_seen = []
    for lam in rep.ubar:
        try:
            eta = forward(lam, case)
        except ShapeMismatch as exc:
            rep.check("forward_shape", False, input=list(lam.parts), error=str(exc))
            continue
        if eta.improper:
            improper_seen.append(lam)
            rep.images[lam.parts] = eta.parts
            continue
        rep.images[lam.parts] = eta.parts
        rep.check(
            "image_in_target", eta.parts in allowed, input=list(lam.parts), got=list(eta.parts)
        )
        try:
            back = backward(eta, case)
        except (ValueError, ConstraintViolation) as exc:
            rep.check("backward_forward", False, input=list(lam.parts), error=str(exc))
            continue
        rep.check(
            "backward_forward", back == lam, input=list(lam.parts), got=list(back.parts)
        )

    proper_images = [v for v in rep.images.values() if len(v) >= 2]
    rep.check(
        "injective",
        len(set(proper_images)) == len(proper_images),
        got=sorted(list(v) for v in proper_images),
    )
    missing = sorted(allowed - set(proper_images))
    rep.check("surjective", not missing, missing=[list(m) for m in missing])

    ubar_set = set(p.parts for p in rep.ubar)
    for eta in sorted(allowed):
        try:
            lam = backward(eta, case)
        except (ValueError, ConstraintViolation) as exc:
            rep.check("forward_backward", False, input=list(eta), error=str(exc))
            continue
        rep.check("backward_in_ubar", lam.parts in ubar_set, input=list(eta), got=list(lam.parts))
        rep.check(
            "forward_backward",
            forward(lam, case).parts == eta,
            input=list(eta),
            got=list(forward(lam, case).parts),
        )

    outside = [p for p in rep.mup if not attains_missing_bound(p)]
    if case.case == TRIANGULAR:
        pi = exceptional("pi", n).partition
        rep.check(
            "exceptional_outside_ubar",
            [p.parts for p in outside] == [pi.parts],
            expected=[list(pi.parts)],
            got=[list(p.parts) for p in outside],
        )
        rep.check("no_improper_image", not improper_seen)
        expected_count = len(target)
    elif case.case == NT5:
        want = [exceptional("tau", n).partition.parts] if case.d == 4 else []
        rep.check(
            "exceptional_outside_ubar",
            [p.parts for p in outside] == want,
            expected=[list(w) for w in want],
            got=[list(p.parts) for p in outside],
        )
        rep.check("no_improper_image", not improper_seen)
        expected_count = len(target)
    else:
        if case.d == 3:
            sigma = exceptional("sigma", n).partition
            rep.check(
                "exceptional_outside_ubar",
                [p.parts for p in outside] == [sigma.parts],
                expected=[list(sigma.parts)],
                got=[list(p.parts) for p in outside],
            )
            rep.check("no_improper_image", not improper_seen)
        else:
            zeta = exceptional("zeta", n, k).partition
            rep.check("exceptional_outside_ubar", not outside, got=[list(p.parts) for p in outside])
            rep.check(
                "zeta_improper_image",
                [p.parts for p in improper_seen] == [zeta.parts],
                expected=[list(zeta.parts)],
                got=[list(p.parts) for p in improper_seen],
            )
        expected_count = 1 + len(target)
    rep.check("count_identity", len(rep.mup) == expected_count, expected=expected_count, got=len(rep.mup))
    return rep
