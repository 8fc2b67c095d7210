import pytest

from oracles import unrefinable_partitions
from unrefinable.criteria import is_unrefinable, is_unrefinable_geometric
from unrefinable.maximal import (
    EmptyUniverse,
    OutOfRange,
    PatternCollision,
    attains_missing_bound,
    bound_for_weight,
    complementary_family,
    enumerate_unrefinable,
    exceptional,
    lambda_t_bound,
    max_missing_subfamily,
    maximal_unrefinable,
    unrefinable_with_largest,
)
from unrefinable.partitions import PROPER, enumerate_distinct, make_partition, missing_parts, triangular


def parts_of(ps):
    return [p.parts for p in ps]


@pytest.mark.parametrize(
    "n, d, bound, regime",
    [
        (15, 0, 26, "triangular"),
        (15, 9, 25, "general-even"),
        (15, 8, 26, "general-odd"),
        (15, 1, 28, "d=1"),
        (15, 2, 27, "d=2"),
        (15, 3, 26, "d=3"),
        (6, 5, 8, "general-odd"),
    ],
)
def test_lambda_t_bound(n, d, bound, regime):
    lb = lambda_t_bound(n, d)
    assert (lb.bound, lb.regime) == (bound, regime)


def test_bound_refuses_small_n_and_bad_d():
    with pytest.raises(OutOfRange):
        lambda_t_bound(5, 0)
    with pytest.raises(OutOfRange):
        lambda_t_bound(10, 10)


def test_enumeration_matches_naive_oracle():
    for N in range(1, 31):
        assert parts_of(enumerate_unrefinable(N)) == unrefinable_partitions(N), N


def test_pruned_matches_filtered_stream():
    for N in range(3, 61):
        assert parts_of(enumerate_unrefinable(N)) == parts_of(enumerate_unrefinable(N, prune=False)), N


def test_parallel_enumeration_keeps_order():
    assert parts_of(enumerate_unrefinable(70, jobs=3)) == parts_of(enumerate_unrefinable(70))


def test_enumeration_contains_known_examples():
    assert (1, 2, 5, 6, 8) in parts_of(enumerate_unrefinable(22))
    assert (1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 16, 17, 26) in parts_of(enumerate_unrefinable(120))


def test_mup_examples():
    assert parts_of(maximal_unrefinable(36)) == [(1, 2, 3, 4, 5, 9, 12)]
    assert len(maximal_unrefinable(28)) == 1
    assert len(maximal_unrefinable(120)) == 5


def test_mup_largest_part_reaches_the_bound():
    # every n >= 7 with T_n <= 120, and every d in range
    for n in range(7, 16):
        for d in range(0, n):
            N = triangular(n) - d
            mup = maximal_unrefinable(N)
            assert mup[0].largest == lambda_t_bound(n, d).bound, (n, d)


def test_pinned_agrees_with_exhaustive():
    for N in list(range(28, 121, 7)) + [111, 112, 120]:
        assert parts_of(maximal_unrefinable(N, "pinned")) == parts_of(maximal_unrefinable(N)), N


def test_pinned_reaches_beyond_exhaustive_caps():
    mup = maximal_unrefinable(triangular(19), "pinned")
    d10 = sum(1 for _ in enumerate_distinct(10, PROPER))
    assert len(mup) == d10 == 9
    assert all(p.largest == 34 for p in mup)


def test_unrefinable_with_largest_is_exact():
    got = unrefinable_with_largest(60, 15)
    want = [p for p in enumerate_unrefinable(60) if p.largest == 15]
    assert parts_of(got) == parts_of(want)


def test_empty_universe_and_bad_method():
    with pytest.raises(EmptyUniverse):
        maximal_unrefinable(2)
    with pytest.raises(ValueError):
        maximal_unrefinable(30, method="greedy")


def test_max_missing_subfamily():
    mup = maximal_unrefinable(120)
    kept = max_missing_subfamily(mup)
    assert len(kept) == 4
    pi = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 26)
    assert pi not in parts_of(kept) and pi in parts_of(mup)
    assert missing_parts(make_partition(pi)).m == 12
    assert max_missing_subfamily(maximal_unrefinable(36)) == []
    m111 = maximal_unrefinable(111)
    assert max_missing_subfamily(m111) == m111


def test_max_missing_subfamily_needs_common_largest():
    with pytest.raises(ValueError):
        max_missing_subfamily([make_partition([1, 2]), make_partition([1, 3])])


def test_complement_pairing_on_max_missing_elements():
    for N in (66, 91, 111, 112, 120):
        for lam in max_missing_subfamily(maximal_unrefinable(N)):
            L = lam.largest
            if L % 2 == 0:
                assert L // 2 not in lam
            for x in range(1, L):
                if 2 * x != L:
                    assert (x in lam) != ((L - x) in lam)


def test_complementary_family_is_the_max_missing_subfamily():
    for N in (66, 91, 111, 112, 120, 153):
        lb = bound_for_weight(N)
        ubar = max_missing_subfamily(maximal_unrefinable(N, "pinned"))
        assert complementary_family(N, lb.bound) == ubar


def test_attains_missing_bound():
    assert attains_missing_bound(make_partition([1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 16, 17, 26]))
    assert not attains_missing_bound(make_partition([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 26]))


def test_exceptional_examples():
    pi = exceptional("pi", 15)
    assert pi.partition.parts == tuple(range(1, 13)) + (16, 26) and pi.partition.weight == 120
    zeta = exceptional("zeta", 19, 6)
    assert zeta.partition.parts == tuple(range(1, 11)) + tuple(range(12, 17)) + (23, 34)
    assert zeta.partition.weight == 182
    tau = exceptional("tau", 15)
    assert tau.partition.parts == tuple(range(1, 14)) + (25,) and tau.partition.weight == 116
    sigma = exceptional("sigma", 15)
    assert sigma.partition.weight == triangular(15) - 3


def test_exceptional_partitions_are_unrefinable():
    for n in range(7, 25):
        for kind in ("pi", "sigma", "tau"):
            p = exceptional(kind, n).partition
            assert is_unrefinable(p) and is_unrefinable_geometric(p).unrefinable, (kind, n)
        for k in range(4, (n - 2) // 2 + 1):
            p = exceptional("zeta", n, k).partition
            # at 2k = n - 2, k and 2k are both missing and sum to the part 3k
            assert is_unrefinable(p) == (2 * k != n - 2), (n, k)


def test_pi_is_the_only_mup_for_even_n():
    for n in (8, 10, 12):
        assert parts_of(maximal_unrefinable(triangular(n))) == [exceptional("pi", n).partition.parts]


def test_exceptional_errors():
    with pytest.raises(PatternCollision):
        exceptional("zeta", 10, 8)  # n - 2 + k meets 2n - 4
    with pytest.raises(ValueError):
        exceptional("zeta", 15)
    with pytest.raises(ValueError):
        exceptional("omega", 15)
