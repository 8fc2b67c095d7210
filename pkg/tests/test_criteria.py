import pytest

from oracles import is_refinable
from unrefinable.criteria import (
    doubling_cells,
    is_unrefinable,
    is_unrefinable_definitional,
    is_unrefinable_geometric,
    refinement_witness,
    verdicts_agree,
)
from unrefinable.numset import from_partition, is_semigroup
from unrefinable.partitions import PROPER, enumerate_distinct, make_partition, missing_parts


def P(*parts):
    return make_partition(parts)


@pytest.mark.parametrize("parts", [(1, 2, 5, 6, 8), (1, 2, 4, 5, 7, 10, 13)])
def test_known_unrefinable(parts):
    p = make_partition(parts)
    d = is_unrefinable_definitional(p)
    g = is_unrefinable_geometric(p)
    assert d.unrefinable and g.unrefinable
    assert d.witness is None and d.offending_hooks is None
    assert g.witness is None and g.offending_hooks is None


def test_refinable_witness_is_smallest_by_part_then_first_summand():
    p = P(2, 3, 9)
    v = is_unrefinable_definitional(p)
    assert not v.unrefinable
    # missing parts are 1,4,5,6,7,8; both 1+8 and 4+5 refine 9, the smaller first summand wins
    assert v.witness == (1, 8, 9)
    mp = set(missing_parts(p).values)
    assert {4, 5} <= mp and 4 + 5 in p


def test_witness_fields_are_valid():
    for N in range(3, 31):
        for p in enumerate_distinct(N, PROPER):
            w = refinement_witness(p)
            if w is None:
                continue
            a, b, part = w
            mp = set(missing_parts(p).values)
            assert a < b and a in mp and b in mp and part in p and a + b == part


def test_geometric_refinable_lists_offenders():
    g = is_unrefinable_geometric(P(2, 3, 9))
    assert not g.unrefinable and g.offending_hooks
    parts = {2, 3, 9}
    for i, j, h in g.offending_hooks:
        assert j >= 2 and h not in parts


def test_doubling_cells_of_the_example():
    assert doubling_cells(P(1, 2, 5, 6, 8)) == ((1, 3, 4), (2, 2, 3))


def test_doubling_cells_empty_when_every_hook_is_a_part():
    assert doubling_cells(P(1, 2, 4, 5, 7, 10, 13)) == ()


@pytest.mark.parametrize("N", [3, 8, 22])
def test_verdicts_agree_examples(N):
    assert verdicts_agree(N) == (True, None)


def test_verdicts_agree_with_workers():
    assert verdicts_agree(30, jobs=2) == (True, None)


def test_definitional_matches_naive_oracle():
    for N in range(1, 36):
        for p in enumerate_distinct(N):
            assert is_unrefinable(p) == (not is_refinable(p.parts)), p


def test_at_most_one_missing_part_is_unrefinable():
    for N in range(3, 41):
        for p in enumerate_distinct(N, PROPER):
            if missing_parts(p).m <= 1:
                assert is_unrefinable_definitional(p).unrefinable
                assert is_unrefinable_geometric(p).unrefinable


def test_semigroup_partitions_pass_without_doubling():
    for N in range(1, 41):
        for p in enumerate_distinct(N):
            if is_semigroup(from_partition(p))[0]:
                assert is_unrefinable_geometric(p).unrefinable
                assert doubling_cells(p) == ()


def test_verdict_to_dict():
    assert is_unrefinable_definitional(P(1, 2, 5, 6, 8)).to_dict() == {"unrefinable": True}
    d = is_unrefinable_definitional(P(2, 3, 9)).to_dict()
    assert d == {"unrefinable": False, "witness": [1, 8, 9]}
