"""Randomised checks against the brute-force oracles."""

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import diagram_by_path, hooks_by_counting, is_refinable, transpose
from unrefinable.criteria import is_unrefinable_definitional, is_unrefinable_geometric
from unrefinable.numset import NumericalSet, format_set, from_partition, parse_set, to_partition
from unrefinable.partitions import make_partition
from unrefinable.young import YoungDiagram, conjugate, kn_inverse, kn_transform

distinct_parts = st.sets(st.integers(1, 40), min_size=1, max_size=12).map(sorted)
gap_sets = st.sets(st.integers(1, 45), min_size=1, max_size=20).map(lambda s: tuple(sorted(s)))
shapes = st.lists(st.integers(1, 12), min_size=1, max_size=12).map(lambda r: sorted(r, reverse=True))


@given(distinct_parts)
def test_partition_set_roundtrip(parts):
    p = make_partition(parts)
    s = from_partition(p)
    assert s.gaps == tuple(parts)
    assert to_partition(s) == p
    assert parse_set(format_set(s)) == s


@given(gap_sets)
def test_kn_roundtrip_on_sets(gaps):
    s = NumericalSet(gaps)
    y = kn_transform(s)
    assert kn_inverse(y) == s
    assert y.rows == diagram_by_path(gaps)
    assert y.cell_count == sum(y.rows)


@given(shapes)
def test_kn_roundtrip_on_diagrams(rows):
    y = YoungDiagram.of(rows)
    assert kn_transform(kn_inverse(y)) == y


@given(shapes)
def test_hooks_match_counting(rows):
    y = YoungDiagram.of(rows)
    assert y.hooks.grid == hooks_by_counting(y.rows)
    assert conjugate(y).rows == transpose(y.rows)


@settings(max_examples=300)
@given(st.sets(st.integers(1, 30), min_size=2, max_size=10).map(sorted))
def test_deciders_agree_with_oracle(parts):
    p = make_partition(parts)
    want = not is_refinable(p.parts)
    assert is_unrefinable_definitional(p).unrefinable == want
    assert is_unrefinable_geometric(p).unrefinable == want
