import itertools

import pytest
from hypothesis import given, strategies as st

from sapprox import CapacityError, Mask, Universe, UniverseMismatchError


def test_universe_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        Universe(["a", "a"])
    with pytest.raises(ValueError):
        Universe([])


def test_universe_cap_is_twenty():
    Universe.of_size(20)
    with pytest.raises(CapacityError):
        Universe.of_size(21)


def test_label_index_bijection():
    u = Universe(["a", "b", "c"])
    for i, label in enumerate(u.labels):
        assert u.index_of(label) == i
        assert u.label_of(i) == label


def test_enumerate_nonempty_size_two():
    u = Universe(["w1", "w2"])
    masks = list(u.subsets(include_empty=False))
    assert [u.labels_of(m) for m in masks] == [("w1",), ("w2",),
                                               ("w1", "w2")]


def test_enumerate_with_empty_size_one():
    u = Universe(["w1"])
    assert [m.bits for m in u.subsets()] == [0, 1]


def test_enumerate_size_four_distinct():
    u = Universe.of_size(4)
    masks = list(u.subsets())
    assert len(masks) == 16
    assert len(set(masks)) == 16
    assert [m.bits for m in masks] == sorted(m.bits for m in masks)


def test_basic_algebra():
    u = Universe(["1", "2"])
    one, two = u.singleton("1"), u.singleton("2")
    assert (one & two).is_empty
    assert one.complement() == two
    assert one.issubset(u.mask(["1", "2"]))
    assert (one | two) == u.full()


def test_mixed_universe_is_an_error():
    a = Mask.full(2)
    b = Mask.full(3)
    with pytest.raises(UniverseMismatchError):
        a | b
    with pytest.raises(UniverseMismatchError):
        a.issubset(b)


def test_complement_partition_exhaustive():
    for n in range(1, 5):
        u = Universe.of_size(n)
        for x in u.subsets():
            xc = x.complement()
            assert (x | xc) == u.full()
            assert (x & xc).is_empty
            assert xc.complement() == x
            assert x.cardinality + xc.cardinality == n


def test_de_morgan_exhaustive_small():
    for n in range(1, 5):
        for abits, bbits in itertools.product(range(1 << n), repeat=2):
            a, b = Mask(abits, n), Mask(bbits, n)
            assert (a | b).complement() == a.complement() & b.complement()
            assert (a & b).complement() == a.complement() | b.complement()


@given(st.integers(1, 20).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1),
                        st.integers(0, (1 << n) - 1))))
def test_mask_algebra_properties(args):
    n, abits, bbits = args
    a, b = Mask(abits, n), Mask(bbits, n)
    assert (a & b).issubset(a)
    assert a.issubset(a | b)
    assert (a - b) == (a & b.complement())
    assert a.intersects(b) == (not (a & b).is_empty)
    assert Mask.from_indices(a.indices(), n) == a
