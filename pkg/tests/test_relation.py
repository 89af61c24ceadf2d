import itertools

import pytest

from sapprox import (AtomMap, AtomShape, CapacityError, ContractViolationError,
                     DomainError, Inclusion, InternalConsistencyError,
                     SetFunction, TruthTable, Universe, UnionCover, atoms,
                     check_atom_structure, count_smc_relations,
                     enumerate_smc_relations, is_complement_closed,
                     is_minimizing, is_s_min, is_smc, left_slice)

W2 = Universe(["1", "2"])
W3 = Universe(["1", "2", "3"])


def atom_map(universe, assignments):
    """AtomMap from {frozenset-of-labels: label}."""
    n = universe.size
    atom_of = {}
    for labels, value in assignments.items():
        atom_of[universe.mask(labels).bits] = universe.index_of(value)
    return AtomMap(n, atom_of)


def test_eval_union_cover_example():
    s = UnionCover(2)
    assert s.evaluate(W2.full(), W2.singleton("2")) == 1


def test_eval_inclusion():
    s = Inclusion(2)
    assert s.evaluate(W2.singleton("1"), W2.full()) == 1
    assert s.evaluate(W2.full(), W2.singleton("1")) == 0


def test_eval_atom_map():
    s = atom_map(W2, {("1",): "1", ("2",): "2", ("1", "2"): "1"})
    assert s.evaluate(W2.full(), W2.singleton("2")) == 0
    assert s.evaluate(W2.full(), W2.singleton("1")) == 1
    # complement-extended: S(A, {}) = 0
    assert s.evaluate(W2.full(), W2.empty()) == 0


def test_eval_domain_errors():
    s = Inclusion(2)
    with pytest.raises(DomainError):
        s.evaluate(W2.empty(), W2.full())
    with pytest.raises(DomainError):
        s.evaluate(W2.full(), W2.empty())  # not extended


def test_left_slice_inclusion():
    f = left_slice(Inclusion(2), W2.singleton("1"))
    assert [f(b) for b in W2.subsets(include_empty=False)] == [1, 0, 1]


def test_left_slice_union_cover_full_left():
    f = left_slice(UnionCover(2), W2.full())
    assert all(f(b) == 1 for b in W2.subsets(include_empty=False))


def test_left_slice_atom_map_is_membership():
    s = atom_map(W2, {("1",): "2", ("2",): "2", ("1", "2"): "2"})
    for a in W2.subsets(include_empty=False):
        f = left_slice(s, a)
        for b in W2.subsets(include_empty=False):
            assert f(b) == (1 if "2" in W2.labels_of(b) else 0)


def test_is_minimizing_membership_indicator():
    f = SetFunction(2, (None, 0, 1, 1), extended=False)  # b -> [2 in b]
    assert is_minimizing(f)


def test_is_minimizing_rejects_non_monotone():
    f = SetFunction(2, (None, 1, 1, 0), extended=False)
    assert not is_minimizing(f)


def test_is_minimizing_constant_zero():
    f = SetFunction(2, (None, 0, 0, 0), extended=False)
    assert is_minimizing(f)


def test_atoms_membership_indicator():
    # b -> [2 in b] over a three-element universe
    values = [None] + [(bits >> 1) & 1 for bits in range(1, 8)]
    fam = atoms(SetFunction(3, tuple(values), extended=False))
    assert fam.shape is AtomShape.SINGLE_ATOM
    assert [a.bits for a in fam.atoms] == [0b010]


def test_atoms_constant_zero():
    fam = atoms(SetFunction(2, (None, 0, 0, 0), extended=False))
    assert fam.shape is AtomShape.NO_ATOMS
    assert fam.atoms == ()


def test_atoms_constant_one_all_singletons():
    fam = atoms(SetFunction(3, (None,) + (1,) * 7, extended=False))
    assert fam.shape is AtomShape.ALL_SINGLETONS
    assert sorted(a.bits for a in fam.atoms) == [1, 2, 4]


def test_atoms_requires_minimizing():
    with pytest.raises(ContractViolationError):
        atoms(SetFunction(2, (None, 1, 1, 0), extended=False))


def test_check_atom_structure_examples():
    f = SetFunction(2, (None, 0, 1, 1), extended=False)
    assert check_atom_structure(f, atoms(f))
    zero = SetFunction(2, (None, 0, 0, 0), extended=False)
    assert check_atom_structure(zero, atoms(zero))


def test_atom_structure_holds_for_all_minimizing_small():
    for n in range(1, 5):
        for vector in itertools.product((0, 1), repeat=(1 << n) - 1):
            f = SetFunction(n, (None,) + vector, extended=False)
            if is_minimizing(f):
                assert check_atom_structure(f, atoms(f))


def test_is_s_min_inclusion_and_union_cover():
    assert is_s_min(Inclusion(2), W2)
    assert is_s_min(Inclusion(3), W3)
    assert is_s_min(UnionCover(2), W2)


def test_is_s_min_rejects_non_monotone_table():
    entries = {}
    for a in range(1, 4):
        for b in range(1, 4):
            entries[(a, b)] = 1 if (a, b) in ((1, 1), (1, 2)) else 0
    # slice at A={1}: f({1})=1, f({2})=1, f({1,2})=0
    assert not is_s_min(TruthTable(2, entries), W2)


def test_is_complement_closed_atom_map():
    s = atom_map(W2, {("1",): "1", ("2",): "2", ("1", "2"): "2"})
    assert is_complement_closed(s, W2)


def test_is_complement_closed_union_cover_false():
    assert not is_complement_closed(UnionCover(2), W2)


def test_is_complement_closed_inclusion_false():
    assert not is_complement_closed(Inclusion(2), W2)


def test_is_complement_closed_inconclusive_raises():
    # size-one inclusion has no pair with both complements non-empty
    with pytest.raises(DomainError):
        is_complement_closed(Inclusion(1), Universe(["1"]))


def test_is_smc_atom_maps_always():
    for s in enumerate_smc_relations(W2):
        assert is_smc(s, W2)


def test_is_smc_union_cover_false():
    assert not is_smc(UnionCover(2), W2)


def test_is_smc_no_atom_slice_false():
    entries = {(a, b): 0 for a in range(1, 4) for b in range(0, 4)}
    s = TruthTable(2, entries)
    assert s.extended
    assert not is_smc(s, W2)


def test_truth_table_compilation_matches():
    for s in (Inclusion(2), UnionCover(2),
              atom_map(W2, {("1",): "2", ("2",): "1", ("1", "2"): "1"})):
        table = s.as_truth_table()
        assert table.extended == s.extended
        for a in W2.subsets(include_empty=False):
            for b in W2.subsets(include_empty=s.extended):
                assert table.evaluate(a, b) == s.evaluate(a, b)


def test_count_smc_relations():
    assert count_smc_relations(1) == 1
    assert count_smc_relations(2) == 8
    assert count_smc_relations(3) == 2187
    assert count_smc_relations(10) == 10 ** 1023


def test_enumeration_matches_count_and_order():
    for n in (1, 2, 3):
        w = Universe.of_size(n, "w")
        tuples = [s.value_tuple() for s in enumerate_smc_relations(w)]
        assert len(tuples) == count_smc_relations(n)
        assert len(set(tuples)) == len(tuples)
        assert tuples == sorted(tuples)


def test_enumeration_cap():
    with pytest.raises(CapacityError):
        next(enumerate_smc_relations(Universe.of_size(4, "w")))
    # explicit override works
    stream = enumerate_smc_relations(Universe.of_size(4, "w"),
                                     allow_large=True)
    assert next(stream).value_tuple() == (0,) * 15


def test_monotonicity_of_all_minimizing_small():
    for n in range(1, 5):
        for vector in itertools.product((0, 1), repeat=(1 << n) - 1):
            f = SetFunction(n, (None,) + vector, extended=False)
            if not is_minimizing(f):
                continue
            for a in range(1, 1 << n):
                for b in range(1, 1 << n):
                    if a & b == a:
                        assert f(a) <= f(b)
