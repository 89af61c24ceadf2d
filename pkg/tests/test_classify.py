import itertools

import pytest
from hypothesis import given, strategies as st

from sapprox import (Bijection, CapacityError, FiniteTopology,
                     IntegerPartition, Mask, TheoremHypothesisError, Universe,
                     build_topology, canonical_space, census,
                     enumerate_partitions, homeo_bruteforce, homeo_by_profile,
                     partition_count, space_from_assignment)


def test_partition_count_single_part():
    for m in range(0, 30):
        assert partition_count(m, 1) == 1


def test_partition_count_small_values():
    assert partition_count(4, 2) == 3
    assert partition_count(5, 5) == 7
    assert partition_count(3, 2) == 2
    assert partition_count(0, 4) == 1
    assert partition_count(3, 0) == 0


def test_enumerate_partitions_examples():
    assert [p.parts for p in enumerate_partitions(3, 2)] == [(3,), (2, 1)]
    assert [p.parts for p in enumerate_partitions(2, 5)] == [(2,), (1, 1)]
    assert [p.parts for p in enumerate_partitions(0, 3)] == [()]


def test_enumerate_partitions_reverse_lexicographic():
    parts = [p.parts for p in enumerate_partitions(8, 8)]
    assert parts == sorted(parts, reverse=True)
    assert len(parts) == len(set(parts)) == partition_count(8, 8)


@given(st.integers(0, 12), st.integers(1, 12))
def test_count_matches_enumeration(m, n):
    assert partition_count(m, n) == sum(1 for _ in enumerate_partitions(m, n))


def test_integer_partition_validation():
    with pytest.raises(ValueError):
        IntegerPartition((1, 2))
    with pytest.raises(ValueError):
        IntegerPartition((2, 0))


def test_homeo_by_profile_identity():
    g = space_from_assignment(3, 2, (0, 0, 1))
    assert homeo_by_profile(g, g)


def test_homeo_by_profile_distinguishes_partitions():
    g1 = canonical_space(IntegerPartition((3,)), 3, 2)
    g2 = canonical_space(IntegerPartition((2, 1)), 3, 2)
    assert not homeo_by_profile(g1, g2)


def test_homeo_by_profile_permuted_labels():
    g1 = space_from_assignment(3, 2, (0, 0, 1))
    g2 = space_from_assignment(3, 2, (1, 1, 0))
    assert homeo_by_profile(g1, g2)
    assert homeo_bruteforce(build_topology(g1), build_topology(g2))


def test_homeo_by_profile_hypothesis_not_met():
    g1 = space_from_assignment(2, 2, (0, 1))
    g2 = space_from_assignment(3, 2, (0, 1, 1))
    with pytest.raises(TheoremHypothesisError):
        homeo_by_profile(g1, g2)


def topo(universe, open_bits):
    return FiniteTopology(universe, tuple(Mask(b, universe.size)
                                          for b in sorted(open_bits)))


def test_bruteforce_identity_on_identical_topologies():
    t = build_topology(space_from_assignment(3, 2, (0, 1, 1)))
    witness = homeo_bruteforce(t, t)
    assert witness == Bijection((0, 1, 2))


def test_bruteforce_discrete_vs_indiscrete():
    u = Universe(["u1", "u2"])
    discrete = topo(u, [0b00, 0b01, 0b10, 0b11])
    indiscrete = topo(u, [0b00, 0b11])
    assert homeo_bruteforce(discrete, indiscrete) is None


def test_bruteforce_size_mismatch_and_cap():
    t2 = topo(Universe.of_size(2), [0b00, 0b11])
    t3 = topo(Universe.of_size(3), [0b000, 0b111])
    assert homeo_bruteforce(t2, t3) is None
    big = topo(Universe.of_size(9), [0, (1 << 9) - 1])
    with pytest.raises(CapacityError):
        homeo_bruteforce(big, big)


def test_bruteforce_agrees_with_profile_small_tier():
    for m, n in [(2, 2), (3, 2), (3, 3)]:
        spaces = [space_from_assignment(m, n, c)
                  for c in itertools.product(range(n), repeat=m)]
        topos = [build_topology(g) for g in spaces]
        for (g1, t1), (g2, t2) in itertools.combinations(
                zip(spaces, topos), 2):
            assert homeo_by_profile(g1, g2) == (
                homeo_bruteforce(t1, t2) is not None)


def test_canonical_space_degrees_match_parts():
    g = canonical_space(IntegerPartition((2, 1)), 3, 2)
    from sapprox import degree_profile
    profile = degree_profile(g)
    assert profile.degrees == (2, 1)
    assert profile.bucket_sizes == {1: 1, 2: 1}


def test_canonical_space_single_part_is_indiscrete():
    g = canonical_space(IntegerPartition((4,)), 4, 1)
    t = build_topology(g)
    assert [o.bits for o in t.opens] == [0b0000, 0b1111]


def test_canonical_spaces_pairwise_non_homeomorphic():
    for m in range(1, 6):
        for n in range(1, 4):
            spaces = [canonical_space(p, m, n)
                      for p in enumerate_partitions(m, n)]
            for g1, g2 in itertools.combinations(spaces, 2):
                assert not homeo_by_profile(g1, g2)
                assert homeo_bruteforce(build_topology(g1),
                                        build_topology(g2)) is None


def test_canonical_space_rejects_bad_partition():
    from sapprox import DomainError
    with pytest.raises(DomainError):
        canonical_space(IntegerPartition((2, 1)), 4, 2)
    with pytest.raises(DomainError):
        canonical_space(IntegerPartition((1, 1, 1)), 3, 2)


def test_census_exhaustive_counts():
    for m, n in [(1, 1), (3, 2), (4, 2)]:
        report = census(m, n)
        assert report.tier == "exhaustive"
        assert report.classes_by_signature == partition_count(m, n)
        assert report.classes_by_oracle == partition_count(m, n)
        assert report.agreement


def test_census_above_tier_requires_sample():
    with pytest.raises(CapacityError):
        census(6, 4)
    report = census(6, 4, sample=40, seed=3)
    assert report.tier == "sampled"
    assert report.classes_by_signature <= partition_count(6, 4)
    assert report.agreement


def test_census_deterministic():
    assert census(4, 3).lines() == census(4, 3).lines()
    assert census(6, 4, sample=25, seed=9).lines() == \
        census(6, 4, sample=25, seed=9).lines()
