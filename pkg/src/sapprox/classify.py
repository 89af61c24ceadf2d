"""Homeomorphism classification and the partition-count census.

Two spaces with equally sized point and feature universes induce
homeomorphic topologies exactly when their degree signatures agree; the
number of classes with |U| = m and |W| = n is p(m, n), the number of
unordered partitions of m into at most n positive parts.  A brute-force
bijection search over small carriers acts as the independent oracle for
both facts.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import CapacityError, DomainError, TheoremHypothesisError
from .approx import SApproximationSpace
from .relation import AtomMap
from .sets import Mask, Universe
from .topology import FiniteTopology, build_topology, degree_profile

BRUTE_FORCE_POINT_LIMIT = 8          # 8! = 40320 candidate bijections
EXHAUSTIVE_CENSUS_LIMIT = (5, 3)


@dataclass(frozen=True)
class IntegerPartition:
    """A non-increasing tuple of positive parts."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "0"


@lru_cache(maxsize=None)
def _p(m: int, n: int) -> int:
    if m < 0:
        return 0
    if m == 0:
        return 1
    if n == 0:
        return 0
    return _p(m, n - 1) + _p(m - n, n)


def partition_count(m: int, n: int) -> int:
    """p(m, n): partitions of m into at most n positive parts."""
    if m < 0 or n < 0:
        raise DomainError("arguments must be non-negative")
    return _p(m, n)


def enumerate_partitions(m: int, n: int) -> Iterator[IntegerPartition]:
    """All partitions of m into at most n parts, in reverse-lexicographic
    order of their part tuples."""
    if m < 0 or n < 1:
        raise DomainError("need m >= 0 and n >= 1")

    def gen(remaining: int, cap: int, slots: int,
            prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, slots - 1, prefix + (part,))

    for parts in gen(m, m if m else 1, n, ()):
        yield IntegerPartition(parts)


@dataclass(frozen=True)
class Bijection:
    """A point bijection, position i of the first carrier mapping to
    position forward[i] of the second."""

    forward: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.forward) != list(range(len(self.forward))):
            raise ValueError("not a permutation")

    def image(self, mask: Mask) -> Mask:
        return Mask.from_indices((self.forward[i] for i in mask.indices()),
                                 len(self.forward))


def homeo_by_profile(g1: SApproximationSpace,
                     g2: SApproximationSpace) -> bool:
    """Degree-signature criterion.

    Only stated for smc spaces with equal |U| and equal |W|; anything
    else raises TheoremHypothesisError rather than answering False.
    """
    if not g1.is_smc or not g2.is_smc:
        raise TheoremHypothesisError("both spaces must be smc")
    if g1.u.size != g2.u.size or g1.w.size != g2.w.size:
        raise TheoremHypothesisError(
            "criterion requires |U1| = |U2| and |W1| = |W2|")
    return degree_profile(g1).signature == degree_profile(g2).signature


def homeo_bruteforce(t1: FiniteTopology,
                     t2: FiniteTopology) -> Optional[Bijection]:
    """Exhaustive bijection search; the definitional oracle.

    Scans point permutations in lexicographic index order, so the witness
    returned for a fixed input pair is reproducible.
    """
    n1, n2 = t1.points.size, t2.points.size
    if n1 != n2:
        return None
    if n1 > BRUTE_FORCE_POINT_LIMIT:
        raise CapacityError("brute-force search capped at %d points"
                            % BRUTE_FORCE_POINT_LIMIT)
    if len(t1.opens) != len(t2.opens):
        return None
    opens2 = frozenset(o.bits for o in t2.opens)
    open_indices = [tuple(o.indices()) for o in t1.opens]
    for perm in itertools.permutations(range(n1)):
        ok = True
        for idx in open_indices:
            image = 0
            for i in idx:
                image |= 1 << perm[i]
            if image not in opens2:
                ok = False
                break
        if ok:
            return Bijection(perm)
    return None


def canonical_space(p: IntegerPartition, m: int, n: int) -> SApproximationSpace:
    """The representative smc space for one partition of m.

    Point block j (of size parts[j]) is assigned the singleton of the
    j-th feature; the atom map fixes the first k singletons and sends
    every other nonempty subset to the first feature, which leaves the
    degrees exactly equal to the parts (padded with zeros).
    """
    if m < 1 or n < 1:
        raise DomainError("need m >= 1 and n >= 1")
    if p.total != m or len(p.parts) > n:
        raise DomainError("%s is not a partition of %d into at most %d parts"
                          % (p, m, n))
    u = Universe.of_size(m, "u")
    w = Universe.of_size(n, "w")
    t: List[Mask] = []
    for j, part in enumerate(p.parts):
        t.extend([Mask.singleton(j, n)] * part)
    atom_of = {}
    for bits in range(1, 1 << n):
        if bits.bit_count() == 1 and (bits.bit_length() - 1) < len(p.parts):
            atom_of[bits] = bits.bit_length() - 1
        else:
            atom_of[bits] = 0
    return SApproximationSpace(u, w, t, AtomMap(n, atom_of))


def space_from_assignment(m: int, n: int,
                          assignment: Sequence[int]) -> SApproximationSpace:
    """The space whose point u_i carries the singleton of feature
    assignment[i], with the identity-on-singletons atom map.

    Every space in the exhaustive tier (arbitrary atom map crossed with
    arbitrary T) induces the same approximations as exactly one such
    assignment, namely u -> atom element of the slice at T(u).
    """
    if len(assignment) != m or any(not 0 <= a < n for a in assignment):
        raise DomainError("assignment must map %d points into %d features"
                          % (m, n))
    u = Universe.of_size(m, "u")
    w = Universe.of_size(n, "w")
    t = [Mask.singleton(a, n) for a in assignment]
    atom_of = {bits: (bits.bit_length() - 1 if bits.bit_count() == 1 else 0)
               for bits in range(1, 1 << n)}
    return SApproximationSpace(u, w, t, AtomMap(n, atom_of))


@dataclass
class CensusReport:
    m: int
    n: int
    tier: str                         # "exhaustive" or "sampled"
    assignments_examined: int
    distinct_topologies: int
    classes_by_signature: int
    classes_by_oracle: Optional[int]  # None when the oracle did not run
    expected_classes: int
    agreement: bool

    def lines(self) -> List[str]:
        oracle = ("-" if self.classes_by_oracle is None
                  else str(self.classes_by_oracle))
        return [
            "census m=%d n=%d tier=%s" % (self.m, self.n, self.tier),
            "assignments %d" % self.assignments_examined,
            "topologies %d" % self.distinct_topologies,
            "classes_signature %d" % self.classes_by_signature,
            "classes_oracle %s" % oracle,
            "expected %d" % self.expected_classes,
            "agreement %s" % ("true" if self.agreement else "false"),
        ]


def census(m: int, n: int, sample: Optional[int] = None,
           seed: int = 0) -> CensusReport:
    """Generate tier spaces, bucket their topologies, and compare the
    class count against p(m, n).

    The exhaustive tier (m <= 5, n <= 3) covers every point-to-feature
    assignment; this reaches the same topology set as crossing every atom
    map with every T, because approximations depend on the relation and T
    only through the induced assignment, and every assignment is induced.
    Larger parameters require an explicit sample size.
    """
    if m < 1 or n < 1:
        raise DomainError("need m >= 1 and n >= 1")
    exhaustive = m <= EXHAUSTIVE_CENSUS_LIMIT[0] and n <= EXHAUSTIVE_CENSUS_LIMIT[1]
    if exhaustive and sample is None:
        tier = "exhaustive"
        assignments = itertools.product(range(n), repeat=m)
        count = n ** m
    else:
        if sample is None:
            raise CapacityError(
                "m=%d n=%d is above the exhaustive tier %r; pass a sample "
                "size" % (m, n, EXHAUSTIVE_CENSUS_LIMIT))
        tier = "sampled"
        rng = random.Random(seed)
        assignments = (tuple(rng.randrange(n) for _ in range(m))
                       for _ in range(sample))
        count = sample

    by_topology: Dict[Tuple[int, ...], Tuple[FiniteTopology, Tuple[int, ...]]] = {}
    examined = 0
    for assignment in assignments:
        examined += 1
        g = space_from_assignment(m, n, assignment)
        topo = build_topology(g)
        key = tuple(o.bits for o in topo.opens)
        if key not in by_topology:
            by_topology[key] = (topo, degree_profile(g).signature)

    signatures = {sig for _, sig in by_topology.values()}

    classes_by_oracle: Optional[int] = None
    if m <= BRUTE_FORCE_POINT_LIMIT:
        reps: List[FiniteTopology] = []
        for topo, _ in by_topology.values():
            if not any(homeo_bruteforce(topo, rep) for rep in reps):
                reps.append(topo)
        classes_by_oracle = len(reps)

    expected = partition_count(m, n)
    agreement = len(signatures) == expected and (
        classes_by_oracle is None or classes_by_oracle == expected)
    if tier == "sampled":
        # A sparse sample may legitimately miss classes.
        agreement = len(signatures) <= expected and (
            classes_by_oracle is None or classes_by_oracle == len(signatures))
    return CensusReport(m, n, tier, examined, len(by_topology),
                        len(signatures), classes_by_oracle, expected,
                        agreement)
