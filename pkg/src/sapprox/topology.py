"""Clopen topologies induced by approximation spaces, and element degrees.

For a min-conditioned, complement-closed space the family of all upper
approximations of subsets of W is a topology on U in which every open set
is closed.  The degree of an element w counts the points whose left-slice
atom is exactly {w}; the multiset of degrees is the homeomorphism
invariant used by the classification module.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .errors import (ContractViolationError, DomainError,
                     InternalConsistencyError)
from .approx import SApproximationSpace, s_lower, s_upper
from .relation import atoms, left_slice
from .sets import Mask, Universe


@dataclass
class FiniteTopology:
    """A point universe with a canonically ordered family of open sets."""

    points: Universe
    opens: Tuple[Mask, ...]
    axioms_verified: bool = False
    clopen_verified: bool = False

    def __post_init__(self):
        bits = [o.bits for o in self.opens]
        if bits != sorted(set(bits)):
            raise ValueError("opens must be duplicate-free and in ascending "
                             "numeric mask order")
        for o in self.opens:
            if o.width != self.points.size:
                raise ValueError("open set width does not match point count")


def verify_topology_axioms(t: FiniteTopology) -> bool:
    """Empty set and full set present; closed under pairwise union and
    intersection (sufficient on a finite carrier).  Sets the flag."""
    bits = {o.bits for o in t.opens}
    full = (1 << t.points.size) - 1
    ok = 0 in bits and full in bits
    if ok:
        blist = sorted(bits)
        for i, a in enumerate(blist):
            for b in blist[i:]:
                if a | b not in bits or a & b not in bits:
                    ok = False
                    break
            if not ok:
                break
    t.axioms_verified = ok
    return ok


def is_clopen_topology(t: FiniteTopology) -> bool:
    """Whether the complement of every open set is open.  Sets the flag."""
    bits = {o.bits for o in t.opens}
    full = (1 << t.points.size) - 1
    ok = all(full ^ b in bits for b in bits)
    t.clopen_verified = ok
    return ok


def build_topology(g: SApproximationSpace) -> FiniteTopology:
    """The family of upper approximations of all subsets of W.

    Requires the space's smc verdict.  Axiom and clopen verification runs
    unconditionally; a failure here would contradict the construction and
    is reported as an internal inconsistency, not as invalid input.
    """
    if not g.is_smc:
        v = g.verdicts()
        if not v["s_min"]:
            why = "the relation violates the min condition"
        else:
            why = "the relation is not complement-closed"
        raise ContractViolationError("topology requires an smc space: " + why)
    opens = set()
    for a in g.w.subsets(include_empty=True):
        try:
            opens.add(s_upper(g, a).bits)
        except DomainError:
            # Non-extended relation certified smc through its slices; the
            # lower approximation equals the upper one on such spaces.
            opens.add(s_lower(g, a).bits)
    topo = FiniteTopology(g.u, tuple(Mask(b, g.u.size)
                                     for b in sorted(opens)))
    if not verify_topology_axioms(topo):
        raise InternalConsistencyError("induced family fails the topology "
                                       "axioms on an smc space")
    if not is_clopen_topology(topo):
        raise InternalConsistencyError("induced topology is not clopen on "
                                       "an smc space")
    return topo


def minimal_open_containing(t: FiniteTopology, point: int) -> Mask:
    """Intersection of all open sets containing the point (itself open on
    a finite carrier once the axioms hold)."""
    if not t.axioms_verified:
        raise ContractViolationError("verify the topology axioms first")
    if not 0 <= point < t.points.size:
        raise DomainError("point index %d out of range" % point)
    bits = (1 << t.points.size) - 1
    for o in t.opens:
        if (o.bits >> point) & 1:
            bits &= o.bits
    return Mask(bits, t.points.size)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-element degrees, bucket sizes per degree value, and the sorted
    degree multiset used as the homeomorphism signature."""

    degrees: Tuple[int, ...]
    bucket_sizes: Dict[int, int] = field(hash=False)
    signature: Tuple[int, ...] = ()


def degree_profile(g: SApproximationSpace) -> DegreeProfile:
    """Degrees of every element of W, computed by two routes.

    Route one counts points whose left-slice atom is the element's
    singleton; route two takes the size of the upper approximation of
    that singleton.  Disagreement signals an implementation bug and is
    always checked.
    """
    if not g.is_smc:
        raise ContractViolationError("degree profile requires an smc space")
    n = g.w.size
    by_atom = [0] * n
    for tv in g.t:
        family = atoms(left_slice(g.s, tv))
        (atom,) = family.atoms
        by_atom[next(atom.indices())] += 1
    by_upper = [s_upper(g, Mask.singleton(i, n)).cardinality
                for i in range(n)]
    if by_atom != by_upper:
        raise InternalConsistencyError(
            "degree routes disagree: atoms %r vs upper sizes %r"
            % (by_atom, by_upper))
    if sum(by_atom) != g.u.size:
        raise InternalConsistencyError("degrees do not sum to |U|")
    degrees = tuple(by_atom)
    return DegreeProfile(degrees, dict(Counter(degrees)),
                         tuple(sorted(degrees)))
