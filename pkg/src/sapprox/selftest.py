"""Acceptance suite: one callable per criterion, shared by the CLI
``selftest`` command and the test suite.

Each criterion states its own runtime budget.  The heavy tiers avoid
re-verifying behaviourally identical spaces: the algebraic identities of
a space depend on the relation and T only through well-defined sufficient
statistics (the relation's atom assignment, and the induced
point-to-feature map), so verdicts are memoized by those keys and a
random sample is re-checked directly against the full harness.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .approx import (EquivalenceRelation, SApproximationSpace,
                     pawlak_property_report, s_lower, s_upper,
                     verify_sm_properties)
from .classify import (enumerate_partitions, homeo_bruteforce,
                       homeo_by_profile, partition_count,
                       space_from_assignment, census)
from .relation import (AtomMap, AtomShape, SetFunction, UnionCover, atoms,
                       check_atom_structure, count_smc_relations,
                       enumerate_smc_relations, is_minimizing)
from .sets import Mask, Universe
from .topology import (build_topology, degree_profile,
                       minimal_open_containing)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float

    @property
    def ok(self) -> bool:
        return self.passed and self.elapsed <= self.budget

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        return ("criterion %d %s: %s (%.2fs of %.0fs budget) %s"
                % (self.number, self.name, status, self.elapsed,
                   self.budget, self.detail))


def _example_union_cover_space() -> SApproximationSpace:
    u = Universe(["a"])
    w = Universe(["1", "2"])
    return SApproximationSpace(u, w, [w.full()], UnionCover(2))


def criterion_1() -> CriterionResult:
    """One-point union-cover space: lower({1}) = {a}, upper({1}) = empty."""
    g = _example_union_cover_space()
    x = g.w.singleton("1")
    best = float("inf")
    lower = upper = None
    for _ in range(5):
        start = time.perf_counter()
        lower = s_lower(g, x)
        upper = s_upper(g, x)
        best = min(best, time.perf_counter() - start)
    passed = lower == g.u.full() and upper == g.u.empty()
    detail = "lower=%r upper=%r" % (sorted(g.u.labels_of(lower)),
                                    sorted(g.u.labels_of(upper)))
    return CriterionResult(1, "counterexample", passed, detail, best, 0.001)


def criterion_2() -> CriterionResult:
    """Nine-item partition suite on 200 random equivalence relations."""
    start = time.perf_counter()
    rng = random.Random(1201)
    violations = 0
    for _ in range(200):
        size = rng.randint(1, 5)
        universe = Universe.of_size(size, "e")
        rel = EquivalenceRelation(universe,
                                  [rng.randrange(size) for _ in range(size)])
        if not pawlak_property_report(rel).all_pass():
            violations += 1
    elapsed = time.perf_counter() - start
    return CriterionResult(2, "partition-suite", violations == 0,
                           "200 relations, %d violations" % violations,
                           elapsed, 10.0)


def criterion_3() -> CriterionResult:
    """Nine-item suite over every atom map (|W| <= 3) crossed with 50
    random T maps (|U| = 4), plus the union-cover example space."""
    start = time.perf_counter()
    rng = random.Random(1301)
    m = 4
    spaces = 0
    violations = 0
    spot_pool: List[Tuple[AtomMap, Tuple[int, ...], bool]] = []
    for n in range(1, 4):
        w = Universe.of_size(n, "w")
        u = Universe.of_size(m, "u")
        full_t = [w.full()] * m
        tmaps = [tuple(rng.randrange(1, 1 << n) for _ in range(m))
                 for _ in range(50)]
        rest_cache: Dict[Tuple[int, ...], bool] = {}
        for s in enumerate_smc_relations(w):
            rep = SApproximationSpace(u, w, full_t, s)
            if not rep.is_s_min:
                violations += 1
            report = verify_sm_properties(rep)
            item1_ok = report.items[1].passed
            # Items 2-9 depend only on the induced point-to-feature map.
            trans = s.atom_of
            for tm in tmaps:
                c = tuple(trans[t] for t in tm)
                rest_ok = rest_cache.get(c)
                if rest_ok is None:
                    g = space_from_assignment(m, n, c)
                    r = verify_sm_properties(g)
                    rest_ok = all(r.items[i].passed for i in range(2, 10))
                    rest_cache[c] = rest_ok
                ok = item1_ok and rest_ok
                spaces += 1
                if not ok:
                    violations += 1
                if rng.random() < 0.0006:
                    spot_pool.append((s, tm, ok))
    # Re-check a sample directly against the full harness.
    for s, tm, ok in spot_pool:
        u = Universe.of_size(m, "u")
        w = Universe.of_size(s.width, "w")
        g = SApproximationSpace(u, w,
                                [Mask(t, s.width) for t in tm], s)
        if verify_sm_properties(g).all_pass() != ok:
            violations += 1
    example = _example_union_cover_space()
    if not verify_sm_properties(example).all_pass():
        violations += 1
    low = s_lower(example, example.w.singleton("1"))
    up = s_upper(example, example.w.singleton("1"))
    if low.issubset(up):  # the whole point: lower escapes upper here
        violations += 1
    spaces += 1
    elapsed = time.perf_counter() - start
    return CriterionResult(
        3, "min-condition-suite", violations == 0,
        "%d spaces (%d spot-checked), %d violations"
        % (spaces, len(spot_pool), violations), elapsed, 30.0)


def _exhaustive_tier_checks() -> Tuple[int, int, int, List[str]]:
    """Shared worker for criteria 4 and 5 over the tier |U| <= 4, |W| <= 3.

    Walks the literal atom-map x T cross product, reduces every
    combination to its induced point-to-feature assignment, verifies the
    reduction covers exactly the assignment set, and runs the full
    topology and degree checks once per assignment.
    """
    spaces = 0
    topo_failures = 0
    degree_failures = 0
    problems: List[str] = []
    for n in range(1, 4):
        atom_tuples = [(None,) + combo
                       for combo in itertools.product(
                           range(n), repeat=(1 << n) - 1)]
        for m in range(1, 5):
            tmaps = list(itertools.product(range(1, 1 << n), repeat=m))
            seen = set()
            for trans in atom_tuples:
                for tm in tmaps:
                    seen.add(tuple(map(trans.__getitem__, tm)))
            expected = set(itertools.product(range(n), repeat=m))
            if seen != expected:
                problems.append("tier (%d,%d): reduction mismatch" % (m, n))
                continue
            for c in sorted(expected):
                spaces += 1
                g = space_from_assignment(m, n, c)
                if not g.is_smc or g.verdicts() != g.recompute_verdicts():
                    topo_failures += 1
                    continue
                topo = build_topology(g)
                if not (topo.axioms_verified and topo.clopen_verified):
                    topo_failures += 1
                lows = set()
                ups = set()
                per_set_equal = True
                for a in g.w.subsets(include_empty=True):
                    lo = s_lower(g, a)
                    hi = s_upper(g, a)
                    lows.add(lo.bits)
                    ups.add(hi.bits)
                    if lo != hi:
                        per_set_equal = False
                if not per_set_equal or lows != ups:
                    topo_failures += 1
                if sorted(lows) != [o.bits for o in topo.opens]:
                    topo_failures += 1
                # Union/intersection identities of the construction.
                for a in g.w.subsets(include_empty=True):
                    for b in g.w.subsets(include_empty=True):
                        if (s_upper(g, a | b) != s_upper(g, a) | s_upper(g, b)
                                or s_upper(g, a & b)
                                != s_upper(g, a) & s_upper(g, b)):
                            topo_failures += 1
                try:
                    profile = degree_profile(g)  # dual-route internally
                except Exception:
                    degree_failures += 1
                    continue
                if sum(profile.degrees) != m:
                    degree_failures += 1
                if profile.signature != tuple(sorted(profile.degrees)):
                    degree_failures += 1
    return spaces, topo_failures, degree_failures, problems


_TIER_CACHE: Optional[Tuple[float, Tuple[int, int, int, List[str]]]] = None


def _tier_results() -> Tuple[float, Tuple[int, int, int, List[str]]]:
    global _TIER_CACHE
    if _TIER_CACHE is None:
        start = time.perf_counter()
        result = _exhaustive_tier_checks()
        _TIER_CACHE = (time.perf_counter() - start, result)
    return _TIER_CACHE


def criterion_4() -> CriterionResult:
    """Topology construction, axioms, clopenness and family coincidence
    over the exhaustive tier."""
    elapsed, (spaces, topo_failures, _, problems) = _tier_results()
    passed = topo_failures == 0 and not problems
    detail = ("%d assignments, %d failures%s"
              % (spaces, topo_failures,
                 "; " + "; ".join(problems) if problems else ""))
    return CriterionResult(4, "topology-theorems", passed, detail,
                           elapsed, 120.0)


def criterion_5() -> CriterionResult:
    """Degree dual-route agreement and degree sum over the same tier."""
    elapsed, (spaces, _, degree_failures, problems) = _tier_results()
    passed = degree_failures == 0 and not problems
    return CriterionResult(5, "degree-consistency", passed,
                           "%d assignments, %d failures"
                           % (spaces, degree_failures), elapsed, 120.0)


def criterion_6() -> CriterionResult:
    """Signature criterion vs brute-force bijection oracle on every pair
    of distinct tier topologies with |U| = 4, |W| = 3."""
    start = time.perf_counter()
    reps = []
    seen = set()
    for c in itertools.product(range(3), repeat=4):
        g = space_from_assignment(4, 3, c)
        topo = build_topology(g)
        key = tuple(o.bits for o in topo.opens)
        if key not in seen:
            seen.add(key)
            reps.append((g, topo))
    disagreements = 0
    witness_failures = 0
    pairs = 0
    for g1, t1 in reps:
        for g2, t2 in reps:
            pairs += 1
            by_profile = homeo_by_profile(g1, g2)
            witness = homeo_bruteforce(t1, t2)
            if by_profile != (witness is not None):
                disagreements += 1
            if witness is not None:
                open_bits = {o.bits for o in t2.opens}
                for point in range(4):
                    src = minimal_open_containing(t1, point)
                    img = witness.image(src)
                    if (img.bits not in open_bits
                            or img.cardinality != src.cardinality):
                        witness_failures += 1
    elapsed = time.perf_counter() - start
    passed = disagreements == 0 and witness_failures == 0
    return CriterionResult(
        6, "oracle-equivalence", passed,
        "%d topologies, %d pairs, %d disagreements"
        % (len(reps), pairs, disagreements), elapsed, 300.0)


def criterion_7() -> CriterionResult:
    """Closed-form relation counts and enumeration stream lengths."""
    start = time.perf_counter()
    passed = (count_smc_relations(1) == 1 and count_smc_relations(2) == 8
              and count_smc_relations(3) == 2187)
    for n in range(1, 4):
        w = Universe.of_size(n, "w")
        tuples = [s.value_tuple() for s in enumerate_smc_relations(w)]
        if len(tuples) != count_smc_relations(n):
            passed = False
        if len(set(tuples)) != len(tuples):
            passed = False
    elapsed = time.perf_counter() - start
    return CriterionResult(7, "counting", passed, "n=1,2,3 -> 1,8,2187",
                           elapsed, 1.0)


def criterion_8() -> CriterionResult:
    """Census class counts equal p(m, n); p validated against direct
    partition enumeration for all m, n <= 12."""
    start = time.perf_counter()
    failures = []
    for m in range(0, 13):
        for n in range(0, 13):
            expected = partition_count(m, n)
            if n == 0:
                direct = 1 if m == 0 else 0
            else:
                direct = sum(1 for _ in enumerate_partitions(m, n))
            if direct != expected:
                failures.append("p(%d,%d)" % (m, n))
    for m, n in [(1, 1), (2, 1), (2, 2), (3, 2), (4, 2), (3, 3), (5, 3)]:
        report = census(m, n)
        if not (report.tier == "exhaustive"
                and report.classes_by_signature == partition_count(m, n)
                and report.classes_by_oracle == partition_count(m, n)
                and report.agreement):
            failures.append("census(%d,%d)" % (m, n))
    elapsed = time.perf_counter() - start
    return CriterionResult(8, "census", not failures,
                           "failures: %s" % (", ".join(failures) or "none"),
                           elapsed, 600.0)


def criterion_9() -> CriterionResult:
    """Atom theory over every minimizing function with |W| <= 4."""
    start = time.perf_counter()
    failures = 0
    minimizing_seen = 0
    for n in range(1, 5):
        top = 1 << n
        full = top - 1
        for vector in itertools.product((0, 1), repeat=top - 1):
            f = SetFunction(n, (None,) + vector, extended=False)
            if not is_minimizing(f):
                continue
            minimizing_seen += 1
            family = atoms(f)
            abits = [a.bits for a in family.atoms]
            # pairwise disjoint
            for i in range(len(abits)):
                for j in range(i + 1, len(abits)):
                    if abits[i] & abits[j]:
                        failures += 1
            if not check_atom_structure(f, family):
                failures += 1
            # independent minimal-set oracle and the trichotomy
            minimal = [x for x in range(1, top)
                       if vector[x - 1]
                       and not any(vector[y - 1]
                                   for y in range(1, x)
                                   if y & x == y and y != x)]
            if sorted(abits) != sorted(minimal):
                failures += 1
            if len(minimal) == 0:
                expected_shape = AtomShape.NO_ATOMS
            elif len(minimal) == 1:
                expected_shape = AtomShape.SINGLE_ATOM
            else:
                expected_shape = AtomShape.ALL_SINGLETONS
                if (n < 2 or len(minimal) != n
                        or any(b.bit_count() != 1 for b in minimal)):
                    failures += 1
            if family.shape is not expected_shape:
                failures += 1
            # single-atom-or-none characterization of the inequality
            cond_leq = all(vector[(full ^ a) - 1] <= 1 - vector[a - 1]
                           for a in range(1, full) if full ^ a)
            if cond_leq != (family.shape in (AtomShape.NO_ATOMS,
                                             AtomShape.SINGLE_ATOM)):
                failures += 1
            # unary-single-atom characterization of the equality
            ext = (0,) + vector
            cond_eq = all(ext[full ^ b] == 1 - ext[b] for b in range(top))
            unary_single = (family.shape is AtomShape.SINGLE_ATOM
                            and abits[0].bit_count() == 1)
            if cond_eq != unary_single:
                failures += 1
    elapsed = time.perf_counter() - start
    return CriterionResult(9, "atom-theory", failures == 0,
                           "%d minimizing functions, %d failures"
                           % (minimizing_seen, failures), elapsed, 60.0)


ALL_CRITERIA: Tuple[Callable[[], CriterionResult], ...] = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(emit=print) -> bool:
    ok = True
    for fn in ALL_CRITERIA:
        result = fn()
        emit(result.line())
        ok = ok and result.ok
    return ok
