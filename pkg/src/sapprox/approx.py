"""Lower and upper approximation operators and their property harness.

Three operator families over a finite universe:

* partition-based (equivalence relation, classical),
* successor-based (arbitrary binary relation),
* relation-pair spaces (U, W, T, S), where points of U are approximated
  through the subset relation S and the assignment T: U -> P*(W).

The property harness re-checks the standard algebraic identities of the
operators exhaustively; it reports per-item results instead of asserting,
so it can also characterize relations that break them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DomainError, UniverseMismatchError
from .relation import SRelation, is_complement_closed, is_s_min, is_smc
from .sets import Mask, Universe


class EquivalenceRelation:
    """A partition of a universe, stored as a block id per position."""

    def __init__(self, universe: Universe, class_ids: Sequence[int]):
        if len(class_ids) != universe.size:
            raise ValueError("need one class id per element")
        self.universe = universe
        self.class_ids = tuple(class_ids)
        blocks: Dict[int, int] = {}
        for i, cid in enumerate(self.class_ids):
            blocks[cid] = blocks.get(cid, 0) | (1 << i)
        self._block_bits = blocks
        self.blocks = tuple(Mask(b, universe.size)
                            for b in sorted(blocks.values()))

    @classmethod
    def identity(cls, universe: Universe) -> "EquivalenceRelation":
        return cls(universe, range(universe.size))

    @classmethod
    def indiscrete(cls, universe: Universe) -> "EquivalenceRelation":
        return cls(universe, [0] * universe.size)

    @classmethod
    def from_blocks(cls, universe: Universe,
                    blocks: Sequence[Sequence[str]]) -> "EquivalenceRelation":
        ids = [-1] * universe.size
        for cid, block in enumerate(blocks):
            for label in block:
                i = universe.index_of(label)
                if ids[i] != -1:
                    raise ValueError("label %r in two blocks" % (label,))
                ids[i] = cid
        if -1 in ids:
            raise ValueError("blocks do not cover the universe")
        return cls(universe, ids)

    def block_of(self, index: int) -> Mask:
        return Mask(self._block_bits[self.class_ids[index]],
                    self.universe.size)


class BinaryRelation:
    """An arbitrary relation on a universe, stored as successor sets."""

    def __init__(self, universe: Universe, successors: Sequence[Mask]):
        if len(successors) != universe.size:
            raise ValueError("need one successor set per element")
        for m in successors:
            if m.width != universe.size:
                raise UniverseMismatchError("successor mask has wrong width")
        self.universe = universe
        self.successors = tuple(successors)

    @classmethod
    def from_equivalence(cls, rel: EquivalenceRelation) -> "BinaryRelation":
        return cls(rel.universe,
                   [rel.block_of(i) for i in range(rel.universe.size)])

    @classmethod
    def equality(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, [Mask.singleton(i, universe.size)
                              for i in range(universe.size)])


def _check_over(universe: Universe, x: Mask) -> None:
    if x.width != universe.size:
        raise UniverseMismatchError("subset width %d != universe size %d"
                                    % (x.width, universe.size))


def pawlak_lower(rel: EquivalenceRelation, x: Mask) -> Mask:
    """Points whose whole block lies inside x."""
    _check_over(rel.universe, x)
    bits = 0
    for i in range(rel.universe.size):
        if rel.block_of(i).bits & ~x.bits == 0:
            bits |= 1 << i
    return Mask(bits, rel.universe.size)


def pawlak_upper(rel: EquivalenceRelation, x: Mask) -> Mask:
    """Points whose block meets x."""
    _check_over(rel.universe, x)
    bits = 0
    for i in range(rel.universe.size):
        if rel.block_of(i).bits & x.bits:
            bits |= 1 << i
    return Mask(bits, rel.universe.size)


def yao_lower(rel: BinaryRelation, x: Mask) -> Mask:
    """Points whose successor set lies inside x (vacuously, when empty)."""
    _check_over(rel.universe, x)
    bits = 0
    for i, succ in enumerate(rel.successors):
        if succ.bits & ~x.bits == 0:
            bits |= 1 << i
    return Mask(bits, rel.universe.size)


def yao_upper(rel: BinaryRelation, x: Mask) -> Mask:
    """Points whose successor set meets x."""
    _check_over(rel.universe, x)
    bits = 0
    for i, succ in enumerate(rel.successors):
        if succ.bits & x.bits:
            bits |= 1 << i
    return Mask(bits, rel.universe.size)


# ---------------------------------------------------------------------------
# Relation-pair approximation spaces


class SApproximationSpace:
    """A quadruple (U, W, T, S) with cached classification verdicts."""

    def __init__(self, u: Universe, w: Universe, t: Sequence[Mask],
                 s: SRelation):
        if len(t) != u.size:
            raise ValueError("T must assign a subset to every point of U")
        for m in t:
            if m.width != w.size:
                raise UniverseMismatchError("T value has wrong width")
            if m.is_empty:
                raise ValueError("T values must be non-empty")
        if s.width != w.size:
            raise UniverseMismatchError("relation width %d != |W| = %d"
                                        % (s.width, w.size))
        self.u = u
        self.w = w
        self.t = tuple(t)
        self.s = s
        self._verdicts: Optional[Dict[str, Optional[bool]]] = None

    def recompute_verdicts(self) -> Dict[str, Optional[bool]]:
        """Classification verdicts, computed from scratch.

        ``complement_closed`` is None when the relation is not extended
        and no counterexample exists among checkable pairs.
        """
        smin = is_s_min(self.s, self.w)
        try:
            closed: Optional[bool] = is_complement_closed(self.s, self.w)
        except DomainError:
            closed = None
        return {"s_min": smin,
                "complement_closed": closed,
                "smc": is_smc(self.s, self.w)}

    def verdicts(self) -> Dict[str, Optional[bool]]:
        if self._verdicts is None:
            self._verdicts = self.recompute_verdicts()
        return self._verdicts

    @property
    def is_s_min(self) -> bool:
        return bool(self.verdicts()["s_min"])

    @property
    def is_complement_closed(self) -> Optional[bool]:
        return self.verdicts()["complement_closed"]

    @property
    def is_smc(self) -> bool:
        return bool(self.verdicts()["smc"])


def s_lower(g: SApproximationSpace, x: Mask) -> Mask:
    """Points u with S(T(u), x) = 1, as a mask over U."""
    _check_over(g.w, x)
    if x.is_empty and not g.s.extended:
        raise DomainError("empty subset needs a complement-extended relation")
    bits = 0
    for i, tv in enumerate(g.t):
        if g.s.evaluate(tv, x):
            bits |= 1 << i
    return Mask(bits, g.u.size)


def s_upper(g: SApproximationSpace, x: Mask) -> Mask:
    """Points u with S(T(u), x^c) = 0, as a mask over U."""
    _check_over(g.w, x)
    xc = x.complement()
    if xc.is_empty and not g.s.extended:
        raise DomainError("subset W needs a complement-extended relation")
    bits = 0
    for i, tv in enumerate(g.t):
        if not g.s.evaluate(tv, xc):
            bits |= 1 << i
    return Mask(bits, g.u.size)


# ---------------------------------------------------------------------------
# Property harness

MAX_RECORDED_VIOLATIONS = 5


@dataclass
class ItemResult:
    passed: bool
    checked: int
    skipped: int
    violations: List[str] = field(default_factory=list)


@dataclass
class PropertyReport:
    items: Dict[int, ItemResult]

    def all_pass(self) -> bool:
        return all(item.passed for item in self.items.values())


class _Collector:
    def __init__(self):
        self.items: Dict[int, ItemResult] = {}

    def item(self, number: int) -> ItemResult:
        return self.items.setdefault(number, ItemResult(True, 0, 0))

    def check(self, number: int, ok: bool, describe) -> None:
        item = self.item(number)
        item.checked += 1
        if not ok:
            item.passed = False
            if len(item.violations) < MAX_RECORDED_VIOLATIONS:
                item.violations.append(describe())

    def skip(self, number: int) -> None:
        self.item(number).skipped += 1


def _classical_report(universe: Universe, lower, upper) -> PropertyReport:
    """The nine-item identity suite for a lower/upper operator pair that is
    total over P(U)."""
    n = universe.size
    full = (1 << n) - 1
    lo = [lower(Mask(b, n)).bits for b in range(full + 1)]
    up = [upper(Mask(b, n)).bits for b in range(full + 1)]
    col = _Collector()

    def name(bits):
        return "{%s}" % ",".join(universe.labels_of(Mask(bits, n)))

    for x in range(full + 1):
        col.check(1, lo[x] & ~x == 0 and x & ~up[x] == 0,
                  lambda x=x: "X=%s" % name(x))
        col.check(9, lo[x] == full ^ up[full ^ x]
                  and up[x] == full ^ lo[full ^ x],
                  lambda x=x: "X=%s" % name(x))
    col.check(2, lo[full] == full and up[full] == full
              and lo[0] == 0 and up[0] == 0, lambda: "boundary sets")
    for x in range(full + 1):
        for y in range(full + 1):
            col.check(3, up[x | y] == up[x] | up[y],
                      lambda x=x, y=y: "X=%s Y=%s" % (name(x), name(y)))
            col.check(4, lo[x & y] == lo[x] & lo[y],
                      lambda x=x, y=y: "X=%s Y=%s" % (name(x), name(y)))
            if x & ~y == 0:
                col.check(5, lo[x] & ~lo[y] == 0,
                          lambda x=x, y=y: "X=%s Y=%s" % (name(x), name(y)))
                col.check(6, up[x] & ~up[y] == 0,
                          lambda x=x, y=y: "X=%s Y=%s" % (name(x), name(y)))
            col.check(7, (lo[x] | lo[y]) & ~lo[x | y] == 0,
                      lambda x=x, y=y: "X=%s Y=%s" % (name(x), name(y)))
            col.check(8, up[x & y] & ~(up[x] & up[y]) == 0,
                      lambda x=x, y=y: "X=%s Y=%s" % (name(x), name(y)))
    return PropertyReport(col.items)


def pawlak_property_report(rel: EquivalenceRelation) -> PropertyReport:
    return _classical_report(rel.universe,
                             lambda x: pawlak_lower(rel, x),
                             lambda x: pawlak_upper(rel, x))


def yao_property_report(rel: BinaryRelation) -> PropertyReport:
    """Same suite for successor-based operators.

    Items 1 and 2 can genuinely fail for non-reflexive or non-serial
    relations; the report states what actually holds.
    """
    return _classical_report(rel.universe,
                             lambda x: yao_lower(rel, x),
                             lambda x: yao_upper(rel, x))


def verify_sm_properties(g: SApproximationSpace) -> PropertyReport:
    """The nine-item suite for a relation-pair space, exhaustive over
    subset pairs of W.

    Pairs whose evaluation would need S at the empty set are counted as
    skipped when the relation is not complement-extended.
    """
    n = g.w.size
    full = (1 << n) - 1
    ext = g.s.extended
    ev = g.s._eval
    tbits = [m.bits for m in g.t]
    usize = g.u.size
    ufull = (1 << usize) - 1

    lo: Dict[int, int] = {}
    up: Dict[int, int] = {}
    for b in range(full + 1):
        if b != 0 or ext:
            lo[b] = sum(1 << i for i, t in enumerate(tbits) if ev(t, b))
        if b != full or ext:
            up[b] = sum(1 << i for i, t in enumerate(tbits)
                        if not ev(t, full ^ b))

    col = _Collector()

    def name(bits):
        return "{%s}" % ",".join(g.w.labels_of(Mask(bits, n)))

    # item 1: A subset of B implies S(X, B^c) <= S(X, A^c) for nonempty X
    for b in range(full + 1):
        a = b
        while True:  # all submasks a of b, then the empty one
            ac, bc = full ^ a, full ^ b
            if (ac == 0 or bc == 0) and not ext:
                col.skip(1)
            else:
                for x in range(1, full + 1):
                    col.check(1, ev(x, bc) <= ev(x, ac),
                              lambda a=a, b=b, x=x: "A=%s B=%s X=%s"
                              % (name(a), name(b), name(x)))
            if a == 0:
                break
            a = (a - 1) & b

    # item 2: max(S(T(x),A), S(T(x),B)) <= S(T(x), A|B)
    lowest = 0 if ext else 1
    for a in range(lowest, full + 1):
        for b in range(a, full + 1):
            if a | b == 0:
                continue
            for t in tbits:
                col.check(2, max(ev(t, a), ev(t, b)) <= ev(t, a | b),
                          lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))

    # items 3-9 through the approximation tables
    for a in range(full + 1):
        for b in range(full + 1):
            u_ab = a | b
            i_ab = a & b
            if u_ab in up and a in up and b in up:
                col.check(3, up[u_ab] == up[a] | up[b],
                          lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))
            else:
                col.skip(3)
            if i_ab in lo and a in lo and b in lo:
                col.check(4, lo[i_ab] == lo[a] & lo[b],
                          lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))
            else:
                col.skip(4)
            if a & ~b == 0:
                if a in lo and b in lo:
                    col.check(5, lo[a] & ~lo[b] == 0,
                              lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))
                else:
                    col.skip(5)
                if a in up and b in up:
                    col.check(6, up[a] & ~up[b] == 0,
                              lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))
                else:
                    col.skip(6)
            if u_ab in lo and a in lo and b in lo:
                col.check(7, (lo[a] | lo[b]) & ~lo[u_ab] == 0,
                          lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))
            else:
                col.skip(7)
            if i_ab in up and a in up and b in up:
                col.check(8, up[i_ab] & ~(up[a] & up[b]) == 0,
                          lambda a=a, b=b: "A=%s B=%s" % (name(a), name(b)))
            else:
                col.skip(8)
        ac = full ^ a
        if a in lo and ac in up:
            col.check(9, lo[a] == ufull ^ up[ac],
                      lambda a=a: "A=%s" % name(a))
        elif a in up and ac in lo:
            col.check(9, up[a] == ufull ^ lo[ac],
                      lambda a=a: "A=%s" % name(a))
        else:
            col.skip(9)
    return PropertyReport(col.items)
