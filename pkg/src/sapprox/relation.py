"""Subset-pair relations, their left slices, atoms, and class membership.

An ``SRelation`` is a Boolean function S on pairs of subsets of a width-n
universe W, defined for nonempty left arguments.  A relation is
*complement-extended* when it also defines S(A, empty) = 0 for every
nonempty A; only extended relations can be tested for the complement
condition directly.

Fixing the left argument A gives the left slice f(B) = S(A, B), a Boolean
set function.  The S-min condition S(A, B&C) = min(S(A,B), S(A,C)) holds
exactly when every left slice is minimizing, and minimizing slices are
fully described by their atoms (the inclusion-minimal sets where the
slice is 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, Optional, Tuple

from .errors import (CapacityError, ContractViolationError, DomainError,
                     InternalConsistencyError)
from .sets import Mask, Universe

# The triple-loop S-min check is O(8^n); above this the slice route alone
# is used.
BRUTE_FORCE_SMIN_LIMIT = 7

# Default cap for single-atom relation enumeration (n=3 already gives 2187).
ENUMERATION_SIZE_LIMIT = 3


class SRelation:
    """Base class for Boolean relations on subset pairs."""

    kind = "abstract"

    def __init__(self, width: int, extended: bool):
        self.width = width
        self.extended = extended

    def evaluate(self, a: Mask, b: Mask) -> int:
        """S(a, b) as 0 or 1, with full domain checking."""
        if a.width != self.width or b.width != self.width:
            raise DomainError("mask width does not match relation width %d"
                              % self.width)
        if a.is_empty:
            raise DomainError("left argument must be non-empty")
        if b.is_empty and not self.extended:
            raise DomainError(
                "right argument is empty and relation %r is not "
                "complement-extended" % self.kind)
        return self._eval(a.bits, b.bits)

    def _eval(self, abits: int, bbits: int) -> int:
        raise NotImplementedError

    def as_truth_table(self) -> "TruthTable":
        """Compile to the universal explicit-table representation."""
        n = self.width
        rights = range(0 if self.extended else 1, 1 << n)
        entries = {(a, b): self._eval(a, b)
                   for a in range(1, 1 << n) for b in rights}
        return TruthTable(n, entries)


class Inclusion(SRelation):
    """S(A, B) = 1 iff A is a subset of B."""

    kind = "inclusion"

    def __init__(self, width: int):
        super().__init__(width, extended=False)

    def _eval(self, abits: int, bbits: int) -> int:
        return 1 if abits & ~bbits == 0 else 0


class UnionCover(SRelation):
    """S(A, B) = 1 iff A union B is the whole universe."""

    kind = "union_cover"

    def __init__(self, width: int):
        super().__init__(width, extended=False)
        self._full = (1 << width) - 1

    def _eval(self, abits: int, bbits: int) -> int:
        return 1 if abits | bbits == self._full else 0


class TruthTable(SRelation):
    """Explicit table over all (nonempty left, right) subset pairs.

    The table is complement-extended exactly when it carries a column for
    the empty right argument; that column must then be total and zero.
    """

    kind = "table"

    def __init__(self, width: int, entries: Mapping[Tuple[int, int], int]):
        n = width
        empty_col = [a for a in range(1, 1 << n) if (a, 0) in entries]
        if empty_col and len(empty_col) != (1 << n) - 1:
            raise ValueError("empty-right column must be total or absent")
        extended = bool(empty_col)
        super().__init__(n, extended=extended)
        table = {}
        for a in range(1, 1 << n):
            for b in range(0 if extended else 1, 1 << n):
                try:
                    v = entries[(a, b)]
                except KeyError:
                    raise ValueError("table is missing entry for pair "
                                     "(0b%s, 0b%s)" % (format(a, "b"),
                                                       format(b, "b"))) from None
                if v not in (0, 1):
                    raise ValueError("table value must be 0 or 1, got %r" % (v,))
                if b == 0 and v != 0:
                    raise ValueError("extended relation requires S(A, empty)=0")
                table[(a, b)] = v
        if len(entries) != len(table):
            raise ValueError("table has entries outside its declared domain")
        self.entries = table

    def _eval(self, abits: int, bbits: int) -> int:
        return self.entries[(abits, bbits)]


class AtomMap(SRelation):
    """Relation where each left argument A owns one element a(A) of W and
    S(A, B) = 1 iff a(A) is in B.  Always complement-extended."""

    kind = "atom_map"

    def __init__(self, width: int, atom_of: Mapping[int, int]):
        super().__init__(width, extended=True)
        table = {}
        for a in range(1, 1 << width):
            try:
                w = atom_of[a]
            except KeyError:
                raise ValueError("atom map is missing subset 0b%s"
                                 % format(a, "b")) from None
            if not 0 <= w < width:
                raise ValueError("atom element index %r out of range" % (w,))
            table[a] = w
        if len(atom_of) != len(table):
            raise ValueError("atom map has entries outside its domain")
        self.atom_of = table

    def _eval(self, abits: int, bbits: int) -> int:
        return (bbits >> self.atom_of[abits]) & 1

    def value_tuple(self) -> Tuple[int, ...]:
        """Atom element per nonempty subset, in ascending mask order."""
        return tuple(self.atom_of[a] for a in range(1, 1 << self.width))


RELATION_KINDS = ("inclusion", "union_cover", "atom_map", "table")


# ---------------------------------------------------------------------------
# Left slices and atoms


@dataclass(frozen=True)
class SetFunction:
    """Boolean function on the nonempty subsets of a width-n universe.

    ``values[bits]`` is the value at the subset with that encoding;
    ``values[0]`` is 0 for extended functions and None otherwise.
    ``left`` records the left argument the slice came from, if any.
    """

    width: int
    values: Tuple[Optional[int], ...]
    extended: bool
    left: Optional[Mask] = None

    def __post_init__(self):
        if len(self.values) != 1 << self.width:
            raise ValueError("values must have length 2^width")
        if self.extended and self.values[0] != 0:
            raise ValueError("extended function must have value 0 at empty set")
        if not self.extended and self.values[0] is not None:
            raise ValueError("non-extended function must leave empty set unset")

    def __call__(self, subset) -> int:
        bits = subset.bits if isinstance(subset, Mask) else subset
        v = self.values[bits]
        if v is None:
            raise DomainError("function is not defined at the empty set")
        return v


def left_slice(s: SRelation, a: Mask) -> SetFunction:
    """The set function B -> S(a, B), tabulated over all defined B."""
    if a.width != s.width or a.is_empty:
        raise DomainError("left argument must be a non-empty mask of width %d"
                          % s.width)
    n = s.width
    head: Tuple[Optional[int], ...] = (0,) if s.extended else (None,)
    values = head + tuple(s._eval(a.bits, b) for b in range(1, 1 << n))
    return SetFunction(n, values, s.extended, left=a)


def is_minimizing(f: SetFunction) -> bool:
    """Whether f(A & B) = min(f(A), f(B)) for all pairs in f's domain.

    Pairs with empty intersection count only when f is extended, in which
    case f(empty) = 0 is used.
    """
    v = f.values
    top = 1 << f.width
    for a in range(1, top):
        va = v[a]
        for b in range(a, top):
            m = min(va, v[b])
            c = a & b
            if c:
                if v[c] != m:
                    return False
            elif f.extended and m != 0:
                return False
    return True


class AtomShape(Enum):
    """The three possible atom families of a minimizing function."""

    NO_ATOMS = "no_atoms"
    SINGLE_ATOM = "single_atom"
    ALL_SINGLETONS = "all_singletons"


@dataclass(frozen=True)
class AtomFamily:
    atoms: Tuple[Mask, ...]
    shape: AtomShape


def atoms(f: SetFunction) -> AtomFamily:
    """Inclusion-minimal nonempty subsets where f is 1, with their shape.

    Requires f to be minimizing; iterates subsets in ascending cardinality
    and skips supersets of atoms already found, so minimality holds by
    construction.
    """
    if not is_minimizing(f):
        raise ContractViolationError("atoms are defined only for minimizing "
                                     "functions")
    n = f.width
    v = f.values
    found = []
    for bits in sorted(range(1, 1 << n), key=int.bit_count):
        if v[bits] and not any(a & bits == a for a in found):
            found.append(bits)
    if len(found) == 0:
        shape = AtomShape.NO_ATOMS
    elif len(found) == 1:
        shape = AtomShape.SINGLE_ATOM
    else:
        if len(found) != n or any(a.bit_count() != 1 for a in found):
            raise InternalConsistencyError(
                "minimizing function with %d atoms that are not all "
                "singletons" % len(found))
        shape = AtomShape.ALL_SINGLETONS
    return AtomFamily(tuple(Mask(a, n) for a in found), shape)


def check_atom_structure(f: SetFunction, family: AtomFamily) -> bool:
    """Exhaustively check f(X)=1 iff some atom is contained in X."""
    abits = [a.bits for a in family.atoms]
    for x in range(1, 1 << f.width):
        has_atom = any(a & x == a for a in abits)
        if bool(f.values[x]) != has_atom:
            return False
    return True


# ---------------------------------------------------------------------------
# Class membership


def _s_min_bruteforce(s: SRelation) -> bool:
    n = s.width
    top = 1 << n
    ev = s._eval
    for a in range(1, top):
        for b in range(1, top):
            vb = ev(a, b)
            for c in range(b, top):
                m = vb if vb <= ev(a, c) else ev(a, c)
                bc = b & c
                if bc:
                    if ev(a, bc) != m:
                        return False
                elif s.extended and m != 0:
                    return False
    return True


def is_s_min(s: SRelation, w: Universe) -> bool:
    """Whether S satisfies the min condition on intersections.

    Decided via the left-slice route (every slice minimizing); for small
    universes the direct triple check also runs and must agree.
    """
    if s.width != w.size:
        raise DomainError("relation width %d != universe size %d"
                          % (s.width, w.size))
    slice_route = all(is_minimizing(left_slice(s, a))
                      for a in w.subsets(include_empty=False))
    if w.size <= BRUTE_FORCE_SMIN_LIMIT:
        brute = _s_min_bruteforce(s)
        if brute != slice_route:
            raise InternalConsistencyError(
                "slice route (%r) and brute-force route (%r) disagree on "
                "the min condition" % (slice_route, brute))
    return slice_route


def is_complement_closed(s: SRelation, w: Universe) -> bool:
    """Whether S(A, B^c) = 1 - S(A, B) everywhere, with S(A, empty) = 0.

    For a relation that is not complement-extended, only pairs with B and
    B^c both nonempty can be inspected: a violation there settles the
    answer as False, while absence of one leaves the condition
    uncheckable and raises DomainError.
    """
    if s.width != w.size:
        raise DomainError("relation width %d != universe size %d"
                          % (s.width, w.size))
    n = w.size
    full = (1 << n) - 1
    ev = s._eval
    if s.extended:
        for a in range(1, full + 1):
            if ev(a, 0) != 0:
                return False
            for b in range(0, full + 1):
                if ev(a, full ^ b) != 1 - ev(a, b):
                    return False
        return True
    violated = False
    for a in range(1, full + 1):
        for b in range(1, full):  # b and b^c both nonempty
            if ev(a, full ^ b) != 1 - ev(a, b):
                violated = True
                break
        if violated:
            break
    if violated:
        return False
    raise DomainError(
        "relation is not complement-extended and no violation exists among "
        "pairs with non-empty complements; cannot certify closure")


def is_smc(s: SRelation, w: Universe) -> bool:
    """Whether S is min-conditioned and complement-closed.

    Two routes: the direct one (min condition plus complement closure)
    and the atom characterization (every left slice has a single
    one-element atom).  They must agree whenever both are decidable.
    """
    smin = is_s_min(s, w)
    if not smin:
        return False
    atom_route = True
    for a in w.subsets(include_empty=False):
        family = atoms(left_slice(s, a))
        if not (family.shape is AtomShape.SINGLE_ATOM
                and family.atoms[0].cardinality == 1):
            atom_route = False
            break
    try:
        direct = is_complement_closed(s, w)
    except DomainError:
        direct = None
    if direct is not None and direct != atom_route:
        raise InternalConsistencyError(
            "complement-closure route (%r) and single-atom route (%r) "
            "disagree" % (direct, atom_route))
    return atom_route


def count_smc_relations(n: int) -> int:
    """Number of min-conditioned complement-closed relations on a size-n
    universe: n ** (2^n - 1)."""
    if n < 1:
        raise DomainError("universe size must be at least 1")
    return n ** ((1 << n) - 1)


def enumerate_smc_relations(w: Universe,
                            allow_large: bool = False) -> Iterator[AtomMap]:
    """Every atom-map relation over w, exactly once.

    Maps are yielded in lexicographic order of their value tuples (left
    masks in ascending numeric order, elements by position index), so
    census runs are reproducible.
    """
    n = w.size
    if n > ENUMERATION_SIZE_LIMIT and not allow_large:
        raise CapacityError(
            "enumerating %d relations for n=%d requires allow_large=True"
            % (count_smc_relations(n), n))
    domain = range(1, 1 << n)
    for combo in itertools.product(range(n), repeat=len(domain)):
        yield AtomMap(n, dict(zip(domain, combo)))
