"""Finite universes and bitmask-encoded subsets.

Elements are identified by position; labels exist only at the I/O
boundary.  A subset is an integer bit-vector with bit i standing for the
element at position i (position 0 is the least significant bit).  Subset
enumeration is in ascending numeric order of the encoding, which is part
of the external contract: all derived output is deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, UniverseMismatchError

# Full-powerset operations are O(2^n); 20 keeps worst cases around 10^6.
MAX_UNIVERSE_SIZE = 20


class Mask:
    """A subset of a fixed-width universe, stored as an integer bit-vector.

    Immutable after construction; instances are hashable and safe to share.
    """

    __slots__ = ("bits", "width")

    def __init__(self, bits: int, width: int):
        if not 0 < width <= MAX_UNIVERSE_SIZE:
            raise CapacityError("mask width must be in 1..%d, got %d"
                                % (MAX_UNIVERSE_SIZE, width))
        if bits < 0 or bits >> width:
            raise ValueError("bits 0x%x do not fit in width %d" % (bits, width))
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError("Mask is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, width: int) -> "Mask":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "Mask":
        return cls((1 << width) - 1, width)

    @classmethod
    def singleton(cls, index: int, width: int) -> "Mask":
        return cls(1 << index, width)

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> "Mask":
        bits = 0
        for i in indices:
            if not 0 <= i < width:
                raise ValueError("index %d out of range for width %d" % (i, width))
            bits |= 1 << i
        return cls(bits, width)

    # -- set algebra -------------------------------------------------------

    def _check(self, other: "Mask") -> None:
        if self.width != other.width:
            raise UniverseMismatchError(
                "masks belong to universes of different sizes (%d vs %d)"
                % (self.width, other.width))

    def __or__(self, other: "Mask") -> "Mask":
        self._check(other)
        return Mask(self.bits | other.bits, self.width)

    def __and__(self, other: "Mask") -> "Mask":
        self._check(other)
        return Mask(self.bits & other.bits, self.width)

    def __sub__(self, other: "Mask") -> "Mask":
        self._check(other)
        return Mask(self.bits & ~other.bits, self.width)

    def complement(self) -> "Mask":
        return Mask(self.bits ^ ((1 << self.width) - 1), self.width)

    def issubset(self, other: "Mask") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def intersects(self, other: "Mask") -> bool:
        self._check(other)
        return self.bits & other.bits != 0

    # -- queries -----------------------------------------------------------

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.width and (self.bits >> index) & 1 == 1

    def indices(self) -> Iterator[int]:
        bits = self.bits
        i = 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mask)
                and self.bits == other.bits and self.width == other.width)

    def __hash__(self) -> int:
        return hash((self.bits, self.width))

    def __repr__(self) -> str:
        return "Mask(0b%s, width=%d)" % (format(self.bits, "0%db" % self.width),
                                         self.width)


class Universe:
    """An ordered finite set of distinctly labelled elements."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if len(labels) == 0:
            raise ValueError("universe must be non-empty")
        if len(labels) > MAX_UNIVERSE_SIZE:
            raise CapacityError("universe has %d elements; cap is %d"
                                % (len(labels), MAX_UNIVERSE_SIZE))
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ValueError("duplicate label %r" % (label,))
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Universe is immutable")

    @classmethod
    def of_size(cls, n: int, prefix: str = "x") -> "Universe":
        """Universe with generated labels prefix1 .. prefixN."""
        return cls(tuple("%s%d" % (prefix, i + 1) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError("label %r not in universe" % (label,)) from None

    def label_of(self, index: int) -> str:
        return self.labels[index]

    def mask(self, labels: Iterable[str]) -> Mask:
        return Mask.from_indices((self.index_of(l) for l in labels), self.size)

    def labels_of(self, mask: Mask) -> tuple:
        if mask.width != self.size:
            raise UniverseMismatchError("mask width %d != universe size %d"
                                        % (mask.width, self.size))
        return tuple(self.labels[i] for i in mask.indices())

    def empty(self) -> Mask:
        return Mask.empty(self.size)

    def full(self) -> Mask:
        return Mask.full(self.size)

    def singleton(self, label: str) -> Mask:
        return Mask.singleton(self.index_of(label), self.size)

    def subsets(self, include_empty: bool = True) -> Iterator[Mask]:
        """All subsets, in ascending numeric order of the bit encoding."""
        n = self.size
        start = 0 if include_empty else 1
        for bits in range(start, 1 << n):
            yield Mask(bits, n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Universe) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return "Universe(%r)" % (list(self.labels),)
