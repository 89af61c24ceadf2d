"""Line-oriented text format for approximation space descriptions.

A document has four sections introduced by the headers ``U:``, ``W:``,
``T:`` and ``S:``.  ``U:`` and ``W:`` list labels separated by commas on
the header line.  ``T:`` is followed by one ``label: {subset}`` line per
point.  ``S:`` names the relation kind (``inclusion``, ``union_cover``,
``atom_map`` or ``table``) and, for the last two, is followed by one
entry line per domain element.  Subsets are written ``{a,b}`` with labels
comma-separated; the empty set is ``{}``.  Blank lines and ``#`` comments
are ignored.  The exact grammar with worked files ships in
``docs/space-format.md``.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .errors import CapacityError, DocumentError
from .approx import SApproximationSpace
from .relation import (AtomMap, Inclusion, SRelation, TruthTable, UnionCover)
from .sets import Mask, Universe

_LABEL_RE = re.compile(r"[^\s{},:#|]+\Z")


def _parse_labels(text: str, line: int) -> List[str]:
    labels = [part.strip() for part in text.split(",") if part.strip()]
    if not labels:
        raise DocumentError("expected at least one label", line)
    for label in labels:
        if not _LABEL_RE.match(label):
            raise DocumentError("invalid label %r" % label, line)
    return labels


def _parse_subset(text: str, universe: Universe, line: int) -> Mask:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise DocumentError("expected a subset like {a,b}, got %r" % text, line)
    inner = text[1:-1].strip()
    if not inner:
        return universe.empty()
    try:
        return universe.mask(part.strip() for part in inner.split(","))
    except KeyError as exc:
        raise DocumentError(str(exc.args[0]), line) from None


def format_subset(universe: Universe, mask: Mask) -> str:
    return "{%s}" % ",".join(universe.labels_of(mask))


def _build_universe(labels: List[str], section: str, line: int) -> Universe:
    try:
        return Universe(labels)
    except CapacityError:
        raise
    except ValueError as exc:
        raise DocumentError("%s: %s" % (section, exc), line) from None


def parse_space(text: str) -> SApproximationSpace:
    """Parse and validate a space document.

    Raises DocumentError with a line number for malformed syntax or a
    broken invariant, and CapacityError for universes above the size cap.
    """
    u: Optional[Universe] = None
    w: Optional[Universe] = None
    u_line = w_line = 0
    t_entries: List[Tuple[str, str, int]] = []
    s_kind: Optional[str] = None
    s_entries: List[Tuple[str, int]] = []
    section = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("U:"):
            if u is not None:
                raise DocumentError("duplicate U: section", lineno)
            u = _build_universe(_parse_labels(body[2:], lineno), "U", lineno)
            u_line = lineno
            section = None
        elif body.startswith("W:"):
            if w is not None:
                raise DocumentError("duplicate W: section", lineno)
            w = _build_universe(_parse_labels(body[2:], lineno), "W", lineno)
            w_line = lineno
            section = None
        elif body.startswith("T:"):
            if body[2:].strip():
                raise DocumentError("T: header takes no inline value", lineno)
            section = "T"
        elif body.startswith("S:"):
            s_kind = body[2:].strip()
            section = "S"
        elif section == "T":
            if ":" not in body:
                raise DocumentError("expected 'label: {subset}'", lineno)
            label, subset = body.split(":", 1)
            t_entries.append((label.strip(), subset.strip(), lineno))
        elif section == "S":
            s_entries.append((body, lineno))
        else:
            raise DocumentError("unexpected content outside a section", lineno)

    if u is None:
        raise DocumentError("missing U: section", 1)
    if w is None:
        raise DocumentError("missing W: section", 1)
    if s_kind is None:
        raise DocumentError("missing S: section", 1)

    t = _parse_t(u, w, t_entries, u_line)
    s = _parse_relation(w, s_kind, s_entries)
    return SApproximationSpace(u, w, t, s)


def _parse_t(u: Universe, w: Universe,
             entries: List[Tuple[str, str, int]], u_line: int) -> List[Mask]:
    values: Dict[int, Mask] = {}
    for label, subset_text, lineno in entries:
        try:
            idx = u.index_of(label)
        except KeyError:
            raise DocumentError("T entry for unknown point %r" % label,
                                lineno) from None
        if idx in values:
            raise DocumentError("duplicate T entry for %r" % label, lineno)
        mask = _parse_subset(subset_text, w, lineno)
        if mask.is_empty:
            raise DocumentError("T(%s) must be non-empty" % label, lineno)
        values[idx] = mask
    missing = [u.label_of(i) for i in range(u.size) if i not in values]
    if missing:
        raise DocumentError("T is missing entries for: %s"
                            % ", ".join(missing), u_line)
    return [values[i] for i in range(u.size)]


def _parse_relation(w: Universe, kind: str,
                    entries: List[Tuple[str, int]]) -> SRelation:
    n = w.size
    if kind in ("inclusion", "union_cover"):
        if entries:
            raise DocumentError("relation kind %r takes no entries" % kind,
                                entries[0][1])
        return Inclusion(n) if kind == "inclusion" else UnionCover(n)
    if kind == "atom_map":
        atom_of: Dict[int, int] = {}
        for body, lineno in entries:
            if ":" not in body:
                raise DocumentError("expected '{subset}: element'", lineno)
            subset_text, element = body.rsplit(":", 1)
            mask = _parse_subset(subset_text, w, lineno)
            if mask.is_empty:
                raise DocumentError("atom_map keys must be non-empty", lineno)
            element = element.strip()
            try:
                widx = w.index_of(element)
            except KeyError:
                raise DocumentError("unknown element %r" % element,
                                    lineno) from None
            if mask.bits in atom_of:
                raise DocumentError("duplicate atom_map entry for %s"
                                    % format_subset(w, mask), lineno)
            atom_of[mask.bits] = widx
        missing = [format_subset(w, Mask(b, n)) for b in range(1, 1 << n)
                   if b not in atom_of]
        if missing:
            raise DocumentError("atom_map is missing entries for: %s"
                                % ", ".join(missing), 1)
        return AtomMap(n, atom_of)
    if kind == "table":
        table: Dict[Tuple[int, int], int] = {}
        for body, lineno in entries:
            if ":" not in body:
                raise DocumentError("expected '{left} {right}: value'", lineno)
            pair_text, value_text = body.rsplit(":", 1)
            match = re.match(r"\s*(\{[^{}]*\})\s*(\{[^{}]*\})\s*\Z", pair_text)
            if not match:
                raise DocumentError("expected two subsets before ':'", lineno)
            left = _parse_subset(match.group(1), w, lineno)
            right = _parse_subset(match.group(2), w, lineno)
            if left.is_empty:
                raise DocumentError("table left subset must be non-empty",
                                    lineno)
            value_text = value_text.strip()
            if value_text not in ("0", "1"):
                raise DocumentError("table value must be 0 or 1", lineno)
            key = (left.bits, right.bits)
            if key in table:
                raise DocumentError("duplicate table entry", lineno)
            table[key] = int(value_text)
        try:
            return TruthTable(n, table)
        except ValueError as exc:
            raise DocumentError(str(exc), 1) from None
    raise DocumentError("unknown relation kind %r" % kind, 1)


def format_space(g: SApproximationSpace) -> str:
    """Render a space to the document format.

    Canonical form: sections in U, W, T, S order; T entries in point
    order; relation entries in ascending numeric mask order.  Parsing the
    result reproduces the space exactly.
    """
    lines = ["U: %s" % ", ".join(g.u.labels),
             "W: %s" % ", ".join(g.w.labels),
             "T:"]
    for i, mask in enumerate(g.t):
        lines.append("  %s: %s" % (g.u.label_of(i), format_subset(g.w, mask)))
    s = g.s
    lines.append("S: %s" % s.kind)
    if isinstance(s, AtomMap):
        for bits in range(1, 1 << s.width):
            lines.append("  %s: %s"
                         % (format_subset(g.w, Mask(bits, s.width)),
                            g.w.label_of(s.atom_of[bits])))
    elif isinstance(s, TruthTable):
        for (a, b), v in sorted(s.entries.items()):
            lines.append("  %s %s: %d"
                         % (format_subset(g.w, Mask(a, s.width)),
                            format_subset(g.w, Mask(b, s.width)), v))
    return "\n".join(lines) + "\n"
