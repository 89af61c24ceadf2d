import itertools
import pathlib
import random

import pytest

from sapprox import (AtomMap, CapacityError, DocumentError, Inclusion,
                     SApproximationSpace, TruthTable, UnionCover, Universe,
                     format_space, parse_space, space_from_assignment)

SPACES_DIR = pathlib.Path(__file__).resolve().parent.parent / "docs" / "spaces"


def load(name):
    return (SPACES_DIR / name).read_text()


def test_parse_union_cover_example_file():
    g = parse_space(load("one-point-union-cover.space"))
    assert g.u.labels == ("a",)
    assert g.w.labels == ("1", "2")
    assert g.t[0] == g.w.full()
    assert isinstance(g.s, UnionCover)
    assert g.verdicts() == {"s_min": True, "complement_closed": False,
                            "smc": False}


def test_parse_discrete_atom_map_file():
    g = parse_space(load("two-point-discrete.space"))
    assert isinstance(g.s, AtomMap)
    assert g.is_smc
    from sapprox import build_topology
    assert [o.bits for o in build_topology(g).opens] == [0b00, 0b01,
                                                         0b10, 0b11]


def test_parse_inclusion_table_file():
    g = parse_space(load("inclusion-table.space"))
    assert isinstance(g.s, TruthTable)
    assert not g.s.extended
    reference = Inclusion(2)
    for a in g.w.subsets(include_empty=False):
        for b in g.w.subsets(include_empty=False):
            assert g.s.evaluate(a, b) == reference.evaluate(a, b)


def test_round_trip_is_exact():
    rng = random.Random(5)
    samples = [parse_space(load(n)) for n in ("one-point-union-cover.space",
                                              "two-point-discrete.space",
                                              "inclusion-table.space")]
    for c in itertools.product(range(2), repeat=3):
        samples.append(space_from_assignment(3, 2, c))
    u = Universe(["p", "q", "r"])
    w = Universe(["x", "y"])
    for _ in range(10):
        t = [w.mask(rng.sample(["x", "y"], rng.randint(1, 2)))
             for _ in range(3)]
        samples.append(SApproximationSpace(u, w, t, Inclusion(2)))
    for g in samples:
        text = format_space(g)
        h = parse_space(text)
        assert h.u.labels == g.u.labels
        assert h.w.labels == g.w.labels
        assert h.t == g.t
        assert h.s.as_truth_table().entries == g.s.as_truth_table().entries
        assert format_space(h) == text


def expect_error(text, fragment, line=None):
    with pytest.raises(DocumentError) as info:
        parse_space(text)
    assert fragment in str(info.value)
    if line is not None:
        assert info.value.line == line


def test_missing_sections():
    expect_error("W: x\nT:\nS: inclusion\n", "missing U")
    expect_error("U: a\nT:\na: {x}\nS: inclusion\n", "missing W")
    expect_error("U: a\nW: x\nT:\n  a: {x}\n", "missing S")


def test_duplicate_section():
    expect_error("U: a\nU: b\nW: x\nT:\n  a: {x}\nS: inclusion\n",
                 "duplicate U", line=2)


def test_unknown_label_in_t():
    expect_error("U: a\nW: x\nT:\n  b: {x}\nS: inclusion\n",
                 "unknown point 'b'", line=4)
    expect_error("U: a\nW: x\nT:\n  a: {y}\nS: inclusion\n",
                 "'y' not in universe", line=4)


def test_t_entry_must_be_nonempty_and_total():
    expect_error("U: a\nW: x\nT:\n  a: {}\nS: inclusion\n",
                 "must be non-empty", line=4)
    expect_error("U: a, b\nW: x\nT:\n  a: {x}\nS: inclusion\n",
                 "missing entries for: b")


def test_atom_map_missing_entry_named():
    text = ("U: a\nW: w1, w2\nT:\n  a: {w1}\nS: atom_map\n"
            "  {w1}: w1\n  {w1,w2}: w2\n")
    expect_error(text, "missing entries for: {w2}")


def test_atom_map_bad_element():
    text = ("U: a\nW: w1\nT:\n  a: {w1}\nS: atom_map\n  {w1}: w9\n")
    expect_error(text, "unknown element 'w9'", line=6)


def test_table_validation():
    expect_error("U: a\nW: x\nT:\n  a: {x}\nS: table\n  {x} {x}: 2\n",
                 "value must be 0 or 1", line=6)
    expect_error("U: a\nW: x\nT:\n  a: {x}\nS: table\n"
                 "  {x} {x}: 1\n  {x} {x}: 0\n", "duplicate table entry",
                 line=7)


def test_unknown_relation_kind():
    expect_error("U: a\nW: x\nT:\n  a: {x}\nS: nonsense\n",
                 "unknown relation kind")


def test_content_outside_section():
    expect_error("stray\nU: a\nW: x\nT:\n  a: {x}\nS: inclusion\n",
                 "outside a section", line=1)


def test_comments_and_blank_lines_ignored():
    text = ("# heading\n\nU: a  # trailing\n\nW: x\nT:\n"
            "  a: {x}   # point a\nS: inclusion\n")
    g = parse_space(text)
    assert g.u.labels == ("a",)


def test_capacity_error_for_oversized_universe():
    labels = ", ".join("p%d" % i for i in range(21))
    text = "U: %s\nW: x\nT:\nS: inclusion\n" % labels
    with pytest.raises(CapacityError):
        parse_space(text)


def test_document_error_reports_line_in_str():
    err = DocumentError("boom", 7)
    assert "line 7" in str(err)
