import pytest

from planar_dicolor.digraph import uniform_lists
from planar_dicolor.errors import FormatError
from planar_dicolor.gen import GenSpec, dicycle, golden, random_planar_digraph
from planar_dicolor.pdg import (
    format_coloring,
    format_lists,
    format_pdg,
    parse_coloring,
    parse_lists,
    parse_pdg,
    read_pdg,
    write_pdg,
)

TRIANGLE = """pdg 1
# a directed triangle
v 0 1 2
v 1 2 0
v 2 0 1
a 0 1
a 1 2
a 2 0
"""


def test_parse_triangle():
    emb, D = parse_pdg(TRIANGLE)
    assert emb.num_edges == 3 and D.has_arc(2, 0)


def test_arcs_optional():
    emb, D = parse_pdg("\n".join(TRIANGLE.splitlines()[:5]))
    assert D is None and len(emb.faces) == 2


def test_roundtrip_is_canonical(tmp_path):
    D = random_planar_digraph(GenSpec(n=14, min_degree=4, digirth_min=5, seed=3))
    text = format_pdg(D)
    emb2, D2 = parse_pdg(text)
    assert D2 == D and emb2 == D.embedding and format_pdg(D2) == text
    path = tmp_path / "g.pdg"
    write_pdg(D, path)
    assert read_pdg(path)[1] == D
    assert format_pdg(golden("cube")).count("\na ") == 0


def test_string_identifiers():
    emb, _ = parse_pdg("pdg 1\nv a b c\nv b c a\nv c a b\n")
    assert emb.vertices == ("a", "b", "c")


@pytest.mark.parametrize(
    "text, message",
    [
        ("v 0 1\nv 1 0\n", "header"),
        ("pdg 1\nv 0 1\nv 1 0\nx 0 1\n", "unknown statement"),
        ("pdg 1\nv 0 1\n", "undeclared"),
        ("pdg 1\nv 0 1\nv 1 0\na 0 1\na 0 1\n", "already oriented"),
        ("pdg 1\nv 0 1\nv 1 0\na 0 1\na 1 0\n", "already oriented"),
        ("pdg 1\nv 0 1 2\nv 1 2 0\nv 2 0 1\na 0 1\n", "no orientation"),
        ("pdg 1\nv 0 1\nv 1 0\nv 2\n", "disconnected"),
        ("pdg 1\nv 0 1\nv 1 0\nv 0 1\n", "twice"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse_pdg(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(FormatError, match="cannot read"):
        read_pdg(tmp_path / "absent.pdg")


def test_lists_roundtrip_and_errors():
    D = dicycle(5)
    L = uniform_lists(D, (1, 2))
    assert parse_lists(format_lists(L), D) == L
    with pytest.raises(FormatError, match="unknown vertex"):
        parse_lists("l 9 1 2\n", D)
    with pytest.raises(FormatError, match="no list"):
        parse_lists("l 0 1 2\n", D)
    with pytest.raises(FormatError, match="expected"):
        parse_lists("l 0\n", D)


def test_coloring_lines():
    D = dicycle(5)
    phi = {0: 1, 1: 2, 2: 1, 3: 1, 4: 2}
    lines = format_coloring(phi)
    assert lines[0] == "c 0 1"
    assert parse_coloring(lines, D) == phi
