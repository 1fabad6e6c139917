import pytest

from diclique.codec import (
    FormatError,
    backedge_to_dot,
    dump,
    load,
    parse_digraph,
    parse_tournament,
    serialize_digraph,
    serialize_tournament,
    to_dot,
)
from diclique.core import Digraph, Ordering, Tournament, backedge_graph
from diclique.construct import TT, C3, build
from diclique.search import all_tournaments


def test_parse_tournament_examples():
    assert parse_tournament("3\n111\n") == build(TT(3))
    t = parse_tournament("3\n110\n")
    assert sorted(t.arcs()) == [(0, 1), (0, 2), (2, 1)]
    assert parse_tournament("1\n") == Tournament(1, [0])
    assert parse_tournament("3\n111") == build(TT(3))  # trailing newline optional


def test_parse_tournament_errors():
    with pytest.raises(FormatError):
        parse_tournament("")
    with pytest.raises(FormatError):
        parse_tournament("x\n111\n")
    with pytest.raises(FormatError):
        parse_tournament("3\n11\n")
    with pytest.raises(FormatError):
        parse_tournament("3\n1a1\n")
    with pytest.raises(FormatError):
        parse_tournament("0\n\n")
    with pytest.raises(FormatError):
        parse_tournament("3\n111\nextra\n")


def test_parse_digraph():
    d = parse_digraph("3\n010\n000\n000\n")
    assert d.arcs() == [(0, 1)]
    assert parse_digraph(serialize_digraph(d)) == d
    with pytest.raises(FormatError):
        parse_digraph("2\n01\n10\n")  # anti-parallel
    with pytest.raises(FormatError):
        parse_digraph("2\n10\n00\n")  # loop
    with pytest.raises(FormatError):
        parse_digraph("2\n010\n000\n")  # row length


def test_round_trip_all_seven_vertex_classes():
    for t in all_tournaments(7):
        assert parse_tournament(serialize_tournament(t)) == t


def test_file_io(tmp_path):
    t = build(C3())
    path = tmp_path / "c3.trn"
    dump(t, str(path))
    assert load(str(path)) == t
    d = Digraph.from_arcs(3, [(0, 1), (1, 2)])
    dpath = tmp_path / "d.dgr"
    dump(d, str(dpath))
    assert load(str(dpath)) == d
    with pytest.raises(FormatError):
        load(str(tmp_path / "c3.unknown"))


def test_dot_export():
    t = build(C3())
    plain = to_dot(t)
    assert "digraph" in plain and "v0 -> v1" in plain
    o = Ordering([0, 1, 2])
    fancy = to_dot(t, o)
    assert "color=red" in fancy and "style=invis" in fancy
    backward = [line for line in fancy.splitlines() if "color=red" in line]
    assert backward == ["  v2 -> v0 [color=red, style=dashed, constraint=false];"]
    bg = backedge_graph(t, o)
    dot = backedge_to_dot(bg)
    assert "graph" in dot and "v0 -- v2" in dot
