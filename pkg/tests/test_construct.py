import pytest

from diclique.construct import (
    TT,
    Arrow,
    C3,
    ConstructionError,
    Delta,
    DslParseError,
    Raw,
    Reverse,
    Rot,
    S,
    STilde,
    Subst,
    TP,
    build,
    format_expr,
    parse_expr,
    subst_expr,
)
from diclique.core import Tournament, is_acyclic, mask_of, transitive_subset


def test_tt_layout():
    assert build(TT(3)).arcs() == [(0, 1), (0, 2), (1, 2)]
    assert build(TT(1)).n == 1
    with pytest.raises(ConstructionError):
        build(TT(0))


def test_directed_triangle():
    c3 = build(C3())
    assert sorted(c3.arcs()) == [(0, 1), (1, 2), (2, 0)]
    assert build(Delta(TT(1), TT(1), TT(1))) == c3


def test_s_family():
    s3 = build(S(3))
    assert s3.n == 7
    assert s3 == build(Delta(TT(1), C3(), C3()))
    assert build(S(1)).n == 1
    for k in range(1, 6):
        assert build(S(k)).n == 2**k - 1


def test_stilde_family():
    st3 = build(STilde(3))
    assert st3.n == 9
    for part in (range(0, 3), range(3, 6), range(6, 9)):
        sub = st3.induced(list(part))
        assert sorted(sub.arcs()) == [(0, 1), (1, 2), (2, 0)]
    for k in range(1, 5):
        assert build(STilde(k)).n == 3 ** (k - 1)


def test_delta_cyclic_pattern():
    t = build(Delta(TT(1), TT(2), C3()))
    a, b, c = [0], [1, 2], [3, 4, 5]
    assert all(t.has_arc(u, v) for u in a for v in b)
    assert all(t.has_arc(u, v) for u in b for v in c)
    assert all(t.has_arc(u, v) for u in c for v in a)


def test_arrow():
    t = build(Arrow(C3(), C3()))
    assert all(t.has_arc(u, v) for u in range(3) for v in range(3, 6))


def test_tp():
    tp5 = build(TP(5))
    # consecutive path arcs are reversed, everything else goes forward
    for u in range(5):
        for v in range(u + 1, 5):
            if v == u + 1:
                assert tp5.has_arc(v, u)
            else:
                assert tp5.has_arc(u, v)
    assert build(TP(1)).n == 1


def test_rotational():
    p7 = build(Rot(7, (1, 2, 4)))
    assert all(p7.has_arc(u, (u + d) % 7) for u in range(7) for d in (1, 2, 4))
    assert build(Rot(7, (1, 2, 3))).n == 7  # valid non-Paley offsets
    with pytest.raises(ConstructionError):
        build(Rot(7, (1, 2, 6)))  # both 1 and 6 present
    with pytest.raises(ConstructionError):
        build(Rot(7, (1, 2)))  # pair {3, 4} not covered
    with pytest.raises(ConstructionError):
        build(Rot(6, (1, 2, 3)))  # even order always fails antisymmetry
    with pytest.raises(ConstructionError):
        build(Rot(5, (0, 1)))


def test_subst():
    # substituting singletons is the identity
    base = build(C3())
    expr = subst_expr(C3(), {0: TT(1), 1: TT(1), 2: TT(1)})
    assert build(expr) == base
    expr = subst_expr(C3(), {0: TT(1), 1: C3(), 2: C3()})
    assert build(expr) == build(S(3))
    with pytest.raises(ConstructionError):
        build(subst_expr(C3(), {0: TT(1), 1: TT(1)}))  # vertex 2 missing
    with pytest.raises(ConstructionError):
        build(subst_expr(C3(), {0: TT(1), 1: TT(1), 2: TT(1), 5: TT(1)}))


def test_reverse_and_raw():
    c3 = build(C3())
    assert build(Reverse(C3())) == Tournament.from_arcs(3, [(1, 0), (2, 1), (0, 2)])
    assert build(Raw(c3)) == c3
    assert is_acyclic(build(Reverse(TT(4))))


def test_parser_round_trips():
    for text in [
        "TT(3)",
        "C3",
        "Delta(TT(1),C3,C3)",
        "Arrow(C3,TT(2))",
        "S(4)",
        "STilde(3)",
        "TP(6)",
        "Rot(7;1,2,4)",
        "Subst(C3;v0=TT(1),v1=C3,v2=C3)",
        "Reverse(TP(4))",
    ]:
        expr = parse_expr(text)
        assert format_expr(expr) == text
        assert parse_expr(format_expr(expr)) == expr
        build(expr)
    assert parse_expr(" Delta( TT(1) , C3 , C3 ) ") == parse_expr("Delta(TT(1),C3,C3)")


def test_parser_errors_carry_position():
    with pytest.raises(DslParseError) as err:
        parse_expr("Delta(TT(1),C3")
    assert err.value.position == 14
    with pytest.raises(DslParseError):
        parse_expr("Nope(3)")
    with pytest.raises(DslParseError):
        parse_expr("TT(3) junk")
    with pytest.raises(DslParseError):
        parse_expr("Subst(C3;x0=TT(1))")


def test_layout_is_deterministic():
    a = build(parse_expr("Delta(TT(2),C3,TT(1))"))
    b = build(parse_expr("Delta(TT(2),C3,TT(1))"))
    assert a == b


def test_transitive_parts_are_transitive():
    t = build(Delta(TT(1), TT(3), C3()))
    assert transitive_subset(t, mask_of([1, 2, 3]))
