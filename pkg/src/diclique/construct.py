"""Construction DSL for tournaments.

Expression nodes mirror the text grammar:

    TT(3)  C3  Delta(TT(1),C3,C3)  Arrow(a,b)  S(4)  STilde(3)  TP(6)
    Rot(7;1,2,4)  Subst(base; v0=expr,v1=expr,...)  Reverse(e)

Vertex labelling of composite nodes is deterministic: the parts of Delta,
Arrow and Subst are laid out left to right in argument order, recursively.
TT(k) is labelled in topological order and TP(n) keeps the labels of the
transitive tournament it is derived from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .core import Tournament, bit


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Expr:
    def size(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class TT(Expr):
    k: int

    def size(self) -> int:
        return self.k


@dataclass(frozen=True)
class C3(Expr):
    def size(self) -> int:
        return 3


@dataclass(frozen=True)
class Delta(Expr):
    a: Expr
    b: Expr
    c: Expr

    def size(self) -> int:
        return self.a.size() + self.b.size() + self.c.size()


@dataclass(frozen=True)
class Arrow(Expr):
    a: Expr
    b: Expr

    def size(self) -> int:
        return self.a.size() + self.b.size()


@dataclass(frozen=True)
class Subst(Expr):
    base: Expr
    mapping: tuple[tuple[int, Expr], ...]  # (base vertex, replacement)

    def size(self) -> int:
        return sum(e.size() for _, e in self.mapping)


@dataclass(frozen=True)
class Reverse(Expr):
    e: Expr

    def size(self) -> int:
        return self.e.size()


@dataclass(frozen=True)
class TP(Expr):
    n: int

    def size(self) -> int:
        return self.n


@dataclass(frozen=True)
class S(Expr):
    n: int

    def size(self) -> int:
        return 2**self.n - 1


@dataclass(frozen=True)
class STilde(Expr):
    n: int

    def size(self) -> int:
        return 3 ** (self.n - 1)


@dataclass(frozen=True)
class Rot(Expr):
    n: int
    offsets: tuple[int, ...]

    def size(self) -> int:
        return self.n


@dataclass(frozen=True)
class Raw(Expr):
    tournament: Tournament = field(compare=True)

    def size(self) -> int:
        return self.tournament.n


def subst_expr(base: Expr, mapping: Mapping[int, Expr]) -> Subst:
    return Subst(base, tuple(sorted(mapping.items())))


def _concat(parts: list[Tournament]) -> tuple[int, list[int], list[int]]:
    """Lay parts out left to right; returns (n, rows, block offsets)."""
    offsets = []
    n = 0
    for p in parts:
        offsets.append(n)
        n += p.n
    rows = [0] * n
    for off, p in zip(offsets, parts):
        for u in range(p.n):
            rows[off + u] = p.out[u] << off
    return n, rows, offsets


def _all_arcs(rows: list[int], src_off: int, src_n: int, dst_off: int, dst_n: int):
    dst_mask = ((1 << dst_n) - 1) << dst_off
    for u in range(src_off, src_off + src_n):
        rows[u] |= dst_mask


def build(expr: Expr) -> Tournament:
    """Evaluate a construction expression to a concrete tournament."""
    if isinstance(expr, TT):
        if expr.k < 1:
            raise ConstructionError("TT needs at least one vertex")
        k = expr.k
        return Tournament(
            k, [(((1 << k) - 1) >> (u + 1)) << (u + 1) for u in range(k)], validate=False
        )
    if isinstance(expr, C3):
        return Tournament(3, [0b010, 0b100, 0b001], validate=False)
    if isinstance(expr, Delta):
        pa, pb, pc = build(expr.a), build(expr.b), build(expr.c)
        n, rows, offs = _concat([pa, pb, pc])
        _all_arcs(rows, offs[0], pa.n, offs[1], pb.n)
        _all_arcs(rows, offs[1], pb.n, offs[2], pc.n)
        _all_arcs(rows, offs[2], pc.n, offs[0], pa.n)
        return Tournament(n, rows, validate=False)
    if isinstance(expr, Arrow):
        pa, pb = build(expr.a), build(expr.b)
        n, rows, offs = _concat([pa, pb])
        _all_arcs(rows, offs[0], pa.n, offs[1], pb.n)
        return Tournament(n, rows, validate=False)
    if isinstance(expr, Subst):
        base = build(expr.base)
        blocks = dict(expr.mapping)
        missing = [v for v in range(base.n) if v not in blocks]
        if missing:
            raise ConstructionError(f"Subst map misses base vertices {missing}")
        extra = [v for v in blocks if not 0 <= v < base.n]
        if extra:
            raise ConstructionError(f"Subst map has unknown base vertices {extra}")
        parts = [build(blocks[v]) for v in range(base.n)]
        n, rows, offs = _concat(parts)
        for u in range(base.n):
            for v in range(base.n):
                if u != v and base.has_arc(u, v):
                    _all_arcs(rows, offs[u], parts[u].n, offs[v], parts[v].n)
        return Tournament(n, rows, validate=False)
    if isinstance(expr, Reverse):
        t = build(expr.e)
        rows = [0] * t.n
        for u in range(t.n):
            for v in range(t.n):
                if u != v and t.has_arc(v, u):
                    rows[u] |= bit(v)
        return Tournament(t.n, rows, validate=False)
    if isinstance(expr, TP):
        if expr.n < 1:
            raise ConstructionError("TP needs at least one vertex")
        n = expr.n
        rows = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if v == u + 1:
                    rows[v] |= bit(u)  # Hamiltonian path arc reversed
                else:
                    rows[u] |= bit(v)
        return Tournament(n, rows, validate=False)
    if isinstance(expr, S):
        if expr.n < 1:
            raise ConstructionError("S needs index >= 1")
        if expr.n == 1:
            return build(TT(1))
        return build(Delta(TT(1), S(expr.n - 1), S(expr.n - 1)))
    if isinstance(expr, STilde):
        if expr.n < 1:
            raise ConstructionError("STilde needs index >= 1")
        if expr.n == 1:
            return build(TT(1))
        prev = STilde(expr.n - 1)
        return build(Delta(prev, prev, prev))
    if isinstance(expr, Rot):
        n, offsets = expr.n, set(expr.offsets)
        if any(not 1 <= d <= n - 1 for d in offsets):
            raise ConstructionError("rotational offsets must lie in 1..n-1")
        for d in range(1, n):
            if (d in offsets) == (n - d in offsets):
                raise ConstructionError(
                    f"offset set must contain exactly one of {d} and {n - d}"
                )
        rows = [0] * n
        for u in range(n):
            for d in offsets:
                rows[u] |= bit((u + d) % n)
        return Tournament(n, rows, validate=False)
    if isinstance(expr, Raw):
        return expr.tournament
    raise ConstructionError(f"unknown expression node {expr!r}")


# ---------------------------------------------------------------------------
# text parser


class DslParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, message: str):
        raise DslParseError(message, self.i)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.i >= len(self.text) or self.text[self.i] != ch:
            self.error(f"expected '{ch}'")
        self.i += 1

    def word(self) -> str:
        self.skip_ws()
        j = self.i
        while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
            j += 1
        w = self.text[self.i : j]
        if not w:
            self.error("expected a name")
        self.i = j
        return w

    def integer(self) -> int:
        self.skip_ws()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            self.error("expected an integer")
        value = int(self.text[self.i : j])
        self.i = j
        return value

    def expr(self) -> Expr:
        name = self.word()
        if name == "C3":
            return C3()
        if name == "TT":
            self.expect("(")
            k = self.integer()
            self.expect(")")
            return TT(k)
        if name in ("TP", "S", "STilde"):
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return {"TP": TP, "S": S, "STilde": STilde}[name](n)
        if name == "Delta":
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(",")
            c = self.expr()
            self.expect(")")
            return Delta(a, b, c)
        if name == "Arrow":
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return Arrow(a, b)
        if name == "Reverse":
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return Reverse(e)
        if name == "Rot":
            self.expect("(")
            n = self.integer()
            self.expect(";")
            offsets = [self.integer()]
            while self.peek() == ",":
                self.expect(",")
                offsets.append(self.integer())
            self.expect(")")
            return Rot(n, tuple(offsets))
        if name == "Subst":
            self.expect("(")
            base = self.expr()
            self.expect(";")
            mapping: dict[int, Expr] = {}
            while True:
                key = self.word()
                if not key.startswith("v") or not key[1:].isdigit():
                    self.error("Subst keys look like v0, v1, ...")
                v = int(key[1:])
                if v in mapping:
                    self.error(f"duplicate Subst key v{v}")
                self.expect("=")
                mapping[v] = self.expr()
                if self.peek() != ",":
                    break
                self.expect(",")
            self.expect(")")
            return subst_expr(base, mapping)
        self.error(f"unknown construction '{name}'")
        raise AssertionError  # unreachable

    def parse(self) -> Expr:
        e = self.expr()
        self.skip_ws()
        if self.i != len(self.text):
            self.error("trailing input after expression")
        return e


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def format_expr(expr: Expr) -> str:
    if isinstance(expr, TT):
        return f"TT({expr.k})"
    if isinstance(expr, C3):
        return "C3"
    if isinstance(expr, Delta):
        return f"Delta({format_expr(expr.a)},{format_expr(expr.b)},{format_expr(expr.c)})"
    if isinstance(expr, Arrow):
        return f"Arrow({format_expr(expr.a)},{format_expr(expr.b)})"
    if isinstance(expr, Subst):
        inner = ",".join(f"v{v}={format_expr(e)}" for v, e in expr.mapping)
        return f"Subst({format_expr(expr.base)};{inner})"
    if isinstance(expr, Reverse):
        return f"Reverse({format_expr(expr.e)})"
    if isinstance(expr, TP):
        return f"TP({expr.n})"
    if isinstance(expr, S):
        return f"S({expr.n})"
    if isinstance(expr, STilde):
        return f"STilde({expr.n})"
    if isinstance(expr, Rot):
        return f"Rot({expr.n};{','.join(map(str, expr.offsets))})"
    if isinstance(expr, Raw):
        return f"Raw(n={expr.tournament.n})"
    raise ConstructionError(f"unknown expression node {expr!r}")
