"""A small expression language for subsets of N.

Grammar (whitespace-insensitive)::

    expr  := inter ("|" inter)*
    inter := term ("&" term)*
    term  := atom ("+" NAT)*
    atom  := "{" [NAT ("," NAT)*] "}"
           | "up(" BITS ";" NAT ";" [NAT ("," NAT)*] ")"
           | "evens" | "odds" | "nat"
           | "diff(" expr ")"
           | "shift(" expr ";" NAT ("," NAT)* ")"
           | "(" expr ")"

"&" binds tighter than "|"; both associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from fembed import setrep
from fembed.setrep import GroundSet


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Literal:
    elements: tuple[int, ...]


@dataclass(frozen=True)
class UP:
    bits: str
    period: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"malformed preperiod bits {self.bits!r}")
        bad = [r for r in self.residues if r >= self.period]
        if bad:
            raise ValueError(f"residue {bad[0]} >= period {self.period}")


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Translate:
    expr: "SetExpr"
    k: int


@dataclass(frozen=True)
class Union_:
    left: "SetExpr"
    right: "SetExpr"


@dataclass(frozen=True)
class Intersect:
    left: "SetExpr"
    right: "SetExpr"


@dataclass(frozen=True)
class ShiftIntersect:
    expr: "SetExpr"
    shifts: tuple[int, ...]


@dataclass(frozen=True)
class DiffSet:
    expr: "SetExpr"


SetExpr = Union[Literal, UP, Named, Translate, Union_, Intersect, ShiftIntersect, DiffSet]

NAMES = {"evens": setrep.EVENS, "odds": setrep.ODDS, "nat": setrep.NAT}

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<word>[A-Za-z_]+)|(?P<punct>[{}(),;|&+]))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = self._lex(text)
        self.i = 0

    def _where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.peek().pos
        return ParseError(message, *self._where(pos))

    def _lex(self, text: str) -> list[_Tok]:
        toks, pos = [], 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m:
                rest = len(text) - len(text[pos:].lstrip())
                if rest == len(text):
                    break
                raise ParseError(f"unexpected character {text[rest]!r}", *self._where(rest))
            kind = m.lastgroup
            toks.append(_Tok(kind, m.group(kind), m.start(kind)))
            pos = m.end()
        toks.append(_Tok("end", "", len(text)))
        return toks

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.peek().text == text and self.peek().kind != "end":
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text or tok.kind == "end":
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        return self.take()

    def nat(self) -> int:
        tok = self.peek()
        if tok.kind != "nat":
            raise self.error("expected a natural number")
        self.take()
        return int(tok.text)

    def nat_list(self, allow_empty: bool) -> tuple[int, ...]:
        if allow_empty and self.peek().kind != "nat":
            return ()
        out = [self.nat()]
        while self.accept(","):
            out.append(self.nat())
        return tuple(out)

    def parse(self) -> SetExpr:
        e = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return e

    def expr(self) -> SetExpr:
        e = self.inter()
        while self.accept("|"):
            e = Union_(e, self.inter())
        return e

    def inter(self) -> SetExpr:
        e = self.term()
        while self.accept("&"):
            e = Intersect(e, self.term())
        return e

    def term(self) -> SetExpr:
        e = self.atom()
        while self.accept("+"):
            e = Translate(e, self.nat())
        return e

    def atom(self) -> SetExpr:
        tok = self.peek()
        if self.accept("{"):
            els = self.nat_list(allow_empty=True)
            self.expect("}")
            return Literal(els)
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind != "word":
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise self.error(f"expected a set, found {found}")
        self.take()
        if tok.text in NAMES:
            return Named(tok.text)
        if tok.text == "up":
            return self.up_body()
        if tok.text == "diff":
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return DiffSet(e)
        if tok.text == "shift":
            self.expect("(")
            e = self.expr()
            self.expect(";")
            g = self.nat_list(allow_empty=False)
            self.expect(")")
            return ShiftIntersect(e, g)
        raise self.error(f"unknown name {tok.text!r}", tok.pos)

    def up_body(self) -> UP:
        self.expect("(")
        bits = ""
        if self.peek().kind == "nat":
            tok = self.take()
            if set(tok.text) - {"0", "1"}:
                raise self.error(f"malformed preperiod bits {tok.text!r}", tok.pos)
            bits = tok.text
        self.expect(";")
        period_tok = self.peek()
        period = self.nat()
        if period < 1:
            raise self.error("period must be >= 1", period_tok.pos)
        self.expect(";")
        res_start = self.peek().pos
        residues = self.nat_list(allow_empty=True)
        bad = [r for r in residues if r >= period]
        if bad:
            raise self.error(f"residue {bad[0]} >= period {period}", res_start)
        self.expect(")")
        return UP(bits, period, residues)


def parse(text: str) -> SetExpr:
    """Parse a set expression, raising :class:`ParseError` with line and column."""
    return _Parser(text).parse()


_PREC = {Union_: 1, Intersect: 2, Translate: 3}


def _prec(e: SetExpr) -> int:
    return _PREC.get(type(e), 4)


def to_text(e: SetExpr) -> str:
    """Print an expression so that ``parse(to_text(e)) == e``."""

    def wrap(sub: SetExpr, minimum: int) -> str:
        text = to_text(sub)
        return f"({text})" if _prec(sub) < minimum else text

    if isinstance(e, Literal):
        return "{" + ",".join(map(str, e.elements)) + "}"
    if isinstance(e, UP):
        return f"up({e.bits};{e.period};{','.join(map(str, e.residues))})"
    if isinstance(e, Named):
        return e.name
    if isinstance(e, Translate):
        return f"{wrap(e.expr, 3)} + {e.k}"
    if isinstance(e, Union_):
        return f"{wrap(e.left, 1)} | {wrap(e.right, 2)}"
    if isinstance(e, Intersect):
        return f"{wrap(e.left, 2)} & {wrap(e.right, 3)}"
    if isinstance(e, ShiftIntersect):
        return f"shift({to_text(e.expr)}; {','.join(map(str, e.shifts))})"
    if isinstance(e, DiffSet):
        return f"diff({to_text(e.expr)})"
    raise TypeError(f"not a set expression: {e!r}")


def evaluate(e: SetExpr, horizon: int = 10_000) -> GroundSet:
    """Evaluate to a canonical exact set; ``horizon`` bounds work on sampled operands."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if isinstance(e, Literal):
        return setrep.FiniteSet.of(e.elements)
    if isinstance(e, UP):
        return setrep.up(e.period, e.residues, e.bits)
    if isinstance(e, Named):
        return NAMES[e.name]
    if isinstance(e, Translate):
        return setrep.translate(evaluate(e.expr, horizon), e.k)
    if isinstance(e, Union_):
        return setrep.union(evaluate(e.left, horizon), evaluate(e.right, horizon))
    if isinstance(e, Intersect):
        return setrep.intersect(evaluate(e.left, horizon), evaluate(e.right, horizon))
    if isinstance(e, ShiftIntersect):
        return setrep.shift_down_intersect(evaluate(e.expr, horizon), e.shifts)
    if isinstance(e, DiffSet):
        return setrep.difference_set(evaluate(e.expr, horizon), horizon)
    raise TypeError(f"not a set expression: {e!r}")


def parse_set(text: str, horizon: int = 10_000) -> GroundSet:
    return evaluate(parse(text), horizon)
