"""S-expression language for ideal arithmetic.

    expr := S | N | {a, b, ...}
          | (shift expr k) | (sum expr expr) | (prod expr expr)
          | (colon expr expr) | (cap expr expr) | (v expr)
          | (star NAME expr)

``NAME`` is ``d``, ``v``, ``t`` (equal to ``v``: every ideal is finitely
generated), ``w`` (stable closure of ``v``) or ``#k``, the ``k``-th
operation in enumeration order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from . import ideal as I
from . import star as St
from .enumeration import enumerate_stars
from .errors import ParseError, UnknownStar
from .semigroup import NumericalSemigroup

_TOKENS = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>#?\w+)|(?P<punct>[(){},]))")

BINARY = {"sum": I.ideal_sum, "prod": I.product, "colon": I.colon, "cap": I.intersect}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKENS.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self, kind=None, text=None) -> Token:
        tok = self.toks[self.i]
        if (kind and tok.kind != kind) or (text and tok.text != text):
            want = text or kind
            got = tok.text or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", tok.pos)
        self.i += 1
        return tok

    def expr(self):
        tok = self.peek()
        if tok.kind == "name" and tok.text in ("S", "N"):
            self.i += 1
            return (tok.text,)
        if tok.text == "{":
            self.i += 1
            nums = [int(self.take("int").text)]
            while self.peek().text == ",":
                self.i += 1
                nums.append(int(self.take("int").text))
            self.take(text="}")
            return ("set", tuple(nums))
        if tok.text == "(":
            self.i += 1
            head = self.take("name")
            if head.text == "shift":
                node = ("shift", self.expr(), int(self.take("int").text))
            elif head.text in BINARY:
                node = (head.text, self.expr(), self.expr())
            elif head.text == "v":
                node = ("v", self.expr())
            elif head.text == "star":
                name = self.take("name")
                node = ("star", name.text, self.expr(), name.pos)
            else:
                raise ParseError(f"unknown operator {head.text!r}", head.pos)
            self.take(text=")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse(text: str):
    p = _Parser(text)
    node = p.expr()
    p.take("end")
    return node


def resolve_star(S: NumericalSemigroup, name: str) -> St.StarOp:
    if name == "d":
        return St.builtin_d(S)
    if name in ("v", "t"):
        return St.builtin_v(S)
    if name == "w":
        return St.stable_closure(St.builtin_v(S))
    if name.startswith("#") and name[1:].isdigit():
        ops = enumerate_stars(S)
        k = int(name[1:])
        if k < len(ops):
            return ops[k]
        raise UnknownStar(f"{name}: only {len(ops)} operations on {S}")
    raise UnknownStar(f"unknown star operation {name!r}")


def evaluate(S: NumericalSemigroup, node) -> I.FracIdeal:
    head = node[0]
    if head == "S":
        return I.principal(S)
    if head == "N":
        return I.naturals(S)
    if head == "set":
        return I.normalize(S, node[1])
    if head == "shift":
        return evaluate(S, node[1]).shift(node[2])
    if head in BINARY:
        return BINARY[head](evaluate(S, node[1]), evaluate(S, node[2]))
    if head == "v":
        return I.dual_v(evaluate(S, node[1]))
    if head == "star":
        return St.apply(resolve_star(S, node[1]), evaluate(S, node[2]))
    raise AssertionError(head)


def eval_text(S: NumericalSemigroup, text: str) -> I.FracIdeal:
    return evaluate(S, parse(text))
