"""Propositional formulas: trees, canonical printing and a small parser.

Text syntax: primitives ``P0``, ``P1``, ... plus any other identifier (``V``,
``c``, base names such as ``b``); connectives ``!``, ``&``, ``|``, ``->``,
``<->``.  ``!`` binds tightest, then ``&``, ``|``, ``->``, ``<->``; binary
connectives associate to the right.  Output is fully parenthesized, so
``parse(str(f)) == f`` always holds.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from ..errors import FormulaSyntaxError

AND, OR, IMPLIES, IFF = "&", "|", "->", "<->"
BINARY = (AND, OR, IMPLIES, IFF)
# loosest first
PRECEDENCE = (IFF, IMPLIES, OR, AND)

_PRIMITIVE = re.compile(r"P(\d+)\Z")
_TOKEN = re.compile(r"\s*(?:(<->|->|[!&|()])|([A-Za-z_][A-Za-z0-9_]*))")


class Formula:
    __slots__ = ()

    def __str__(self):
        raise NotImplementedError

    def __lt__(self, other):
        return (self.length(), str(self)) < (other.length(), str(other))

    def length(self) -> int:
        """Number of symbols, parentheses not counted."""
        raise NotImplementedError

    def subformulas(self) -> Iterator["Formula"]:
        raise NotImplementedError

    def atoms(self) -> frozenset["Atom"]:
        return frozenset(f for f in self.subformulas() if isinstance(f, Atom))

    def primitive_indices(self) -> frozenset[int]:
        return frozenset(a.index for a in self.atoms() if a.index is not None)

    def evaluate(self, valuation: Mapping[str, bool]) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", self.name):
            raise FormulaSyntaxError(f"bad atom name {self.name!r}")

    @property
    def index(self) -> int | None:
        m = _PRIMITIVE.match(self.name)
        return int(m.group(1)) if m else None

    def __str__(self):
        return self.name

    def length(self):
        return 1

    def subformulas(self):
        yield self

    def evaluate(self, valuation):
        return valuation[self.name]


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula

    def __str__(self):
        return f"!{self.arg}"

    def length(self):
        return 1 + self.arg.length()

    def subformulas(self):
        yield self
        yield from self.arg.subformulas()

    def evaluate(self, valuation):
        return not self.arg.evaluate(valuation)


@dataclass(frozen=True)
class Bin(Formula):
    op: str
    left: Formula
    right: Formula

    def __post_init__(self):
        if self.op not in BINARY:
            raise FormulaSyntaxError(f"unknown connective {self.op!r}")

    def __str__(self):
        return f"({self.left}{self.op}{self.right})"

    def length(self):
        return self.left.length() + 1 + self.right.length()

    def subformulas(self):
        yield self
        yield from self.left.subformulas()
        yield from self.right.subformulas()

    def evaluate(self, valuation):
        a = self.left.evaluate(valuation)
        b = self.right.evaluate(valuation)
        if self.op == AND:
            return a and b
        if self.op == OR:
            return a or b
        if self.op == IMPLIES:
            return (not a) or b
        return a == b


def P(i: int) -> Atom:
    return Atom(f"P{i}")


def conj(a: Formula, b: Formula) -> Bin:
    return Bin(AND, a, b)


def disj(a: Formula, b: Formula) -> Bin:
    return Bin(OR, a, b)


def imp(a: Formula, b: Formula) -> Bin:
    return Bin(IMPLIES, a, b)


def iff(a: Formula, b: Formula) -> Bin:
    return Bin(IFF, a, b)


def is_implication(f: Formula) -> bool:
    return isinstance(f, Bin) and f.op == IMPLIES


# ---------------------------------------------------------------- parsing


def tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise FormulaSyntaxError(f"expected {expected or 'a token'}, got {tok!r}")
        self.pos += 1
        return tok

    def binary(self, level: int) -> Formula:
        if level == len(PRECEDENCE):
            return self.unary()
        op = PRECEDENCE[level]
        left = self.binary(level + 1)
        if self.peek() == op:
            self.take()
            return Bin(op, left, self.binary(level))
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            inner = self.binary(0)
            self.take(")")
            return inner
        if tok is None or tok in BINARY or tok in "()!":
            raise FormulaSyntaxError(f"unexpected token {tok!r}")
        self.take()
        return Atom(tok)


def parse(text: str) -> Formula:
    tokens = tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("empty formula")
    parser = _Parser(tokens)
    f = parser.binary(0)
    if parser.peek() is not None:
        raise FormulaSyntaxError(f"trailing input from token {parser.peek()!r}")
    return f


def as_formula(x) -> Formula:
    return x if isinstance(x, Formula) else parse(x)
