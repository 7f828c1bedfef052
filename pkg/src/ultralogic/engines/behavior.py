"""Behavior-pattern words: ``very,|||`` prefixes over a finite base.

Covers generation of the truncated languages, adjective reasoning (drop one
or more ``very,`` prefixes), the trivial perfect-closure ``Π_W`` and the
better-than comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..words import BLANK
from .formula import Atom, Formula, conj

VERY = "very,"
PERFECT = "perfect"
V = Atom("V")


@dataclass(frozen=True)
class BPWord:
    very_count: int
    base: str

    def __post_init__(self):
        if self.very_count < 0:
            raise ValueError("very_count must be >= 0")
        if not self.base or self.base.startswith(VERY) or self.base == PERFECT:
            raise ValueError(f"bad base {self.base!r}")

    def word(self, blank: str = BLANK) -> str:
        return (VERY + blank) * self.very_count + self.base

    def __str__(self):
        return self.word()

    @classmethod
    def parse(cls, text: str, blank: str = BLANK) -> "BPWord":
        prefix = VERY + blank
        n = 0
        while text.startswith(prefix):
            text = text[len(prefix):]
            n += 1
        return cls(n, text)

    def as_formula(self) -> Formula:
        f: Formula = Atom(self.base)
        for _ in range(self.very_count):
            f = conj(V, f)
        return f

    def reductions(self) -> frozenset["BPWord"]:
        """Every word obtained by removing a nonzero number of prefixes."""
        return frozenset(BPWord(k, self.base) for k in range(self.very_count))


def sort_key(x):
    if isinstance(x, BPWord):
        return (0, x.base, x.very_count)
    return (1, str(x), 0)


def generate_bp(base: Iterable[str], depth: int) -> frozenset[BPWord]:
    base = tuple(base)
    if not base:
        raise ValueError("base must be nonempty")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    return frozenset(BPWord(n, b) for b in base for n in range(depth + 1))


def bpc_bar(base: Iterable[str], depth: int) -> frozenset:
    """Truncated behavior patterns together with the constant ``perfect``."""
    return generate_bp(base, depth) | {PERFECT}


def coerce(x):
    if isinstance(x, BPWord) or x == PERFECT:
        return x
    return BPWord.parse(x)


def adjective_close(B: Iterable) -> frozenset[BPWord]:
    B = frozenset(coerce(x) for x in B)
    out = set(B)
    for x in B:
        out |= x.reductions()
    return frozenset(out)


def adjective_rules(words: Iterable[BPWord]) -> dict[BPWord, tuple[BPWord, ...]]:
    """Rule sets ``R_x``: ``x`` paired with each successive one-prefix reduction down to its base."""
    rules = {}
    for x in words:
        chain = []
        y = x
        while y.very_count > 0:
            y = BPWord(y.very_count - 1, y.base)
            chain.append(y)
        if chain:
            rules[x] = tuple(chain)
    return rules


def rule_system_close(B: Iterable, rules: Mapping[BPWord, tuple[BPWord, ...]]) -> frozenset[BPWord]:
    out = set(coerce(x) for x in B)
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in rules.get(x, ()):
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def pi_w_close(B: Iterable, ambient: Iterable) -> frozenset:
    """Everything in the ambient language if ``perfect`` is present, otherwise ``B`` itself."""
    B = frozenset(coerce(x) for x in B)
    ambient = frozenset(coerce(x) for x in ambient)
    if not B <= ambient:
        raise ValueError("argument is not inside the ambient language")
    return ambient if PERFECT in B else B


class _Incomparable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Incomparable"

    def __bool__(self):
        raise TypeError("Incomparable has no truth value")


Incomparable = _Incomparable()


def better_than(x, y):
    """``x <=_B y``: same base and no more prefixes; ``Incomparable`` across bases."""
    x, y = coerce(x), coerce(y)
    if x.base != y.base:
        return Incomparable
    return x.very_count <= y.very_count
