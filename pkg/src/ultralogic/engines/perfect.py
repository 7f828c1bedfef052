"""Strong reasoning from the perfect.

The language is ``BP₀`` (right-nested ``V&...&b`` formulas) plus ``c`` and
the implications ``c->x``.  The only axioms are ``(V&x)->x`` and the only
rule is modus ponens.  ``pi_close`` is a closed form; ``pi_prove_bounded``
is a breadth-first proof search used to check it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from ..errors import BudgetExceeded, NotFlatForm
from .formula import AND, Atom, Bin, Formula, as_formula, conj, imp, is_implication, tokenize

C = Atom("c")
V = Atom("V")
RESERVED = ("V", "c")
STATE_CAP = 500_000


def bp0(base: str, n: int) -> Formula:
    f: Formula = Atom(base)
    for _ in range(n):
        f = conj(V, f)
    return f


def bp0_parts(f: Formula) -> tuple[int, str] | None:
    """``(n, b)`` when ``f`` is ``V&(V&...(V&b))`` with ``n`` conjunctions, else None."""
    n = 0
    while isinstance(f, Bin) and f.op == AND and f.left == V:
        f = f.right
        n += 1
    if isinstance(f, Atom) and f.name not in RESERVED:
        return n, f.name
    return None


def is_bp0(f: Formula) -> bool:
    return bp0_parts(f) is not None


def is_c_element(f: Formula) -> bool:
    return f == C or (is_implication(f) and f.left == C and is_bp0(f.right))


def is_axiom(f: Formula) -> bool:
    return (
        is_implication(f)
        and isinstance(f.left, Bin)
        and f.left.op == AND
        and f.left.left == V
        and f.left.right == f.right
        and is_bp0(f.right)
    )


def insert_parens(text: str) -> Formula:
    """Turn a flat ``V&V&...&b`` string into the right-nested formula."""
    tokens = tokenize(text)
    if len(tokens) < 3 or len(tokens) % 2 == 0:
        raise NotFlatForm(text)
    *prefix, base = tokens
    for i, tok in enumerate(prefix):
        if tok != ("V" if i % 2 == 0 else AND):
            raise NotFlatForm(text)
    if base in RESERVED or not (base[0].isalpha() or base[0] == "_"):
        raise NotFlatForm(text)
    return bp0(base, len(prefix) // 2)


def strip_parens(f: Formula) -> str:
    return str(f).replace("(", "").replace(")", "")


@dataclass(frozen=True)
class PiLanguage:
    """The depth-``d`` truncation of ``BP₀``, ``C`` and ``BPC₀`` over a base list."""

    base: tuple[str, ...]
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(dict.fromkeys(self.base)))
        if not self.base:
            raise ValueError("base must be nonempty")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        for b in self.base:
            if b in RESERVED:
                raise ValueError(f"base name {b!r} is reserved")
            Atom(b)

    @cached_property
    def bp0(self) -> tuple[Formula, ...]:
        return tuple(bp0(b, n) for b in self.base for n in range(self.depth + 1))

    @cached_property
    def c_set(self) -> tuple[Formula, ...]:
        return (C,) + tuple(imp(C, x) for x in self.bp0)

    @cached_property
    def bpc0(self) -> tuple[Formula, ...]:
        return self.bp0 + self.c_set

    @cached_property
    def axioms(self) -> tuple[Formula, ...]:
        return tuple(imp(conj(V, x), x) for x in self.bp0)


def _require_bpc0(D: Iterable) -> frozenset[Formula]:
    D = frozenset(as_formula(x) for x in D)
    bad = [str(x) for x in D if not (is_bp0(x) or is_c_element(x))]
    if bad:
        raise ValueError(f"not in BPC0: {sorted(bad)}")
    return D


def pi_close(D: Iterable) -> frozenset[Formula]:
    """Closed form of the strong perfect-closure of ``D``.

    Adds every reduction of a ``BP₀`` member, and when ``c`` is present, the
    consequent of each ``c->y`` together with its reductions.  Nothing of the
    ``c`` family is ever added.
    """
    D = _require_bpc0(D)
    out = set(D)
    seeds = [x for x in D if is_bp0(x)]
    if C in D:
        seeds += [x.right for x in D if is_implication(x)]
    for x in seeds:
        n, b = bp0_parts(x)
        out.update(bp0(b, k) for k in range(n + 1))
    return frozenset(out)


@dataclass(frozen=True)
class Step:
    formula: Formula
    rule: str  # "assumption", "axiom" or "mp"
    premises: tuple[int, ...] = ()

    def to_dict(self):
        d = {"formula": str(self.formula), "rule": self.rule}
        if self.premises:
            d["premises"] = list(self.premises)
        return d


@dataclass
class Proof:
    steps: list[Step] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def conclusion(self) -> Formula:
        return self.steps[-1].formula

    def validate(self, D: Iterable) -> bool:
        D = frozenset(as_formula(x) for x in D)
        for i, s in enumerate(self.steps):
            f = s.formula
            if not (is_axiom(f) or is_bp0(f) or is_c_element(f)):
                return False
            if s.rule == "assumption":
                ok = f in D
            elif s.rule == "axiom":
                ok = is_axiom(f)
            elif s.rule == "mp":
                if len(s.premises) != 2 or not all(0 <= j < i for j in s.premises):
                    return False
                minor, major = (self.steps[j].formula for j in s.premises)
                ok = major == imp(minor, f)
            else:
                ok = False
            if not ok:
                return False
        return bool(self.steps)

    def to_dict(self):
        return {"length": len(self), "steps": [s.to_dict() for s in self.steps]}


def pi_prove_bounded(D: Iterable, x, max_steps: int, state_cap: int = STATE_CAP) -> Proof | None:
    """Shortest proof of ``x`` from ``D`` with at most ``max_steps`` steps, or None.

    States are the sets of formulas written so far.  An axiom is only written
    once its antecedent ``V&y`` is present, since axioms can only serve as the
    major premise of a modus ponens; this loses no proofs.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    D = _require_bpc0(D)
    x = as_formula(x)
    start: frozenset = frozenset()
    parent: dict[frozenset, tuple] = {start: None}
    frontier = deque([start])
    for _ in range(max_steps):
        next_frontier = deque()
        while frontier:
            state = frontier.popleft()
            for f, rule, prem in _moves(state, D):
                new = state | {f}
                if new in parent:
                    continue
                parent[new] = (state, f, rule, prem)
                if f == x:
                    return _rebuild(parent, new)
                if len(parent) > state_cap:
                    raise BudgetExceeded(f"more than {state_cap} proof states")
                next_frontier.append(new)
        frontier = next_frontier
    return None


def _moves(state: frozenset, D: frozenset):
    for d in sorted(D - state, key=str):
        yield d, "assumption", ()
    for f in sorted(state, key=str):
        parts = bp0_parts(f)
        if parts and parts[0] > 0:
            ax = imp(f, f.right)
            if ax not in state:
                yield ax, "axiom", ()
        if is_implication(f) and f.left in state and f.right not in state:
            yield f.right, "mp", (f.left, f)


def _rebuild(parent, state) -> Proof:
    chain = []
    while parent[state] is not None:
        prev, f, rule, prem = parent[state]
        chain.append((f, rule, prem))
        state = prev
    chain.reverse()
    position = {f: i for i, (f, _, _) in enumerate(chain)}
    return Proof([Step(f, rule, tuple(position[p] for p in prem)) for f, rule, prem in chain])
