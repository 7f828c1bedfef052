"""Depth-bounded superstructures over tiny grounds, transitivity and transitive closure.

Values are atoms (``Ur``) or frozensets of values.  Levels follow
``X_{n+1} = X_n ∪ P(X_n)``; for ``n >= 1`` this equals ``X_0 ∪ P(X_{n-1})``,
which gives a cheap membership test and exact level sizes without building
the level.  Levels are materialized only while the power set stays small.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Iterable, Union

from .errors import CapExceeded, DepthUnavailable

MAX_GROUND = 3
MAX_DEPTH = 4
# a level is materialized when its predecessor has at most this many members
MATERIALIZE_FROM = 12


@dataclass(frozen=True, order=True)
class Ur:
    """An atom: has no members."""

    name: str

    def __str__(self):
        return self.name


VSet = Union[Ur, frozenset]
EMPTY: frozenset = frozenset()


def is_atom(x) -> bool:
    return isinstance(x, Ur)


def render(x: VSet) -> str:
    if is_atom(x):
        return x.name
    return "{" + ", ".join(sorted((render(y) for y in x), key=_render_key)) + "}"


def _render_key(s: str):
    return (s.startswith("{"), len(s), s)


def parse_vset(text: str) -> VSet:
    """Parse ``{{a}, a}``-style literals; bare identifiers are atoms."""
    tokens = re.findall(r"[{},]|[A-Za-z_][A-Za-z0-9_]*|\S", text)
    pos = 0

    def value():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of set literal")
        tok = tokens[pos]
        pos += 1
        if tok == "{":
            members = []
            if pos < len(tokens) and tokens[pos] == "}":
                pos += 1
                return EMPTY
            while True:
                members.append(value())
                if pos >= len(tokens):
                    raise ValueError("unterminated set literal")
                sep = tokens[pos]
                pos += 1
                if sep == "}":
                    return frozenset(members)
                if sep != ",":
                    raise ValueError(f"expected ',' or '}}', got {sep!r}")
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            return Ur(tok)
        raise ValueError(f"unexpected token {tok!r}")

    out = value()
    if pos != len(tokens):
        raise ValueError(f"trailing input in set literal: {tokens[pos:]}")
    return out


def union_of(V: VSet) -> frozenset:
    """``⋃V``, skipping atom members (they have no members to contribute)."""
    if is_atom(V):
        return EMPTY
    return frozenset(chain.from_iterable(y for y in V if not is_atom(y)))


def transitive_closure(V: VSet) -> frozenset:
    """``V ∪ ⋃V ∪ ⋃⋃V ∪ ...``; the closure of an atom is empty."""
    if is_atom(V):
        return EMPTY
    out = set(V)
    stage = frozenset(V)
    while stage:
        stage = union_of(stage) - out
        out |= stage
    return frozenset(out)


def is_transitive(S: Iterable, X0: Iterable = ()) -> bool:
    """Every member is in ``X0`` or is a set included in ``S``."""
    S = frozenset(S)
    X0 = frozenset(X0)
    return all(x in X0 or (not is_atom(x) and x <= S) for x in S)


def powerset(xs: Iterable) -> frozenset:
    xs = list(xs)
    return frozenset(frozenset(c) for r in range(len(xs) + 1) for c in combinations(xs, r))


@dataclass(frozen=True)
class LevelSize:
    exact: int | None
    expr: str

    def to_dict(self):
        if self.exact is not None and self.exact.bit_length() <= 64:
            return {"exact": self.exact}
        return {"expr": self.expr}


@dataclass
class Superstructure:
    ground: frozenset
    depth: int
    levels: list[frozenset] = field(default_factory=list)

    def __post_init__(self):
        self.ground = frozenset(self.ground)
        if len(self.ground) > MAX_GROUND or self.depth > MAX_DEPTH:
            raise CapExceeded(f"|X0| <= {MAX_GROUND} and depth <= {MAX_DEPTH} required")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        levels = [self.ground]
        while len(levels) <= self.depth and len(levels[-1]) <= MATERIALIZE_FROM:
            prev = levels[-1]
            levels.append(prev | powerset(prev))
        self.levels = levels

    def _need(self, n: int):
        if n < 0 or n > self.depth:
            raise DepthUnavailable(f"level {n} not built (depth {self.depth})")

    def materialized(self, n: int) -> bool:
        self._need(n)
        return n < len(self.levels)

    def level(self, n: int) -> frozenset:
        if not self.materialized(n):
            raise CapExceeded(f"level {n} is too large to list")
        return self.levels[n]

    def contains(self, x: VSet, n: int) -> bool:
        self._need(n)
        if n < len(self.levels):
            return x in self.levels[n]
        if x in self.ground:
            return True
        return not is_atom(x) and all(self.contains(y, n - 1) for y in x)

    def size(self, n: int) -> LevelSize:
        self._need(n)
        if n < len(self.levels):
            k = len(self.levels[n])
            return LevelSize(k, str(k))
        prev = self.size(n - 1)
        # ground members already inside P(X_{n-1}) are not counted twice
        overlap = sum(1 for x in self.ground if not is_atom(x) and all(self.contains(y, n - 1) for y in x))
        extra = len(self.ground) - overlap
        if prev.exact is not None and prev.exact <= 1 << 16:
            return LevelSize((1 << prev.exact) + extra, f"2^{prev.exact} + {extra}")
        return LevelSize(None, f"2^({prev.expr}) + {extra}")

    # ------------------------------------------------ structural checks

    def levels_nested(self, n: int) -> bool:
        """``X_{n-1} ⊆ X_n``.

        When ``X_{n-1}`` is too big to list, its non-ground members are
        subsets of ``X_{n-2}``, so the claim reduces to the ground plus the
        inclusion one level down.
        """
        self._need(n)
        if n == 0:
            return True
        if self.materialized(n - 1):
            return all(self.contains(y, n) for y in self.level(n - 1))
        return all(self.contains(x, n) for x in self.ground) and self.levels_nested(n - 1)

    def is_x0_transitive(self, n: int) -> tuple[bool, str]:
        """``X_n`` is ``X_0``-transitive; literal when listable, by reduction otherwise."""
        if self.materialized(n):
            return is_transitive(self.level(n), self.ground), "literal"
        # a non-ground member is a subset of X_{n-1}, so it lies inside X_n iff X_{n-1} does
        return self.levels_nested(n), "reduced"

    def members_drop_a_level(self, n: int) -> tuple[bool, str]:
        """If ``y ∈ x ∈ X_{n+1} - X_0`` then ``y ∈ X_n``."""
        self._need(n + 1)
        if self.materialized(n + 1):
            ok = all(
                self.contains(y, n)
                for x in self.level(n + 1) - self.ground
                for y in x
            )
            return ok, "literal"
        # x is in P(X_n) or in X_n - X_0; the latter has members in X_{n-1}
        return self.levels_nested(n), "reduced"

    def to_dict(self):
        return {
            "ground": sorted(render(x) for x in self.ground),
            "depth": self.depth,
            "sizes": [self.size(n).to_dict() for n in range(self.depth + 1)],
        }


def build_superstructure(X0: Iterable, depth: int) -> Superstructure:
    return Superstructure(frozenset(X0), depth)


def is_n_atomic(X0: Iterable, n: int, ss: Superstructure) -> bool:
    """Every ground member is nonempty and none of its members lies in ``X_n``."""
    X0 = frozenset(X0)
    ss._need(n)
    for x in X0:
        if is_atom(x):
            continue
        if x == EMPTY:
            return False
        if any(ss.contains(y, n) for y in x):
            return False
    return True


def atomicity_premise(X0: Iterable) -> bool:
    """``∅ ∉ TC(X0)`` and no ground member reaches the ground through its closure."""
    X0 = frozenset(X0)
    if EMPTY in transitive_closure(X0):
        return False
    return all(not (transitive_closure(y) & X0) for y in X0)


def ground_battery(limit: int | None = None) -> list[frozenset]:
    """Grounds of size 1..3 drawn from a small pool of atoms and sets."""
    a, b, c = Ur("a"), Ur("b"), Ur("c")
    pool = [
        a, b, c, EMPTY,
        frozenset({a}), frozenset({a, b}), frozenset({frozenset({a})}),
        frozenset({EMPTY}), frozenset({b, frozenset({c})}),
    ]
    grounds = [frozenset(combo) for r in (1, 2, 3) for combo in combinations(pool, r)]
    return grounds[:limit] if limit else grounds
