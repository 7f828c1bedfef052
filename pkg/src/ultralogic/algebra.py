"""Order, meet and chain structure of closure operators on a shared finite universe."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .consequence import (
    ClosureOperator,
    _require_shared,
    canonical_sorted,
    check_axioms,
    subsets,
)
from .engines.behavior import BPWord, Incomparable, better_than
from .engines.formula import Formula, as_formula
from .engines.perfect import bp0
from .engines.propositional import max_index, mp_close
from .errors import AxiomPrecondition, EmptySet


def stronger_than(c1: ClosureOperator, c2: ClosureOperator) -> bool:
    """``c1 <= c2``: ``c1(X)`` is inside ``c2(X)`` for every subset ``X``."""
    _require_shared(c1, c2)
    return all(c1(X) <= c2(X) for X in subsets(c1.universe))


def meet(c1: ClosureOperator, c2: ClosureOperator) -> ClosureOperator:
    _require_shared(c1, c2)
    return ClosureOperator(c1.universe, lambda X: c1(X) & c2(X), f"{c1.name}^{c2.name}")


def composition_criterion(c1: ClosureOperator, c2: ClosureOperator) -> bool:
    """Whether ``c2 . c1 == c2`` on every subset, the composition test for ``c1 <= c2``."""
    _require_shared(c1, c2)
    return all(c2(c1(X)) == c2(X) for X in subsets(c1.universe))


@dataclass
class ChainReport:
    comparable: bool
    composition: bool
    pairs: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.comparable == self.composition and all(p["agree"] for p in self.pairs)

    def to_dict(self):
        return {
            "chain": self.comparable,
            "composition_criterion": self.composition,
            "agree": self.agree,
            "pairs": self.pairs,
        }


def is_chain(family: Sequence[ClosureOperator]) -> ChainReport:
    """Compare every pair directly and through the composition criterion."""
    for c in family:
        report = check_axioms(c, (2, 3, 5))
        failed = [a for a in (2, 3, 5) if not report[a].passed]
        if failed:
            raise AxiomPrecondition(f"{c.name or 'operator'} fails axiom(s) {failed}")
    pairs = []
    comparable = composition = True
    for a, b in combinations(family, 2):
        le, ge = stronger_than(a, b), stronger_than(b, a)
        comp_le, comp_ge = composition_criterion(a, b), composition_criterion(b, a)
        direct = le or ge
        via_composition = comp_le or comp_ge
        comparable &= direct
        composition &= via_composition
        pairs.append({
            "pair": [a.name, b.name],
            "le": le,
            "ge": ge,
            "composition_le": comp_le,
            "composition_ge": comp_ge,
            "agree": le == comp_le and ge == comp_ge,
        })
    return ChainReport(comparable, composition, pairs)


def symbol_length(x) -> int:
    """Number of symbols, parentheses excluded; ``V&V&b`` has length 5."""
    if isinstance(x, BPWord):
        return x.as_formula().length()
    return as_formula(x).length()


def length_order(B: Iterable, D: Iterable) -> bool:
    """``B <=_#  D``: every member of ``B`` is no longer than every member of ``D``."""
    B, D = list(B), list(D)
    if not B or not D:
        raise EmptySet("length order needs two nonempty sets")
    return max(map(symbol_length, B)) <= min(map(symbol_length, D))


def G(base: Iterable[str], n: int) -> frozenset[Formula]:
    """The flat formulas with exactly ``n`` conjunctions, one per base name."""
    return frozenset(bp0(b, n) for b in base)


def set_better_than(A: Iterable, D: Iterable) -> bool:
    """Every member of ``A`` is below some comparable member of ``D``."""
    D = list(D)
    for x in A:
        if not any(r is not Incomparable and r for r in (better_than(x, y) for y in D)):
            return False
    return True


def is_deductive_system(C: ClosureOperator, B: Iterable) -> bool:
    B = frozenset(B)
    return C(B) == B


def minimal_finite_basis(C: ClosureOperator, B: Iterable) -> frozenset:
    """A subset-minimal ``F`` inside ``B`` with ``C(F) == C(B)``.

    Members are dropped greedily in canonical order.  Monotonicity makes the
    result minimal: any proper subset sits inside some ``F - {x}`` that was
    already rejected.
    """
    report = check_axioms(C, (4, 5))
    if not report.passed():
        raise AxiomPrecondition(f"{C.name or 'operator'} is not finitary and monotone")
    target = C(B)
    F = set(B)
    for x in canonical_sorted(F):
        if C(F - {x}) == target:
            F.discard(x)
    return frozenset(F)


def chain_union_closure(B: Iterable) -> frozenset[Formula]:
    """Union of the capped closures over caps ``0..max index``."""
    B = frozenset(as_formula(x) for x in B)
    out = set(B)
    for n in range(max_index(B) + 1):
        out |= mp_close(B, n)
    return frozenset(out)


def stabilization_cap(B: Iterable) -> int:
    """Least cap from which the capped closure equals the uncapped one."""
    B = frozenset(as_formula(x) for x in B)
    full = mp_close(B)
    n = 0
    while mp_close(B, n) != full:
        n += 1
    return n
