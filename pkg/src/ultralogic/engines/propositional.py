"""Modus-ponens closure, its index-capped variants, and semantic entailment."""
from __future__ import annotations

from itertools import product
from typing import Iterable

from ..errors import IndexOverflow, NotFlatForm
from .formula import Formula, Not, as_formula, conj, disj, imp, is_implication
from .perfect import insert_parens

TRUTH_TABLE_LIMIT = 20


def _check_cap(f: Formula, cap: int) -> bool:
    atoms = f.atoms()
    named = [a.name for a in atoms if a.index is None]
    if named:
        raise ValueError(f"capped closure needs P_i primitives only, got {sorted(named)}")
    return all(a.index <= cap for a in atoms)


def mp_close(B: Iterable, cap: int | None = None) -> frozenset[Formula]:
    """Saturate ``B`` under modus ponens.

    With ``cap``, a pair ``X``, ``X->Y`` only fires when every primitive index
    occurring in ``X->Y`` is at most ``cap``.  Conclusions are subformulas of
    premises, so saturation always terminates.
    """
    known = set(as_formula(x) for x in B)
    if cap is not None:
        allowed = {f: _check_cap(f, cap) for f in known}
    changed = True
    while changed:
        changed = False
        for f in list(known):
            if not is_implication(f) or f.left not in known or f.right in known:
                continue
            if cap is not None and not allowed.get(f, False):
                continue
            known.add(f.right)
            if cap is not None:
                allowed[f.right] = _check_cap(f.right, cap)
            changed = True
    return frozenset(known)


def max_index(B: Iterable) -> int:
    """Largest primitive index occurring in ``B``; -1 if none."""
    return max((i for f in B for i in as_formula(f).primitive_indices()), default=-1)


def s0_derives(B: Iterable, x, limit: int = TRUTH_TABLE_LIMIT) -> bool:
    """Whether ``B`` semantically entails ``x``, by truth table over the atoms involved."""
    B = [as_formula(f) for f in B]
    x = as_formula(x)
    atoms = sorted({a.name for f in B + [x] for a in f.atoms()})
    if len(atoms) > limit:
        raise IndexOverflow(f"{len(atoms)} atoms exceed the truth-table limit {limit}")
    for values in product((False, True), repeat=len(atoms)):
        valuation = dict(zip(atoms, values))
        if all(f.evaluate(valuation) for f in B) and not x.evaluate(valuation):
            return False
    return True


def prime_derives(F: Iterable[str], goal: str) -> bool:
    """Entailment for flat ``V&...&b`` texts: parenthesize, decide, compare with parentheses removed."""

    def lift(text):
        try:
            return insert_parens(text)
        except NotFlatForm:
            return as_formula(text)

    return s0_derives([lift(t) for t in F], lift(goal))


# Kleene-style group A1 schemata over metavariables a, b, c
def _schemata(a, b, c):
    yield imp(a, imp(b, a))
    yield imp(imp(a, b), imp(imp(a, imp(b, c)), imp(a, c)))
    yield imp(a, imp(b, conj(a, b)))
    yield imp(conj(a, b), a)
    yield imp(conj(a, b), b)
    yield imp(a, disj(a, b))
    yield imp(b, disj(a, b))
    yield imp(imp(a, c), imp(imp(b, c), imp(disj(a, b), c)))
    yield imp(imp(a, b), imp(imp(a, Not(b)), Not(a)))
    yield imp(Not(Not(a)), a)


def hilbert_pool(formulas: Iterable[Formula]) -> frozenset[Formula]:
    """Subformulas of the inputs plus one level of implications between them."""
    subs = {s for f in formulas for s in f.subformulas()}
    return frozenset(subs | {imp(p, q) for p in subs for q in subs})


def hilbert_derives(B: Iterable, x, max_primitives: int = 2) -> bool:
    """Bounded Hilbert derivability: schema instances over a finite pool, closed under MP.

    Sound but incomplete; only meant for cross-checking small cases.
    """
    B = [as_formula(f) for f in B]
    x = as_formula(x)
    atoms = {a for f in B + [x] for a in f.atoms()}
    if len(atoms) > max_primitives:
        raise IndexOverflow(f"hilbert cross-check limited to {max_primitives} primitives")
    pool = sorted(hilbert_pool(B + [x]), key=str)
    instances = {s for a, b, c in product(pool, repeat=3) for s in _schemata(a, b, c)}
    return x in mp_close(set(B) | instances)

