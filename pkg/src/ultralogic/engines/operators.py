"""Each engine packaged as a ClosureOperator over a truncated universe."""
from __future__ import annotations

from typing import Iterable

from ..consequence import ClosureOperator, identity_operator, upper_unit
from .behavior import adjective_close, bpc_bar, generate_bp, pi_w_close, sort_key
from .formula import Formula, P, imp, parse
from .perfect import PiLanguage, pi_close
from .propositional import mp_close, s0_derives

ENGINES = ("identity", "upper", "adjective", "pi_w", "pi", "mp", "s0")


def adjective_operator(base: Iterable[str] = ("bold", "kind", "calm"), depth: int = 3) -> ClosureOperator:
    universe = sorted(generate_bp(base, depth), key=sort_key)
    return ClosureOperator(universe, adjective_close, "adjective")


def pi_w_operator(base: Iterable[str] = ("bold", "kind"), depth: int = 4) -> ClosureOperator:
    ambient = bpc_bar(base, depth)
    universe = sorted(ambient, key=sort_key)
    return ClosureOperator(universe, lambda B: pi_w_close(B, ambient), "pi_w")


def pi_operator(base: Iterable[str] = ("b",), depth: int = 4) -> ClosureOperator:
    lang = PiLanguage(tuple(base), depth)
    return ClosureOperator(lang.bpc0, pi_close, "pi")


def mp_universe() -> list[Formula]:
    """Twelve formulas over ``P0..P3``, closed under taking consequents."""
    texts = [
        "P0", "P1", "P2", "P3",
        "P0->P1", "P1->P2", "P2->P3", "P3->P0",
        "P0->P2", "P1->P3", "P0->(P1->P2)", "P2->(P3->P0)",
    ]
    return [parse(t) for t in texts]


def mp_operator(cap: int | None = None, universe: Iterable[Formula] | None = None) -> ClosureOperator:
    universe = list(universe) if universe is not None else mp_universe()
    name = "mp" if cap is None else f"mp_{cap}"
    return ClosureOperator(universe, lambda B: mp_close(B, cap), name)


def s0_operator(universe: Iterable) -> ClosureOperator:
    universe = [parse(x) if isinstance(x, str) else x for x in universe]
    return ClosureOperator(universe, lambda B: {x for x in universe if s0_derives(B, x)}, "s0")


def chain_counterexample(n: int, m: int) -> list[Formula]:
    return [P(n), imp(P(n), P(m))]


def build(engine: str, **kw) -> ClosureOperator:
    if engine == "identity":
        return identity_operator(kw.get("universe", range(kw.get("size", 4))))
    if engine == "upper":
        return upper_unit(kw.get("universe", range(kw.get("size", 4))))
    if engine == "adjective":
        return adjective_operator(kw.get("base", ("bold", "kind", "calm")), kw.get("depth", 3))
    if engine == "pi_w":
        return pi_w_operator(kw.get("base", ("bold", "kind")), kw.get("depth", 4))
    if engine == "pi":
        return pi_operator(kw.get("base", ("b",)), kw.get("depth", 4))
    if engine == "mp":
        return mp_operator(kw.get("cap"))
    if engine == "s0":
        return s0_operator(kw.get("universe", mp_universe()))
    raise ValueError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
