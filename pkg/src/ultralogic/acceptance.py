"""The acceptance battery, shared by ``ultralogic suite`` and the test suite.

Each criterion returns a ``Criterion`` carrying a pass flag and a JSON-ready
detail dict.  Wall-clock time only feeds the pass flag of time-bounded
criteria; it is kept out of ``to_dict`` so reports stay byte-stable.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from . import algebra, consequence as cq, superstructure as ss
from .engines import operators
from .engines.formula import Formula, P, imp
from .engines.perfect import PiLanguage, bp0, pi_close, pi_prove_bounded
from .engines.propositional import mp_close
from .words import Alphabet, all_subword_codes, decode, encode, enumerate_class

PI_BASE = ("b", "d")
PI_DEPTH = 3
PI_MAX_D = 3
PI_BUDGET = 7


@dataclass
class Criterion:
    number: int
    title: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0
    time_limit: float | None = None

    def to_dict(self, timing: bool = False):
        d = {"number": self.number, "title": self.title, "passed": self.passed, "detail": self.detail}
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d

    def line(self) -> str:
        return f"criterion {self.number:2d} {'PASS' if self.passed else 'FAIL'}  {self.title}"


def _listing(xs) -> list[str]:
    return sorted(str(x) for x in xs)


# ---------------------------------------------------------------- 1


def tarski_battery(seed: int = 0) -> tuple[bool, dict]:
    ops = [
        cq.identity_operator(range(12)),
        operators.adjective_operator(("bold", "kind", "calm"), 3),
        operators.pi_w_operator(("bold", "kind"), 4),
        operators.pi_operator(("b",), 4),
        operators.mp_operator(None),
    ] + [operators.mp_operator(n) for n in range(4)]
    detail = {}
    ok = True
    for op in ops:
        report = cq.check_axioms(op, (2, 3, 4, 5))
        passed = report.passed((2, 3, 4))
        ok &= passed
        detail[op.name] = {
            "universe_size": len(op.universe),
            "axioms_2_3_4": passed,
            "axiom_5": report[5].passed,
        }
    return ok, detail


# ---------------------------------------------------------------- 2


def process_round_trip(seed: int = 0, cases: int = 200) -> tuple[bool, dict]:
    rng = random.Random(seed)
    failures = []
    for i in range(cases):
        size = rng.randint(1, 5)
        k = cq.random_process(range(size), rng)
        flags = cq.classify_process(k)
        Ck = cq.generated_operator(k)
        passes = cq.check_axioms(Ck, (2, 3, 4)).passed()
        back = cq.generated_operator(cq.process_of_operator(Ck))
        if not (flags.total and flags.ordinary and flags.singular and passes and cq.operators_equal(back, Ck)):
            failures.append(i)
    return not failures, {"cases": cases, "failures": failures[:10]}


# ---------------------------------------------------------------- 3


def random_total_process(universe, rng: random.Random) -> cq.DeductiveProcess:
    universe = tuple(universe)
    pairs = set()
    for _ in range(rng.randint(1, 2 * len(universe))):
        F = frozenset(x for x in universe if rng.random() < 0.4)
        pairs.add((F, rng.choice(universe)))
    k = cq.DeductiveProcess(universe, frozenset(pairs))
    for x in universe:
        if not cq.is_total(k):
            pairs.add((frozenset([x]), rng.choice(universe)))
            k = cq.DeductiveProcess(universe, frozenset(pairs))
    return k


def random_injection(universe, target, rng: random.Random) -> dict:
    images = rng.sample(list(target), len(universe))
    return dict(zip(universe, images))


def transport_battery(seed: int = 0, cases: int = 100) -> tuple[bool, dict]:
    rng = random.Random(seed)
    target = [f"t{i}" for i in range(6)]
    failures = []
    for i in range(cases):
        A = tuple(range(rng.randint(1, 4)))
        k = random_total_process(A, rng)
        beta = random_injection(A, target, rng)
        Ck = cq.generated_operator(k)
        moved = cq.transport(beta, Ck)
        ok = cq.operators_equal(moved, cq.generated_operator(cq.transport(beta, k)))
        for B in cq.subsets(moved.universe):
            pre = cq.preimage(beta, B)
            ok &= cq.preimage(beta, moved(B)) == Ck(pre)
            ok &= moved(cq.image(beta, pre)) == moved(B) == cq.image(beta, Ck(pre))
        if not ok:
            failures.append(i)
    return not failures, {"cases": cases, "failures": failures[:10]}


# ---------------------------------------------------------------- 4-6


def pi_enumeration(base=PI_BASE, depth=PI_DEPTH, max_size=PI_MAX_D):
    lang = PiLanguage(base, depth)
    universe = lang.bpc0
    for r in range(max_size + 1):
        for D in combinations(universe, r):
            yield frozenset(D)


def pi_oracle_equivalence(seed: int = 0, budget: int = PI_BUDGET) -> tuple[bool, dict]:
    lang = PiLanguage(PI_BASE, PI_DEPTH)
    checked = 0
    mismatches = []
    count = 0
    for D in pi_enumeration():
        closed = pi_close(D)
        for x in lang.bpc0:
            checked += 1
            found = pi_prove_bounded(D, x, budget) is not None
            if found != (x in closed):
                count += 1
                if len(mismatches) < 5:
                    mismatches.append({"D": _listing(D), "goal": str(x), "closed_form": x in closed, "search": found})
    return count == 0, {"budget": budget, "pairs_checked": checked, "mismatches": count, "examples": mismatches}


def pi_length_bound(seed: int = 0) -> tuple[bool, dict]:
    base, depth = PI_BASE, 4
    violations = 0
    checked = 0
    for b in base:
        for n in range(depth + 1):
            A = bp0(b, n)
            shorter = [bp0(b2, k) for b2 in base for k in range(depth + 1) if 2 * k + 1 < A.length()]
            for r in range(len(shorter) + 1):
                for B in combinations(shorter, r):
                    checked += 1
                    if A in pi_close(B):
                        violations += 1
    return violations == 0, {"pairs_checked": checked, "violations": violations}


def pi_perfect_criterion(seed: int = 0) -> tuple[bool, dict]:
    lang = PiLanguage(PI_BASE, PI_DEPTH)
    whole = frozenset(lang.bpc0)
    c_set = frozenset(lang.c_set)
    family = list(pi_enumeration())
    # the enumeration never contains all of C, so add C and its one-element extensions
    extra = [c_set] + [c_set | {x} for x in lang.bp0]
    bad = 0
    for D in family + extra:
        if (pi_close(D) >= whole) != (c_set <= D):
            bad += 1
    return bad == 0 and pi_close(c_set) == whole, {
        "enumerated": len(family),
        "extra": len(extra),
        "violations": bad,
        "closure_of_C_is_everything": pi_close(c_set) == whole,
    }


# ---------------------------------------------------------------- 7


def random_formula(rng: random.Random, top: int, depth: int) -> Formula:
    if depth == 0 or rng.random() < 0.4:
        return P(rng.randint(0, top))
    return imp(random_formula(rng, top, depth - 1), random_formula(rng, top, depth - 1))


def random_premises(rng: random.Random, top: int = 4) -> list[Formula]:
    B = [P(rng.randint(0, top)) for _ in range(rng.randint(1, 3))]
    B += [random_formula(rng, top, 3) for _ in range(rng.randint(1, 5))]
    return B


def mp_chain(seed: int = 0, cases: int = 100) -> tuple[bool, dict]:
    family = [operators.mp_operator(n) for n in range(4)]
    report = algebra.is_chain(family)
    counter = all(
        P(m) not in mp_close(operators.chain_counterexample(n, m), n)
        and P(m) in mp_close(operators.chain_counterexample(n, m), m)
        for m in range(5)
        for n in range(m)
    )
    rng = random.Random(seed)
    union_failures = []
    for i in range(cases):
        B = random_premises(rng)
        if algebra.chain_union_closure(B) != mp_close(B):
            union_failures.append(i)
    ok = report.comparable and report.composition and report.agree and counter and not union_failures
    return ok, {
        "chain": report.comparable,
        "composition_criterion": report.composition,
        "agree": report.agree,
        "counterexamples_hold": counter,
        "union_cases": cases,
        "union_failures": union_failures[:10],
    }


# ---------------------------------------------------------------- 8


def tc_battery() -> list:
    a, b = ss.Ur("a"), ss.Ur("b")
    values = [g for g in ss.ground_battery()]
    values += [ss.EMPTY, frozenset({ss.EMPTY}), frozenset({frozenset({frozenset({a})}), b})]
    return values


def superstructure_battery(seed: int = 0) -> tuple[bool, dict]:
    grounds = ss.ground_battery()
    level_failures = []
    modes = {"literal": 0, "reduced": 0}
    for g in grounds:
        s = ss.build_superstructure(g, 3)
        for n in range(4):
            ok, mode = s.is_x0_transitive(n)
            modes[mode] += 1
            if not ok:
                level_failures.append((ss.render(g), n, "transitive"))
        for n in range(3):
            ok, mode = s.members_drop_a_level(n)
            modes[mode] += 1
            if not ok:
                level_failures.append((ss.render(g), n, "drop"))
    values = tc_battery()
    tc_ok = True
    for v in values:
        t = ss.transitive_closure(v)
        atoms = {x for x in t if ss.is_atom(x)}
        tc_ok &= ss.transitive_closure(t) == t and ss.is_transitive(t, atoms) and frozenset(v) <= t
    for v in values:
        for w in values:
            if v <= w:
                tc_ok &= ss.transitive_closure(v) <= ss.transitive_closure(w)
    premise_grounds = [g for g in grounds if ss.atomicity_premise(g)]
    atomic_failures = []
    for g in premise_grounds:
        s = ss.build_superstructure(g, 3)
        if not all(ss.is_n_atomic(g, n, s) for n in range(4)):
            atomic_failures.append(ss.render(g))
    ok = not level_failures and tc_ok and len(premise_grounds) >= 20 and not atomic_failures
    return ok, {
        "grounds": len(grounds),
        "level_checks": modes,
        "level_failures": level_failures[:10],
        "tc_values": len(values),
        "tc_laws": tc_ok,
        "atomicity_grounds": len(premise_grounds),
        "atomicity_failures": atomic_failures[:10],
    }


# ---------------------------------------------------------------- 9


def codec_battery(seed: int = 0) -> tuple[bool, dict]:
    alphabet = Alphabet(("a", "b", "|||"))
    round_trip = 0
    class_ok = True
    for w in alphabet.words(6):
        round_trip += decode(encode(w, alphabet), alphabet) == w
        cls = enumerate_class(w, all_subword_codes(w, alphabet), alphabet)
        m = len(w) - 1
        deg = cls.degrees()
        class_ok &= (
            len(cls) == 2 ** m
            and deg.get(m) == 1
            and deg.get(0) == 1
            and all(deg.get(k, 0) >= 1 for k in range(m + 1))
            and max(deg) == m
        )
    total = sum(3 ** n for n in range(1, 7))
    return round_trip == total and class_ok, {"words": total, "round_trips": round_trip, "class_cardinality": class_ok}


# ---------------------------------------------------------------- registry

CRITERIA: dict[int, tuple[str, Callable, float | None]] = {
    1: ("extension, idempotence and finitary union for every engine", tarski_battery, 60.0),
    2: ("process/operator round trip", process_round_trip, None),
    3: ("transport along injections", transport_battery, None),
    4: ("closed form vs bounded proof search", pi_oracle_equivalence, 120.0),
    5: ("shorter premises never yield a longer pattern", pi_length_bound, None),
    6: ("everything follows iff all of C is assumed", pi_perfect_criterion, None),
    7: ("capped modus ponens chain", mp_chain, None),
    8: ("superstructure levels and transitive closure", superstructure_battery, None),
    9: ("codec round trip and class sizes", codec_battery, None),
}
DETERMINISM = 10


def run_criterion(number: int, seed: int = 0) -> Criterion:
    title, fn, limit = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn(seed)
    elapsed = time.perf_counter() - start
    if limit is not None:
        detail = dict(detail, time_limit_seconds=limit)
        ok = ok and elapsed <= limit
    return Criterion(number, title, bool(ok), detail, elapsed, limit)


def run_battery(seed: int = 0, numbers=None) -> list[Criterion]:
    return [run_criterion(n, seed) for n in (numbers or sorted(CRITERIA))]


def serialize(results: list[Criterion]) -> str:
    return json.dumps([c.to_dict() for c in results], sort_keys=True, indent=2)


def determinism(first: list[Criterion], seed: int = 0) -> Criterion:
    start = time.perf_counter()
    second = run_battery(seed, [c.number for c in first])
    same = serialize(first) == serialize(second)
    return Criterion(
        DETERMINISM,
        "byte-identical report on rerun",
        same,
        {"compared_criteria": [c.number for c in first]},
        time.perf_counter() - start,
    )


def run_suite(seed: int = 0) -> list[Criterion]:
    first = run_battery(seed)
    return first + [determinism(first, seed)]
