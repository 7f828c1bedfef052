"""Deductive processes and closure operators over a finite universe.

Subsets of a universe of size ``n`` are handled internally as ``n``-bit masks,
bit ``i`` standing for ``universe[i]``.  An operator is any total map on
subsets; whether it is a consequence operator is decided by ``check_axioms``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    EmptyProcess,
    NotInjective,
    NotTotal,
    UniverseMismatch,
    UniverseTooLarge,
)

EXHAUSTIVE_CAP = 12
AXIOMS = (2, 3, 4, 5)


def canonical_key(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return (0, x, "")
    return (1, 0, str(x))


def canonical_sorted(xs: Iterable) -> list:
    return sorted(xs, key=canonical_key)


def subsets(universe: Sequence) -> Iterator[frozenset]:
    for r in range(len(universe) + 1):
        for combo in combinations(universe, r):
            yield frozenset(combo)


class ClosureOperator:
    """A total map on the subsets of ``universe``.

    ``fn`` receives and returns frozensets.  Outputs are cached per argument,
    so operators are cheap to query repeatedly; a full table over all
    ``2**n`` subsets is built on demand by ``table()``.
    """

    def __init__(self, universe: Iterable[Hashable], fn: Callable[[frozenset], Iterable], name: str = ""):
        self.universe = tuple(dict.fromkeys(universe))
        if not self.universe:
            raise ValueError("universe must be nonempty")
        self.name = name
        self._fn = fn
        self._index = {x: i for i, x in enumerate(self.universe)}
        self._cache: dict[frozenset, frozenset] = {}
        self._table: list[int] | None = None

    def __repr__(self):
        return f"ClosureOperator({self.name or '?'}, |A|={len(self.universe)})"

    def __len__(self):
        return len(self.universe)

    def __call__(self, B: Iterable) -> frozenset:
        B = frozenset(B)
        out = self._cache.get(B)
        if out is None:
            if not B <= self._index.keys():
                raise ValueError(f"argument not a subset of the universe: {canonical_sorted(B - self._index.keys())}")
            out = frozenset(self._fn(B))
            self._cache[B] = out
        return out

    @classmethod
    def from_table(cls, universe, table: Mapping[frozenset, Iterable], name: str = "") -> "ClosureOperator":
        frozen = {frozenset(k): frozenset(v) for k, v in table.items()}
        op = cls(universe, lambda B: frozen[B], name)
        missing = [B for B in subsets(op.universe) if B not in frozen]
        if missing:
            raise ValueError(f"table is not total: {len(missing)} subsets missing")
        return op

    # mask helpers
    def mask(self, B: Iterable) -> int:
        m = 0
        for x in B:
            m |= 1 << self._index[x]
        return m

    def unmask(self, m: int) -> frozenset:
        return frozenset(x for i, x in enumerate(self.universe) if m >> i & 1)

    def table(self) -> list[int]:
        """``table()[m]`` is the mask of ``C(unmask(m))``; exhaustive cap applies."""
        if self._table is None:
            n = len(self.universe)
            if n > EXHAUSTIVE_CAP:
                raise UniverseTooLarge(f"|A| = {n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
            full = (1 << n) - 1
            tab = []
            for m in range(1 << n):
                out = self(self.unmask(m))
                if not out <= self._index.keys():
                    # keep out-of-universe outputs visible to the axiom (2) audit
                    tab.append(-1)
                else:
                    tab.append(self.mask(out) & full)
            self._table = tab
        return self._table

    def compose(self, other: "ClosureOperator") -> "ClosureOperator":
        """``self . other``, i.e. ``X -> self(other(X))``."""
        _require_shared(self, other)
        return ClosureOperator(self.universe, lambda B: self(other(B)), f"{self.name}.{other.name}")


def _require_shared(c1: ClosureOperator, c2: ClosureOperator):
    if set(c1.universe) != set(c2.universe):
        raise UniverseMismatch(f"{c1.name!r} and {c2.name!r} live on different universes")


def identity_operator(universe) -> ClosureOperator:
    return ClosureOperator(universe, lambda B: B, "identity")


def upper_unit(universe) -> ClosureOperator:
    universe = tuple(universe)
    everything = frozenset(universe)
    return ClosureOperator(universe, lambda B: everything, "upper")


def operators_equal(c1: ClosureOperator, c2: ClosureOperator) -> bool:
    """Extensional equality over every subset."""
    _require_shared(c1, c2)
    return all(c1(B) == c2(B) for B in subsets(c1.universe))


# ---------------------------------------------------------------- axioms


@dataclass
class AxiomResult:
    passed: bool
    witness: dict | None = None

    def to_dict(self):
        return {"passed": self.passed, "witness": self.witness}


@dataclass
class AxiomReport:
    operator: str
    universe_size: int
    mode: str
    results: dict[int, AxiomResult] = field(default_factory=dict)
    subsets_checked: int = 0

    def __getitem__(self, axiom: int) -> AxiomResult:
        return self.results[axiom]

    @property
    def axiom2(self):
        return self.results.get(2)

    @property
    def axiom3(self):
        return self.results.get(3)

    @property
    def axiom4(self):
        return self.results.get(4)

    @property
    def axiom5(self):
        return self.results.get(5)

    def passed(self, which: Iterable[int] = AXIOMS) -> bool:
        return all(self.results[a].passed for a in which if a in self.results)

    def to_dict(self):
        return {
            "operator": self.operator,
            "universe_size": self.universe_size,
            "mode": self.mode,
            "subsets_checked": self.subsets_checked,
            "axioms": {str(a): r.to_dict() for a, r in sorted(self.results.items())},
        }


def _listing(C: ClosureOperator, B) -> list[str]:
    return [str(x) for x in canonical_sorted(B)]


def check_axioms(
    C: ClosureOperator,
    which: Iterable[int] = AXIOMS,
    *,
    samples: int | None = None,
    seed: int = 0,
) -> AxiomReport:
    """Audit ``C`` against axioms (2) extensive, (3) idempotent, (4) finitary, (5) monotone.

    Universes up to ``EXHAUSTIVE_CAP`` are checked on every subset.  Larger
    ones need ``samples``: that many seeded random subsets are drawn, and
    axioms (4)/(5) are probed on random sub-subsets of each draw.
    """
    which = tuple(sorted(set(which)))
    if not set(which) <= set(AXIOMS):
        raise ValueError(f"unknown axioms: {set(which) - set(AXIOMS)}")
    n = len(C.universe)
    if n <= EXHAUSTIVE_CAP:
        return _check_exhaustive(C, which)
    if samples is None:
        raise UniverseTooLarge(f"|A| = {n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}; pass samples=")
    return _check_sampled(C, which, samples, seed)


def _check_exhaustive(C: ClosureOperator, which) -> AxiomReport:
    n = len(C.universe)
    tab = C.table()
    size = 1 << n
    report = AxiomReport(C.name, n, "exhaustive", subsets_checked=size)

    def w(m):
        return _listing(C, C.unmask(m))

    if 2 in which:
        bad = next((m for m in range(size) if tab[m] < 0 or tab[m] & m != m), None)
        report.results[2] = AxiomResult(bad is None, None if bad is None else {"B": w(bad)})
    if 3 in which:
        bad = next((m for m in range(size) if tab[m] >= 0 and tab[tab[m]] != tab[m]), None)
        report.results[3] = AxiomResult(bad is None, None if bad is None else {"B": w(bad)})
    if 4 in which:
        # union[m] = OR of C(F) over all F subset of m, by recursion on one-element removals
        union = [0] * size
        bad = None
        for m in range(size):
            u = max(tab[m], 0)
            rest = m
            while rest:
                bit = rest & -rest
                u |= union[m ^ bit]
                rest ^= bit
            union[m] = u
            if bad is None and u != tab[m]:
                bad = m
        witness = None
        if bad is not None:
            F = next(f for f in _submasks(bad) if max(tab[f], 0) & ~max(tab[bad], 0))
            witness = {"B": w(bad), "F": w(F)}
        report.results[4] = AxiomResult(bad is None, witness)
    if 5 in which:
        witness = None
        for m in range(size):
            for i in range(n):
                bit = 1 << i
                if m & bit:
                    continue
                if max(tab[m], 0) & ~max(tab[m | bit], 0):
                    witness = {"B": w(m), "D": w(m | bit)}
                    break
            if witness:
                break
        report.results[5] = AxiomResult(witness is None, witness)
    return report


def _submasks(m: int) -> Iterator[int]:
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def _check_sampled(C: ClosureOperator, which, samples: int, seed: int) -> AxiomReport:
    rng = random.Random(seed)
    universe = C.universe
    A = frozenset(universe)
    report = AxiomReport(C.name, len(universe), "sampled", subsets_checked=samples)
    witnesses: dict[int, dict | None] = {a: None for a in which}

    def pick(pool):
        return frozenset(x for x in pool if rng.random() < 0.5)

    for _ in range(samples):
        B = pick(universe)
        CB = C(B)
        if 2 in which and witnesses[2] is None and not (B <= CB <= A):
            witnesses[2] = {"B": _listing(C, B)}
        if 3 in which and witnesses[3] is None and CB <= A and C(CB) != CB:
            witnesses[3] = {"B": _listing(C, B)}
        if 4 in which and witnesses[4] is None:
            # B is itself finite, so (4) fails exactly when some finite F in B has C(F) outside C(B)
            F = pick(canonical_sorted(B))
            if not C(F) <= CB:
                witnesses[4] = {"B": _listing(C, B), "F": _listing(C, F)}
        if 5 in which and witnesses[5] is None:
            D = B | pick(universe)
            if not CB <= C(D):
                witnesses[5] = {"B": _listing(C, B), "D": _listing(C, D)}
    for a in which:
        report.results[a] = AxiomResult(witnesses[a] is None, witnesses[a])
    return report


def witness_violates(C: ClosureOperator, axiom: int, witness: dict) -> bool:
    """Re-check a reported witness against the plain statement of the axiom."""
    lookup = {str(x): x for x in C.universe}
    B = frozenset(lookup[s] for s in witness["B"])
    CB = C(B)
    if axiom == 2:
        return not (B <= CB <= frozenset(C.universe))
    if axiom == 3:
        return C(CB) != CB
    if axiom == 4:
        F = frozenset(lookup[s] for s in witness["F"])
        return F <= B and not C(F) <= CB
    if axiom == 5:
        D = frozenset(lookup[s] for s in witness["D"])
        return B <= D and not CB <= C(D)
    raise ValueError(axiom)


def is_consequence_operator(C: ClosureOperator, **kw) -> bool:
    return check_axioms(C, (2, 3, 4), **kw).passed()


# ---------------------------------------------------------------- processes


@dataclass(frozen=True)
class DeductiveProcess:
    """A finite relation between finite premise sets and conclusions."""

    universe: tuple
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(dict.fromkeys(self.universe)))
        pairs = frozenset((frozenset(F), a) for F, a in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        A = set(self.universe)
        for F, a in pairs:
            if a not in A or not F <= A:
                raise ValueError(f"pair ({canonical_sorted(F)}, {a}) leaves the universe")

    @property
    def premise_sets(self) -> frozenset:
        return frozenset(F for F, _ in self.pairs)

    def conclusions(self, F) -> frozenset:
        F = frozenset(F)
        return frozenset(a for G, a in self.pairs if G == F)

    def to_dict(self):
        rows = [
            ([str(x) for x in canonical_sorted(F)], str(a))
            for F, a in self.pairs
        ]
        rows.sort(key=lambda r: (len(r[0]), r[0], r[1]))
        return {"universe": [str(x) for x in self.universe], "pairs": [list(r) for r in rows]}


@dataclass(frozen=True)
class ProcessFlags:
    total: bool
    ordinary_i: bool
    ordinary_ii: bool
    singular: bool

    @property
    def ordinary(self) -> bool:
        return self.ordinary_i and self.ordinary_ii

    def to_dict(self):
        return {
            "total": self.total,
            "ordinary": self.ordinary,
            "ordinary_i": self.ordinary_i,
            "ordinary_ii": self.ordinary_ii,
            "singular": self.singular,
        }


def is_total(k: DeductiveProcess) -> bool:
    premises = k.premise_sets
    if frozenset() in premises:
        return True
    # it suffices to look at singletons: every nonempty B contains one
    return all(any(F <= {x} for F in premises) for x in k.universe)


def classify_process(k: DeductiveProcess) -> ProcessFlags:
    if not k.pairs:
        raise EmptyProcess("a deductive process must be nonempty")
    if len(k.universe) > EXHAUSTIVE_CAP:
        raise UniverseTooLarge(f"|A| = {len(k.universe)} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
    pairs = k.pairs
    conclusions: dict[frozenset, set] = {}
    for F, a in pairs:
        conclusions.setdefault(F, set()).add(a)

    all_subsets = list(subsets(k.universe))
    ordinary_i = all(
        (D, b) in pairs
        for A0, b in pairs
        for D in all_subsets
        if A0 <= D
    )
    # (ii) read with "subset of k": each (A0, b_j) in k and ({b_1..b_n}, c) in k
    ordinary_ii = all(
        c in conclusions[A0]
        for A0, derived in conclusions.items()
        for E, cs in conclusions.items()
        if E and E <= derived
        for c in cs
    )
    singular = all((frozenset([x]), x) in pairs for x in k.universe)
    return ProcessFlags(is_total(k), ordinary_i, ordinary_ii, singular)


def generated_operator(k: DeductiveProcess) -> ClosureOperator:
    """The operator ``C_k``: ``C_k(B)`` collects every conclusion of a pair whose premises lie in ``B``.

    For ``B`` empty this gives the conclusions of ``(∅, w)`` pairs, hence
    ``C_k(∅) = ∅`` exactly when ``∅`` is not a premise set of ``k``.
    """
    if not k.pairs:
        raise EmptyProcess("a deductive process must be nonempty")
    if not is_total(k):
        raise NotTotal("C_k is only defined for total processes")
    rows = tuple(k.pairs)
    return ClosureOperator(
        k.universe,
        lambda B: {w for z, w in rows if z <= B},
        "generated",
    )


def process_of_operator(C: ClosureOperator) -> DeductiveProcess:
    """``(F, a)`` for every (finite) subset ``F`` and every ``a`` in ``C(F)``."""
    if len(C.universe) > EXHAUSTIVE_CAP:
        raise UniverseTooLarge(f"|A| = {len(C.universe)} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
    pairs = frozenset((F, a) for F in subsets(C.universe) for a in C(F))
    return DeductiveProcess(C.universe, pairs)


def saturate_process(k: DeductiveProcess) -> DeductiveProcess:
    """Smallest superset of ``k`` that is singular and ordinary (hence total)."""
    universe = k.universe
    index = {x: i for i, x in enumerate(universe)}
    n = len(universe)
    if n > EXHAUSTIVE_CAP:
        raise UniverseTooLarge(f"|A| = {n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")

    def mask(F):
        m = 0
        for x in F:
            m |= 1 << index[x]
        return m

    concl = [0] * (1 << n)
    for F, a in k.pairs:
        concl[mask(F)] |= 1 << index[a]
    for i in range(n):
        concl[1 << i] |= 1 << i
    changed = True
    while changed:
        changed = False
        # (i): conclusions are inherited by supersets
        for m in range(1 << n):
            for i in range(n):
                if not m >> i & 1:
                    sup = m | 1 << i
                    if concl[m] & ~concl[sup]:
                        concl[sup] |= concl[m]
                        changed = True
        # (ii): anything derived from derived conclusions is derived
        for m in range(1 << n):
            d = concl[m]
            extra = 0
            for e in _submasks(d):
                if e:
                    extra |= concl[e]
            if extra & ~d:
                concl[m] |= extra
                changed = True
    pairs = frozenset(
        (frozenset(universe[i] for i in range(n) if m >> i & 1), universe[j])
        for m in range(1 << n)
        for j in range(n)
        if concl[m] >> j & 1
    )
    return DeductiveProcess(universe, pairs)


def random_process(universe: Sequence, rng: random.Random, n_pairs: int | None = None) -> DeductiveProcess:
    """A seeded random relation, saturated to be total, ordinary and singular."""
    universe = tuple(universe)
    if n_pairs is None:
        n_pairs = rng.randint(1, 2 * len(universe))
    pairs = set()
    for _ in range(n_pairs):
        F = frozenset(x for x in universe if rng.random() < 0.35)
        pairs.add((F, rng.choice(universe)))
    return saturate_process(DeductiveProcess(universe, frozenset(pairs)))


# ---------------------------------------------------------------- transport


def _check_injection(beta: Mapping, universe: Sequence):
    missing = [x for x in universe if x not in beta]
    if missing:
        raise NotInjective(f"beta is undefined on {canonical_sorted(missing)}")
    images = [beta[x] for x in universe]
    if len(set(images)) != len(images):
        raise NotInjective("beta identifies distinct elements")


def transport(beta: Mapping, x):
    """Carry a process or an operator along the injection ``beta``.

    The transported operator lives on ``beta[A]`` and sends ``B`` to
    ``beta[C(beta^-1[B])]``; a transported process maps each pair
    ``(F, a)`` to ``(beta[F], beta(a))``.
    """
    _check_injection(beta, x.universe)
    image_universe = tuple(beta[a] for a in x.universe)
    if isinstance(x, DeductiveProcess):
        pairs = frozenset((frozenset(beta[a] for a in F), beta[b]) for F, b in x.pairs)
        return DeductiveProcess(image_universe, pairs)
    if isinstance(x, ClosureOperator):
        inverse = {beta[a]: a for a in x.universe}
        C = x

        def moved(B):
            return {beta[a] for a in C(inverse[b] for b in B)}

        return ClosureOperator(image_universe, moved, f"beta.{C.name}")
    raise TypeError(f"cannot transport {type(x).__name__}")


def preimage(beta: Mapping, B: Iterable) -> frozenset:
    B = set(B)
    return frozenset(a for a, b in beta.items() if b in B)


def image(beta: Mapping, B: Iterable) -> frozenset:
    return frozenset(beta[a] for a in B)
