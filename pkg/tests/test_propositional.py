import random
from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from ultralogic import consequence as cq
from ultralogic.acceptance import random_premises
from ultralogic.engines import operators
from ultralogic.engines.formula import Bin, Not, P, imp, parse
from ultralogic.engines.propositional import (
    hilbert_derives,
    hilbert_pool,
    max_index,
    mp_close,
    prime_derives,
    s0_derives,
)
from ultralogic.errors import IndexOverflow

# instance count grows with the cube of the pool, so cross-checks stay tiny
SMALL_POOL = 14

two_atoms = st.recursive(
    st.sampled_from([P(0), P(1)]),
    lambda sub: st.one_of(st.builds(Not, sub), st.builds(Bin, st.sampled_from(["&", "|", "->"]), sub, sub)),
    max_leaves=3,
)


def F(text):
    return parse(text)


class TestModusPonens:
    def test_one_step(self):
        assert mp_close({F("P0"), F("P0->P1")}) == {F("P0"), F("P0->P1"), F("P1")}

    def test_chain_counterexample(self):
        for m in range(5):
            for n in range(m):
                B = operators.chain_counterexample(n, m)
                assert P(m) not in mp_close(B, n)
                assert P(m) in mp_close(B, m)

    def test_caps_are_increasing(self):
        rng = random.Random(4)
        for _ in range(100):
            B = random_premises(rng)
            closures = [mp_close(B, n) for n in range(6)]
            assert all(a <= b for a, b in zip(closures, closures[1:]))
            assert closures[-1] == mp_close(B)

    def test_cap_needs_indexed_primitives(self):
        with pytest.raises(ValueError):
            mp_close({F("V"), F("V->b")}, 1)

    def test_closed_and_sound(self):
        rng = random.Random(6)
        for _ in range(100):
            B = set(random_premises(rng, 3))
            out = mp_close(B)
            # closed under the rule
            assert all(f.right in out for f in out if isinstance(f, Bin) and f.op == "->" and f.left in out)
            # every addition is a consequent of something in the closure and is entailed
            for f in out - B:
                assert any(isinstance(g, Bin) and g.op == "->" and g.right == f and g.left in out for g in out)
                assert s0_derives(B, f)

    def test_max_index(self):
        assert max_index([F("P2->P7"), F("P1")]) == 7
        assert max_index([]) == -1

    def test_operator_axioms(self):
        for cap in (None, 0, 1, 2, 3):
            op = operators.mp_operator(cap)
            assert len(op.universe) == 12
            assert cq.check_axioms(op).passed()

    def test_operator_sampled(self):
        universe = operators.mp_universe() + [P(i) for i in range(4, 12)] + [
            imp(P(i), P(i + 1)) for i in range(4, 11)
        ]
        assert len(universe) == 27
        op = operators.mp_operator(None, universe)
        assert cq.check_axioms(op, samples=200, seed=3).passed()


class TestEntailment:
    def test_examples(self):
        A, B = P(0), P(1)
        assert s0_derives({F("P0&P1")}, B)
        assert s0_derives(set(), imp(A, A))
        assert s0_derives({A}, F("P0&P0&P0"))
        assert not s0_derives({A}, B)

    def test_prime_bridge(self):
        assert prime_derives(["V&V&b"], "V&b")
        # not in flat form, so it is parsed as written and follows propositionally
        assert prime_derives(["V&b"], "V&b&V&b&V&b")
        assert prime_derives(["b"], "V&b") is False
        assert prime_derives(["P0"], "P0&P0&P0")

    def test_overflow(self):
        big = [P(i) for i in range(21)]
        with pytest.raises(IndexOverflow):
            s0_derives(big, P(0))
        assert s0_derives(big[:20], P(0))

    def test_monotone(self):
        rng = random.Random(12)
        for _ in range(100):
            B = random_premises(rng, 3)
            extra = random_premises(rng, 3)
            for x in B + extra:
                if s0_derives(B, x):
                    assert s0_derives(B + extra, x)

    def test_operator_axioms(self):
        op = operators.s0_operator(operators.mp_universe())
        report = cq.check_axioms(op)
        assert report.passed()


class TestHilbert:
    def test_textbook_cases(self):
        A, B = P(0), P(1)
        assert hilbert_derives([], imp(A, A))
        assert hilbert_derives([F("P0&P1")], B)
        assert hilbert_derives([A], F("P0&P0&P0"))

    def test_limited_to_two_primitives(self):
        with pytest.raises(IndexOverflow):
            hilbert_derives([P(0), P(1)], P(2))

    @settings(max_examples=25, deadline=None)
    @given(st.lists(two_atoms, max_size=2), two_atoms)
    def test_sound(self, B, x):
        assume(len(hilbert_pool(B + [x])) <= SMALL_POOL)
        if hilbert_derives(B, x):
            assert s0_derives(B, x)

    def test_sound_on_small_premise_sets(self):
        pool = [P(0), P(1), Not(P(0)), F("P0&P1"), F("P0->P1")]
        for r in range(2):
            for B in combinations(pool, r):
                for x in pool:
                    if len(hilbert_pool(list(B) + [x])) <= SMALL_POOL and hilbert_derives(B, x):
                        assert s0_derives(B, x)
        assert hilbert_derives([F("P0->P1"), P(0)], P(1))
        assert hilbert_derives([P(0)], F("P0|P1"))
