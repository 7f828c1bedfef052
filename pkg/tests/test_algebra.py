import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ultralogic import consequence as cq
from ultralogic.algebra import (
    G,
    chain_union_closure,
    composition_criterion,
    is_chain,
    is_deductive_system,
    length_order,
    meet,
    minimal_finite_basis,
    set_better_than,
    stabilization_cap,
    stronger_than,
    symbol_length,
)
from ultralogic.engines import operators
from ultralogic.engines.formula import P, imp, parse
from ultralogic.engines.propositional import mp_close
from ultralogic.errors import AxiomPrecondition, EmptySet


def all_subsets(xs):
    xs = list(xs)
    return [frozenset(c) for r in range(len(xs) + 1) for c in combinations(xs, r)]


def random_operator(universe, rng):
    """Operator generated by a saturated random process: a finitary closure operator."""
    return cq.generated_operator(cq.random_process(universe, rng))


def adds(universe, trigger, extra, name):
    return cq.ClosureOperator(
        universe, lambda B: frozenset(B) | ({extra} if trigger in B else set()), name
    )


class TestOrder:
    def test_units_bound_everything(self):
        rng = random.Random(1)
        A = range(4)
        for _ in range(20):
            C = random_operator(A, rng)
            assert stronger_than(cq.identity_operator(A), C)
            assert stronger_than(C, cq.upper_unit(A))

    def test_reflexive_and_transitive(self):
        rng = random.Random(7)
        A = range(3)
        ops = [random_operator(A, rng) for _ in range(12)]
        for a in ops:
            assert stronger_than(a, a)
        for a in ops:
            for b in ops:
                for c in ops:
                    if stronger_than(a, b) and stronger_than(b, c):
                        assert stronger_than(a, c)

    def test_meet_is_greatest_lower_bound(self):
        rng = random.Random(9)
        A = range(3)
        ops = [random_operator(A, rng) for _ in range(10)]
        for a, b in combinations(ops, 2):
            m = meet(a, b)
            assert stronger_than(m, a) and stronger_than(m, b)
            for c in ops:
                if stronger_than(c, a) and stronger_than(c, b):
                    assert stronger_than(c, m)

    def test_meet_of_closure_operators_is_one(self):
        rng = random.Random(10)
        for _ in range(30):
            A = range(rng.randint(1, 4))
            m = meet(random_operator(A, rng), random_operator(A, rng))
            assert cq.check_axioms(m).passed()


class TestChains:
    def test_composition_criterion_matches_order(self):
        rng = random.Random(21)
        checked = 0
        while checked < 250:
            A = range(rng.randint(1, 4))
            a, b = random_operator(A, rng), random_operator(A, rng)
            assert composition_criterion(a, b) == stronger_than(a, b)
            checked += 1

    @settings(max_examples=60)
    @given(st.integers(0, 2**32 - 1))
    def test_chain_report_agrees(self, seed):
        rng = random.Random(seed)
        A = range(rng.randint(1, 3))
        family = [random_operator(A, rng) for _ in range(3)]
        report = is_chain(family)
        assert report.agree
        assert len(report.pairs) == 3

    def test_two_incomparable_operators(self):
        A = ("a", "b", "c")
        to_b, to_c = adds(A, "a", "b", "to_b"), adds(A, "a", "c", "to_c")
        report = is_chain([to_b, to_c])
        assert not report.comparable and not report.composition and report.agree

    def test_mp_caps_form_a_chain(self):
        family = [operators.mp_operator(n) for n in range(4)] + [operators.mp_operator(None)]
        report = is_chain(family)
        assert report.comparable and report.agree

    def test_rejects_non_closure(self):
        shrink = cq.ClosureOperator(range(2), lambda B: frozenset(B) - {0}, "shrink")
        with pytest.raises(AxiomPrecondition):
            is_chain([shrink, cq.identity_operator(range(2))])


class TestLengths:
    def test_symbol_length(self):
        assert symbol_length("V&V&b") == 5
        assert symbol_length(parse("(V&b)")) == 3

    def test_g_levels_are_ordered(self):
        base = ("b", "d")
        for n in range(4):
            assert length_order(G(base, n), G(base, n + 1))
            assert not length_order(G(base, n + 1), G(base, n))
            assert {symbol_length(x) for x in G(base, n)} == {2 * n + 1}

    def test_length_order_examples(self):
        assert length_order(["b"], ["V&b", "b"])
        assert not length_order(["V&b"], ["b"])

    def test_empty_sets_rejected(self):
        with pytest.raises(EmptySet):
            length_order([], ["b"])

    def test_set_better_than(self):
        assert set_better_than(["bold"], ["very,|||bold"])
        assert not set_better_than(["very,|||bold"], ["bold"])
        assert not set_better_than(["bold"], ["very,|||kind"])
        assert set_better_than([], ["bold"])


class TestSystems:
    def test_deductive_systems(self):
        C = operators.mp_operator(None)
        T = mp_close({P(0), imp(P(0), P(1))})
        assert is_deductive_system(C, T)
        assert not is_deductive_system(C, {P(0), imp(P(0), P(1))})

    def test_basis_is_minimal(self):
        rng = random.Random(13)
        for _ in range(60):
            A = tuple(range(rng.randint(1, 5)))
            C = random_operator(A, rng)
            B = frozenset(x for x in A if rng.random() < 0.6)
            F = minimal_finite_basis(C, B)
            assert F <= B and C(F) == C(B)
            # no proper subset works, checked exhaustively
            assert all(C(S) != C(B) for S in all_subsets(F) if S != F)

    def test_basis_examples(self):
        adj = operators.adjective_operator()
        x = next(w for w in adj.universe if str(w) == "very,|||very,|||bold")
        assert {str(w) for w in minimal_finite_basis(adj, adj(frozenset([x])))} == {"very,|||very,|||bold"}
        mp = operators.mp_operator(None)
        T = mp_close({P(0), imp(P(0), P(1))})
        assert minimal_finite_basis(mp, T) == {P(0), imp(P(0), P(1))}

    def test_basis_needs_monotone(self):
        # the empty set yields 0 but {1} does not
        jumpy = cq.ClosureOperator(range(2), lambda B: frozenset(B) or frozenset({0}), "jumpy")
        with pytest.raises(AxiomPrecondition):
            minimal_finite_basis(jumpy, {1})


class TestChainUnion:
    def test_stabilizes_at_the_largest_index(self):
        B = [P(2), parse("P2->P0")]
        assert stabilization_cap(B) == 2
        assert chain_union_closure(B) == mp_close(B)

    def test_counterexample_needs_the_top_cap(self):
        for m in range(1, 5):
            B = operators.chain_counterexample(0, m)
            assert stabilization_cap(B) == m

    def test_union_equals_full_closure(self):
        from ultralogic.acceptance import random_premises

        rng = random.Random(17)
        for _ in range(80):
            B = random_premises(rng)
            assert chain_union_closure(B) == mp_close(B)
            assert stabilization_cap(B) <= max(f for x in B for f in x.primitive_indices())
