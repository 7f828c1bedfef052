from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from ultralogic import consequence as cq
from ultralogic.engines import operators
from ultralogic.engines.behavior import (
    PERFECT,
    BPWord,
    Incomparable,
    adjective_close,
    adjective_rules,
    better_than,
    bpc_bar,
    generate_bp,
    pi_w_close,
    rule_system_close,
)

bold = lambda n: BPWord(n, "bold")  # noqa: E731

words = st.builds(BPWord, st.integers(0, 5), st.sampled_from(["bold", "kind", "calm"]))


class TestGeneration:
    def test_bold_depth_two(self):
        assert {str(x) for x in generate_bp(["bold"], 2)} == {
            "bold",
            "very,|||bold",
            "very,|||very,|||bold",
        }

    def test_depth_zero(self):
        assert generate_bp(["bold", "kind"], 0) == {bold(0), BPWord(0, "kind")}

    def test_count(self):
        assert len(generate_bp(["a", "b", "c"], 4)) == 15
        for size in range(1, 4):
            for depth in range(5):
                assert len(generate_bp([f"x{i}" for i in range(size)], depth)) == size * (depth + 1)

    def test_bpc_bar_adds_perfect(self):
        assert bpc_bar(["bold"], 1) == {bold(0), bold(1), PERFECT}

    def test_word_and_formula_forms(self):
        x = BPWord.parse("very,|||very,|||bold")
        assert x == bold(2)
        assert str(x.as_formula()) == "(V&(V&bold))"
        assert x.word(blank="_") == "very,_very,_bold"

    def test_invalid(self):
        with pytest.raises(ValueError):
            BPWord(-1, "bold")
        with pytest.raises(ValueError):
            generate_bp([], 2)


class TestAdjective:
    def test_examples(self):
        assert adjective_close({"very,|||very,|||bold"}) == {bold(0), bold(1), bold(2)}
        assert adjective_close(set()) == frozenset()
        assert adjective_close({"bold"}) == {bold(0)}

    @given(st.sets(words, max_size=5))
    def test_rule_system_agrees(self, B):
        universe = generate_bp(["bold", "kind", "calm"], 5)
        assert rule_system_close(B, adjective_rules(universe)) == adjective_close(B)

    def test_rules_end_at_the_base(self):
        rules = adjective_rules([bold(3)])
        assert rules[bold(3)] == (bold(2), bold(1), bold(0))

    def test_consequence_operator_exhaustive(self):
        op = operators.adjective_operator(("bold", "kind", "calm"), 3)
        assert len(op.universe) == 12
        assert cq.check_axioms(op).passed()

    def test_consequence_operator_sampled(self):
        op = operators.adjective_operator(("bold", "kind", "calm"), 9)
        assert len(op.universe) == 30
        assert cq.check_axioms(op, samples=300, seed=4).passed()


class TestPiW:
    ambient = bpc_bar(["bold", "kind"], 2)

    def test_examples(self):
        assert pi_w_close({PERFECT}, self.ambient) == self.ambient
        assert pi_w_close({"bold"}, self.ambient) == {bold(0)}
        assert pi_w_close(set(), self.ambient) == frozenset()

    def test_outside_ambient(self):
        with pytest.raises(ValueError):
            pi_w_close({bold(7)}, self.ambient)

    def test_consequence_operator(self):
        op = operators.pi_w_operator(("bold", "kind"), 4)
        assert len(op.universe) == 11
        assert cq.check_axioms(op).passed()
        big = operators.pi_w_operator(("bold", "kind", "calm"), 8)
        assert len(big.universe) == 28
        assert cq.check_axioms(big, samples=300, seed=1).passed()


class TestBetterThan:
    def test_examples(self):
        assert better_than("bold", "very,|||bold") is True
        assert better_than("very,|||bold", "bold") is False
        assert better_than("very,|||bold", "very,|||kind") is Incomparable
        assert better_than(bold(3), bold(3)) is True

    def test_incomparable_has_no_truth_value(self):
        with pytest.raises(TypeError):
            bool(Incomparable)

    def test_total_order_on_one_base(self):
        chain = sorted(generate_bp(["bold"], 6), key=lambda x: x.very_count)
        for i, x in enumerate(chain):
            for j, y in enumerate(chain):
                assert better_than(x, y) == (i <= j)

    def test_antisymmetric_on_comparable_pairs(self):
        universe = generate_bp(["bold", "kind"], 4)
        for x, y in combinations(universe, 2):
            r, s = better_than(x, y), better_than(y, x)
            if r is not Incomparable:
                assert not (r and s)
