import random
from itertools import combinations

import pytest

from ultralogic import superstructure as sup
from ultralogic.errors import CapExceeded, DepthUnavailable
from ultralogic.superstructure import (
    EMPTY,
    Superstructure,
    Ur,
    atomicity_premise,
    ground_battery,
    is_n_atomic,
    is_transitive,
    parse_vset,
    render,
    transitive_closure,
)

a, b = Ur("a"), Ur("b")


def literal_levels(X0, depth):
    """Oracle: iterate X_{n+1} = X_n | P(X_n) by brute force."""
    levels = [frozenset(X0)]
    for _ in range(depth):
        prev = list(levels[-1])
        power = {frozenset(c) for r in range(len(prev) + 1) for c in combinations(prev, r)}
        levels.append(levels[-1] | power)
    return levels


class TestLevels:
    def test_single_atom_sizes(self):
        ss = Superstructure({a}, 4)
        # both the empty set and {a} already sit in X1, so X2 has 9 members
        assert [ss.size(n).exact for n in range(4)] == [1, 3, 9, 513]
        assert ss.size(2).exact == len(literal_levels({a}, 2)[2]) == 9
        assert ss.size(4).exact == 2**513 + 1
        assert ss.size(4).to_dict() == {"expr": "2^513 + 1"}

    def test_level_two_members(self):
        ss = Superstructure({a}, 2)
        assert {render(x) for x in ss.level(2)} == {
            "a", "{}", "{a}", "{{}}", "{{a}}", "{a, {}}", "{a, {a}}", "{{}, {a}}", "{a, {}, {a}}",
        }

    def test_sizes_match_brute_force(self):
        for X0 in ground_battery():
            ss = Superstructure(X0, 2)
            lit = literal_levels(X0, 2)
            assert [ss.size(n).exact for n in range(3)] == [len(x) for x in lit]

    def test_symbolic_path_matches_literal(self, monkeypatch):
        monkeypatch.setattr(sup, "MATERIALIZE_FROM", 1)
        for X0 in [{a}, {EMPTY}, {a, b}, {a, frozenset({a})}, {frozenset({EMPTY})}]:
            lit = literal_levels(X0, 1)
            # brute force only while the next power set stays small
            while len(lit) < 4 and len(lit[-1]) <= 10:
                lit = literal_levels(X0, len(lit))
            depth = len(lit) - 1
            assert depth >= 2
            lazy = Superstructure(X0, depth)
            assert not lazy.materialized(depth)
            for n in range(depth + 1):
                assert lazy.size(n).exact == len(lit[n])
                assert all(lazy.contains(x, n) == (x in lit[n]) for x in lit[depth])
                assert lazy.levels_nested(n)
                assert lazy.is_x0_transitive(n)[0]
                if n < depth:
                    assert lazy.members_drop_a_level(n)[0]

    def test_reduced_checks_above_the_listing_cap(self):
        ss = Superstructure({a}, 4)
        assert not ss.materialized(4)
        assert ss.is_x0_transitive(4) == (True, "reduced")
        assert ss.members_drop_a_level(3) == (True, "reduced")
        assert ss.is_x0_transitive(2) == (True, "literal")
        with pytest.raises(CapExceeded):
            ss.level(4)

    def test_membership_above_the_cap(self):
        ss = Superstructure({a}, 4)
        rng = random.Random(0)
        X3 = list(ss.level(3))
        for _ in range(50):
            x = frozenset(rng.sample(X3, rng.randint(0, 5)))
            assert ss.contains(x, 4)
        assert not ss.contains(b, 4)
        assert not ss.contains(frozenset({b}), 4)

    def test_caps(self):
        with pytest.raises(CapExceeded):
            Superstructure({a, b, Ur("c"), Ur("d")}, 1)
        with pytest.raises(CapExceeded):
            Superstructure({a}, 5)
        with pytest.raises(DepthUnavailable):
            Superstructure({a}, 2).size(3)

    def test_serialized_sizes(self):
        assert Superstructure({a}, 3).to_dict() == {
            "ground": ["a"], "depth": 3, "sizes": [{"exact": n} for n in (1, 3, 9, 513)],
        }


class TestClosure:
    def test_examples(self):
        assert transitive_closure(parse_vset("{{a}}")) == {frozenset({a}), a}
        assert transitive_closure(EMPTY) == EMPTY
        assert transitive_closure(parse_vset("{{}}")) == {EMPTY}
        assert transitive_closure(a) == EMPTY

    def test_closure_is_transitive_and_least(self):
        for X0 in ground_battery():
            T = transitive_closure(X0)
            assert X0 <= T
            assert is_transitive(T, {x for x in T if isinstance(x, Ur)})
            assert transitive_closure(T) == T

    def test_transitivity_relative_to_ground(self):
        assert not is_transitive({frozenset({a})})
        assert is_transitive({frozenset({a}), a}, {a})


class TestAtomicity:
    def test_examples(self):
        assert atomicity_premise({a})
        assert not atomicity_premise({EMPTY})
        assert not atomicity_premise({frozenset({a}), a})
        assert atomicity_premise({frozenset({a})})

    def test_premise_gives_atomic_levels(self):
        count = 0
        for X0 in ground_battery():
            if atomicity_premise(X0):
                count += 1
                ss = Superstructure(X0, 3)
                assert all(is_n_atomic(X0, n, ss) for n in range(4))
        assert count == 28


class TestParser:
    def test_nested(self):
        assert parse_vset("{{a}, a}") == frozenset({frozenset({a}), a})
        assert parse_vset("{}") == EMPTY
        assert parse_vset("a") == a

    def test_render_round_trip(self):
        for X0 in ground_battery():
            assert parse_vset(render(X0)) == X0

    def test_render_is_sorted(self):
        assert render(parse_vset("{{a}, b, a}")) == "{a, b, {a}}"

    @pytest.mark.parametrize("bad", ["{a", "{a,,b}", "{a} b", "", "{a;b}"])
    def test_errors(self, bad):
        with pytest.raises(ValueError):
            parse_vset(bad)
