import pytest
from hypothesis import given, strategies as st

from ultralogic.engines.formula import Atom, Bin, Not, P, conj, imp, parse
from ultralogic.errors import FormulaSyntaxError

atoms = st.sampled_from([P(0), P(1), P(2), Atom("V"), Atom("c"), Atom("b")])
formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Not, sub),
        st.builds(Bin, st.sampled_from(["&", "|", "->", "<->"]), sub, sub),
    ),
    max_leaves=8,
)


def test_canonical_printing():
    assert str(conj(Atom("V"), Atom("b"))) == "(V&b)"
    assert str(Not(imp(P(0), P(1)))) == "!(P0->P1)"


def test_right_association():
    assert parse("V&V&b") == conj(Atom("V"), conj(Atom("V"), Atom("b")))
    assert parse("P0->P1->P2") == imp(P(0), imp(P(1), P(2)))


def test_precedence():
    assert str(parse("!P0&P1|P2->P3<->P4")) == "((((!P0&P1)|P2)->P3)<->P4)"
    assert str(parse("!(P0&P1)")) == "!(P0&P1)"


def test_length_ignores_parentheses():
    assert parse("V&V&b").length() == 5
    assert parse("((V&b)->b)").length() == 5
    assert parse("!P0").length() == 2


def test_primitive_indices():
    f = parse("(P3->(V&P10))")
    assert f.primitive_indices() == {3, 10}
    assert Atom("V").index is None


def test_whitespace_is_ignored():
    assert parse(" ( P0 -> P1 ) ") == imp(P(0), P(1))


@pytest.mark.parametrize("bad", ["", "P0->", "(P0", "P0)", "P0 P1", "&", "P0 # P1", "->P1"])
def test_syntax_errors(bad):
    with pytest.raises(FormulaSyntaxError):
        parse(bad)


def test_bad_atom_name():
    with pytest.raises(FormulaSyntaxError):
        Atom("1x")


@given(formulas)
def test_print_parse_round_trip(f):
    assert parse(str(f)) == f


@given(formulas, st.dictionaries(st.sampled_from(["P0", "P1", "P2", "V", "c", "b"]), st.booleans(), min_size=6))
def test_evaluation_of_implication(f, valuation):
    g = imp(f, f)
    assert g.evaluate(valuation) is True
