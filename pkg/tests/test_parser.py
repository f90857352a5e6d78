"""
Test the expression parser
"""
from fractions import Fraction
from pathlib import Path
import sys

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from engine.algebra import ALPHA, BETA, DELTA, Element, Monomial, pbw_monomials
from engine.parser import Generator, Power, Product, Sum, parse, parse_element
from engine.scalar import GaussRational, I_LAMBDA, LAMBDA, Scalar
from utils.exceptions import ParseError, UnknownIdentifierError

a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))

coefficients = st.builds(
    lambda re, im, power: Scalar({power: GaussRational(re, im)}),
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
    st.fractions(min_value=-4, max_value=4, max_denominator=5),
    st.integers(0, 2))
random_elements = st.lists(
    st.tuples(st.sampled_from(pbw_monomials(4)), coefficients), max_size=5).map(Element)


class TestParse:
    def test_relation_vanishes(self):
        assert parse_element("a*b - b*a - i*l*a").is_zero()
        assert parse_element("d*b - b*d - i*l*d").is_zero()
        assert parse_element("alpha*delta - delta*alpha").is_zero()

    def test_long_names(self):
        assert parse_element("beta^2*alpha") == parse_element("b^2*a")

    def test_order_is_preserved(self):
        assert parse_element("a*b") == b * a + a.scale(I_LAMBDA)

    def test_tree_shape(self):
        tree = parse("-b^2 + a*d")
        assert isinstance(tree, Sum)
        assert tree.terms[0][0] == '-'
        assert tree.terms[0][1] == Power(Generator(BETA), 2)
        assert isinstance(tree.terms[1][1], Product)

    def test_scalars(self):
        assert parse_element("3/2") == Element.scalar(Fraction(3, 2))
        assert parse_element("l^2*b") == b.scale(LAMBDA ** 2)
        assert parse_element("(1 + 2*i)*b") == b.scale(Scalar.constant(GaussRational(1, 2)))
        assert parse_element("1") == Element.one()

    def test_whitespace_insensitive(self):
        assert parse_element("  a *  b-b*a ") == parse_element("a*b-b*a")
        assert parse_element("3 / 4 * d") == d.scale(Fraction(3, 4))

    def test_leading_plus(self):
        assert parse_element("+a") == a

    def test_nested_groups(self):
        assert parse_element("(a + b)^2") == a * a + a * b + b * a + b * b


class TestParseErrors:
    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifierError) as exc_info:
            parse("a + x")
        assert exc_info.value.position == 4
        assert "at position 4" in str(exc_info.value)

    @pytest.mark.parametrize("source", ["a +", "a ** b", "(a", "a^-1", "*a", ""])
    def test_syntax_errors(self, source):
        with pytest.raises(ParseError) as exc_info:
            parse(source)
        assert exc_info.value.position is not None

    def test_division_by_zero(self):
        with pytest.raises(ParseError):
            parse("1/0*a")


class TestRoundTrip:
    @settings(max_examples=200, deadline=None)
    @given(random_elements)
    def test_canonical_text_parses_back(self, x):
        assert parse_element(x.to_text()) == x

    def test_monomial_texts(self):
        for monomial in pbw_monomials(3):
            assert parse_element(monomial.text()) == Element.monomial(monomial)
