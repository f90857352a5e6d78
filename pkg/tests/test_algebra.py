"""
Test PBW normal forms, multiplication and the classical-limit oracle
"""
from pathlib import Path
import sys

import pytest
import sympy
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from engine.algebra import (ALPHA, BETA, DELTA, LETTERS, UNIT, Element, Monomial, Tensor,
                            matrix_representation, monomials_of_degree, multiply, normal_form,
                            pbw_monomials, tensor_multiply2, verify_algebra, word_matrix)
from engine.report import CheckStatus
from engine.scalar import I_LAMBDA, LAMBDA, ONE, GaussRational, Scalar
from utils.exceptions import DomainViolationError

a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))
I = Element.one()

words = st.lists(st.sampled_from(LETTERS), max_size=6).map(tuple)
small_scalars = st.builds(
    lambda re, im, power: Scalar({power: GaussRational(re, im)}),
    st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 2))
monomials = st.sampled_from(pbw_monomials(2))
elements = st.lists(st.tuples(monomials, small_scalars), max_size=4).map(Element)


class TestNormalForm:
    def test_commutator_alpha_beta(self):
        assert normal_form((ALPHA, BETA)) - normal_form((BETA, ALPHA)) == a.scale(I_LAMBDA)
        assert normal_form((ALPHA, BETA)) == b * a + a.scale(I_LAMBDA)

    def test_commutator_alpha_delta(self):
        assert normal_form((ALPHA, DELTA)) == normal_form((DELTA, ALPHA))

    def test_three_letter_word(self):
        expected = Element.monomial(Monomial(1, 1, 1)) + Element.monomial(Monomial(0, 1, 1), I_LAMBDA)
        assert normal_form((DELTA, BETA, ALPHA)) == expected

    @pytest.mark.parametrize("strategy", ["leftmost", "rightmost", "random"])
    def test_sorted_words_are_fixed(self, strategy):
        for monomial in pbw_monomials(3):
            assert normal_form(monomial.word(), strategy, seed=7) == Element.monomial(monomial)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            normal_form((ALPHA,), 'outermost')

    def test_unknown_letter(self):
        with pytest.raises(DomainViolationError):
            normal_form(('x',))

    @settings(max_examples=100, deadline=None)
    @given(words, st.integers(0, 1000))
    def test_diamond_property(self, word, seed):
        leftmost = normal_form(word, 'leftmost')
        assert normal_form(word, 'rightmost') == leftmost
        assert normal_form(word, 'random', seed=seed) == leftmost


class TestMultiply:
    def test_examples(self):
        assert b * b == Element.monomial(Monomial(2, 0, 0))
        assert a * b == b * a + a.scale(I_LAMBDA)
        expected = Element.monomial(Monomial(2, 1, 1)) + Element.monomial(Monomial(1, 1, 1), I_LAMBDA)
        assert (b * a) * (b * d) == expected

    def test_unit(self):
        x = b * a + d.scale(LAMBDA)
        assert I * x == x
        assert x * I == x

    def test_powers(self):
        assert b ** 0 == I
        assert (a * b) ** 2 == (a * b) * (a * b)
        with pytest.raises(DomainViolationError):
            b ** -1

    def test_ore_formula_against_rewriting(self):
        for left in pbw_monomials(3):
            for right in pbw_monomials(3):
                product = multiply(Element.monomial(left), Element.monomial(right))
                assert product == normal_form(left.word() + right.word())

    def test_exhaustive_associativity(self):
        basis = [Element.monomial(m) for m in pbw_monomials(2)]
        for x in basis:
            for y in basis:
                for z in basis:
                    assert (x * y) * z == x * (y * z)

    @settings(max_examples=60, deadline=None)
    @given(elements, elements, elements)
    def test_random_associativity(self, x, y, z):
        assert (x * y) * z == x * (y * z)

    @settings(max_examples=60, deadline=None)
    @given(elements, elements)
    def test_commutative_at_lambda_zero(self, x, y):
        assert (x * y).substitute_lambda(0) == (y * x).substitute_lambda(0)


class TestMonomials:
    def test_degree_one(self):
        assert pbw_monomials(1) == [UNIT, Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)]

    def test_counts(self):
        assert len(pbw_monomials(3)) == 20
        assert len(monomials_of_degree(2)) == 6

    def test_negative_degree(self):
        with pytest.raises(DomainViolationError):
            pbw_monomials(-1)

    def test_from_word_requires_order(self):
        assert Monomial.from_word((BETA, ALPHA, ALPHA)) == Monomial(1, 2, 0)
        with pytest.raises(DomainViolationError):
            Monomial.from_word((ALPHA, BETA))

    def test_text(self):
        assert Monomial(2, 1, 0).text() == "b^2*a"
        assert UNIT.text() == "1"


class TestElementText:
    def test_canonical_text(self):
        assert (a * b).to_text() == "b*a + i*l*a"
        assert Element.zero().to_text() == "0"
        assert (b.scale(-1) + a * d).to_text() == "a*d - b"

    def test_substitute_lambda(self):
        assert (a * b).substitute_lambda(0) == b * a
        assert (a * b).substitute_lambda(1) == b * a + a.scale(Scalar.i())


class TestTensor:
    def test_coproduct_product(self):
        delta_a = Tensor.pure(I, a) + Tensor.pure(a, I)
        delta_d = Tensor.pure(I, d) + Tensor.pure(d, I)
        expected = (Tensor.pure(I, a * d) + Tensor.pure(d, a)
                    + Tensor.pure(a, d) + Tensor.pure(a * d, I))
        assert tensor_multiply2(delta_a, delta_d) == expected

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            Tensor.unit(2) * Tensor.unit(3)


class TestMatrixOracle:
    def test_unit_is_identity(self):
        assert matrix_representation(I) == sympy.eye(3)

    def test_commutators_vanish(self):
        assert matrix_representation(a * d - d * a) == sympy.zeros(3, 3)
        assert matrix_representation(a * b - b * a) == sympy.zeros(3, 3)

    def test_nonzero_lambda_rejected(self):
        with pytest.raises(DomainViolationError):
            matrix_representation(a, lambda_value=1)

    @pytest.mark.parametrize("word", ["bdd", "dbd", "ddb", "bad"])
    def test_agrees_with_unreduced_words(self, word):
        difference = matrix_representation(normal_form(tuple(word))) - word_matrix(tuple(word))
        assert difference.expand().is_zero_matrix


class TestVerifyAlgebra:
    def test_all_checks_pass(self):
        report = verify_algebra(2, max_word_length=4)
        assert report.ok
        assert {record.status for record in report.checks} == {CheckStatus.PASS}
        assert report.get('algebra.diamond') is not None

    def test_classical_limit_at_degree_three(self):
        report = verify_algebra(3, max_word_length=3)
        assert report.get('algebra.classical_limit').status == CheckStatus.PASS
        assert report.ok
