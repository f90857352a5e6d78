"""
Test the dual functionals, convolution and the commutation functionals
"""
from fractions import Fraction
from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from engine.algebra import ALPHA, BETA, DELTA, UNIT, Element, Monomial
from engine.calculus import DifferentialCalculus
from engine.dual import PRINTED_BASE, DualAlgebra, Functional
from engine.hopf import HopfAlgebra
from engine.ideal import RightIdeal, fit_ad_invariant_shift
from engine.report import CheckStatus
from engine.scalar import I_LAMBDA, ONE, ZERO
from utils.exceptions import DomainViolationError

a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))
I = Element.one()


@pytest.fixture(scope="module")
def hopf():
    return HopfAlgebra()


@pytest.fixture(scope="module")
def printed(hopf):
    return DualAlgebra(DifferentialCalculus(hopf, RightIdeal(hopf)))


@pytest.fixture(scope="module")
def corrected(hopf):
    return DualAlgebra(DifferentialCalculus(hopf, RightIdeal(hopf, fit_ad_invariant_shift(hopf))))


class TestFunctional:
    def test_linear_combinations(self):
        one = Functional(lambda m: ONE, 'one')
        degree = Functional(lambda m: ONE * m.degree, 'deg')
        assert (one + degree)(Monomial(1, 1, 0)) == 3
        assert (one - degree)(b * b) == -1
        assert (-one)(I) == -1
        assert one.scale(I_LAMBDA)(a + b) == I_LAMBDA * 2

    def test_agrees_with_returns_first_difference(self):
        zero = Functional(lambda m: ZERO, '0')
        beta_only = Functional(lambda m: ONE if m == Monomial(1, 0, 0) else ZERO, 'b')
        assert zero.agrees_with(zero, 3) is None
        assert zero.agrees_with(beta_only, 3) == Monomial(1, 0, 0)


class TestVectorFields:
    def test_pairing(self, printed):
        for i in (ALPHA, BETA, DELTA):
            for j in (ALPHA, BETA, DELTA):
                assert printed.chi(i)(Element.generator(j)) == (ONE if i == j else ZERO)

    def test_chi_on_unit(self, printed):
        for letter in (ALPHA, BETA, DELTA):
            assert printed.chi(letter)(I) == ZERO

    def test_chi_beta_on_beta_squared(self, printed, corrected):
        assert printed.chi(BETA)(b * b) == -I_LAMBDA * 2
        assert corrected.chi(BETA)(b * b) == I_LAMBDA * 2

    def test_chi_action_recovers_differential(self, printed):
        x = b * b + a * d
        for letter in (ALPHA, BETA, DELTA):
            assert printed.chi_action(letter, x) == printed.calculus.differential(x).coefficient(letter)

    def test_epsilon_is_convolution_unit(self, printed):
        eps = printed.epsilon_functional
        chi_b = printed.chi(BETA)
        assert printed.convolve(eps, chi_b).agrees_with(chi_b, 3) is None
        assert printed.convolve(chi_b, eps).agrees_with(chi_b, 3) is None

    def test_convolution_power_zero_is_epsilon(self, printed):
        assert printed.convolution_power(printed.chi(BETA), 0) is printed.epsilon_functional


class TestBrackets:
    def test_corrected_bracket_closes(self, corrected):
        chi_a, chi_b, chi_d = (corrected.chi(letter) for letter in (ALPHA, BETA, DELTA))
        orders = [corrected.commutator(chi_a, chi_d), corrected.commutator(chi_d, chi_a)]
        assert any(bracket.agrees_with(chi_b, 3) is None for bracket in orders)
        zero = Functional(lambda m: ZERO, '0')
        assert corrected.commutator(chi_a, chi_b).agrees_with(zero, 3) is None

    def test_printed_bracket_breaks_on_beta_squared(self, printed):
        chi_a, chi_b, chi_d = (printed.chi(letter) for letter in (ALPHA, BETA, DELTA))
        orders = [printed.commutator(chi_a, chi_d), printed.commutator(chi_d, chi_a)]
        assert any(bracket.agrees_with(chi_b, 1) is None for bracket in orders)
        assert all(bracket.agrees_with(chi_b, 2) is not None for bracket in orders)


class TestCommutationFunctionals:
    def test_f_beta_is_affine_in_chi_beta(self, printed):
        f_b = printed.f_from_commutation(BETA)
        assert f_b.agrees_with(printed.binomial_series(1, printed.derived_base), 4) is None

    def test_derived_base(self, printed, corrected):
        assert printed.derived_base == PRINTED_BASE
        assert corrected.derived_base == -PRINTED_BASE

    def test_fitted_exponents(self, printed, corrected):
        assert printed.fit_exponent(printed.f_from_commutation(ALPHA), 3) == [Fraction(-1, 2)]
        assert corrected.fit_exponent(corrected.f_from_commutation(ALPHA), 3) == [Fraction(1, 2)]
        assert corrected.fit_exponent(corrected.f_from_commutation(DELTA), 3) == [Fraction(1, 2)]

    def test_f_is_grouplike(self, corrected):
        for letter in (ALPHA, BETA, DELTA):
            assert corrected.grouplike_check(corrected.f_from_commutation(letter), 3).passed

    def test_f_at_unit(self, printed):
        assert printed.f_matrix(ALPHA, ALPHA)(UNIT) == ONE
        assert printed.f_matrix(ALPHA, BETA)(UNIT) == ZERO

    def test_series_exponent_domain(self, printed):
        with pytest.raises(DomainViolationError):
            printed.binomial_series(2)


class TestVerifyQuantumLie:
    def test_nilpotence(self, printed):
        report = printed.verify_nilpotence(4, 6)
        assert report.get('dual.nilpotence').status == CheckStatus.PASS

    def test_printed_report(self, printed):
        report = printed.verify_quantum_lie(2)
        assert report.ok, [r.id for r in report.failures]
        assert report.get('dual.printed_f[f_a]').status == CheckStatus.DISCREPANCY
        assert report.get('dual.chi_pairing').status == CheckStatus.PASS

    def test_corrected_report(self, corrected):
        report = corrected.verify_quantum_lie(2)
        assert report.ok, [r.id for r in report.failures]
        assert report.get('dual.bracket[chi_a,chi_d]=chi_b').status == CheckStatus.PASS
        assert report.get('dual.generator_identification').status == CheckStatus.PASS
        assert report.get('dual.f_closed_form[f_a]').status == CheckStatus.PASS


class TestDegreeFiveBounds:
    def test_brackets_close_on_degree_five(self, corrected):
        report = corrected.verify_quantum_lie(5)
        for name in ('dual.bracket[chi_a,chi_b]', 'dual.bracket[chi_d,chi_b]', 'dual.bracket[chi_a,chi_d]=chi_b'):
            assert report.get(name).status == CheckStatus.PASS

    def test_commutation_functionals_on_degree_five(self, printed):
        report = printed.verify_quantum_lie(5)
        assert report.ok, [r.id for r in report.failures]
        assert report.get('dual.f_diagonal').status == CheckStatus.PASS
        for letter in (ALPHA, BETA, DELTA):
            assert report.get(f"dual.grouplike[f_{letter}]").status == CheckStatus.PASS
            assert report.get(f"dual.f_closed_form[f_{letter}]").status == CheckStatus.PASS
        assert printed.fit_exponent(printed.f_from_commutation(ALPHA, 5), 5) == [Fraction(-1, 2)]
        assert printed.f_from_commutation(BETA, 5).agrees_with(
            printed.binomial_series(1, printed.derived_base), 5) is None

    @pytest.mark.parametrize("letter", [ALPHA, BETA, DELTA])
    def test_vector_field_coproducts_on_degree_five(self, corrected, letter):
        chi = corrected.chi(letter)
        f = corrected.f_from_commutation(letter, 5)
        check = corrected.functional_coproduct_check(chi, [(chi, f), (corrected.epsilon_functional, chi)], 5)
        assert check.passed, check.witness()
