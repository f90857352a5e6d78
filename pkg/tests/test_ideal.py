"""
Test reduction modulo the right ideal R and its ad-invariance
"""
from pathlib import Path
import sys

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from engine.algebra import ALPHA, BETA, DELTA, UNIT, Element, Monomial, pbw_monomials
from engine.hopf import HopfAlgebra
from engine.ideal import PRINTED_SHIFT, QuotientClass, RightIdeal, fit_ad_invariant_shift
from engine.report import CheckStatus
from engine.scalar import I_LAMBDA, LAMBDA, ONE, GaussRational, Scalar
from utils.exceptions import DomainViolationError

a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))
I = Element.one()

coefficients = st.builds(
    lambda re, im, power: Scalar({power: GaussRational(re, im)}),
    st.integers(-3, 3), st.integers(-3, 3), st.integers(0, 2))


def elements(max_degree):
    return st.lists(st.tuples(st.sampled_from(pbw_monomials(max_degree)), coefficients),
                    max_size=4).map(Element)


@pytest.fixture(scope="module")
def hopf():
    return HopfAlgebra()


@pytest.fixture(scope="module")
def ideal(hopf):
    return RightIdeal(hopf)


@pytest.fixture(scope="module")
def corrected(hopf):
    return RightIdeal(hopf, fit_ad_invariant_shift(hopf))


class TestGenerators:
    def test_generator_names(self, ideal):
        assert set(ideal.generators) == {"a^2", "d^2", "b*a", "b*d", "a*d", "b^2 + 2*i*l*b"}
        assert ideal.sixth_generator == "b^2 + 2*i*l*b"
        assert ideal.is_printed

    def test_generators_reduce_to_zero(self, ideal):
        for generator in ideal.generators.values():
            assert ideal.is_in_ideal(generator)


class TestReduction:
    def test_generators_of_a_are_fixed(self, ideal):
        for x in (a, b, d):
            assert ideal.reduce(x).to_element() == x

    def test_beta_squared(self, ideal):
        assert ideal.reduce(b * b) == QuotientClass(c_beta=-I_LAMBDA * 2)

    def test_beta_cubed(self, ideal):
        assert ideal.reduce(b * b * b) == QuotientClass(c_beta=-(LAMBDA ** 2) * 4)

    def test_out_of_order_product(self, ideal):
        # a*b = b*a + i*l*a and b*a lies in R
        assert ideal.reduce(a * b) == QuotientClass(c_alpha=I_LAMBDA)

    def test_unit_keeps_counit(self, ideal):
        assert ideal.reduce(I + b * b).c1 == ONE
        assert not ideal.is_in_ideal(I)

    def test_trace_replays_to_difference(self, ideal):
        x = b * b * a + a * b * d + b * b
        trace = ideal.reduce_with_trace(x)
        assert trace.steps
        assert ideal.replay(trace) == x - trace.result.to_element()

    def test_closed_form_matches_reduction(self, ideal, corrected):
        for monomial in pbw_monomials(4):
            assert ideal.reduce_monomial(monomial) == ideal.closed_form_class(monomial)
            assert corrected.reduce_monomial(monomial) == corrected.closed_form_class(monomial)

    def test_quotient_class_requires_low_degree(self):
        with pytest.raises(DomainViolationError):
            QuotientClass.from_element(b * b)

    def test_quotient_basis_report(self, ideal):
        report = ideal.verify_quotient_basis(3)
        assert report.ok
        assert all(record.status == CheckStatus.PASS for record in report.checks)


class TestAdInvariance:
    def test_printed_sixth_generator_is_not_invariant(self, ideal):
        assert ideal.ad_obstruction(ideal.sixth_generator)
        assert ideal.ad_obstruction(ideal.sixth_generator, Monomial(1, 0, 0))

    def test_printed_violation_is_reported_as_discrepancy(self, ideal):
        report = ideal.verify_ad_invariance(2, on_violation=CheckStatus.DISCREPANCY)
        record = report.get(f"ideal.ad_invariance[{ideal.sixth_generator}]")
        assert record.status == CheckStatus.DISCREPANCY
        assert record.witness
        assert report.ok

    def test_fitted_shift(self, hopf):
        assert fit_ad_invariant_shift(hopf) == -PRINTED_SHIFT

    def test_corrected_ideal_is_invariant(self, corrected):
        assert corrected.sixth_generator == "b^2 - 2*i*l*b"
        assert not corrected.is_printed
        for name in corrected.generators:
            assert not corrected.ad_obstruction(name, UNIT)
        report = corrected.verify_ad_invariance(3)
        assert all(record.status == CheckStatus.PASS for record in report.checks)

    def test_corrected_beta_squared(self, corrected):
        assert corrected.reduce(b * b) == QuotientClass(c_beta=I_LAMBDA * 2)


class TestReductionLaws:
    @settings(max_examples=100, deadline=None)
    @given(elements(5), elements(5), coefficients)
    def test_linearity(self, ideal, x, y, c):
        assert ideal.reduce(x + y) == ideal.reduce(x) + ideal.reduce(y)
        assert ideal.reduce(x.scale(c)) == ideal.reduce(x).scale(c)

    @settings(max_examples=100, deadline=None)
    @given(elements(5))
    def test_representative_is_fixed(self, corrected, x):
        cls = corrected.reduce(x)
        assert corrected.reduce(cls.to_element()) == cls
        assert corrected.is_in_ideal(x - cls.to_element())

    @settings(max_examples=500, deadline=None)
    @given(elements(4))
    def test_trace_replays_for_random_elements(self, ideal, x):
        trace = ideal.reduce_with_trace(x)
        assert ideal.replay(trace) == x - trace.result.to_element()


class TestDegreeFiveBounds:
    @pytest.mark.parametrize("ideal_name", ["ideal", "corrected"])
    def test_quotient_basis_up_to_degree_five(self, request, ideal_name):
        report = request.getfixturevalue(ideal_name).verify_quotient_basis(5)
        assert all(record.status == CheckStatus.PASS for record in report.checks)

    def test_bare_generators_at_degree_zero(self, ideal, corrected):
        printed = ideal.verify_ad_invariance(0, on_violation=CheckStatus.DISCREPANCY)
        assert printed.get(f"ideal.ad_invariance[{ideal.sixth_generator}]").status == CheckStatus.DISCREPANCY
        assert printed.get("ideal.ad_invariance[a^2]").status == CheckStatus.PASS
        assert corrected.verify_ad_invariance(0).ok
