"""
Test the first-order calculus, the braiding and the exterior square
"""
from pathlib import Path
import sys

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from engine.algebra import ALPHA, BETA, DELTA, Element, Tensor, pbw_monomials
from engine.calculus import WEDGE_BASIS, BiForm, DifferentialCalculus, OneForm, TwoForm
from engine.hopf import HopfAlgebra
from engine.ideal import RightIdeal, fit_ad_invariant_shift
from engine.report import CheckStatus
from engine.scalar import I_LAMBDA, ONE, ZERO
from utils.exceptions import DomainViolationError

a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))
I = Element.one()
w_a, w_b, w_d = (OneForm.basis(letter) for letter in (ALPHA, BETA, DELTA))


@pytest.fixture(scope="module")
def hopf():
    return HopfAlgebra()


@pytest.fixture(scope="module")
def printed(hopf):
    return DifferentialCalculus(hopf, RightIdeal(hopf))


@pytest.fixture(scope="module")
def corrected(hopf):
    return DifferentialCalculus(hopf, RightIdeal(hopf, fit_ad_invariant_shift(hopf)))


class TestDifferential:
    def test_generators(self, printed):
        assert printed.differential(a) == w_a
        assert printed.differential(d) == w_d
        assert printed.differential(b) == w_b + OneForm.basis(DELTA, a)

    def test_constants_are_closed(self, printed):
        assert printed.differential(I.scale(I_LAMBDA)).is_zero()

    def test_beta_form_from_differentials(self, printed):
        # w_b = db - a dd, w_d = dd
        assert printed.differential(b) - printed.differential(d).left_multiply(a) == w_b

    def test_leibniz(self, printed):
        x, y = b * a + d, b * b - a
        expected = printed.oneform_times_element(printed.differential(x), y) \
            + printed.differential(y).left_multiply(x)
        assert printed.differential(x * y) == expected

    def test_text(self, printed):
        assert printed.differential(b).to_text() == "w_b + a*w_d"


class TestBimodule:
    def test_commutators_with_beta(self, printed):
        assert printed.commutator_with(b, ALPHA) == OneForm.basis(ALPHA, Element.scalar(-I_LAMBDA))
        assert printed.commutator_with(b, DELTA) == OneForm.basis(DELTA, Element.scalar(-I_LAMBDA))
        assert printed.commutator_with(b, BETA) == OneForm.basis(BETA, Element.scalar(I_LAMBDA * 2))

    def test_commutator_follows_shift(self, corrected):
        assert corrected.commutator_with(b, BETA) == OneForm.basis(BETA, Element.scalar(-I_LAMBDA * 2))

    def test_alpha_and_delta_commute_with_forms(self, printed):
        for x in (a, d):
            for letter in (ALPHA, BETA, DELTA):
                assert printed.commutator_with(x, letter).is_zero()

    def test_right_coefficient_round_trip(self, printed):
        w = OneForm.basis(BETA, b * b) + OneForm.basis(ALPHA, a * d)
        assert printed.from_right_coefficients(printed.to_right_coefficients(w)) == w


class TestMaurerCartanForms:
    def test_omega_from_pi(self, printed):
        for letter, (form, cls) in printed.omega_basis().items():
            assert form == OneForm.basis(letter)
            assert cls.to_element() == Element.generator(letter)

    def test_r_round_trip(self, printed):
        source = Tensor.pure(I, b)
        assert printed.r_map(printed.r_inverse(source)) == source

    def test_pi_outside_domain(self, printed):
        with pytest.raises(DomainViolationError):
            printed.pi_map(Tensor.pure(I, a))


class TestBraiding:
    @pytest.mark.parametrize("calculus_name", ["printed", "corrected"])
    def test_eta_recovers_left_invariant_forms(self, request, calculus_name):
        calculus = request.getfixturevalue(calculus_name)
        assert calculus.eta_round_trip() == []
        assert calculus.verify_calculus(2).get('calculus.eta').status == CheckStatus.PASS

    @pytest.mark.parametrize("calculus_name", ["printed", "corrected"])
    def test_sigma_is_involution(self, request, calculus_name):
        calculus = request.getfixturevalue(calculus_name)
        for p in (ALPHA, BETA, DELTA):
            for q in (ALPHA, BETA, DELTA):
                pair = BiForm.basis(p, q)
                assert calculus.sigma(calculus.sigma(pair)) == pair

    def test_wedge_basis_is_identity(self, printed):
        relations = printed.wedge_relations()
        for j, pair in enumerate(WEDGE_BASIS):
            assert relations[pair] == tuple(1 if k == j else 0 for k in range(3))

    def test_wedge_of_basis_forms(self, printed):
        assert printed.wedge(w_a, w_d) == TwoForm.constant([ZERO, ONE, ZERO])
        assert printed.wedge(w_a, w_a).is_zero()


class TestCartanMaurer:
    def test_printed_ideal_structure(self, printed):
        structure = printed.cartan_maurer()
        assert structure[BETA] == TwoForm.constant([ZERO, -ONE, ZERO])
        assert structure[BETA].to_text() == "-w_a^w_d"

    def test_d_squared_fails_for_printed_ideal(self, printed):
        dd = printed.differential_on_forms(printed.differential(b * b))
        assert dd == TwoForm.constant([ZERO, I_LAMBDA * 4, ZERO])

    def test_d_squared_vanishes_for_corrected_ideal(self, corrected):
        for monomial in pbw_monomials(3):
            x = Element.monomial(monomial)
            assert corrected.differential_on_forms(corrected.differential(x)).is_zero()


class TestVerifyCalculus:
    def test_bicovariance_flag(self, printed, corrected):
        assert not printed.bicovariant
        assert corrected.bicovariant
        assert printed.consistency_status == CheckStatus.DISCREPANCY
        assert corrected.consistency_status == CheckStatus.FAIL

    def test_printed_report(self, printed):
        report = printed.verify_calculus(2)
        assert report.ok, [r.id for r in report.failures]
        assert report.get('calculus.d_squared').status == CheckStatus.DISCREPANCY
        assert report.get('calculus.printed_omega[w_a]').status == CheckStatus.PASS
        assert report.get('calculus.printed_omega[w_d]').status == CheckStatus.DISCREPANCY
        assert report.get('calculus.cartan_maurer[w_b]').status == CheckStatus.DISCREPANCY
        assert report.get('calculus.leibniz').status == CheckStatus.PASS

    def test_corrected_report(self, corrected):
        report = corrected.verify_calculus(2)
        assert report.ok, [r.id for r in report.failures]
        assert report.get('calculus.d_squared').status == CheckStatus.PASS
        assert report.get('calculus.sigma_symmetric_fixed').status == CheckStatus.PASS
