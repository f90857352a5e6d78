"""
Test the coproduct, counit, antipode and adjoint action
"""
from pathlib import Path
import sys

import pytest
from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from engine.algebra import ALPHA, BETA, DELTA, Element, Tensor, pbw_monomials, tensor_multiply
from engine.hopf import HopfAlgebra, apply_counit, flip, mult
from engine.report import CheckStatus
from engine.scalar import I_LAMBDA, ONE, ZERO

a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))
I = Element.one()


@pytest.fixture(scope="module")
def hopf():
    return HopfAlgebra()


class TestGeneratorTables:
    def test_delta_beta(self, hopf):
        assert hopf.delta(b) == Tensor.pure(I, b) + Tensor.pure(b, I) + Tensor.pure(a, d)

    def test_delta_primitive(self, hopf):
        for x in (a, d):
            assert hopf.delta(x) == Tensor.pure(I, x) + Tensor.pure(x, I)

    def test_antipode(self, hopf):
        assert hopf.antipode(b) == -b + a * d
        assert hopf.antipode(a) == -a
        assert hopf.antipode(I) == I

    def test_epsilon(self, hopf):
        assert hopf.epsilon(b * b + I) == ONE
        assert hopf.epsilon(a * b) == ZERO

    def test_delta_is_multiplicative_on_example(self, hopf):
        assert hopf.delta(a * b) == tensor_multiply(hopf.delta(a), hopf.delta(b))

    def test_antipode_reverses_products(self, hopf):
        assert hopf.antipode(a * b) == hopf.antipode(b) * hopf.antipode(a)


class TestAdjoint:
    def test_unit(self, hopf):
        assert hopf.adjoint(I) == Tensor.unit(2)

    @pytest.mark.parametrize("letter", [ALPHA, DELTA])
    def test_primitive_generators(self, hopf, letter):
        x = Element.generator(letter)
        assert hopf.adjoint(x) == Tensor.pure(x, I)

    def test_counit_of_second_slot(self, hopf):
        # (id (x) e) ad(x) = x
        for monomial in pbw_monomials(2):
            x = Element.monomial(monomial)
            assert apply_counit(hopf.adjoint(x), slot=1) == x


class TestTensorHelpers:
    def test_flip(self):
        assert flip(Tensor.pure(a, b)) == Tensor.pure(b, a)

    def test_mult(self):
        assert mult(Tensor.pure(a, b)) == a * b


class TestAxioms:
    def test_hopf_axioms_degree_three(self, hopf):
        report = hopf.verify_hopf_axioms(3)
        assert report.ok, [r.id for r in report.failures]
        assert not report.discrepancies
        ids = {record.id for record in report.checks}
        assert 'hopf.coassociativity' in ids
        assert 'hopf.well_defined.delta[[a,b] - i*l*a]' in ids

    def test_matrix_coproduct(self, hopf):
        report = hopf.verify_matrix_coproduct()
        assert len(report.checks) == 9
        assert all(record.status == CheckStatus.PASS for record in report.checks)

    def test_delta_word_respects_relation(self, hopf):
        lhs = hopf.delta_word((ALPHA, BETA)) - hopf.delta_word((BETA, ALPHA))
        assert lhs == hopf.delta(a).scale(I_LAMBDA)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(pbw_monomials(3)))
    def test_coassociativity(self, monomial):
        hopf = HopfAlgebra()
        x = Element.monomial(monomial)
        assert hopf.delta3(x) == hopf.delta_right3(x)
