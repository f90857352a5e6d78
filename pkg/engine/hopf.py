"""
Coproduct, counit and antipode of A, the adjoint action, and the axiom
verifiers.

    D(a) = I(x)a + a(x)I      S(a) = -a
    D(b) = I(x)b + b(x)I + a(x)d      S(b) = -b + a*d
    D(d) = I(x)d + d(x)I      S(d) = -d
    e(a) = e(b) = e(d) = 0
"""
import logging
from typing import Dict, List, Sequence, Tuple

from .algebra import (ALPHA, BETA, DELTA, LETTERS, UNIT, Element, Monomial, Tensor,
                      accumulate, multiply, pbw_monomials,
                      tensor_multiply)
from .report import VerificationReport
from .scalar import I_LAMBDA, ONE, ZERO, Scalar

logger = logging.getLogger(__name__)

_I = Element.one()
_A, _B, _D = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))

# Defining relations as signed words: sum of coeff * word vanishes in A.
RELATIONS: Dict[str, Tuple[Tuple[Tuple[str, ...], Scalar], ...]] = {
    '[a,b] - i*l*a': (((ALPHA, BETA), ONE), ((BETA, ALPHA), -ONE), ((ALPHA,), -I_LAMBDA)),
    '[d,b] - i*l*d': (((DELTA, BETA), ONE), ((BETA, DELTA), -ONE), ((DELTA,), -I_LAMBDA)),
    '[a,d]': (((ALPHA, DELTA), ONE), ((DELTA, ALPHA), -ONE)),
}

# Entries of the defining matrix T = [[I, a, b], [0, I, d], [0, 0, I]].
T_MATRIX = (
    (_I, _A, _B),
    (Element.zero(), _I, _D),
    (Element.zero(), Element.zero(), _I),
)

# Failing witnesses kept per check.
MAX_WITNESSES = 5


class HopfAlgebra:
    """Hopf structure on A, computed from the generator tables by recursion over PBW monomials."""

    def __init__(self):
        self.delta_on_generators: Dict[str, Tensor] = {
            ALPHA: Tensor.pure(_I, _A) + Tensor.pure(_A, _I),
            BETA: Tensor.pure(_I, _B) + Tensor.pure(_B, _I) + Tensor.pure(_A, _D),
            DELTA: Tensor.pure(_I, _D) + Tensor.pure(_D, _I),
        }
        self.epsilon_on_generators: Dict[str, Scalar] = {ALPHA: ZERO, BETA: ZERO, DELTA: ZERO}
        self.antipode_on_generators: Dict[str, Element] = {
            ALPHA: -_A,
            BETA: -_B + _A * _D,
            DELTA: -_D,
        }
        self._delta_memo: Dict[Monomial, Tensor] = {UNIT: Tensor.unit(2)}
        self._antipode_memo: Dict[Monomial, Element] = {UNIT: _I}
        self._assert_generator_tables()

    def _assert_generator_tables(self):
        for letter in LETTERS:
            x = Element.generator(letter)
            coproduct = self.delta_on_generators[letter]
            assert apply_counit(coproduct, slot=0) == x and apply_counit(coproduct, slot=1) == x, letter
            assert not self.epsilon_on_generators[letter], letter
            assert mult(self.apply_antipode(coproduct, slot=0)).is_zero(), letter

    # Structure maps on monomials. beta^b alpha^a delta^d = (first letter) * (rest)
    # holds exactly in PBW form, which drives both recursions.

    def delta_monomial(self, monomial: Monomial) -> Tensor:
        cached = self._delta_memo.get(monomial)
        if cached is None:
            word = monomial.word()
            rest = Monomial.from_word(word[1:])
            cached = tensor_multiply(self.delta_on_generators[word[0]], self.delta_monomial(rest))
            self._delta_memo[monomial] = cached
        return cached

    def antipode_monomial(self, monomial: Monomial) -> Element:
        cached = self._antipode_memo.get(monomial)
        if cached is None:
            word = monomial.word()
            rest = Monomial.from_word(word[1:])
            cached = multiply(self.antipode_monomial(rest), self.antipode_on_generators[word[0]])
            self._antipode_memo[monomial] = cached
        return cached

    def delta(self, x: Element) -> Tensor:
        terms: Dict = {}
        for monomial, coeff in x.terms.items():
            for key, value in self.delta_monomial(monomial).terms.items():
                accumulate(terms, key, coeff * value)
        return Tensor._raw(2, terms)

    def epsilon(self, x: Element) -> Scalar:
        return x.constant_term()

    def antipode(self, x: Element) -> Element:
        result = Element.zero()
        for monomial, coeff in x.terms.items():
            result = result + self.antipode_monomial(monomial).scale(coeff)
        return result

    def delta3(self, x: Element) -> Tensor:
        """(D (x) id) D x."""
        terms: Dict = {}
        for (first, second), coeff in self.delta(x).terms.items():
            for (a, b), value in self.delta_monomial(first).terms.items():
                accumulate(terms, (a, b, second), coeff * value)
        return Tensor._raw(3, terms)

    def delta_right3(self, x: Element) -> Tensor:
        """(id (x) D) D x."""
        terms: Dict = {}
        for (first, second), coeff in self.delta(x).terms.items():
            for (b, c), value in self.delta_monomial(second).terms.items():
                accumulate(terms, (first, b, c), coeff * value)
        return Tensor._raw(3, terms)

    def adjoint(self, x: Element) -> Tensor:
        """ad(x) = sum b_k (x) S(a_k) c_k over (D (x) id) D x = sum a_k (x) b_k (x) c_k."""
        result = Tensor.zero(2)
        for (a, b, c), coeff in self.delta3(x).terms.items():
            right = multiply(self.antipode_monomial(a), Element.monomial(c))
            result = result + Tensor.pure(Element.monomial(b), right).scale(coeff)
        return result

    # Generator images multiplied along unreduced words; these never use the
    # PBW recursion, so they test that the maps respect the relations.

    def delta_word(self, word: Sequence[str]) -> Tensor:
        result = Tensor.unit(2)
        for letter in word:
            result = tensor_multiply(result, self.delta_on_generators[letter])
        return result

    def antipode_word(self, word: Sequence[str]) -> Element:
        result = _I
        for letter in word:
            result = multiply(self.antipode_on_generators[letter], result)
        return result

    def epsilon_word(self, word: Sequence[str]) -> Scalar:
        result = ONE
        for letter in word:
            result = result * self.epsilon_on_generators[letter]
        return result

    def verify_hopf_axioms(self, max_degree: int) -> VerificationReport:
        report = VerificationReport('hopf', max_degree)
        monomials = pbw_monomials(max_degree)
        logger.info(f"Checking Hopf axioms on {len(monomials)} monomials (degree <= {max_degree})")
        failures: Dict[str, List[str]] = {name: [] for name in (
            'counit.left', 'counit.right', 'coassociativity', 'antipode.left', 'antipode.right',
            'epsilon_antipode', 'antipode_coproduct')}

        for monomial in monomials:
            m = Element.monomial(monomial)
            coproduct = self.delta_monomial(monomial)
            eps_unit = Element.scalar(self.epsilon(m))
            checks = {
                'counit.left': apply_counit(coproduct, slot=0) == m,
                'counit.right': apply_counit(coproduct, slot=1) == m,
                'coassociativity': self.delta3(m) == self.delta_right3(m),
                'antipode.left': mult(self.apply_antipode(coproduct, slot=0)) == eps_unit,
                'antipode.right': mult(self.apply_antipode(coproduct, slot=1)) == eps_unit,
                'epsilon_antipode': self.epsilon(self.antipode(m)) == self.epsilon(m),
            }
            if monomial.degree <= 3:
                checks['antipode_coproduct'] = (
                    self.apply_antipode(self.apply_antipode(coproduct, slot=0), slot=1)
                    == flip(self.delta(self.antipode(m))))
            for name, passed in checks.items():
                if not passed:
                    logger.debug(f"{name} fails on {monomial.text()}")
                    failures[name].append(monomial.text())

        for name, failed in failures.items():
            report.record(f"hopf.{name}", 'hopf-structure', not failed,
                          {'failing': failed[:MAX_WITNESSES]} if failed else None)

        for name, relation in RELATIONS.items():
            delta_value = sum((self.delta_word(word).scale(coeff) for word, coeff in relation), Tensor.zero(2))
            antipode_value = sum((self.antipode_word(word).scale(coeff) for word, coeff in relation), Element.zero())
            epsilon_value = sum((self.epsilon_word(word) * coeff for word, coeff in relation), ZERO)
            report.record(f"hopf.well_defined.delta[{name}]", 'relations', delta_value.is_zero(),
                          None if delta_value.is_zero() else delta_value.to_text())
            report.record(f"hopf.well_defined.antipode[{name}]", 'relations', antipode_value.is_zero(),
                          None if antipode_value.is_zero() else antipode_value.to_text())
            report.record(f"hopf.well_defined.epsilon[{name}]", 'relations', epsilon_value.is_zero(),
                          None if epsilon_value.is_zero() else str(epsilon_value))

        report.extend(self.verify_morphisms(max_degree))
        return report

    def verify_morphisms(self, max_degree: int) -> VerificationReport:
        """D is multiplicative and S anti-multiplicative on monomial pairs within the degree bound."""
        report = VerificationReport('hopf', max_degree)
        delta_failures, antipode_failures = [], []
        monomials = pbw_monomials(max_degree)
        for left in monomials:
            for right in monomials:
                if left.degree + right.degree > max_degree:
                    continue
                x, y = Element.monomial(left), Element.monomial(right)
                xy = multiply(x, y)
                if self.delta(xy) != tensor_multiply(self.delta_monomial(left), self.delta_monomial(right)):
                    delta_failures.append(f"{left.text()} | {right.text()}")
                if self.antipode(xy) != multiply(self.antipode_monomial(right), self.antipode_monomial(left)):
                    antipode_failures.append(f"{left.text()} | {right.text()}")
        report.record('hopf.delta_homomorphism', 'hopf-structure', not delta_failures,
                      {'failing': delta_failures[:MAX_WITNESSES]} if delta_failures else None)
        report.record('hopf.antipode_antihomomorphism', 'hopf-structure', not antipode_failures,
                      {'failing': antipode_failures[:MAX_WITNESSES]} if antipode_failures else None)
        return report

    def verify_matrix_coproduct(self) -> VerificationReport:
        """D(T_ij) = sum_k T_ik (x) T_kj for the nine entries of T."""
        report = VerificationReport('hopf', 1)
        for i in range(3):
            for j in range(3):
                expected = sum((Tensor.pure(T_MATRIX[i][k], T_MATRIX[k][j]) for k in range(3)), Tensor.zero(2))
                actual = self.delta(T_MATRIX[i][j])
                report.record(f"hopf.matrix_coproduct[{i + 1},{j + 1}]", 'matrix-coproduct', actual == expected,
                              None if actual == expected else {'delta': actual.to_text(), 'matrix': expected.to_text()})
        return report

    def apply_antipode(self, t: Tensor, slot: int) -> Tensor:
        """S applied to one slot of a two-slot tensor."""
        result = Tensor.zero(2)
        for key, coeff in t.terms.items():
            factors = [Element.monomial(monomial) for monomial in key]
            factors[slot] = self.antipode_monomial(key[slot])
            result = result + Tensor.pure(*factors).scale(coeff)
        return result


def apply_counit(t: Tensor, slot: int) -> Element:
    """(e (x) id) t for slot 0, (id (x) e) t for slot 1."""
    other = 1 - slot
    terms: Dict = {}
    for key, coeff in t.terms.items():
        if key[slot] == UNIT:
            accumulate(terms, key[other], coeff)
    return Element._raw(terms)


def flip(t: Tensor) -> Tensor:
    return Tensor._raw(t.arity, {key[::-1]: coeff for key, coeff in t.terms.items()})


def mult(t: Tensor) -> Element:
    """m: A (x) A -> A."""
    result = Element.zero()
    for (left, right), coeff in t.terms.items():
        result = result + multiply(Element.monomial(left), Element.monomial(right)).scale(coeff)
    return result

