"""
Linear functionals on A evaluated through memoized oracles on PBW monomials:
the vector fields chi_i read off the differential, the commutation
functionals f_ji, the convolution product and its binomial series.

Conventions: (phi psi)(x) = (phi (x) psi) D(x) and phi * x = (id (x) phi) D(x).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from utils.exceptions import CalculusError, DomainViolationError
from .algebra import ALPHA, BETA, DELTA, UNIT, Element, Monomial, multiply, pbw_monomials
from .calculus import FORM_LETTERS, DifferentialCalculus, OneForm
from .hopf import MAX_WITNESSES
from .report import CheckStatus, VerificationReport
from .scalar import I_LAMBDA, ONE, ZERO, Scalar, binomial_coefficient

logger = logging.getLogger(__name__)

SERIES_EXPONENTS = (Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1))
FIT_CANDIDATES = (Fraction(1, 2), Fraction(-1, 2), Fraction(1))

# Published closed forms: f = (I + base*chi_b)^s.
PRINTED_BASE = -I_LAMBDA * 2
PRINTED_EXPONENTS = {ALPHA: Fraction(1, 2), BETA: Fraction(1), DELTA: Fraction(1, 2)}

CHI_NAMES = {ALPHA: 'chi_a', BETA: 'chi_b', DELTA: 'chi_d'}


class Functional:
    """A linear map A -> Q(i)[l] given by its values on PBW monomials."""

    def __init__(self, oracle: Callable[[Monomial], Scalar], tag: str):
        self._oracle = oracle
        self.tag = tag
        self._memo: Dict[Monomial, Scalar] = {}

    def on_monomial(self, monomial: Monomial) -> Scalar:
        value = self._memo.get(monomial)
        if value is None:
            value = Scalar.coerce(self._oracle(monomial))
            self._memo[monomial] = value
        return value

    def __call__(self, x: Union[Element, Monomial]) -> Scalar:
        if isinstance(x, Monomial):
            return self.on_monomial(x)
        total = ZERO
        for monomial, coeff in x.terms.items():
            total = total + coeff * self.on_monomial(monomial)
        return total

    def __add__(self, other: 'Functional') -> 'Functional':
        return Functional(lambda m: self.on_monomial(m) + other.on_monomial(m), f"({self.tag} + {other.tag})")

    def __sub__(self, other: 'Functional') -> 'Functional':
        return Functional(lambda m: self.on_monomial(m) - other.on_monomial(m), f"({self.tag} - {other.tag})")

    def __neg__(self) -> 'Functional':
        return Functional(lambda m: -self.on_monomial(m), f"-{self.tag}")

    def scale(self, value) -> 'Functional':
        value = Scalar.coerce(value)
        return Functional(lambda m: value * self.on_monomial(m), f"({value})*{self.tag}")

    def agrees_with(self, other: 'Functional', max_degree: int) -> Optional[Monomial]:
        """First monomial within the bound where the two differ, or None."""
        for monomial in pbw_monomials(max_degree):
            if self.on_monomial(monomial) != other.on_monomial(monomial):
                return monomial
        return None

    def __repr__(self):
        return f"Functional({self.tag})"


@dataclass
class FunctionalIdentityCheck:
    name: str
    max_degree: int
    checked: int = 0
    violations: List[Dict[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def witness(self):
        if self.passed:
            return None
        return self.violations[:MAX_WITNESSES]


class DualAlgebra:
    """Dual functionals of a differential calculus."""

    def __init__(self, calculus: DifferentialCalculus):
        self.calculus = calculus
        self.hopf = calculus.hopf
        self.epsilon_functional = Functional(lambda m: ONE if m == UNIT else ZERO, 'e')
        self._chi = {letter: Functional(self._chi_oracle(letter), CHI_NAMES[letter]) for letter in FORM_LETTERS}
        self._f: Dict[Tuple[str, str], Functional] = {}
        self._powers: Dict[Tuple[int, str], Functional] = {}

    @property
    def derived_base(self) -> Scalar:
        """f_b = I + base*chi_b holds with base = -shift."""
        return -self.calculus.ideal.beta_shift

    def _chi_oracle(self, letter: str) -> Callable[[Monomial], Scalar]:
        def oracle(monomial: Monomial) -> Scalar:
            return self.calculus.differential_monomial(monomial).coefficient(letter).constant_term()
        return oracle

    def chi(self, letter: str) -> Functional:
        return self._chi[letter]

    def chi_action(self, letter: str, x: Element) -> Element:
        """chi * x = (id (x) chi) D x."""
        return self.act(self.chi(letter), x)

    def act(self, phi: Functional, x: Element) -> Element:
        result = Element.zero()
        for (first, second), coeff in self.hopf.delta(x).terms.items():
            value = phi.on_monomial(second)
            if value:
                result = result + Element.monomial(first, coeff * value)
        return result

    def convolve(self, phi: Functional, psi: Functional) -> Functional:
        def oracle(monomial: Monomial) -> Scalar:
            total = ZERO
            for (first, second), coeff in self.hopf.delta_monomial(monomial).terms.items():
                left = phi.on_monomial(first)
                if left:
                    right = psi.on_monomial(second)
                    if right:
                        total = total + coeff * left * right
            return total
        return Functional(oracle, f"{phi.tag}{psi.tag}")

    def commutator(self, phi: Functional, psi: Functional) -> Functional:
        bracket = self.convolve(phi, psi) - self.convolve(psi, phi)
        bracket.tag = f"[{phi.tag}, {psi.tag}]"
        return bracket

    def convolution_power(self, phi: Functional, n: int) -> Functional:
        if n == 0:
            return self.epsilon_functional
        key = (n, phi.tag)
        if key not in self._powers:
            power = self.convolve(self.convolution_power(phi, n - 1), phi)
            power.tag = f"{phi.tag}^{n}"
            self._powers[key] = power
        return self._powers[key]

    def f_matrix(self, source: str, target: str) -> Functional:
        """f_{source,target}(x) = e(coefficient of w_target in w_source . x)."""
        key = (source, target)
        if key not in self._f:
            self._f[key] = Functional(lambda m: self.calculus.commutation_value(source, target, Element.monomial(m)),
                                      f"f_{source}{target}")
        return self._f[key]

    def f_from_commutation(self, letter: str, max_degree: int = 4) -> Functional:
        """The diagonal commutation functional, after checking the others vanish within the bound."""
        for other in FORM_LETTERS:
            if other == letter:
                continue
            for source, target in ((letter, other), (other, letter)):
                witness = self.f_matrix(source, target).agrees_with(Functional(lambda m: ZERO, '0'), max_degree)
                if witness is not None:
                    raise CalculusError(f"f_{source}{target} does not vanish on {witness.text()}")
        diagonal = self.f_matrix(letter, letter)
        diagonal.tag = f"f_{letter}"
        return diagonal

    def binomial_series(self, s, base=PRINTED_BASE) -> Functional:
        """(I + base*chi_b)^s = sum_n C(s, n) base^n chi_b^n; exact since chi_b^n vanishes below degree n."""
        s = Fraction(s)
        if s not in SERIES_EXPONENTS:
            raise DomainViolationError(f"binomial series exponent must be one of 1/2, -1/2, 1, -1, got {s}")
        base = Scalar.coerce(base)
        chi_beta = self.chi(BETA)

        def oracle(monomial: Monomial) -> Scalar:
            total = ZERO
            for n in range(monomial.degree + 1):
                value = self.convolution_power(chi_beta, n).on_monomial(monomial)
                if value:
                    total = total + Scalar.constant(binomial_coefficient(s, n)) * base ** n * value
            return total
        return Functional(oracle, f"(e + ({base})*chi_b)^({s})")

    def fit_exponent(self, f: Functional, max_degree: int, base=None,
                     candidates: Sequence[Fraction] = FIT_CANDIDATES) -> List[Fraction]:
        """Exponents s for which f = (I + base*chi_b)^s on every monomial within the bound."""
        base = self.derived_base if base is None else base
        return [s for s in candidates if f.agrees_with(self.binomial_series(s, base), max_degree) is None]

    def functional_coproduct_check(self, phi: Functional,
                                   decomposition: Sequence[Tuple[Functional, Functional]],
                                   max_degree: int) -> FunctionalIdentityCheck:
        """phi(m n) = sum psi(m) xi(n) over all monomial pairs with deg m + deg n <= bound."""
        check = FunctionalIdentityCheck(f"D{phi.tag}", max_degree)
        monomials = pbw_monomials(max_degree)
        for left in monomials:
            for right in monomials:
                if left.degree + right.degree > max_degree:
                    continue
                check.checked += 1
                actual = phi(multiply(Element.monomial(left), Element.monomial(right)))
                expected = ZERO
                for psi, xi in decomposition:
                    expected = expected + psi.on_monomial(left) * xi.on_monomial(right)
                if actual != expected:
                    check.violations.append({'m': left.text(), 'n': right.text(),
                                             'value': str(actual), 'expected': str(expected)})
        return check

    def grouplike_check(self, f: Functional, max_degree: int) -> FunctionalIdentityCheck:
        check = self.functional_coproduct_check(f, [(f, f)], max_degree)
        check.name = f"grouplike {f.tag}"
        if f.on_monomial(UNIT) != ONE:
            check.violations.insert(0, {'m': '1', 'value': str(f.on_monomial(UNIT)), 'expected': '1'})
        return check

    def verify_nilpotence(self, max_degree: int = 6, max_power: int = 8) -> VerificationReport:
        report = VerificationReport('dual', max_degree)
        chi_beta = self.chi(BETA)
        failures = []
        for monomial in pbw_monomials(max_degree):
            for n in range(monomial.degree + 1, max_power + 1):
                value = self.convolution_power(chi_beta, n).on_monomial(monomial)
                if value:
                    failures.append({'m': monomial.text(), 'n': n, 'value': str(value)})
        report.record('dual.nilpotence', 'vector-fields', not failures, failures[:MAX_WITNESSES] or None)
        return report

    def verify_quantum_lie(self, max_degree: int) -> VerificationReport:
        report = VerificationReport('dual', max_degree)
        consistency = self.calculus.consistency_status
        chi_a, chi_b, chi_d = (self.chi(letter) for letter in (ALPHA, BETA, DELTA))
        eps = self.epsilon_functional
        zero = Functional(lambda m: ZERO, '0')
        logger.info(f"Checking dual functionals (shift {self.calculus.ideal.beta_shift}, degree <= {max_degree})")

        # Pairing with the generators
        kronecker = all(self.chi(i)(Element.generator(j)) == (ONE if i == j else ZERO)
                        for i in FORM_LETTERS for j in FORM_LETTERS)
        report.record('dual.chi_pairing', 'vector-fields', kronecker)

        # Differential written through the vector fields, coefficient by coefficient
        round_trip = []
        for monomial in pbw_monomials(max_degree):
            m = Element.monomial(monomial)
            expected = OneForm([self.chi_action(letter, m) for letter in FORM_LETTERS])
            if self.calculus.differential_monomial(monomial) != expected:
                round_trip.append(monomial.text())
        report.record('dual.differential_round_trip', 'vector-fields', not round_trip,
                      round_trip[:MAX_WITNESSES] or None)

        # Brackets
        for left, name in ((chi_a, 'chi_a'), (chi_d, 'chi_d')):
            witness = self.commutator(left, chi_b).agrees_with(zero, max_degree)
            report.record(f"dual.bracket[{name},chi_b]", 'quantum-lie-brackets', witness is None,
                          None if witness is None else {'m': witness.text(),
                                                        'value': str(self.commutator(left, chi_b)(witness))},
                          on_failure=consistency)
        orders = {'[chi_a, chi_d]': self.commutator(chi_a, chi_d), '[chi_d, chi_a]': self.commutator(chi_d, chi_a)}
        matching = [name for name, bracket in orders.items() if bracket.agrees_with(chi_b, max_degree) is None]
        witness = {'order': matching[0] if matching else None}
        if not matching:
            first = orders['[chi_a, chi_d]'].agrees_with(chi_b, max_degree)
            witness.update({'m': first.text(), 'bracket': str(orders['[chi_a, chi_d]'](first)),
                            'chi_b': str(chi_b(first))})
        report.record('dual.bracket[chi_a,chi_d]=chi_b', 'quantum-lie-brackets', bool(matching), witness,
                      on_failure=consistency)
        jacobi = (self.commutator(chi_a, self.commutator(chi_b, chi_d))
                  + self.commutator(chi_b, self.commutator(chi_d, chi_a))
                  + self.commutator(chi_d, self.commutator(chi_a, chi_b)))
        jacobi_witness = jacobi.agrees_with(zero, min(max_degree, 4))
        report.record('dual.jacobi', 'quantum-lie-brackets', jacobi_witness is None,
                      None if jacobi_witness is None else jacobi_witness.text())

        # Convolution algebra laws
        pool = [chi_a, chi_b, chi_d]
        counit_failures = [phi.tag for phi in pool
                           if self.convolve(eps, phi).agrees_with(phi, min(max_degree, 4)) is not None
                           or self.convolve(phi, eps).agrees_with(phi, min(max_degree, 4)) is not None]
        report.record('dual.counit_laws', 'convolution', not counit_failures, counit_failures or None)

        # Commutation functionals
        diagonal = True
        try:
            f = {letter: self.f_from_commutation(letter, max_degree) for letter in FORM_LETTERS}
        except CalculusError as e:
            diagonal = False
            report.record('dual.f_diagonal', 'commutation-functionals', False, str(e))
            f = {letter: self.f_matrix(letter, letter) for letter in FORM_LETTERS}
        if diagonal:
            report.record('dual.f_diagonal', 'commutation-functionals', True)

        pool.append(f[BETA])
        associativity = []
        for phi in pool:
            for psi in pool:
                for xi in pool:
                    lhs = self.convolve(self.convolve(phi, psi), xi)
                    rhs = self.convolve(phi, self.convolve(psi, xi))
                    if lhs.agrees_with(rhs, min(max_degree, 4)) is not None:
                        associativity.append(f"{phi.tag},{psi.tag},{xi.tag}")
        report.record('dual.convolution_associativity', 'convolution', not associativity,
                      associativity[:MAX_WITNESSES] or None)

        for letter in FORM_LETTERS:
            check = self.grouplike_check(f[letter], max_degree)
            report.record(f"dual.grouplike[f_{letter}]", 'commutation-functionals', check.passed, check.witness())

        # Closed forms of the f's
        base = self.derived_base
        for letter in FORM_LETTERS:
            fitted = self.fit_exponent(f[letter], max_degree, base)
            report.record(f"dual.f_closed_form[f_{letter}]", 'closed-forms', len(fitted) == 1,
                          {'base': str(base), 'fitted': [str(s) for s in fitted]})
            printed = self.binomial_series(PRINTED_EXPONENTS[letter], PRINTED_BASE)
            mismatch = f[letter].agrees_with(printed, max_degree)
            witness = None
            if mismatch is not None:
                witness = {'printed': f"(e + ({PRINTED_BASE})*chi_b)^({PRINTED_EXPONENTS[letter]})",
                           'fitted_exponent': [str(s) for s in fitted], 'base': str(base),
                           'm': mismatch.text(), 'derived': str(f[letter](mismatch)),
                           'printed_value': str(printed(mismatch))}
            report.record(f"dual.printed_f[f_{letter}]", 'closed-forms', mismatch is None, witness,
                          on_failure=CheckStatus.DISCREPANCY)

        # Coproducts of the vector fields with the derived f's
        coproducts_ok = True
        for letter in FORM_LETTERS:
            check = self.functional_coproduct_check(self.chi(letter), [(self.chi(letter), f[letter]),
                                                                      (eps, self.chi(letter))], max_degree)
            coproducts_ok = coproducts_ok and check.passed
            report.record(f"dual.coproduct[{CHI_NAMES[letter]}]", 'functional-coproducts', check.passed,
                          check.witness())

        brackets_ok = all(record.status == CheckStatus.PASS for record in report.checks
                          if record.reference == 'quantum-lie-brackets')
        report.record('dual.generator_identification', 'generator-identification', brackets_ok and coproducts_ok,
                      {'B0': CHI_NAMES[DELTA], 'B1': CHI_NAMES[BETA], 'B2': CHI_NAMES[ALPHA],
                       'brackets_verified': brackets_ok, 'coproducts_verified': coproducts_ok},
                      on_failure=consistency)
        report.extend(self.verify_nilpotence(max(max_degree, 6), max(max_degree, 6) + 2))
        return report

