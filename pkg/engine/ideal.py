"""
The right ideal R of ker e generated by

    a^2, d^2, b*a, b*d, a*d, b^2 + shift*b

reduction modulo R, and the checks that R is ad-invariant with ker e / R
spanned by a, b, d. The published shift is 2*i*l.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from utils.exceptions import DomainViolationError, HQCError
from .algebra import (ALPHA, BETA, DELTA, LETTERS, UNIT, Element, Monomial, Tensor,
                      accumulate, format_coefficient_term, join_signed, multiply,
                      pbw_monomials)
from .hopf import MAX_WITNESSES, HopfAlgebra
from .report import CheckStatus, VerificationReport
from .scalar import I_LAMBDA, ONE, ZERO, Scalar

logger = logging.getLogger(__name__)

PRINTED_SHIFT = I_LAMBDA * 2

_A, _B, _D = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))


@dataclass(frozen=True)
class QuotientClass:
    """c1*I + c_alpha*a + c_beta*b + c_delta*d, the canonical representative modulo R."""
    c1: Scalar = ZERO
    c_alpha: Scalar = ZERO
    c_beta: Scalar = ZERO
    c_delta: Scalar = ZERO

    @classmethod
    def from_element(cls, x: Element) -> 'QuotientClass':
        if x.degree > 1:
            raise DomainViolationError(f"{x} is not a representative of degree <= 1")
        return cls(x.coefficient(UNIT), x.coefficient(Monomial(0, 1, 0)),
                   x.coefficient(Monomial(1, 0, 0)), x.coefficient(Monomial(0, 0, 1)))

    def component(self, letter: str) -> Scalar:
        return {ALPHA: self.c_alpha, BETA: self.c_beta, DELTA: self.c_delta}[letter]

    def to_element(self) -> Element:
        return (Element.scalar(self.c1) + _A.scale(self.c_alpha)
                + _B.scale(self.c_beta) + _D.scale(self.c_delta))

    def is_zero(self) -> bool:
        return not (self.c1 or self.c_alpha or self.c_beta or self.c_delta)

    def __add__(self, other: 'QuotientClass') -> 'QuotientClass':
        return QuotientClass(self.c1 + other.c1, self.c_alpha + other.c_alpha,
                             self.c_beta + other.c_beta, self.c_delta + other.c_delta)

    def scale(self, value) -> 'QuotientClass':
        value = Scalar.coerce(value)
        return QuotientClass(self.c1 * value, self.c_alpha * value, self.c_beta * value, self.c_delta * value)

    def to_text(self) -> str:
        return self.to_element().to_text()

    def to_json(self):
        return {'c1': self.c1.to_json(), 'a': self.c_alpha.to_json(),
                'b': self.c_beta.to_json(), 'd': self.c_delta.to_json()}


@dataclass(frozen=True)
class RewriteStep:
    """One reduction step: coefficient * generator * cofactor was subtracted."""
    generator: str
    cofactor: Monomial
    coefficient: Scalar

    def signed_text(self) -> Tuple[str, str]:
        return format_coefficient_term(self.coefficient, f"({self.generator})*{self.cofactor.text()}")

    def to_json(self):
        return {'generator': self.generator, 'cofactor': self.cofactor.text(),
                'coefficient': self.coefficient.to_json()}


@dataclass
class ReductionTrace:
    source: Element
    result: QuotientClass
    steps: List[RewriteStep] = field(default_factory=list)

    def to_text(self) -> str:
        return join_signed([step.signed_text() for step in self.steps])


class RightIdeal:
    """R with a configurable coefficient on the b term of its sixth generator."""

    def __init__(self, hopf: HopfAlgebra, beta_shift=PRINTED_SHIFT):
        self.hopf = hopf
        self.beta_shift = Scalar.coerce(beta_shift)
        sixth = _B * _B + _B.scale(self.beta_shift)
        generators = [_A * _A, _D * _D, _B * _A, _B * _D, _A * _D, sixth]
        self.generators: Dict[str, Element] = {g.to_text(): g for g in generators}
        self.sixth_generator = sixth.to_text()
        # leading two-letter word -> generator name
        self._by_prefix: Dict[Tuple[str, str], str] = {}
        for name, generator in self.generators.items():
            leading = max(generator.terms, key=Monomial.pbw_key)
            self._by_prefix[leading.word()] = name
        self._reduce_memo: Dict[Monomial, Tuple[QuotientClass, Tuple[RewriteStep, ...]]] = {}
        self._check_prefix_tiling()

    def _check_prefix_tiling(self):
        """The leading words must be exactly the ordered words of length two."""
        ordered = {m.word() for m in pbw_monomials(2) if m.degree == 2}
        if set(self._by_prefix) != ordered:
            raise HQCError(f"ideal generators do not tile the length-2 prefixes: {sorted(self._by_prefix)}")
        for name, generator in self.generators.items():
            if self.hopf.epsilon(generator):
                raise HQCError(f"generator {name} is not in ker e")

    @property
    def is_printed(self) -> bool:
        return self.beta_shift == PRINTED_SHIFT

    def reduce_with_trace(self, x: Element) -> ReductionTrace:
        pending: Dict[Monomial, Scalar] = dict(x.terms)
        steps: List[RewriteStep] = []
        while True:
            reducible = [m for m in pending if m.degree >= 2]
            if not reducible:
                break
            monomial = max(reducible, key=Monomial.pbw_key)
            coeff = pending[monomial]
            word = monomial.word()
            name = self._by_prefix[word[:2]]
            cofactor = Monomial.from_word(word[2:])
            steps.append(RewriteStep(name, cofactor, coeff))
            product = multiply(self.generators[name], Element.monomial(cofactor))
            for key, value in product.terms.items():
                accumulate(pending, key, -(coeff * value))
        result = QuotientClass.from_element(Element._raw(pending))
        return ReductionTrace(x, result, steps)

    def reduce_monomial(self, monomial: Monomial) -> QuotientClass:
        cached = self._reduce_memo.get(monomial)
        if cached is None:
            trace = self.reduce_with_trace(Element.monomial(monomial))
            cached = (trace.result, tuple(trace.steps))
            self._reduce_memo[monomial] = cached
        return cached[0]

    def reduce(self, x: Element) -> QuotientClass:
        result = QuotientClass()
        for monomial, coeff in x.terms.items():
            result = result + self.reduce_monomial(monomial).scale(coeff)
        return result

    def replay(self, trace: ReductionTrace) -> Element:
        """sum of coefficient * generator * cofactor; equals source - reduce(source)."""
        total = Element.zero()
        for step in trace.steps:
            total = total + multiply(self.generators[step.generator], Element.monomial(step.cofactor)).scale(step.coefficient)
        return total

    def closed_form_class(self, monomial: Monomial) -> QuotientClass:
        """b^k -> (-shift)^(k-1) b; every other monomial of degree >= 2 lies in R."""
        if monomial.degree <= 1:
            return QuotientClass.from_element(Element.monomial(monomial))
        if monomial.a or monomial.d:
            return QuotientClass()
        return QuotientClass(c_beta=(-self.beta_shift) ** (monomial.b - 1))

    def is_in_ideal(self, x: Element) -> bool:
        return not self.hopf.epsilon(x) and self.reduce(x).is_zero()

    def reduce_first_slot(self, t: Tensor) -> Dict[Monomial, QuotientClass]:
        """Group a two-slot tensor by its second slot and reduce the first slots."""
        grouped: Dict[Monomial, QuotientClass] = {}
        for (first, second), coeff in t.terms.items():
            cls = self.reduce_monomial(first).scale(coeff)
            grouped[second] = grouped[second] + cls if second in grouped else cls
        return {key: value for key, value in sorted(grouped.items(), key=lambda item: item[0].pbw_key())
                if not value.is_zero()}

    def ad_obstruction(self, generator: str, monomial: Monomial = UNIT) -> Dict[Monomial, QuotientClass]:
        return self.reduce_first_slot(self.hopf.adjoint(multiply(self.generators[generator], Element.monomial(monomial))))

    def verify_ad_invariance(self, max_degree: int,
                             on_violation: CheckStatus = CheckStatus.FAIL) -> VerificationReport:
        report = VerificationReport('ideal', max_degree)
        monomials = pbw_monomials(max_degree)
        logger.info(f"Checking ad-invariance of {len(self.generators)} generators "
                    f"against {len(monomials)} monomials (shift {self.beta_shift})")
        for name in self.generators:
            violations, counit_failures = [], []
            for monomial in monomials:
                obstruction = self.ad_obstruction(name, monomial)
                if any(cls.c1 for cls in obstruction.values()):
                    counit_failures.append(monomial.text())
                if obstruction:
                    violations.append({'m': monomial.text(), 'reduced': format_obstruction(obstruction)})
            report.record(f"ideal.ad_invariance[{name}]", 'ideal-ad-invariance', not violations,
                          violations[:MAX_WITNESSES] or None, on_failure=on_violation)
            report.record(f"ideal.ad_first_slot_counit[{name}]", 'ideal-ad-invariance', not counit_failures,
                          counit_failures[:MAX_WITNESSES] or None)
        return report

    def verify_quotient_basis(self, max_degree: int) -> VerificationReport:
        report = VerificationReport('ideal', max_degree)
        span_failures, trace_failures, closed_form_failures = [], [], []
        for monomial in pbw_monomials(max_degree):
            if monomial.is_unit:
                continue
            x = Element.monomial(monomial)
            trace = self.reduce_with_trace(x)
            if trace.result.c1:
                span_failures.append(monomial.text())
            if self.replay(trace) != x - trace.result.to_element():
                trace_failures.append(monomial.text())
            if trace.result != self.closed_form_class(monomial):
                closed_form_failures.append(monomial.text())
        report.record('ideal.quotient_span', 'ideal-quotient-basis', not span_failures,
                      span_failures[:MAX_WITNESSES] or None)
        report.record('ideal.trace_replay', 'ideal-quotient-basis', not trace_failures,
                      trace_failures[:MAX_WITNESSES] or None)
        report.record('ideal.closed_form', 'ideal-quotient-basis', not closed_form_failures,
                      closed_form_failures[:MAX_WITNESSES] or None)

        # a, b, d are fixed by reduction, and every element of R reduces to zero.
        fixed = all(self.reduce(Element.generator(letter)).to_element() == Element.generator(letter)
                    for letter in LETTERS)
        members = []
        for name, generator in self.generators.items():
            for monomial in pbw_monomials(max(max_degree - 2, 0)):
                product = multiply(generator, Element.monomial(monomial))
                if not self.is_in_ideal(product):
                    members.append(f"({name})*{monomial.text()}")
        report.record('ideal.independence', 'ideal-quotient-basis', fixed and not members,
                      members[:MAX_WITNESSES] or None)
        return report


def format_obstruction(obstruction: Dict[Monomial, QuotientClass]) -> str:
    parts = []
    for second, cls in obstruction.items():
        for monomial, coeff in cls.to_element().items():
            sign, text = format_coefficient_term(coeff, "1")
            body = f"{monomial.text()} (x) {second.text()}"
            parts.append((sign, body if text == "1" else f"{text}*{body}"))
    return join_signed(parts)


def fit_ad_invariant_shift(hopf: HopfAlgebra) -> Scalar:
    """
    The shift c for which b^2 + c*b generates an ad-invariant ideal.

    The reduced first slots of ad(b^2 + c*b) are affine in c, so two
    evaluations determine the root; the result is re-verified.
    """
    at_zero = RightIdeal(hopf, ZERO)
    at_one = RightIdeal(hopf, ONE)
    e0 = at_zero.ad_obstruction(at_zero.sixth_generator)
    e1 = at_one.ad_obstruction(at_one.sixth_generator)
    shift: Optional[Scalar] = None
    for second in sorted(set(e0) | set(e1), key=Monomial.pbw_key):
        base = e0.get(second, QuotientClass())
        slope_class = e1.get(second, QuotientClass()) + base.scale(-1)
        for letter in LETTERS:
            slope = slope_class.component(letter)
            if slope and slope.is_constant():
                shift = (-base.component(letter)).divide_by_constant(slope)
                break
        if shift is not None:
            break
    if shift is None:
        raise HQCError("no ad-invariant shift: obstruction does not depend on the shift")
    candidate = RightIdeal(hopf, shift)
    if candidate.ad_obstruction(candidate.sixth_generator):
        raise HQCError(f"shift {shift} does not remove the ad-invariance obstruction")
    logger.info(f"ad-invariant shift for b^2 + c*b: c = {shift}")
    return shift
