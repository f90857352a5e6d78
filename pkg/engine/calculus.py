"""
First-order differential calculus built from a right ideal R in ker e.

Gamma is the free left module A (x) (ker e / R) on the left-invariant forms
w_a, w_b, w_d with

    d(x)    = sum x(1) w_[x(2) - e(x(2))]
    w_i . x = sum x(1) w_[x_i x(2)]

The exterior square is Gamma (x)_A Gamma modulo the fixed space of the
braiding sigma(w (x) eta) = eta (x) w, with eta the right-invariant forms.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from utils.exceptions import CalculusError, DomainViolationError
from .algebra import (ALPHA, BETA, DELTA, UNIT, Element, Monomial, Tensor, from_sympy,
                      join_signed, multiply, pbw_monomials, to_sympy)
from .hopf import MAX_WITNESSES, RELATIONS, HopfAlgebra, mult
from .ideal import QuotientClass, RightIdeal
from .report import CheckStatus, VerificationReport
from .scalar import GaussRational, I_LAMBDA, ONE, ZERO, Scalar

logger = logging.getLogger(__name__)

# Basis order for one-forms.
FORM_LETTERS = (ALPHA, BETA, DELTA)
FORM_INDEX = {letter: k for k, letter in enumerate(FORM_LETTERS)}
FORM_NAMES = {ALPHA: 'w_a', BETA: 'w_b', DELTA: 'w_d'}

PAIRS = tuple((p, q) for p in FORM_LETTERS for q in FORM_LETTERS)
WEDGE_BASIS = ((ALPHA, BETA), (ALPHA, DELTA), (DELTA, BETA))

# Published commutation table: [x, w_i] = value * w_i.
PRINTED_COMMUTATORS = {
    (ALPHA, ALPHA): ZERO, (DELTA, ALPHA): ZERO, (BETA, ALPHA): -I_LAMBDA,
    (ALPHA, DELTA): ZERO, (DELTA, DELTA): ZERO, (BETA, DELTA): -I_LAMBDA,
    (ALPHA, BETA): ZERO, (DELTA, BETA): ZERO, (BETA, BETA): I_LAMBDA * 2,
}

# Published wedge relations, each written as a combination of w_i (x) w_k that must vanish.
PRINTED_WEDGE = {
    'w_b^w_a = -w_a^w_b': {(BETA, ALPHA): ONE, (ALPHA, BETA): ONE},
    'w_b^w_d = -w_d^w_b': {(BETA, DELTA): ONE, (DELTA, BETA): ONE},
    'w_b^w_b = 0': {(BETA, BETA): ONE},
    'w_a^w_a = 0': {(ALPHA, ALPHA): ONE},
    'w_d^w_d = 0': {(DELTA, DELTA): ONE},
    'w_a^w_d = -w_d^w_a': {(ALPHA, DELTA): ONE, (DELTA, ALPHA): ONE},
}

# Published Cartan-Maurer equations as wedge-basis coefficients.
PRINTED_CARTAN_MAURER = {
    ALPHA: (ZERO, ZERO, ZERO),
    DELTA: (ZERO, ZERO, ZERO),
    BETA: (ZERO, ZERO, -ONE),
}

_ONE = Element.one()


def _coefficient_text(coeff: Element, name: str) -> Tuple[str, str]:
    if coeff == _ONE:
        return '+', name
    if len(coeff.terms) == 1:
        text = coeff.to_text()
        if text.startswith('-'):
            return '-', name if text == '-1' else f"{text[1:]}*{name}"
        return '+', f"{text}*{name}"
    return '+', f"({coeff.to_text()})*{name}"


class OneForm:
    """sum a_i w_i with left coefficients in the order a, b, d."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Sequence[Element] = None):
        self.coeffs: Tuple[Element, ...] = tuple(coeffs) if coeffs is not None else (Element.zero(),) * 3

    @classmethod
    def zero(cls) -> 'OneForm':
        return cls()

    @classmethod
    def basis(cls, letter: str, coeff: Optional[Element] = None) -> 'OneForm':
        coeffs = [Element.zero()] * 3
        coeffs[FORM_INDEX[letter]] = _ONE if coeff is None else coeff
        return cls(coeffs)

    @classmethod
    def constant(cls, values: Sequence[Scalar]) -> 'OneForm':
        return cls([Element.scalar(value) for value in values])

    def coefficient(self, letter: str) -> Element:
        return self.coeffs[FORM_INDEX[letter]]

    def __add__(self, other: 'OneForm') -> 'OneForm':
        return OneForm([x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> 'OneForm':
        return OneForm([-x for x in self.coeffs])

    def __sub__(self, other: 'OneForm') -> 'OneForm':
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def scale(self, value) -> 'OneForm':
        return OneForm([x.scale(value) for x in self.coeffs])

    def left_multiply(self, x: Element) -> 'OneForm':
        return OneForm([multiply(x, a) for a in self.coeffs])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def counit(self) -> Tuple[Scalar, ...]:
        return tuple(a.constant_term() for a in self.coeffs)

    def is_constant(self) -> bool:
        return all(a.is_constant() for a in self.coeffs)

    def to_text(self) -> str:
        return join_signed([_coefficient_text(coeff, FORM_NAMES[letter])
                            for letter, coeff in zip(FORM_LETTERS, self.coeffs) if coeff])

    def to_json(self):
        return {FORM_NAMES[letter]: coeff.to_json() for letter, coeff in zip(FORM_LETTERS, self.coeffs)}

    def __repr__(self):
        return f"OneForm({self.to_text()})"


class TwoForm:
    """Left coefficients on w_a^w_b, w_a^w_d, w_d^w_b."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Sequence[Element] = None):
        self.coeffs: Tuple[Element, ...] = tuple(coeffs) if coeffs is not None else (Element.zero(),) * 3

    @classmethod
    def constant(cls, values: Sequence[Scalar]) -> 'TwoForm':
        return cls([Element.scalar(value) for value in values])

    def __add__(self, other: 'TwoForm') -> 'TwoForm':
        return TwoForm([x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> 'TwoForm':
        return TwoForm([-x for x in self.coeffs])

    def __sub__(self, other: 'TwoForm') -> 'TwoForm':
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def left_multiply(self, x: Element) -> 'TwoForm':
        return TwoForm([multiply(x, a) for a in self.coeffs])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_text(self) -> str:
        names = [f"{FORM_NAMES[p]}^{FORM_NAMES[q]}" for p, q in WEDGE_BASIS]
        return join_signed([_coefficient_text(coeff, name) for name, coeff in zip(names, self.coeffs) if coeff])

    def to_json(self):
        return {f"{FORM_NAMES[p]}^{FORM_NAMES[q]}": coeff.to_json()
                for (p, q), coeff in zip(WEDGE_BASIS, self.coeffs)}

    def __repr__(self):
        return f"TwoForm({self.to_text()})"


@dataclass
class BiForm:
    """sum w_i (x) w_k c_ik in Gamma (x)_A Gamma, with right coefficients c_ik."""
    right_coeffs: Dict[Tuple[str, str], Element]

    @classmethod
    def basis(cls, p: str, q: str) -> 'BiForm':
        return cls({(p, q): _ONE})

    def coefficient(self, pair: Tuple[str, str]) -> Element:
        return self.right_coeffs.get(pair, Element.zero())

    def __add__(self, other: 'BiForm') -> 'BiForm':
        return BiForm({pair: self.coefficient(pair) + other.coefficient(pair) for pair in PAIRS})

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return all(self.coefficient(pair) == other.coefficient(pair) for pair in PAIRS)

    def to_text(self) -> str:
        parts = []
        for p, q in PAIRS:
            coeff = self.coefficient((p, q))
            if coeff:
                name = f"{FORM_NAMES[p]}(x){FORM_NAMES[q]}"
                parts.append(('+', name) if coeff == _ONE else ('+', f"{name}*({coeff.to_text()})"))
        return join_signed(parts)


@dataclass
class RightInvariantBasis:
    """eta_j = sum_r w_r E[r][j]; `inverse` is E^-1 over A."""
    eta: Dict[str, OneForm]
    right_matrix: Dict[Tuple[str, str], Element]
    inverse: Dict[Tuple[str, str], Element]


def _matrix_product(x: Dict, y: Dict) -> Dict[Tuple[str, str], Element]:
    return {(r, c): sum((multiply(x.get((r, j), Element.zero()), y.get((j, c), Element.zero()))
                         for j in FORM_LETTERS), Element.zero())
            for r in FORM_LETTERS for c in FORM_LETTERS}


_IDENTITY = {(r, c): (_ONE if r == c else Element.zero()) for r in FORM_LETTERS for c in FORM_LETTERS}


class DifferentialCalculus:
    """Gamma, d, sigma and the exterior square for a given right ideal."""

    def __init__(self, hopf: HopfAlgebra, ideal: RightIdeal):
        self.hopf = hopf
        self.ideal = ideal
        self.bicovariant = not any(ideal.ad_obstruction(name) for name in ideal.generators)
        self._times_memo: Dict[Tuple[str, Monomial], OneForm] = {}
        self._d_memo: Dict[Monomial, OneForm] = {}
        self.eta = self.eta_basis()
        self.sigma_matrix = self._build_sigma_matrix()
        self.pair_reduction = self._build_wedge_relations()
        self._cartan_maurer: Optional[Dict[str, TwoForm]] = None
        logger.debug(f"Calculus ready (shift {ideal.beta_shift}, bicovariant={self.bicovariant})")

    @property
    def consistency_status(self) -> CheckStatus:
        """Failures inherited from a non-invariant ideal are reported, not counted as internal."""
        return CheckStatus.FAIL if self.bicovariant else CheckStatus.DISCREPANCY

    # Gamma as a bimodule

    def _class_form(self, monomial: Monomial) -> OneForm:
        cls = self.ideal.reduce_monomial(monomial)
        return OneForm.constant([cls.c_alpha, cls.c_beta, cls.c_delta])

    def form_class(self, x: Element) -> OneForm:
        """w_[x] for x in ker e."""
        if self.hopf.epsilon(x):
            raise DomainViolationError(f"{x} is not in ker e")
        cls = self.ideal.reduce(x)
        return OneForm.constant([cls.c_alpha, cls.c_beta, cls.c_delta])

    def differential_monomial(self, monomial: Monomial) -> OneForm:
        cached = self._d_memo.get(monomial)
        if cached is None:
            coeffs = [Element.zero()] * 3
            for (first, second), coeff in self.hopf.delta_monomial(monomial).terms.items():
                if second == UNIT:
                    continue
                cls = self.ideal.reduce_monomial(second)
                for k, value in enumerate((cls.c_alpha, cls.c_beta, cls.c_delta)):
                    if value:
                        coeffs[k] = coeffs[k] + Element.monomial(first, coeff * value)
            cached = OneForm(coeffs)
            self._d_memo[monomial] = cached
        return cached

    def differential(self, x: Element) -> OneForm:
        result = OneForm.zero()
        for monomial, coeff in x.terms.items():
            result = result + self.differential_monomial(monomial).scale(coeff)
        return result

    def form_times_monomial(self, letter: str, monomial: Monomial) -> OneForm:
        key = (letter, monomial)
        cached = self._times_memo.get(key)
        if cached is None:
            generator = Element.generator(letter)
            coeffs = [Element.zero()] * 3
            for (first, second), coeff in self.hopf.delta_monomial(monomial).terms.items():
                cls = self.ideal.reduce(multiply(generator, Element.monomial(second)))
                for k, value in enumerate((cls.c_alpha, cls.c_beta, cls.c_delta)):
                    if value:
                        coeffs[k] = coeffs[k] + Element.monomial(first, coeff * value)
            cached = OneForm(coeffs)
            self._times_memo[key] = cached
        return cached

    def form_times_element(self, letter: str, x: Element) -> OneForm:
        """w_letter . x in left coefficients."""
        result = OneForm.zero()
        for monomial, coeff in x.terms.items():
            result = result + self.form_times_monomial(letter, monomial).scale(coeff)
        return result

    def oneform_times_element(self, w: OneForm, x: Element) -> OneForm:
        result = OneForm.zero()
        for letter, coeff in zip(FORM_LETTERS, w.coeffs):
            if coeff:
                result = result + self.form_times_element(letter, x).left_multiply(coeff)
        return result

    def commutator_with(self, x: Element, letter: str) -> OneForm:
        """[x, w_letter] = x w_letter - w_letter x."""
        return OneForm.basis(letter, x) - self.form_times_element(letter, x)

    def commutation_value(self, source: str, target: str, x: Element) -> Scalar:
        """f_{source,target}(x): counit of the w_target coefficient of w_source . x."""
        return self.form_times_element(source, x).coefficient(target).constant_term()

    # Left and right coefficients

    def from_right_coefficients(self, right: Sequence[Element]) -> OneForm:
        result = OneForm.zero()
        for letter, coeff in zip(FORM_LETTERS, right):
            result = result + self.form_times_element(letter, coeff)
        return result

    def to_right_coefficients(self, w: OneForm) -> Tuple[Element, ...]:
        """
        a w_i = w_i b with b = sum a(1) f_i(S(a(2))); valid while the
        commutation functionals are diagonal.
        """
        right = []
        for letter, coeff in zip(FORM_LETTERS, w.coeffs):
            total = Element.zero()
            for monomial, value in coeff.terms.items():
                for (first, second), weight in self.hopf.delta_monomial(monomial).terms.items():
                    factor = self.commutation_value(letter, letter, self.hopf.antipode_monomial(second))
                    if factor:
                        total = total + Element.monomial(first, value * weight * factor)
            right.append(total)
        return tuple(right)

    # r, r^-1 and pi

    def r_map(self, t: Tensor) -> Tensor:
        """r(a (x) b) = (a (x) I) D(b)."""
        result = Tensor.zero(2)
        for (a, b), coeff in t.terms.items():
            for (p, q), value in self.hopf.delta_monomial(b).terms.items():
                result = result + Tensor.pure(multiply(Element.monomial(a), Element.monomial(p)),
                                              Element.monomial(q)).scale(coeff * value)
        return result

    def r_inverse(self, t: Tensor) -> Tensor:
        """r^-1(a (x) b) = (a (x) I)(S (x) I) D(b)."""
        result = Tensor.zero(2)
        for (a, b), coeff in t.terms.items():
            for (p, q), value in self.hopf.delta_monomial(b).terms.items():
                left = multiply(Element.monomial(a), self.hopf.antipode_monomial(p))
                result = result + Tensor.pure(left, Element.monomial(q)).scale(coeff * value)
        return result

    def pi_map(self, t: Tensor) -> OneForm:
        """sum a_k d(b_k), defined when sum a_k b_k = 0."""
        product = mult(t)
        if product:
            raise DomainViolationError(f"pi is undefined: sum a_k b_k = {product.to_text()}")
        result = OneForm.zero()
        for (a, b), coeff in t.terms.items():
            result = result + self.differential_monomial(b).left_multiply(Element.monomial(a, coeff))
        return result

    def omega_basis(self) -> Dict[str, Tuple[OneForm, QuotientClass]]:
        basis = {}
        for letter in FORM_LETTERS:
            x = Element.generator(letter)
            basis[letter] = (self.pi_map(self.r_inverse(Tensor.pure(_ONE, x))), self.ideal.reduce(x))
        return basis

    # Right-invariant forms and sigma

    def eta_basis(self) -> RightInvariantBasis:
        a, d = Element.generator(ALPHA), Element.generator(DELTA)
        right_matrix = dict(_IDENTITY)
        right_matrix[(ALPHA, BETA)] = -d
        right_matrix[(DELTA, BETA)] = a
        eta = {letter: self.from_right_coefficients([right_matrix[(r, letter)] for r in FORM_LETTERS])
               for letter in FORM_LETTERS}
        # E = I + N with N nilpotent, so E^-1 is a finite Neumann series.
        nilpotent = {key: value - _IDENTITY[key] for key, value in right_matrix.items()}
        inverse, power, sign = dict(_IDENTITY), dict(_IDENTITY), 1
        for _ in range(len(FORM_LETTERS)):
            power = _matrix_product(power, nilpotent)
            sign = -sign
            inverse = {key: inverse[key] + power[key].scale(sign) for key in inverse}
        if _matrix_product(right_matrix, inverse) != _IDENTITY:
            raise CalculusError("right-invariant forms do not give an invertible change of basis")
        return RightInvariantBasis(eta, right_matrix, inverse)

    def eta_round_trip(self) -> List[str]:
        """Names of the w_q not recovered as sum_j eta_j E^-1[j][q]."""
        unrecovered = []
        for q in FORM_LETTERS:
            total = OneForm.zero()
            for j in FORM_LETTERS:
                total = total + self.oneform_times_element(self.eta.eta[j], self.eta.inverse[(j, q)])
            if total != OneForm.basis(q):
                unrecovered.append(FORM_NAMES[q])
        return unrecovered

    def _build_sigma_matrix(self) -> Dict[Tuple[Tuple[str, str], Tuple[str, str]], Element]:
        """
        sigma(w_p (x) w_q) = sum w_r (x) w_k M[(r, k), (p, q)] with
        M[(r, k), (p, q)] = sum_j R_k(E[r][j] w_p) G[j][q].
        """
        matrix = {}
        for p, q in PAIRS:
            for r in FORM_LETTERS:
                for k in FORM_LETTERS:
                    matrix[((r, k), (p, q))] = Element.zero()
            for j in FORM_LETTERS:
                g = self.eta.inverse[(j, q)]
                if not g:
                    continue
                for r in FORM_LETTERS:
                    e = self.eta.right_matrix[(r, j)]
                    if not e:
                        continue
                    right = self.to_right_coefficients(OneForm.basis(p, e))
                    for k, coeff in zip(FORM_LETTERS, right):
                        if coeff:
                            matrix[((r, k), (p, q))] = matrix[((r, k), (p, q))] + multiply(coeff, g)
        return matrix

    def sigma(self, b: BiForm) -> BiForm:
        result = {}
        for target in PAIRS:
            total = Element.zero()
            for source in PAIRS:
                entry = self.sigma_matrix[(target, source)]
                coeff = b.coefficient(source)
                if entry and coeff:
                    total = total + multiply(entry, coeff)
            result[target] = total
        return BiForm(result)

    def _build_wedge_relations(self) -> Dict[Tuple[str, str], Tuple[GaussRational, ...]]:
        """
        Row-reduce the columns of I + sigma, with the three wedge basis pairs
        ordered last, and express every other pair in that basis.
        """
        if any(self.sigma(self.sigma(BiForm.basis(*pair))) != BiForm.basis(*pair) for pair in PAIRS):
            raise CalculusError("sigma is not an involution; ker(I - sigma) != im(I + sigma)")
        others = [pair for pair in PAIRS if pair not in WEDGE_BASIS]
        order = others + list(WEDGE_BASIS)
        rows = []
        for source in PAIRS:
            row = []
            for target in order:
                entry = self.sigma_matrix[(target, source)] + (_ONE if target == source else Element.zero())
                if not entry.is_constant():
                    raise CalculusError(f"sigma relation for {source} has non-constant entry {entry}")
                scalar = entry.constant_term()
                if not scalar.is_constant():
                    raise CalculusError(f"sigma relation for {source} depends on lambda: {scalar}")
                row.append(to_sympy(scalar.constant_term()))
            rows.append(row)
        reduced, pivots = sympy.Matrix(rows).rref()
        if tuple(pivots) != tuple(range(len(others))):
            raise CalculusError(f"exterior square is not spanned by {WEDGE_BASIS}: pivots {pivots}")
        table = {}
        for k, pair in enumerate(others):
            table[pair] = tuple(-from_sympy(reduced[k, len(others) + j]) for j in range(len(WEDGE_BASIS)))
        for j, pair in enumerate(WEDGE_BASIS):
            table[pair] = tuple(GaussRational(1 if i == j else 0) for i in range(len(WEDGE_BASIS)))
        return table

    def wedge_relations(self) -> Dict[Tuple[str, str], Tuple[GaussRational, ...]]:
        return dict(self.pair_reduction)

    # Exterior square

    def project_left_pairs(self, pairs: Dict[Tuple[str, str], Element]) -> TwoForm:
        """Image of sum c_ik w_i (x) w_k (left coefficients) in the wedge basis."""
        coeffs = [Element.zero()] * 3
        for pair, coeff in pairs.items():
            if not coeff:
                continue
            for j, weight in enumerate(self.pair_reduction[pair]):
                if weight:
                    coeffs[j] = coeffs[j] + coeff.scale(weight)
        return TwoForm(coeffs)

    def wedge_project(self, b: BiForm) -> TwoForm:
        pairs = {}
        for (p, q), coeff in b.right_coeffs.items():
            if not coeff:
                continue
            # w_p (x) w_q c = w_p (x) (f_q * c) w_q = (f_p * f_q * c) w_p (x) w_q
            inner = self.form_times_element(q, coeff).coefficient(q)
            left = self.form_times_element(p, inner).coefficient(p)
            pairs[(p, q)] = pairs.get((p, q), Element.zero()) + left
        return self.project_left_pairs(pairs)

    def wedge(self, w1: OneForm, w2: OneForm) -> TwoForm:
        pairs: Dict[Tuple[str, str], Element] = {}
        for i, a in zip(FORM_LETTERS, w1.coeffs):
            if not a:
                continue
            for k, b in zip(FORM_LETTERS, w2.coeffs):
                if not b:
                    continue
                moved = self.form_times_element(i, b)
                for j, c in zip(FORM_LETTERS, moved.coeffs):
                    if c:
                        pairs[(j, k)] = pairs.get((j, k), Element.zero()) + multiply(a, c)
        return self.project_left_pairs(pairs)

    def cartan_maurer(self) -> Dict[str, TwoForm]:
        """d w_i from w_i = sum a_k d(b_k) over r^-1(I (x) x_i) and d(a db) = da ^ db."""
        if self._cartan_maurer is None:
            result = {}
            for letter in FORM_LETTERS:
                total = TwoForm()
                for (a, b), coeff in self.r_inverse(Tensor.pure(_ONE, Element.generator(letter))).terms.items():
                    da = self.differential_monomial(a).scale(coeff)
                    total = total + self.wedge(da, self.differential_monomial(b))
                result[letter] = total
            self._cartan_maurer = result
        return self._cartan_maurer

    def differential_on_forms(self, w: OneForm) -> TwoForm:
        structure = self.cartan_maurer()
        total = TwoForm()
        for letter, coeff in zip(FORM_LETTERS, w.coeffs):
            if not coeff:
                continue
            total = total + self.wedge(self.differential(coeff), OneForm.basis(letter))
            total = total + structure[letter].left_multiply(coeff)
        return total

    # Verification

    def printed_omega(self) -> Dict[str, OneForm]:
        """The published expressions for w_a, w_b, w_d in terms of d."""
        a, b, d = (Element.generator(letter) for letter in (ALPHA, BETA, DELTA))
        return {
            ALPHA: self.differential(a),
            BETA: self.differential(b),
            DELTA: self.differential(b) - self.differential(d).left_multiply(a),
        }

    def verify_calculus(self, max_degree: int) -> VerificationReport:
        report = VerificationReport('calculus', max_degree)
        consistency = self.consistency_status
        logger.info(f"Checking calculus (shift {self.ideal.beta_shift}, degree <= {max_degree})")

        # Left-invariant forms from r^-1 and pi
        basis = self.omega_basis()
        printed = self.printed_omega()
        for letter in FORM_LETTERS:
            derived, _ = basis[letter]
            unit = OneForm.basis(letter)
            report.record(f"calculus.omega[{FORM_NAMES[letter]}]", 'left-invariant-forms', derived == unit,
                          None if derived == unit else derived.to_text())
            source = Tensor.pure(_ONE, Element.generator(letter))
            report.record(f"calculus.r_round_trip[{FORM_NAMES[letter]}]", 'left-invariant-forms',
                          self.r_map(self.r_inverse(source)) == source)
            matches = printed[letter] == derived
            witness = None
            if not matches:
                relabeled = [FORM_NAMES[other] for other in FORM_LETTERS if printed[letter] == basis[other][0]]
                witness = {'derived': derived.to_text(), 'printed': printed[letter].to_text(),
                           'printed_value_equals': relabeled}
            report.record(f"calculus.printed_omega[{FORM_NAMES[letter]}]", 'left-invariant-forms', matches,
                          witness, on_failure=CheckStatus.DISCREPANCY)

        # Commutation rules
        for (x, letter), value in PRINTED_COMMUTATORS.items():
            derived = self.commutator_with(Element.generator(x), letter)
            expected = OneForm.basis(letter, Element.scalar(value))
            report.record(f"calculus.commutator[{x},{FORM_NAMES[letter]}]", 'commutation-rules',
                          derived == expected,
                          {'derived': derived.to_text() or '0', 'printed': expected.to_text() or '0'}
                          if derived != expected else None,
                          on_failure=CheckStatus.DISCREPANCY)

        # Right-invariant forms and sigma
        unrecovered = self.eta_round_trip()
        report.record('calculus.eta', 'right-invariant-forms', not unrecovered,
                      {'unrecovered': unrecovered,
                       **{FORM_NAMES[letter]: self.eta.eta[letter].to_text() for letter in FORM_LETTERS}}
                      if unrecovered else None,
                      on_failure=consistency)
        not_fixed = []
        for p, q in PAIRS:
            symmetric = BiForm.basis(p, q) + BiForm.basis(q, p)
            if self.sigma(symmetric) != symmetric:
                not_fixed.append(f"{FORM_NAMES[p]},{FORM_NAMES[q]}")
        report.record('calculus.sigma_symmetric_fixed', 'braiding', not not_fixed, not_fixed or None,
                      on_failure=consistency)
        involution = all(self.sigma(self.sigma(BiForm.basis(*pair))) == BiForm.basis(*pair) for pair in PAIRS)
        report.record('calculus.sigma_involution', 'braiding', involution, on_failure=consistency)

        # Wedge relations
        for name, relation in PRINTED_WEDGE.items():
            image = self.project_left_pairs({pair: Element.scalar(coeff) for pair, coeff in relation.items()})
            report.record(f"calculus.wedge[{name}]", 'wedge-relations', image.is_zero(),
                          None if image.is_zero() else image.to_text(), on_failure=CheckStatus.DISCREPANCY)

        # Cartan-Maurer
        structure = self.cartan_maurer()
        for letter in (ALPHA, DELTA, BETA):
            derived = structure[letter]
            expected = TwoForm.constant(PRINTED_CARTAN_MAURER[letter])
            report.record(f"calculus.cartan_maurer[{FORM_NAMES[letter]}]", 'cartan-maurer', derived == expected,
                          {'derived': derived.to_text() or '0', 'printed': expected.to_text() or '0'}
                          if derived != expected else None,
                          on_failure=CheckStatus.DISCREPANCY)
        beta_terms = [c for c in structure[BETA].coeffs if c]
        single = len(beta_terms) == 1 and beta_terms[0] in (_ONE, -_ONE)
        report.record('calculus.cartan_maurer_unit_term', 'cartan-maurer', single,
                      structure[BETA].to_text() or '0', on_failure=consistency)

        # d o d, Leibniz, right action, relations, coefficient round trip
        monomials = pbw_monomials(max_degree)
        d_squared = []
        for monomial in monomials:
            value = self.differential_on_forms(self.differential_monomial(monomial))
            if not value.is_zero():
                d_squared.append({'m': monomial.text(), 'dd': value.to_text()})
        report.record('calculus.d_squared', 'cartan-maurer', not d_squared, d_squared[:MAX_WITNESSES] or None,
                      on_failure=consistency)

        leibniz, action = [], []
        for left in monomials:
            for right in monomials:
                if left.degree + right.degree > max_degree:
                    continue
                x, y = Element.monomial(left), Element.monomial(right)
                xy = multiply(x, y)
                expected = self.oneform_times_element(self.differential_monomial(left), y) \
                    + self.differential_monomial(right).left_multiply(x)
                if self.differential(xy) != expected:
                    leibniz.append(f"{left.text()} | {right.text()}")
                for letter in FORM_LETTERS:
                    if self.oneform_times_element(self.form_times_monomial(letter, left), y) \
                            != self.form_times_element(letter, xy):
                        action.append(f"{FORM_NAMES[letter]} | {left.text()} | {right.text()}")
        report.record('calculus.leibniz', 'differential', not leibniz, leibniz[:MAX_WITNESSES] or None)
        report.record('calculus.right_action', 'bimodule', not action, action[:MAX_WITNESSES] or None)

        relation_failures = []
        for name, relation in RELATIONS.items():
            for letter in FORM_LETTERS:
                total = OneForm.zero()
                for word, coeff in relation:
                    w = OneForm.basis(letter)
                    for x in word:
                        w = self.oneform_times_element(w, Element.generator(x))
                    total = total + w.scale(coeff)
                if not total.is_zero():
                    relation_failures.append(f"{FORM_NAMES[letter]} . ({name})")
        report.record('calculus.relation_compatibility', 'bimodule', not relation_failures,
                      relation_failures or None)

        round_trip = []
        for monomial in pbw_monomials(min(max_degree, 3)):
            for letter in FORM_LETTERS:
                w = OneForm.basis(letter, Element.monomial(monomial))
                if self.from_right_coefficients(self.to_right_coefficients(w)) != w:
                    round_trip.append(f"{monomial.text()}*{FORM_NAMES[letter]}")
        report.record('calculus.coefficient_round_trip', 'bimodule', not round_trip, round_trip or None)
        return report

