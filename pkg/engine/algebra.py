"""
The algebra A generated by alpha, beta, delta subject to

    [alpha, beta] = i*l*alpha,   [delta, beta] = i*l*delta,   [alpha, delta] = 0

with PBW normal form beta^b alpha^a delta^d, multiplication, tensor powers and
a classical-limit matrix oracle.
"""
from __future__ import annotations

import itertools
import logging
import random
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import sympy

from utils.exceptions import DomainViolationError
from .scalar import (GaussRational, I_LAMBDA, ONE, ZERO, Scalar, format_scalar,
                     format_term_scalar)

logger = logging.getLogger(__name__)

BETA, ALPHA, DELTA = 'b', 'a', 'd'
LETTERS = (BETA, ALPHA, DELTA)
LETTER_ORDER = {BETA: 0, ALPHA: 1, DELTA: 2}

Word = Tuple[str, ...]

# Each rule rewrites an out-of-order adjacent pair into ordered words.
REWRITE_RULES = {
    (ALPHA, BETA): (((BETA, ALPHA), ONE), ((ALPHA,), I_LAMBDA)),
    (DELTA, BETA): (((BETA, DELTA), ONE), ((DELTA,), I_LAMBDA)),
    (DELTA, ALPHA): (((ALPHA, DELTA), ONE),),
}

REWRITE_STRATEGIES = ('leftmost', 'rightmost', 'random')


class Monomial(NamedTuple):
    """beta^b alpha^a delta^d; the zero triple is the unit I."""
    b: int = 0
    a: int = 0
    d: int = 0

    @property
    def degree(self) -> int:
        return self.b + self.a + self.d

    @property
    def is_unit(self) -> bool:
        return not (self.b or self.a or self.d)

    @classmethod
    def from_letter(cls, letter: str) -> 'Monomial':
        return {BETA: cls(1, 0, 0), ALPHA: cls(0, 1, 0), DELTA: cls(0, 0, 1)}[letter]

    @classmethod
    def from_word(cls, word: Sequence[str]) -> 'Monomial':
        """Exponents of an already ordered word."""
        if not is_sorted_word(word):
            raise DomainViolationError(f"word {''.join(word)} is not in PBW order")
        return cls(word.count(BETA), word.count(ALPHA), word.count(DELTA))

    def word(self) -> Word:
        return (BETA,) * self.b + (ALPHA,) * self.a + (DELTA,) * self.d

    def pbw_key(self):
        return (self.degree, -self.b, -self.a, -self.d)

    def text(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for letter, exponent in ((BETA, self.b), (ALPHA, self.a), (DELTA, self.d)):
            if exponent == 1:
                parts.append(letter)
            elif exponent > 1:
                parts.append(f"{letter}^{exponent}")
        return "*".join(parts)


UNIT = Monomial(0, 0, 0)


def is_sorted_word(word: Sequence[str]) -> bool:
    return all(LETTER_ORDER[x] <= LETTER_ORDER[y] for x, y in zip(word, word[1:]))


@lru_cache(maxsize=None)
def monomial_product(left: Monomial, right: Monomial) -> Tuple[Tuple[Monomial, Scalar], ...]:
    """
    Product of two PBW monomials.

    alpha and delta each shift beta by i*l when moved to its right, so
    alpha^a delta^d beta^n = (beta + (a+d)*i*l)^n alpha^a delta^d.
    """
    a, d = left.a + right.a, left.d + right.d
    shift = left.a + left.d
    if not right.b or not shift:
        return ((Monomial(left.b + right.b, a, d), ONE),)
    step = I_LAMBDA * shift
    terms = []
    for j in range(right.b + 1):
        coeff = Scalar.constant(comb(right.b, j)) * step ** (right.b - j)
        terms.append((Monomial(left.b + j, a, d), coeff))
    return tuple(terms)


class Element:
    """Finite linear combination of PBW monomials with Scalar coefficients."""

    __slots__ = ('terms', '_hash')

    def __init__(self, terms: Optional[Union[Dict[Monomial, Scalar], Iterable[Tuple[Monomial, Scalar]]]] = None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        collected: Dict[Monomial, Scalar] = {}
        for monomial, coeff in items:
            accumulate(collected, Monomial(*monomial), Scalar.coerce(coeff))
        self.terms = collected
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Scalar]) -> 'Element':
        instance = cls.__new__(cls)
        instance.terms = terms
        instance._hash = None
        return instance

    @classmethod
    def zero(cls) -> 'Element':
        return cls._raw({})

    @classmethod
    def one(cls) -> 'Element':
        return cls._raw({UNIT: ONE})

    @classmethod
    def scalar(cls, value) -> 'Element':
        value = Scalar.coerce(value)
        return cls._raw({UNIT: value} if value else {})

    @classmethod
    def monomial(cls, monomial: Monomial, coeff=ONE) -> 'Element':
        coeff = Scalar.coerce(coeff)
        return cls._raw({Monomial(*monomial): coeff} if coeff else {})

    @classmethod
    def generator(cls, letter: str) -> 'Element':
        return cls.monomial(Monomial.from_letter(letter))

    def items(self) -> List[Tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0].pbw_key())

    def coefficient(self, monomial: Monomial) -> Scalar:
        return self.terms.get(Monomial(*monomial), ZERO)

    def constant_term(self) -> Scalar:
        return self.terms.get(UNIT, ZERO)

    def is_constant(self) -> bool:
        return all(monomial.is_unit for monomial in self.terms)

    @property
    def degree(self) -> int:
        return max((monomial.degree for monomial in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Element.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(other)
        result = dict(self.terms)
        for monomial, coeff in other.terms.items():
            accumulate(result, monomial, coeff)
        return Element._raw(result)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({monomial: -coeff for monomial, coeff in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return Element.scalar(other) - self

    def scale(self, value) -> 'Element':
        value = Scalar.coerce(value)
        if not value:
            return Element.zero()
        return Element._raw({monomial: coeff * value for monomial, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> 'Element':
        if exponent < 0:
            raise DomainViolationError(f"negative power {exponent} of an Element")
        result = Element.one()
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def substitute_lambda(self, lambda_value) -> 'Element':
        """Coefficients evaluated at l = lambda_value; the result has constant coefficients."""
        terms: Dict[Monomial, Scalar] = {}
        for monomial, coeff in self.terms.items():
            accumulate(terms, monomial, Scalar.constant(coeff.evaluate(lambda_value)))
        return Element._raw(terms)

    def to_text(self) -> str:
        return format_element(self)

    def to_json(self):
        return [{'monomial': monomial.text(), 'exponents': list(monomial), 'coeff': coeff.to_json()}
                for monomial, coeff in self.items()]

    def __repr__(self):
        return f"Element({self.to_text()})"

    def __str__(self):
        return self.to_text()


def accumulate(terms: Dict, key, coeff: Scalar) -> None:
    if not coeff:
        return
    if key in terms:
        total = terms[key] + coeff
        if total:
            terms[key] = total
        else:
            del terms[key]
    else:
        terms[key] = coeff


def normal_form(word: Sequence[str], strategy: str = 'leftmost', seed: Optional[int] = None) -> Element:
    """
    Rewrite a word into PBW normal form with the three commutation rules.

    `strategy` picks which out-of-order adjacent pair is rewritten first; the
    result does not depend on it.
    """
    if strategy not in REWRITE_STRATEGIES:
        raise ValueError(f"unknown rewriting strategy: {strategy}")
    for letter in word:
        if letter not in LETTER_ORDER:
            raise DomainViolationError(f"unknown generator letter: {letter}")
    rng = random.Random(seed)
    pending: Dict[Word, Scalar] = {tuple(word): ONE}
    result: Dict[Monomial, Scalar] = {}
    steps = 0
    while pending:
        current, coeff = pending.popitem()
        inversions = [k for k in range(len(current) - 1)
                      if LETTER_ORDER[current[k]] > LETTER_ORDER[current[k + 1]]]
        if not inversions:
            accumulate(result, Monomial.from_word(current), coeff)
            continue
        if strategy == 'leftmost':
            k = inversions[0]
        elif strategy == 'rightmost':
            k = inversions[-1]
        else:
            k = rng.choice(inversions)
        head, pair, tail = current[:k], current[k:k + 2], current[k + 2:]
        for replacement, factor in REWRITE_RULES[pair]:
            accumulate(pending, head + replacement + tail, coeff * factor)
        steps += 1
    logger.debug(f"normal_form({''.join(word)}) - {steps} rewrites ({strategy})")
    return Element._raw(result)


def multiply(x: Element, y: Element) -> Element:
    result: Dict[Monomial, Scalar] = {}
    for left, u in x.terms.items():
        for right, v in y.terms.items():
            uv = u * v
            for monomial, coeff in monomial_product(left, right):
                accumulate(result, monomial, uv * coeff if coeff is not ONE else uv)
    return Element._raw(result)


class Tensor:
    """Element of A^(x)n as a map from n-tuples of monomials to Scalars."""

    __slots__ = ('arity', 'terms')

    def __init__(self, arity: int, terms: Optional[Union[Dict, Iterable]] = None):
        self.arity = arity
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        collected: Dict[Tuple[Monomial, ...], Scalar] = {}
        for key, coeff in items:
            key = tuple(Monomial(*slot) for slot in key)
            if len(key) != arity:
                raise ValueError(f"tensor key {key} does not have arity {arity}")
            accumulate(collected, key, Scalar.coerce(coeff))
        self.terms = collected

    @classmethod
    def _raw(cls, arity: int, terms: Dict) -> 'Tensor':
        instance = cls.__new__(cls)
        instance.arity = arity
        instance.terms = terms
        return instance

    @classmethod
    def zero(cls, arity: int) -> 'Tensor':
        return cls._raw(arity, {})

    @classmethod
    def unit(cls, arity: int) -> 'Tensor':
        return cls._raw(arity, {(UNIT,) * arity: ONE})

    @classmethod
    def pure(cls, *factors: Element) -> 'Tensor':
        """x1 (x) x2 (x) ... for Elements x_k."""
        terms: Dict[Tuple[Monomial, ...], Scalar] = {}
        for combo in itertools.product(*(factor.terms.items() for factor in factors)):
            coeff = ONE
            for _, value in combo:
                coeff = coeff * value
            accumulate(terms, tuple(monomial for monomial, _ in combo), coeff)
        return cls._raw(len(factors), terms)

    def items(self):
        return sorted(self.terms.items(),
                      key=lambda item: tuple(slot.pbw_key() for slot in item[0]))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: 'Tensor') -> 'Tensor':
        result = dict(self.terms)
        for key, coeff in other.terms.items():
            accumulate(result, key, coeff)
        return Tensor._raw(self.arity, result)

    def __neg__(self):
        return Tensor._raw(self.arity, {key: -coeff for key, coeff in self.terms.items()})

    def __sub__(self, other: 'Tensor') -> 'Tensor':
        return self + (-other)

    def scale(self, value) -> 'Tensor':
        value = Scalar.coerce(value)
        if not value:
            return Tensor.zero(self.arity)
        return Tensor._raw(self.arity, {key: coeff * value for key, coeff in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return tensor_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def slot_elements(self) -> List[Tuple[Tuple[Element, ...], Scalar]]:
        return [(tuple(Element.monomial(slot) for slot in key), coeff) for key, coeff in self.items()]

    def to_text(self) -> str:
        return format_tensor(self)

    def to_json(self):
        return [{'slots': [slot.text() for slot in key], 'coeff': coeff.to_json()}
                for key, coeff in self.items()]

    def __repr__(self):
        return f"Tensor{self.arity}({self.to_text()})"


Tensor2 = Tensor
Tensor3 = Tensor


def tensor_multiply(x: Tensor, y: Tensor) -> Tensor:
    """(a (x) b)(c (x) d) = ac (x) bd, extended bilinearly."""
    if x.arity != y.arity:
        raise ValueError(f"cannot multiply tensors of arity {x.arity} and {y.arity}")
    result: Dict[Tuple[Monomial, ...], Scalar] = {}
    for left_key, u in x.terms.items():
        for right_key, v in y.terms.items():
            uv = u * v
            slots = [monomial_product(l, r) for l, r in zip(left_key, right_key)]
            for combo in itertools.product(*slots):
                coeff = uv
                for _, factor in combo:
                    if factor is not ONE:
                        coeff = coeff * factor
                accumulate(result, tuple(monomial for monomial, _ in combo), coeff)
    return Tensor._raw(x.arity, result)


def tensor_multiply2(x: Tensor2, y: Tensor2) -> Tensor2:
    return tensor_multiply(x, y)


def pbw_monomials(max_degree: int) -> List[Monomial]:
    """All PBW monomials of total degree <= max_degree, by degree then PBW word order."""
    if max_degree < 0:
        raise DomainViolationError("max_degree must be non-negative")
    monomials = [Monomial(b, a, d)
                 for b in range(max_degree + 1)
                 for a in range(max_degree + 1 - b)
                 for d in range(max_degree + 1 - b - a)]
    return sorted(monomials, key=Monomial.pbw_key)


def monomials_of_degree(degree: int) -> List[Monomial]:
    return [m for m in pbw_monomials(degree) if m.degree == degree]


def format_coefficient_term(coeff: Scalar, body: str) -> Tuple[str, str]:
    """Sign and text for `coeff * body`, where body is '1' for the unit."""
    items = coeff.items()
    single = len(items) == 1 and not (items[0][1].re and items[0][1].im and items[0][0] == 0)
    if single:
        power, value = items[0]
        sign, text = format_term_scalar(value, power)
    else:
        sign, text = '+', f"({format_scalar(coeff)})"
    if body == "1":
        return sign, text
    if text == "1":
        return sign, body
    return sign, f"{text}*{body}"


def join_signed(parts: List[Tuple[str, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for sign, text in parts:
        if not out:
            out.append(text if sign == '+' else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def format_element(x: Element) -> str:
    """Canonical text: descending degree, then PBW order; `b*a + i*l*a`."""
    ordered = sorted(x.terms.items(), key=lambda item: (-item[0].degree, -item[0].b, -item[0].a, -item[0].d))
    return join_signed([format_coefficient_term(coeff, monomial.text()) for monomial, coeff in ordered])


def format_tensor(t: Tensor) -> str:
    parts = []
    for key, coeff in t.items():
        body = " (x) ".join(slot.text() for slot in key)
        sign, text = format_coefficient_term(coeff, "1")
        if text == "1":
            parts.append((sign, body))
        else:
            parts.append((sign, f"{text}*{body}"))
    return join_signed(parts)


# Pairwise commuting upper-triangular images of the generators (polynomials in
# one nilpotent Jordan block); products of them commute like A does at l = 0.
_JORDAN = sympy.Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
_GENERATOR_MATRICES = {
    ALPHA: 2 * sympy.eye(3) + _JORDAN,
    BETA: -sympy.eye(3) + 3 * _JORDAN + _JORDAN ** 2,
    DELTA: sympy.I * sympy.eye(3) + sympy.Rational(1, 2) * _JORDAN ** 2,
}


def to_sympy(value: GaussRational):
    return sympy.Rational(value.re.numerator, value.re.denominator) + \
        sympy.I * sympy.Rational(value.im.numerator, value.im.denominator)


def matrix_representation(x: Element, lambda_value=0) -> sympy.Matrix:
    """
    Image of x under a classical-limit representation by 3x3 upper-triangular
    matrices over Q(i). Only lambda = 0 is supported.
    """
    if GaussRational.coerce(lambda_value):
        raise DomainViolationError("matrix_representation is only defined at lambda = 0")
    result = sympy.zeros(3, 3)
    for monomial, coeff in x.terms.items():
        value = coeff.evaluate(lambda_value)
        if not value:
            continue
        image = sympy.eye(3)
        for letter in monomial.word():
            image = image * _GENERATOR_MATRICES[letter]
        result += to_sympy(value) * image
    return sympy.expand(result)


def word_matrix(word: Sequence[str]) -> sympy.Matrix:
    """Product of generator images along an unreduced word."""
    image = sympy.eye(3)
    for letter in word:
        image = image * _GENERATOR_MATRICES[letter]
    return sympy.expand(image)


def from_sympy(value) -> GaussRational:
    """Inverse of to_sympy for exact Gaussian rationals."""
    re, im = sympy.Rational(sympy.re(value)), sympy.Rational(sympy.im(value))
    return GaussRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def verify_algebra(max_degree: int, max_word_length: int = 6) -> 'VerificationReport':
    """Rewriting confluence, Ore product, associativity and the l = 0 matrix oracle."""
    from .report import VerificationReport

    report = VerificationReport('hopf', max_degree)
    logger.info(f"Checking rewriting confluence on words of length <= {max_word_length}")
    diamond, sorted_fixed = [], []
    for length in range(max_word_length + 1):
        for index, word in enumerate(itertools.product(LETTERS, repeat=length)):
            leftmost = normal_form(word, 'leftmost')
            if (normal_form(word, 'rightmost') != leftmost
                    or normal_form(word, 'random', seed=index) != leftmost):
                diamond.append(''.join(word))
            if is_sorted_word(word) and leftmost != Element.monomial(Monomial.from_word(word)):
                sorted_fixed.append(''.join(word))
    report.record('algebra.diamond', 'relations', not diamond, diamond[:5] or None)
    report.record('algebra.sorted_words_fixed', 'relations', not sorted_fixed, sorted_fixed[:5] or None)

    monomials = pbw_monomials(max_degree)
    ore = []
    for left in monomials:
        for right in monomials:
            if left.degree + right.degree > max_degree:
                continue
            product = multiply(Element.monomial(left), Element.monomial(right))
            if product != normal_form(left.word() + right.word()):
                ore.append(f"{left.text()} | {right.text()}")
    report.record('algebra.ore_product', 'relations', not ore, ore[:5] or None)

    small = pbw_monomials(min(max_degree, 2))
    associativity = []
    for x, y, z in itertools.product(small, repeat=3):
        ex, ey, ez = Element.monomial(x), Element.monomial(y), Element.monomial(z)
        if multiply(multiply(ex, ey), ez) != multiply(ex, multiply(ey, ez)):
            associativity.append(f"{x.text()} | {y.text()} | {z.text()}")
    report.record('algebra.associativity', 'relations', not associativity, associativity[:5] or None)

    classical = []
    for length in range(min(max_degree, 3) + 1):
        for word in itertools.product(LETTERS, repeat=length):
            if not (matrix_representation(normal_form(word)) - word_matrix(word)).expand().is_zero_matrix:
                classical.append(''.join(word))
    report.record('algebra.classical_limit', 'relations', not classical, classical[:5] or None)
    return report
