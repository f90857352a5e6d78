"""
Expression parser for elements of A.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := rational | 'i' | 'l' | generator | '(' expr ')'

Generators are `a|alpha`, `b|beta`, `d|delta`; `1` is the unit. Products keep
their left-to-right order.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import pyparsing as pp

from utils.exceptions import ParseError, UnknownIdentifierError
from .algebra import ALPHA, BETA, DELTA, Element, multiply
from .scalar import I_UNIT, LAMBDA

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

GENERATOR_NAMES = {
    'a': ALPHA, 'alpha': ALPHA,
    'b': BETA, 'beta': BETA,
    'd': DELTA, 'delta': DELTA,
}
SCALAR_NAMES = ('i', 'l')


class Expr:
    """Parse tree node."""

    def evaluate(self) -> Element:
        raise NotImplementedError


@dataclass(frozen=True)
class Rational(Expr):
    value: Fraction

    def evaluate(self) -> Element:
        return Element.scalar(self.value)


@dataclass(frozen=True)
class ScalarSymbol(Expr):
    name: str

    def evaluate(self) -> Element:
        return Element.scalar(I_UNIT if self.name == 'i' else LAMBDA)


@dataclass(frozen=True)
class Generator(Expr):
    letter: str

    def evaluate(self) -> Element:
        return Element.generator(self.letter)


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int

    def evaluate(self) -> Element:
        return self.base.evaluate() ** self.exponent


@dataclass(frozen=True)
class Product(Expr):
    factors: Tuple[Expr, ...]

    def evaluate(self) -> Element:
        result = Element.one()
        for factor in self.factors:
            result = multiply(result, factor.evaluate())
        return result


@dataclass(frozen=True)
class Sum(Expr):
    # (sign, term) pairs, sign is '+' or '-'
    terms: Tuple[Tuple[str, Expr], ...]

    def evaluate(self) -> Element:
        result = Element.zero()
        for sign, term in self.terms:
            value = term.evaluate()
            result = result + value if sign == '+' else result - value
        return result


def _rational_action(s: str, loc: int, toks):
    numerator, _, denominator = toks[0].replace(' ', '').partition('/')
    if denominator and int(denominator) == 0:
        raise ParseError("division by zero in rational literal", position=loc, source=s)
    return Rational(Fraction(int(numerator), int(denominator or 1)))


def _identifier_action(s: str, loc: int, toks):
    name = toks[0]
    if name in GENERATOR_NAMES:
        return Generator(GENERATOR_NAMES[name])
    if name in SCALAR_NAMES:
        return ScalarSymbol(name)
    raise UnknownIdentifierError(f"unknown identifier '{name}'", position=loc, source=s)


def _factor_action(toks):
    if len(toks) == 1:
        return toks[0]
    return Power(toks[0], int(toks[1]))


def _term_action(toks):
    if len(toks) == 1:
        return toks[0]
    return Product(tuple(toks))


def _expr_action(toks):
    items = list(toks)
    if items[0] not in ('+', '-'):
        items.insert(0, '+')
    terms = tuple((items[k], items[k + 1]) for k in range(0, len(items), 2))
    if len(terms) == 1 and terms[0][0] == '+':
        return terms[0][1]
    return Sum(terms)


def _build_grammar() -> pp.ParserElement:
    natural = pp.Word(pp.nums)
    rational = pp.Regex(r"\d+(?:\s*/\s*\d+)?").set_parse_action(_rational_action)
    identifier = pp.Word(pp.alphas, pp.alphanums + '_').set_parse_action(_identifier_action)
    sign = pp.one_of('+ -')

    expr = pp.Forward()
    atom = rational | identifier | (pp.Suppress('(') + expr + pp.Suppress(')'))
    factor = (atom + pp.Optional(pp.Suppress('^') + natural)).set_parse_action(_factor_action)
    term = (factor + pp.ZeroOrMore(pp.Suppress('*') + factor)).set_parse_action(_term_action)
    expr <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(_expr_action)
    return expr + pp.StringEnd()


GRAMMAR = _build_grammar()


def parse(src: str) -> Expr:
    """Parse `src` into an Expr tree; errors carry the offending position."""
    if not src or not src.strip():
        raise ParseError("empty expression", position=0, source=src)
    try:
        result = GRAMMAR.parse_string(src, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ParseError(f"syntax error: {exc.msg}", position=exc.loc, source=src) from None
    logger.debug(f"Parsed '{src}' -> {result[0]!r}")
    return result[0]


def parse_element(src: str) -> Element:
    return parse(src).evaluate()
