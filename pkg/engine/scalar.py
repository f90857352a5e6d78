"""
Exact arithmetic in Q(i)[l]: Gaussian rationals extended by the central
formal deformation parameter lambda.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from utils.exceptions import DomainViolationError

Number = Union[int, Fraction, 'GaussRational']


class GaussRational:
    """A complex number with rational real and imaginary parts."""

    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, value: Number) -> 'GaussRational':
        if isinstance(value, GaussRational):
            return value
        return cls(value, 0)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRational(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRational.coerce(other))

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = GaussRational.coerce(other)
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def inverse(self) -> 'GaussRational':
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        return self * GaussRational.coerce(other).inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** -exponent
        result = GaussRational(1)
        for _ in range(exponent):
            result = result * self
        return result

    def to_json(self) -> Tuple[str, str]:
        return (f"{self.re.numerator}/{self.re.denominator}",
                f"{self.im.numerator}/{self.im.denominator}")

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        return format_gauss(self)


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_gauss(value: GaussRational) -> str:
    """Parseable text for a Gaussian rational, e.g. `3/2`, `-i`, `(1 + 2*i)`."""
    re, im = value.re, value.im
    if not im:
        return _format_fraction(re)
    if im == 1:
        imag = "i"
    elif im == -1:
        imag = "-i"
    else:
        imag = f"{_format_fraction(im)}*i"
    if not re:
        return imag
    if im < 0:
        return f"({_format_fraction(re)} - {imag.lstrip('-')})"
    return f"({_format_fraction(re)} + {imag})"


class Scalar:
    """
    Element of Q(i)[l] in canonical sparse form.

    Instances are treated as immutable: every operation returns a new Scalar
    and zero coefficients are never stored.
    """

    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs: Union[Dict[int, GaussRational], Iterable[Tuple[int, GaussRational]], None] = None):
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        canonical = {}
        for power, value in items:
            if power < 0:
                raise DomainViolationError("negative powers of lambda do not occur in Q(i)[l]")
            value = GaussRational.coerce(value)
            if value:
                canonical[power] = canonical[power] + value if power in canonical else value
                if not canonical[power]:
                    del canonical[power]
        self._coeffs = canonical
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Dict[int, GaussRational]) -> 'Scalar':
        instance = cls.__new__(cls)
        instance._coeffs = coeffs
        instance._hash = None
        return instance

    @classmethod
    def constant(cls, value: Number) -> 'Scalar':
        return cls({0: GaussRational.coerce(value)})

    @classmethod
    def i(cls) -> 'Scalar':
        return cls({0: GaussRational(0, 1)})

    @classmethod
    def lam(cls, power: int = 1) -> 'Scalar':
        return cls({power: GaussRational(1)})

    @classmethod
    def coerce(cls, value) -> 'Scalar':
        if isinstance(value, Scalar):
            return value
        return cls.constant(value)

    @property
    def coeffs(self) -> Dict[int, GaussRational]:
        return dict(self._coeffs)

    def items(self):
        return sorted(self._coeffs.items())

    @property
    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(power == 0 for power in self._coeffs)

    def constant_term(self) -> GaussRational:
        return self._coeffs.get(0, GaussRational())

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = Scalar.constant(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        return scalar_add(self, Scalar.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({power: -value for power, value in self._coeffs.items()})

    def __sub__(self, other):
        return scalar_add(self, -Scalar.coerce(other))

    def __rsub__(self, other):
        return scalar_add(Scalar.coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return scalar_mul(self, other)
        if isinstance(other, (int, Fraction, GaussRational)):
            return scalar_mul(self, Scalar.constant(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            return scalar_mul(Scalar.constant(other), self)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'Scalar':
        if exponent < 0:
            if not self.is_constant():
                raise DomainViolationError(f"cannot invert non-constant Scalar {self}")
            return Scalar.constant(self.constant_term() ** exponent)
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def divide_by_constant(self, other: 'Scalar') -> 'Scalar':
        """Division is only defined by Scalars of lambda-degree 0."""
        other = Scalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Scalar")
        if not other.is_constant():
            raise DomainViolationError(f"cannot divide by non-constant Scalar {other}")
        inverse = other.constant_term().inverse()
        return Scalar._raw({power: value * inverse for power, value in self._coeffs.items()})

    def evaluate(self, lambda_value: Number) -> GaussRational:
        point = GaussRational.coerce(lambda_value)
        total = GaussRational()
        for power, value in self._coeffs.items():
            total = total + value * point ** power
        return total

    def canonical(self) -> 'Scalar':
        return Scalar(self._coeffs)

    def to_json(self):
        return [[power, *value.to_json()] for power, value in self.items()]

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return format_scalar(self)


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    result = dict(x._coeffs)
    for power, value in y._coeffs.items():
        if power in result:
            total = result[power] + value
            if total:
                result[power] = total
            else:
                del result[power]
        else:
            result[power] = value
    return Scalar._raw(result)


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    result: Dict[int, GaussRational] = {}
    for p, u in x._coeffs.items():
        for q, v in y._coeffs.items():
            power = p + q
            product = u * v
            if power in result:
                result[power] = result[power] + product
            else:
                result[power] = product
    return Scalar._raw({power: value for power, value in result.items() if value})


def binomial_coefficient(s: Union[int, Fraction], n: int) -> GaussRational:
    """Generalized binomial coefficient s(s-1)...(s-n+1)/n!."""
    s = Fraction(s)
    result = Fraction(1)
    for k in range(n):
        result = result * (s - k) / (k + 1)
    return GaussRational(result)


def _format_lambda(power: int) -> str:
    return "l" if power == 1 else f"l^{power}"


def format_term_scalar(value: GaussRational, power: int) -> Tuple[str, str]:
    """Sign and unsigned body for a single coefficient times l^power."""
    if power == 0:
        text = format_gauss(value)
        if text.startswith('-'):
            return '-', text[1:]
        return '+', text
    if value.im and value.re:
        return '+', f"{format_gauss(value)}*{_format_lambda(power)}"
    sign = '+'
    magnitude = value
    if (value.re < 0) or (not value.re and value.im < 0):
        sign, magnitude = '-', -value
    text = format_gauss(magnitude)
    if text == '1':
        return sign, _format_lambda(power)
    return sign, f"{text}*{_format_lambda(power)}"


def format_scalar(x: Scalar) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for power, value in x.items():
        sign, body = format_term_scalar(value, power)
        if not parts:
            parts.append(body if sign == '+' else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


ZERO = Scalar()
ONE = Scalar.constant(1)
I_UNIT = Scalar.i()
LAMBDA = Scalar.lam()
I_LAMBDA = I_UNIT * LAMBDA
