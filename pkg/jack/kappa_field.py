from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.densearith import dup_add, dup_mul, dup_mul_ground, dup_neg, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_eval
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_inner_gcd

from errors import DivisionByZero, MalformedInput, NonGenericWarning, PoleAtPoint, ZeroDenominator

KAPPA_SYMBOL = 'κ'


def to_qq(value):
    """
    Converts an int, Fraction, 'p/q' string or QQ element into a QQ element
    """
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, bool):
        raise MalformedInput(f'not a rational number: {value!r}')
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            parsed = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedInput(f'not a rational number: {value!r}') from e
        return QQ(parsed.numerator, parsed.denominator)
    raise MalformedInput(f'not a rational number: {value!r}')


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _rational_str(value) -> str:
    return f'{int(value.numerator)}/{int(value.denominator)}'


@dataclass(frozen=True)
class RatPoly:
    """
    Dense polynomial in kappa, constant term first. The zero polynomial is the empty tuple.
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [Fraction(c) if not isinstance(c, str) else Fraction(c.strip()) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_dup(self) -> List:
        return [QQ(c.numerator, c.denominator) for c in reversed(self.coeffs)]

    @classmethod
    def from_dup(cls, f: Sequence) -> RatPoly:
        return cls(tuple(to_fraction(c) for c in reversed(list(f))))

    def __mul__(self, other: RatPoly) -> RatPoly:
        return RatPoly.from_dup(dup_mul(self.to_dup(), other.to_dup(), QQ))


def _normalizer(den: List):
    """
    The factor that makes den integer, primitive and with positive leading coefficient
    """
    lcm = math.lcm(*(int(c.denominator) for c in den))
    content = math.gcd(*(int(c.numerator) * (lcm // int(c.denominator)) for c in den))
    scale = QQ(lcm, content)
    return -scale if den[0] < 0 else scale


def _canonical(num: List, den: List, reduced: bool = False) -> Tuple[List, List]:
    num = dup_strip(num)
    den = dup_strip(den)
    if not den:
        raise ZeroDenominator('denominator is the zero polynomial')
    if not num:
        return [], [QQ(1)]
    if not reduced and len(den) > 1 and len(num) > 1:
        _, num, den = dup_inner_gcd(num, den, QQ)
    scale = _normalizer(den)
    if scale != 1:
        num = dup_mul_ground(num, scale, QQ)
        den = dup_mul_ground(den, scale, QQ)
    return num, den


class KField:
    """
    An element of Q(kappa), kept in canonical form: gcd(num, den) = 1 and den an
    integer polynomial with content 1 and positive leading coefficient.
    Internally both parts are sympy dense lists over QQ, highest degree first.
    """
    __slots__ = ('_num', '_den')

    def __init__(self, num: Iterable = (), den: Iterable = (1,)):
        """
        :param num: numerator coefficients, constant term first
        :param den: denominator coefficients, constant term first
        """
        n = [to_qq(c) for c in reversed(list(num))]
        d = [to_qq(c) for c in reversed(list(den))]
        self._num, self._den = _canonical(n, d)

    @classmethod
    def _from_dup(cls, num: List, den: List, reduced: bool = False) -> KField:
        obj = object.__new__(cls)
        obj._num, obj._den = _canonical(num, den, reduced)
        return obj

    @classmethod
    def _raw(cls, num: List, den: List) -> KField:
        obj = object.__new__(cls)
        obj._num, obj._den = num, den
        return obj

    @classmethod
    def const(cls, value) -> KField:
        value = to_qq(value)
        return cls._raw([value] if value else [], [QQ(1)])

    @classmethod
    def linear(cls, a, b) -> KField:
        """
        a + b*kappa
        """
        return cls((a, b))

    @property
    def num(self) -> RatPoly:
        return RatPoly.from_dup(self._num)

    @property
    def den(self) -> RatPoly:
        return RatPoly.from_dup(self._den)

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        return len(self._den) == 1

    def is_constant(self) -> bool:
        return len(self._den) == 1 and len(self._num) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise MalformedInput(f'{self} depends on {KAPPA_SYMBOL}')
        return to_fraction(self._num[0]) if self._num else Fraction(0)

    def __bool__(self):
        return bool(self._num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((tuple(self._num), tuple(self._den)))

    def __neg__(self) -> KField:
        return KField._raw(dup_neg(self._num, QQ), self._den)

    def __add__(self, other) -> KField:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if len(self._den) == 1 and len(other._den) == 1:
            num = dup_add(self._num, other._num, QQ)
            return KField._raw(num, [QQ(1)]) if num else ZERO
        if self._den == other._den:
            return KField._from_dup(dup_add(self._num, other._num, QQ), self._den)
        num = dup_add(dup_mul(self._num, other._den, QQ), dup_mul(other._num, self._den, QQ), QQ)
        return KField._from_dup(num, dup_mul(self._den, other._den, QQ))

    __radd__ = __add__

    def __sub__(self, other) -> KField:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> KField:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> KField:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self._num, self._den, other._num, other._den
        if not a1 or not a2:
            return ZERO
        if len(b1) == 1 and len(b2) == 1:
            return KField._raw(dup_mul(a1, a2, QQ), [QQ(1)])
        # cross cancellation keeps the product reduced without a gcd of the full product
        if len(a1) > 1 and len(b2) > 1:
            _, a1, b2 = dup_inner_gcd(a1, b2, QQ)
        if len(a2) > 1 and len(b1) > 1:
            _, a2, b1 = dup_inner_gcd(a2, b1, QQ)
        return KField._from_dup(dup_mul(a1, a2, QQ), dup_mul(b1, b2, QQ), reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> KField:
        if not self._num:
            raise DivisionByZero('division by the zero element')
        return KField._from_dup(self._den, self._num, reduced=True)

    def __truediv__(self, other) -> KField:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> KField:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> KField:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def neg_kappa(self) -> KField:
        """
        The substitution kappa -> -kappa
        """
        return KField._from_dup(_flip_odd(self._num), _flip_odd(self._den), reduced=True)

    def eval(self, kappa0, N: int | None = None) -> Fraction:
        return kf_eval(self, kappa0, N)

    def to_json(self) -> Dict:
        return {
            'num': [_rational_str(c) for c in reversed(self._num)] or ['0/1'],
            'den': [_rational_str(c) for c in reversed(self._den)],
        }

    @classmethod
    def from_json(cls, data: Dict) -> KField:
        try:
            return cls(data['num'], data['den'])
        except (KeyError, TypeError) as e:
            raise MalformedInput(f'not a serialized coefficient: {data!r}') from e

    def __str__(self):
        num = _format_with_content(self._num)
        if len(self._den) == 1:
            return num
        if len(self._num) > 1 and not num.endswith(')'):
            num = f'({num})'
        return f'{num}/({_format_dup(self._den)})'

    def __repr__(self):
        return f'KField({self})'


def _flip_odd(f: List) -> List:
    top = len(f) - 1
    return [-c if (top - k) % 2 else c for k, c in enumerate(f)]


def _format_dup(f: List) -> str:
    if not f:
        return '0'
    parts = []
    top = len(f) - 1
    for k, c in enumerate(reversed(f)):
        if not c:
            continue
        value = to_fraction(c)
        sign = '-' if value < 0 else '+'
        value = abs(value)
        if k == 0:
            body = str(value)
        else:
            power = KAPPA_SYMBOL if k == 1 else f'{KAPPA_SYMBOL}^{k}'
            body = power if value == 1 else (f'{value}{power}' if value.denominator == 1 else f'({value}){power}')
        parts.append((sign, body))
    text = ('-' if parts[0][0] == '-' else '') + parts[0][1]
    for sign, body in parts[1:]:
        text += f' {sign} {body}'
    return text if top >= 0 else '0'


def _format_with_content(f: List) -> str:
    """
    Pulls the rational content out of a numerator with several terms, e.g. 3(1 - 3κ)
    """
    if len([c for c in f if c]) < 2:
        return _format_dup(f)
    content = 1 / abs(_normalizer(f))
    if content == 1:
        return _format_dup(f)
    primitive = dup_mul_ground(f, 1 / content, QQ)
    return f'{to_fraction(content)}({_format_dup(primitive)})'


def _coerce(value):
    if isinstance(value, KField):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return KField.const(value)
    return NotImplemented


def kf_normalize(num: RatPoly, den: RatPoly) -> KField:
    """
    The canonical representative of num/den
    """
    return KField(num.coeffs, den.coeffs or (0,))


def kf_arith(a: KField, b: KField, op: str) -> KField:
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise MalformedInput(f'unknown operation {op!r}')


def is_generic(kappa0, N: int) -> bool:
    """
    Whether kappa0 avoids every m/n with 1 <= n <= N
    """
    return int(to_qq(kappa0).denominator) > N


def kf_eval(f: KField, kappa0, N: int | None = None) -> Fraction:
    """
    Evaluates f at a rational point.
    :param f: the rational function
    :param kappa0: the point, as int, Fraction or 'p/q'
    :param N: ambient number of variables; when given, non-generic points raise a NonGenericWarning
    """
    point = to_qq(kappa0)
    den = dup_eval(f._den, point, QQ)
    if not den:
        raise PoleAtPoint(f'{f} has a pole at {KAPPA_SYMBOL}={to_fraction(point)}')
    if N is not None and not is_generic(point, N):
        warnings.warn(f'{KAPPA_SYMBOL}={to_fraction(point)} is not generic for N={N}', NonGenericWarning)
    return to_fraction(dup_eval(f._num, point, QQ) / den)


def kf_rising(x: KField, n: int) -> KField:
    """
    The shifted factorial x(x+1)...(x+n-1)
    """
    result = ONE
    for t in range(n):
        result = result * (x + t)
    return result


ZERO = KField()
ONE = KField.const(1)
KAPPA = KField((0, 1))
