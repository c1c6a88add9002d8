"""Exact univariate polynomials in the deformation parameter q.

Coefficients are arbitrary-precision rationals (`fractions.Fraction`), so
every contraction amplitude in the package is an exact object and equality
of amplitudes is structural equality.  The canonical form stores ascending
powers with the trailing (highest-power) coefficient nonzero; the zero
polynomial is the empty coefficient tuple.

>>> p = QPolynomial([1, 1])          # 1 + q
>>> str(p * p)
'1 + 2*q + q^2'
>>> p.evaluate(Fraction(1, 2))
Fraction(3, 2)
"""

import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import ContractViolation, ParseError

Coefficient = Union[int, Fraction]

_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\*?)?(?P<var>q(?:\^(?P<exp>\d+))?)?$"
)


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class QPolynomial:
    """Polynomial in q with exact rational coefficients, index = power."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Coefficient] = ()):
        object.__setattr__(
            self, "coefficients", _trim([Fraction(c) for c in coefficients])
        )

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def _from_trimmed(cls, coeffs: tuple) -> "QPolynomial":
        # trusted constructor: caller guarantees Fractions in canonical form
        p = cls.__new__(cls)
        object.__setattr__(p, "coefficients", coeffs)
        return p

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def q(cls) -> "QPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coefficient: Coefficient = 1) -> "QPolynomial":
        if power < 0:
            raise ContractViolation("monomial power must be >= 0")
        return cls([0] * power + [coefficient])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self == QPolynomial((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other) -> "QPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial._from_trimmed(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial._from_trimmed(tuple(-c for c in self.coefficients))

    def __sub__(self, other) -> "QPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPolynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return QPolynomial._from_trimmed(_trim(out))

    __rmul__ = __mul__

    def evaluate(self, q_value):
        """Horner evaluation.  Exact (Fraction) for int/Fraction input,
        float for float input."""
        if isinstance(q_value, float):
            acc = 0.0
        else:
            q_value = Fraction(q_value)
            acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * q_value + c
        return acc

    def substitute_power(self, m: int) -> "QPolynomial":
        """Substitute q -> q^m: the coefficient of q^k moves to q^(m*k)."""
        if m < 1:
            raise ContractViolation("substitution power must be >= 1")
        if m == 1 or not self.coefficients:
            return self
        out = [Fraction(0)] * ((len(self.coefficients) - 1) * m + 1)
        for k, c in enumerate(self.coefficients):
            out[m * k] = c
        return QPolynomial._from_trimmed(_trim(out))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for power, c in enumerate(self.coefficients):
            if not c:
                continue
            parts.append((power, c))
        pieces = []
        for i, (power, c) in enumerate(parts):
            if i == 0:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            pieces.append(sign + _term_str(power, abs(c)))
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QPolynomial({str(self)!r})"


def _coerce(value) -> "QPolynomial | None":
    if isinstance(value, QPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return QPolynomial((value,))
    return None


def _term_str(power: int, c: Fraction) -> str:
    coef = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if power == 0:
        return coef
    var = "q" if power == 1 else f"q^{power}"
    return var if c == 1 else f"{coef}*{var}"


def parse(text: str) -> QPolynomial:
    """Parse the rendering produced by ``str``: ascending powers, terms
    joined by ' + ' / ' - ', rationals as 'p/q', e.g. '1 + 2*q + q^3'."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    if s == "0":
        return QPolynomial.zero()
    # split into signed terms at top level
    chunks = re.split(r"(?=[+-])", s.replace(" ", ""))
    coeffs: dict[int, Fraction] = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        body = chunk
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ParseError(f"bad polynomial term {chunk!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var") is None:
            power = 0
        elif m.group("exp") is None:
            power = 1
        else:
            power = int(m.group("exp"))
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coef
    out = [Fraction(0)] * (max(coeffs) + 1)
    for power, c in coeffs.items():
        out[power] = c
    return QPolynomial._from_trimmed(_trim(out))
