"""Exact arithmetic for univariate integer polynomials.

Polynomials are stored densely: ``coefficients[k]`` is the coefficient of
``x**k``, the highest stored coefficient is nonzero, and the zero polynomial
stores nothing.  Coefficients are plain Python ints, so everything here is
exact at any size; there is deliberately no float path and no division.

Two interchange forms round-trip with each other: a text form like
``3x^3+8x^2+5x`` (descending powers, zero terms omitted, unit coefficients
omitted except for constants) and a JSON array form like ``[0, 5, 8, 3]``
whose index is the power of x.
"""

from __future__ import annotations

import re
from typing import Iterable, Union

_TERM_RE = re.compile(r"^([0-9]+)?(x(?:\^([0-9]+))?)?$")
_SPLIT_RE = re.compile(r"[+-][^+-]*|^[^+-]+")

PolynomialLike = Union["Polynomial", int, Iterable[int]]


class Polynomial:
    """An immutable polynomial in x with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def coerce(cls, value: PolynomialLike) -> "Polynomial":
        """Build a polynomial from an int, a coefficient list, or pass one through."""
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(value)

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coefficients by ascending power; also the JSON array form."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    def evaluate(self, value: int) -> int:
        """Exact evaluation at an integer point, by Horner's rule."""
        result = 0
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def exact_div(self, divisor: int) -> "Polynomial":
        """Divide every coefficient by ``divisor``; raise if any remainder."""
        out = []
        for c in self._coeffs:
            q, r = divmod(c, divisor)
            if r:
                raise ValueError(f"coefficient {c} is not divisible by {divisor}")
            out.append(q)
        return Polynomial(out)

    def __add__(self, other: PolynomialLike) -> "Polynomial":
        other = Polynomial.coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other: PolynomialLike) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other: PolynomialLike) -> "Polynomial":
        return Polynomial.coerce(other) + (-self)

    def __mul__(self, other: PolynomialLike) -> "Polynomial":
        other = Polynomial.coerce(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == (Polynomial.constant(other))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse the text form produced by ``str``; inverse of rendering."""
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty polynomial text")
        terms = _SPLIT_RE.findall(compact)
        if "".join(terms) != compact:
            raise ValueError(f"cannot parse polynomial: {text!r}")
        powers: dict[int, int] = {}
        for term in terms:
            sign = 1
            body = term
            if body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            match = _TERM_RE.match(body)
            if not match or (match.group(1) is None and match.group(2) is None):
                raise ValueError(f"cannot parse polynomial term: {term!r}")
            coeff = int(match.group(1)) if match.group(1) is not None else 1
            if match.group(2) is None:
                power = 0
            elif match.group(3) is None:
                power = 1
            else:
                power = int(match.group(3))
            powers[power] = powers.get(power, 0) + sign * coeff
        size = max(powers) + 1 if powers else 0
        out = [0] * size
        for power, coeff in powers.items():
            out[power] = coeff
        return cls(out)


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))
