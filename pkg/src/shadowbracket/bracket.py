"""The bracket 5-tuple algebra for 3-tangle shadows.

The shadow bracket of a 3-tangle is a formal combination
``a<1_3> + b<U1> + c<U2> + d<r> + e<s>`` with coefficients in Z[x], identified
here with the tuple ``[a, b, c, d, e]``.  Gluing tangles corresponds to a
bilinear product on tuples (:func:`compose`), extended from the monoid
multiplication table by converting each detached loop into a factor of x.

Repeated gluing is linear: ``states_matrix(v)`` is the 5x5 matrix of the
right-gluing map ``w -> compose(w, v)``, so its n-th power applied to the
unit tuple is the tuple of the n-fold power of ``v``.  The closure of a
tangle weights the five slots by ``(x^3, x^2, x^2, x, x)``, and the closure
of the n-th power obeys a three-term integer recurrence built from the
invariants ``p`` and ``q^2``; :func:`closed_form_bracket` evaluates it
without ever forming the radical ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import ONE, X, ZERO, Polynomial, PolynomialLike
from .tl3 import ELEMENTS, TLElement, multiply

_X_SQUARED_MINUS_2 = X * X - 2


@dataclass(frozen=True)
class BracketVector:
    """Coefficients of a tangle bracket on the five-diagram basis."""

    a: Polynomial
    b: Polynomial
    c: Polynomial
    d: Polynomial
    e: Polynomial

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e"):
            object.__setattr__(self, name, Polynomial.coerce(getattr(self, name)))

    @classmethod
    def of(cls, a: PolynomialLike, b: PolynomialLike, c: PolynomialLike,
           d: PolynomialLike, e: PolynomialLike) -> "BracketVector":
        return cls(*(Polynomial.coerce(v) for v in (a, b, c, d, e)))

    @classmethod
    def unit(cls) -> "BracketVector":
        """The tuple of the identity tangle."""
        return cls.of(1, 0, 0, 0, 0)

    @classmethod
    def basis(cls, element: TLElement) -> "BracketVector":
        entries = [0] * 5
        entries[ELEMENTS.index(element)] = 1
        return cls.of(*entries)

    def entries(self) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial, Polynomial]:
        return (self.a, self.b, self.c, self.d, self.e)

    def mirrored(self) -> "BracketVector":
        """Swap the coefficients paired by the top-bottom flip (b<->c, d<->e)."""
        return BracketVector(self.a, self.c, self.b, self.e, self.d)

    def scaled(self, factor: PolynomialLike) -> "BracketVector":
        factor = Polynomial.coerce(factor)
        return BracketVector(*(factor * p for p in self.entries()))

    def __add__(self, other: "BracketVector") -> "BracketVector":
        return BracketVector(*(p + q for p, q in zip(self.entries(), other.entries())))

    def to_json(self) -> dict:
        return {name: list(p.coefficients)
                for name, p in zip("abcde", self.entries())}

    @classmethod
    def from_json(cls, data: dict) -> "BracketVector":
        try:
            return cls.of(*(data[name] for name in "abcde"))
        except KeyError as missing:
            raise ValueError(f"bracket tuple JSON is missing key {missing}") from None

    def __str__(self) -> str:
        return "[" + ", ".join(str(p) for p in self.entries()) + "]"


@dataclass(frozen=True)
class PQInvariants:
    """The linear invariant p and the squared radicand q^2 of a tuple.

    The pair determines the two non-trivial eigenvalues (p +- q) / 2 of the
    states matrix; q itself is never materialised, keeping all arithmetic in
    Z[x].
    """

    p: Polynomial
    q_squared: Polynomial

    def pair_product(self) -> Polynomial:
        """The eigenvalue product (p^2 - q^2) / 4, an exact integer polynomial.

        Raises ValueError if p^2 - q^2 is not divisible by 4 coefficient-wise,
        which cannot happen for invariants derived from an integer tuple and
        therefore signals corrupted input.
        """
        return (self.p * self.p - self.q_squared).exact_div(4)


class PolyMatrix:
    """A square matrix of integer polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[PolynomialLike]]):
        built = tuple(tuple(Polynomial.coerce(v) for v in row) for row in rows)
        size = len(built)
        if any(len(row) != size for row in built):
            raise ValueError("matrix rows must all have the same length")
        self.rows = built

    @classmethod
    def identity(cls, size: int = 5) -> "PolyMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(size))
                         for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: int) -> tuple[Polynomial, ...]:
        return self.rows[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.size != other.size:
            raise ValueError("matrix sizes differ")
        n = self.size
        return PolyMatrix(tuple(
            tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), ZERO)
                  for j in range(n))
            for i in range(n)))

    def power(self, n: int) -> "PolyMatrix":
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        result = PolyMatrix.identity(self.size)
        for _ in range(n):
            result = result @ self
        return result

    def apply(self, vector: BracketVector) -> BracketVector:
        entries = vector.entries()
        return BracketVector(*(sum((row[j] * entries[j] for j in range(5)), ZERO)
                               for row in self.rows))

    def __repr__(self) -> str:
        body = "; ".join("[" + ", ".join(str(p) for p in row) + "]" for row in self.rows)
        return f"PolyMatrix({body})"


class LambdaPolynomial:
    """A polynomial in the eigenvalue variable with Z[x] coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[PolynomialLike] = ()):
        coeffs = [Polynomial.coerce(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> Polynomial:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return ZERO

    def __add__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return LambdaPolynomial(out)

    def __neg__(self) -> "LambdaPolynomial":
        return LambdaPolynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        return self + (-other)

    def __mul__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return LambdaPolynomial()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_zero:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return LambdaPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LambdaPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"LambdaPolynomial({[list(c.coefficients) for c in self._coeffs]!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c.is_zero:
                continue
            if power == 0:
                parts.append(f"({c})")
            elif power == 1:
                parts.append(f"({c})L")
            else:
                parts.append(f"({c})L^{power}")
        return " + ".join(parts)


def compose(v: BracketVector, w: BracketVector) -> BracketVector:
    """The tuple of the tangle obtained by gluing ``v`` on the left of ``w``.

    Bilinear extension of the monoid multiplication: each basis product
    contributes to its slot, with every detached loop turned into a factor
    of x.
    """
    totals = {element: ZERO for element in ELEMENTS}
    for ev, cv in zip(ELEMENTS, v.entries()):
        if cv.is_zero:
            continue
        for ew, cw in zip(ELEMENTS, w.entries()):
            if cw.is_zero:
                continue
            loops, element = multiply(ev, ew)
            term = cv * cw
            for _ in range(loops):
                term = term * X
            totals[element] = totals[element] + term
    return BracketVector(*(totals[element] for element in ELEMENTS))


def power(v: BracketVector, n: int) -> BracketVector:
    """The tuple of the n-fold gluing of ``v`` with itself (unit at n = 0)."""
    if n < 0:
        raise ValueError("power requires n >= 0")
    result = BracketVector.unit()
    for _ in range(n):
        result = compose(result, v)
    return result


def closure(v: BracketVector) -> Polynomial:
    """The bracket polynomial of the standard closure of a tangle.

    The five basis diagrams close to 3, 2, 2, 1 and 1 loops respectively, so
    the closure weights the tuple by (x^3, x^2, x^2, x, x).
    """
    x2 = X * X
    return x2 * X * v.a + x2 * (v.b + v.c) + X * (v.d + v.e)


def states_matrix(v: BracketVector) -> PolyMatrix:
    """The 5x5 matrix of the right-gluing map ``w -> compose(w, v)``.

    Column j holds the tuple of ``basis_j`` glued with ``v``, so for every
    tuple ``w`` the matrix applied to ``w`` equals ``compose(w, v)``, and the
    n-th matrix power applied to the unit tuple is ``power(v, n)``.  The
    matrix is constructed from :func:`compose`, never transcribed from a
    closed formula.
    """
    columns = [compose(BracketVector.basis(element), v).entries()
               for element in ELEMENTS]
    return PolyMatrix(tuple(tuple(columns[j][i] for j in range(5))
                            for i in range(5)))


def pq_invariants(v: BracketVector) -> PQInvariants:
    """The invariants p = (b+c)x + 2a + d + e and the squared radicand q^2."""
    a, b, c, d, e = v.entries()
    p = (b + c) * X + 2 * a + d + e
    q_squared = ((b * b - 2 * b * c + c * c + 4 * d * e) * (X * X)
                 + (2 * b * d + 2 * c * d + 2 * b * e + 2 * c * e) * X
                 + (4 * b * c + d * d - 2 * d * e + e * e))
    return PQInvariants(p, q_squared)


def closed_form_bracket(v: BracketVector, n: int) -> Polynomial:
    """Closure bracket of the n-th power of ``v``, by recurrence.

    Evaluates ``x a^n (x^2 - 2) + u_n`` where ``u_n = x(lam_+^n + lam_-^n)``
    for the eigenvalue pair with sum p and product m = (p^2 - q^2)/4, via
    ``u_0 = 2x``, ``u_1 = px``, ``u_{n+1} = p u_n - m u_{n-1}``.  Agrees with
    ``closure(power(v, n))`` for every n, without forming any radical.

    Raises ValueError when p^2 - q^2 is not divisible by 4 (impossible for a
    tuple arising from a diagram; signals corrupted input).
    """
    if n < 0:
        raise ValueError("closed_form_bracket requires n >= 0")
    pq = pq_invariants(v)
    m = pq.pair_product()
    u_prev = 2 * X
    u = pq.p * X
    if n == 0:
        u = u_prev
    else:
        for _ in range(n - 1):
            u_prev, u = u, pq.p * u - m * u_prev
    return X * (v.a ** n) * _X_SQUARED_MINUS_2 + u


def charpoly(matrix: PolyMatrix) -> LambdaPolynomial:
    """det(M - lambda I), computed by division-free cofactor expansion."""
    shifted = [
        [LambdaPolynomial((matrix[i][j], -1)) if i == j
         else LambdaPolynomial((matrix[i][j],))
         for j in range(matrix.size)]
        for i in range(matrix.size)
    ]
    return _determinant(shifted)


def charpoly_factored(v: BracketVector) -> LambdaPolynomial:
    """The factored form -(lam - a)(lam^2 - p lam + m)^2, expanded.

    This is what ``charpoly(states_matrix(v))`` must equal coefficient-wise;
    the verification suite compares the two routes.
    """
    pq = pq_invariants(v)
    m = pq.pair_product()
    linear = LambdaPolynomial((-v.a, 1))
    quadratic = LambdaPolynomial((m, -pq.p, 1))
    return -(linear * quadratic * quadratic)


def _determinant(entries: Sequence[Sequence[LambdaPolynomial]]) -> LambdaPolynomial:
    # Laplace expansion along the first column; exact and division-free.
    size = len(entries)
    if size == 1:
        return entries[0][0]
    total = LambdaPolynomial()
    for i in range(size):
        lead = entries[i][0]
        if lead.is_zero:
            continue
        minor = [row[1:] for j, row in enumerate(entries) if j != i]
        term = lead * _determinant(minor)
        total = total + term if i % 2 == 0 else total - term
    return total
