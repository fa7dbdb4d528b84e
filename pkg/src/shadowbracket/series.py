"""Rational generating functions and coefficient triangles for closure brackets.

The sequence of closure brackets of the powers of a tangle has a rational
generating function in y with coefficients in Z[x], the sum of two terms::

    x(2 - p y) / (1 - p y + m y^2)   +   x(x^2 - 2) / (1 - a y)

where p is the linear invariant of the tuple, m = (p^2 - q^2)/4 the
eigenvalue product, and a the identity coefficient.  Expanding either term is
a plain linear recurrence driven by its denominator, so the n-th series
coefficient reproduces :func:`shadowbracket.bracket.closed_form_bracket`
exactly.

The coefficient triangle s(n, k) collects, for each power n, the number of
Kauffman states of the closure with exactly k loops; row n is just the
coefficient list of the n-th series coefficient.  Rows export as CSV lines or
as OEIS-style b-files ("index value" per line).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bracket import BracketVector, pq_invariants
from .generators import generator_tuple
from .poly import ONE, X, ZERO, Polynomial


@dataclass(frozen=True)
class RationalTerm:
    """A ratio of polynomials in y whose coefficients are polynomials in x."""

    numerator: tuple[Polynomial, ...]
    denominator: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != ONE:
            raise ValueError("denominator must have constant term 1")

    def expand(self, count: int) -> list[Polynomial]:
        """First ``count + 1`` series coefficients, by the denominator recurrence."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        num, den = self.numerator, self.denominator
        out: list[Polynomial] = []
        for n in range(count + 1):
            term = num[n] if n < len(num) else ZERO
            for k in range(1, min(n, len(den) - 1) + 1):
                term = term - den[k] * out[n - k]
            out.append(term)
        return out


@dataclass(frozen=True)
class RationalGF:
    """Generating function of the closure brackets of a tangle's powers."""

    pair_part: RationalTerm
    geometric_part: RationalTerm

    def expand(self, count: int) -> list[Polynomial]:
        first = self.pair_part.expand(count)
        second = self.geometric_part.expand(count)
        return [p + q for p, q in zip(first, second)]

    def to_json(self) -> dict:
        def encode(term: RationalTerm) -> dict:
            return {"numerator": [list(p.coefficients) for p in term.numerator],
                    "denominator": [list(p.coefficients) for p in term.denominator]}
        return {"pair_part": encode(self.pair_part),
                "geometric_part": encode(self.geometric_part)}


def gf_from_tuple(v: BracketVector) -> RationalGF:
    """Build the closure generating function from a bracket tuple.

    Raises ValueError under the same divisibility guard as
    :func:`shadowbracket.bracket.closed_form_bracket`.
    """
    pq = pq_invariants(v)
    m = pq.pair_product()
    pair = RationalTerm(numerator=(2 * X, -(pq.p * X)),
                        denominator=(ONE, -pq.p, m))
    geometric = RationalTerm(numerator=(X * (X * X - 2),),
                             denominator=(ONE, -v.a))
    return RationalGF(pair, geometric)


def expand(gf: RationalGF, count: int) -> list[Polynomial]:
    """Series coefficients 0..count of a closure generating function."""
    return gf.expand(count)


def coefficient_rows(v: BracketVector, rows: int) -> list[list[int]]:
    """Loop-count distributions for the closures of powers 0..rows of ``v``."""
    return [list(p.coefficients) for p in gf_from_tuple(v).expand(rows)]


def coefficient_table(name: str, rows: int) -> list[list[int]]:
    """The coefficient triangle of a built-in generator, rows 0..rows."""
    return coefficient_rows(generator_tuple(name), rows)


def row_sums(table: Sequence[Sequence[int]]) -> list[int]:
    return [sum(row) for row in table]


def column(table: Sequence[Sequence[int]], k: int) -> list[int]:
    """Column k of a triangle, reading missing entries as 0."""
    return [row[k] if k < len(row) else 0 for row in table]


def csv_lines(table: Sequence[Sequence[int]]) -> list[str]:
    return [",".join(str(v) for v in row) for row in table]


def bfile_lines(values: Sequence[int], offset: int = 0) -> list[str]:
    """OEIS b-file form: one "index value" pair per line."""
    return [f"{offset + i} {value}" for i, value in enumerate(values)]


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file text, skipping blank lines and # comments."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ValueError(f"bad b-file line {lineno}: {line!r}")
        entries.append((int(parts[0]), int(parts[1])))
    return entries


def compare_bfiles(ours: str, reference: str) -> str | None:
    """Compare two b-file texts; return None on match, else a message."""
    a, b = parse_bfile(ours), parse_bfile(reference)
    for i, (left, right) in enumerate(zip(a, b)):
        if left != right:
            return (f"mismatch at line {i + 1}: "
                    f"{left[0]} {left[1]} != {right[0]} {right[1]}")
    if len(a) != len(b):
        return f"length mismatch: {len(a)} lines versus {len(b)}"
    return None


def triangle_values(table: Sequence[Sequence[int]]) -> list[int]:
    """Flatten a triangle row by row, k ascending, for b-file export."""
    return [value for row in table for value in row]


def render_gf(gf: RationalGF) -> str:
    """Readable text form, each term as numerator / denominator in y."""
    first = f"({_poly_in_y(gf.pair_part.numerator)}) / ({_poly_in_y(gf.pair_part.denominator)})"
    second = (f"({_poly_in_y(gf.geometric_part.numerator)})"
              f" / ({_poly_in_y(gf.geometric_part.denominator)})")
    return f"{first} + {second}"


def _poly_in_y(coefficients: Sequence[Polynomial]) -> str:
    parts = []
    for power, coeff in enumerate(coefficients):
        if coeff.is_zero:
            continue
        if power == 0:
            parts.append(str(coeff))
            continue
        y = "y" if power == 1 else f"y^{power}"
        if coeff == ONE:
            parts.append(y)
        else:
            parts.append(f"({coeff}){y}")
    return " + ".join(parts) if parts else "0"
