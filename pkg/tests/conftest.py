import random

from shadowbracket.bracket import BracketVector
from shadowbracket.poly import Polynomial


def P(text: str) -> Polynomial:
    return Polynomial.parse(text)


def rand_poly(rng: random.Random, max_degree: int = 6,
              lo: int = -9, hi: int = 9) -> Polynomial:
    degree = rng.randint(0, max_degree)
    return Polynomial([rng.randint(lo, hi) for _ in range(degree + 1)])


def rand_tuple(rng: random.Random, max_degree: int = 1,
               lo: int = -3, hi: int = 3) -> BracketVector:
    return BracketVector(*(rand_poly(rng, max_degree, lo, hi) for _ in range(5)))


def rand_word(rng: random.Random, max_length: int = 8) -> tuple[str, ...]:
    letters = ("X1", "X2", "U1", "U2")
    return tuple(rng.choice(letters) for _ in range(rng.randint(0, max_length)))


# The reference states matrices of the three built-in generators, row by row.
REFERENCE_MATRICES = {
    "T": [
        ["1", "0", "0", "0", "0"],
        ["1", "x+1", "0", "0", "1"],
        ["1", "0", "x+2", "x+1", "0"],
        ["0", "0", "1", "x+1", "0"],
        ["1", "x+1", "0", "0", "x+2"],
    ],
    "C": [
        ["x+2", "0", "0", "0", "0"],
        ["x+2", "x^2+3x+2", "0", "0", "x+2"],
        ["1", "0", "2x+3", "x+1", "0"],
        ["0", "0", "x+2", "x^2+3x+2", "0"],
        ["1", "x+1", "0", "0", "2x+3"],
    ],
    "E": [
        ["x^2+4x+4", "0", "0", "0", "0"],
        ["x+2", "2x^2+6x+4", "0", "0", "x+2"],
        ["x+2", "0", "2x^2+6x+5", "2x+2", "0"],
        ["0", "0", "x+2", "2x^2+6x+4", "0"],
        ["1", "2x+2", "0", "0", "2x^2+6x+5"],
    ],
}


def reference_matrix(name: str):
    from shadowbracket.bracket import PolyMatrix
    return PolyMatrix([[P(entry) for entry in row] for row in REFERENCE_MATRICES[name]])
