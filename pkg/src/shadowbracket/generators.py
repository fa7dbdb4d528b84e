"""Built-in 3-tangle generators for the three flat Turk's-head families.

Closing the n-fold power of each generator gives the shadow of a three-lead
Turk's head (T), a chain sinnet (C) or a figure-eight chain (E).  Their
bracket tuples are::

    T:  [1, 1, 1, 0, 1]                      2 crossings
    C:  [x+2, x+2, 1, 0, 1]                  3 crossings
    E:  [x^2+4x+4, x+2, x+2, 0, 1]           4 crossings

The tuples are the normative data; each generator also carries a concrete
shadow diagram whose state-sum bracket must reproduce its tuple, which is
checked the first time a diagram is requested.  T compiles directly from the
word ``X1 X2``.  C and E are assembled from a two-crossing hitch gadget (a
bight of new line pulled through a closed turn of the lower two strands)
whose bracket is ``(x+2)<1_3> + <U2>``: gluing a single crossing of the top
two strands in front yields C, and gluing the flipped gadget to the plain
one yields E.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bracket import BracketVector
from .oracle import (Boundary, ShadowDiagram, compile_word, enumerate_states,
                     glue, mirror_diagram)

NAMES = ("T", "C", "E")

_T_WORD = ("X1", "X2")


def _turn_hitch() -> ShadowDiagram:
    """Two-crossing gadget with bracket (x+2)<1_3> + <U2>.

    The top strand passes straight through; a bight enters from the right and
    threads the closed turn formed by the two lower strands.  Two of its four
    states resolve to the identity, one to the identity with a detached loop,
    and one to the lower cup-cap.
    """
    return ShadowDiagram(
        crossings=(
            ("bight0", "leg1", "bight1", "turn"),
            ("bight1", "leg2", "bight2", "turn"),
        ),
        boundary=Boundary(("pass", "leg1", "leg2"), ("pass", "bight0", "bight2")),
    )


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator: its bracket tuple, crossing count and diagram."""

    name: str
    bracket: BracketVector
    crossings: int
    word: tuple[str, ...] | None
    diagram: ShadowDiagram


def _build_generators() -> dict[str, GeneratorSpec]:
    hitch = _turn_hitch()
    return {
        "T": GeneratorSpec(
            name="T",
            bracket=BracketVector.of(1, 1, 1, 0, 1),
            crossings=2,
            word=_T_WORD,
            diagram=compile_word(_T_WORD),
        ),
        "C": GeneratorSpec(
            name="C",
            bracket=BracketVector.of([2, 1], [2, 1], 1, 0, 1),
            crossings=3,
            word=None,
            diagram=glue(compile_word(("X1",)), hitch),
        ),
        "E": GeneratorSpec(
            name="E",
            bracket=BracketVector.of([4, 4, 1], [2, 1], [2, 1], 0, 1),
            crossings=4,
            word=None,
            diagram=glue(mirror_diagram(hitch), hitch),
        ),
    }


_GENERATORS = _build_generators()


def generator(name: str) -> GeneratorSpec:
    try:
        return _GENERATORS[name]
    except KeyError:
        valid = ", ".join(NAMES)
        raise ValueError(f"unknown generator {name!r} (expected one of: {valid})") from None


def generator_tuple(name: str) -> BracketVector:
    """The bracket tuple of a built-in generator."""
    return generator(name).bracket


def generator_diagram(name: str) -> ShadowDiagram:
    """The shadow diagram of a built-in generator, self-checked on first use.

    Raises RuntimeError if the stored diagram's state-sum bracket does not
    reproduce the generator's tuple.
    """
    _check_diagram(name)
    return generator(name).diagram


@lru_cache(maxsize=None)
def _check_diagram(name: str) -> None:
    spec = generator(name)
    if spec.diagram.crossing_count != spec.crossings:
        raise RuntimeError(
            f"generator {name}: diagram has {spec.diagram.crossing_count} crossings, "
            f"expected {spec.crossings}")
    found = enumerate_states(spec.diagram)
    if found != spec.bracket:
        raise RuntimeError(
            f"generator {name}: diagram self-check failed; state sum gave "
            f"{found}, expected {spec.bracket}")
