"""The five-element monoid of crossingless 3-strand tangle diagrams.

The elements are the identity ``1_3``, the two cup-cap diagrams ``U1`` and
``U2``, and the two hook diagrams ``r`` and ``s`` obtained by gluing the
cup-caps in the two possible orders (``r = U2*U1`` and ``s = U1*U2``).
Gluing any two of the five side by side yields another of the five, possibly
together with one detached loop, so a product is a ``(loops, element)`` pair.

The multiplication table is hardcoded; the test suite checks it against the
full loop-weighted associativity law and the Temperley-Lieb relations.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple


class TLElement(Enum):
    """One of the five crossingless 3-strand diagrams."""

    ID3 = "1_3"
    U1 = "U1"
    U2 = "U2"
    R = "r"
    S = "s"

    @property
    def symbol(self) -> str:
        """The textual name used by the CLI and JSON output."""
        return self.value

    @classmethod
    def from_symbol(cls, name: str) -> "TLElement":
        for element in cls:
            if element.value == name:
                return element
        valid = ", ".join(e.value for e in cls)
        raise ValueError(f"unknown monoid element {name!r} (expected one of: {valid})")


class ScaledTL(NamedTuple):
    """A monoid element together with a count of detached loops."""

    loops: int
    element: TLElement


ELEMENTS = (TLElement.ID3, TLElement.U1, TLElement.U2, TLElement.R, TLElement.S)

_E = TLElement

# Row = left factor, column = right factor; entries are (loops, element).
_TABLE: dict[TLElement, dict[TLElement, ScaledTL]] = {
    _E.ID3: {
        _E.ID3: ScaledTL(0, _E.ID3),
        _E.U1: ScaledTL(0, _E.U1),
        _E.U2: ScaledTL(0, _E.U2),
        _E.R: ScaledTL(0, _E.R),
        _E.S: ScaledTL(0, _E.S),
    },
    _E.U1: {
        _E.ID3: ScaledTL(0, _E.U1),
        _E.U1: ScaledTL(1, _E.U1),
        _E.U2: ScaledTL(0, _E.S),
        _E.R: ScaledTL(0, _E.U1),
        _E.S: ScaledTL(1, _E.S),
    },
    _E.U2: {
        _E.ID3: ScaledTL(0, _E.U2),
        _E.U1: ScaledTL(0, _E.R),
        _E.U2: ScaledTL(1, _E.U2),
        _E.R: ScaledTL(1, _E.R),
        _E.S: ScaledTL(0, _E.U2),
    },
    _E.R: {
        _E.ID3: ScaledTL(0, _E.R),
        _E.U1: ScaledTL(1, _E.R),
        _E.U2: ScaledTL(0, _E.U2),
        _E.R: ScaledTL(0, _E.R),
        _E.S: ScaledTL(1, _E.U2),
    },
    _E.S: {
        _E.ID3: ScaledTL(0, _E.S),
        _E.U1: ScaledTL(0, _E.U1),
        _E.U2: ScaledTL(1, _E.S),
        _E.R: ScaledTL(1, _E.U1),
        _E.S: ScaledTL(0, _E.S),
    },
}

# Loops formed when the three left endpoints are joined straight across to
# the three right endpoints.
_CLOSURE_LOOPS = {
    _E.ID3: 3,
    _E.U1: 2,
    _E.U2: 2,
    _E.R: 1,
    _E.S: 1,
}

# Top-bottom flip of the strip: swaps the two cup-caps and the two hooks.
_MIRROR = {
    _E.ID3: _E.ID3,
    _E.U1: _E.U2,
    _E.U2: _E.U1,
    _E.R: _E.S,
    _E.S: _E.R,
}


def multiply(left: TLElement, right: TLElement) -> ScaledTL:
    """Glue ``left`` and ``right`` side by side, extracting detached loops."""
    return _TABLE[left][right]


def closure_loops(element: TLElement) -> int:
    """Number of loops in the standard closure of a crossingless diagram."""
    return _CLOSURE_LOOPS[element]


def mirror(element: TLElement) -> TLElement:
    """The image of an element under the top-bottom flip of the strip."""
    return _MIRROR[element]
