"""Brute-force Kauffman state sums over planar shadow diagrams.

A shadow diagram is a 4-valent planar graph: each crossing is a 4-tuple of
edge identifiers in cyclic order around the vertex, and an open 3-tangle
additionally lists six boundary endpoints, three per side, top to bottom.
Every edge identifier occurs exactly twice across the crossings and the
boundary; crossingless circles are carried separately as ``free_loops``.

Smoothing a crossing ``(e1, e2, e3, e4)`` joins the adjacent pairs
``e1-e2, e3-e4`` (bit 0) or ``e2-e3, e4-e1`` (bit 1).  Enumerating all
``2**crossings`` bit vectors, counting the closed components of each state
with a union-find and classifying the residual boundary pairing gives the
bracket by plain summation, one ``x**loops`` per state.  This is the
independent ground truth that the tuple algebra in
:mod:`shadowbracket.bracket` is tested against.

State enumeration is a pure fold over the binary-counter order of the bit
vectors.  Because the per-state contributions are combined by addition only,
the fold may be partitioned over disjoint mask ranges and recombined without
changing the result; the implementation here visits states depth-first,
sharing the union-find of common prefixes, and reproduces the sequential
fold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import NamedTuple, Sequence

from .bracket import BracketVector, compose
from .poly import Polynomial
from .tl3 import TLElement

DEFAULT_MAX_CROSSINGS = 24

BOUNDARY_LABELS = ("L1", "L2", "L3", "R1", "R2", "R3")

WORD_LETTERS = ("X1", "X2", "U1", "U2")

# Single-letter tangles: a crossing splits into the identity and a cup-cap,
# while the cup-cap letters are monoid basis elements outright.
_LETTER_TUPLES = {
    "X1": BracketVector.of(1, 1, 0, 0, 0),
    "X2": BracketVector.of(1, 0, 1, 0, 0),
    "U1": BracketVector.of(0, 1, 0, 0, 0),
    "U2": BracketVector.of(0, 0, 1, 0, 0),
}


class MalformedDiagramError(ValueError):
    """The diagram data violates the edge or boundary invariants."""


class CrossingLimitError(ValueError):
    """The state count 2**crossings exceeds the configured limit."""


class Boundary(NamedTuple):
    """Boundary endpoints of an open 3-tangle, top to bottom on each side."""

    left: tuple[str, str, str]
    right: tuple[str, str, str]


@dataclass(frozen=True)
class ShadowDiagram:
    """A planar shadow diagram in PD-code style."""

    crossings: tuple[tuple[str, str, str, str], ...]
    boundary: Boundary | None = None
    free_loops: int = 0

    def __post_init__(self):
        crossings = tuple(tuple(str(e) for e in quad) for quad in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if self.boundary is not None:
            left, right = self.boundary
            boundary = Boundary(tuple(str(e) for e in left), tuple(str(e) for e in right))
            object.__setattr__(self, "boundary", boundary)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_closed(self) -> bool:
        return self.boundary is None

    def boundary_edges(self) -> tuple[str, ...]:
        if self.boundary is None:
            return ()
        return self.boundary.left + self.boundary.right

    def validate(self) -> None:
        """Check the structural invariants, raising MalformedDiagramError."""
        if self.free_loops < 0:
            raise MalformedDiagramError("free_loops must be nonnegative")
        for quad in self.crossings:
            if len(quad) != 4:
                raise MalformedDiagramError(f"crossing {quad!r} does not have 4 edges")
        if self.boundary is not None:
            if len(self.boundary.left) != 3 or len(self.boundary.right) != 3:
                raise MalformedDiagramError("boundary must list 3 endpoints per side")
        counts: dict[str, int] = {}
        for quad in self.crossings:
            for edge in quad:
                counts[edge] = counts.get(edge, 0) + 1
        for edge in self.boundary_edges():
            counts[edge] = counts.get(edge, 0) + 1
        bad = {edge: n for edge, n in counts.items() if n != 2}
        if bad:
            raise MalformedDiagramError(
                f"every edge must occur exactly twice; violations: {bad}")

    def to_json(self) -> dict:
        return {
            "crossings": [list(quad) for quad in self.crossings],
            "boundary": None if self.boundary is None else
                {"L": list(self.boundary.left), "R": list(self.boundary.right)},
            "free_loops": self.free_loops,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ShadowDiagram":
        try:
            crossings = tuple(tuple(quad) for quad in data["crossings"])
            raw_boundary = data.get("boundary")
            boundary = None if raw_boundary is None else \
                Boundary(tuple(raw_boundary["L"]), tuple(raw_boundary["R"]))
            diagram = cls(crossings, boundary, int(data.get("free_loops", 0)))
        except (KeyError, TypeError) as exc:
            raise MalformedDiagramError(f"bad diagram JSON: {exc}") from None
        diagram.validate()
        return diagram


class _UnionFind:
    """Union-find over edge identifiers, with path halving."""

    __slots__ = ("parent",)

    def __init__(self):
        self.parent: dict[str, str] = {}

    def find(self, item: str) -> str:
        parent = self.parent
        if item not in parent:
            parent[item] = item
            return item
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: str, b: str) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def parse_word(text: str) -> tuple[str, ...]:
    """Parse the whitespace-separated tangle word form, e.g. ``"X1 X2 U1"``."""
    letters = tuple(text.split())
    for letter in letters:
        if letter not in WORD_LETTERS:
            valid = ", ".join(WORD_LETTERS)
            raise ValueError(f"unknown tangle letter {letter!r} (expected one of: {valid})")
    return letters


def letter_tuple(letter: str) -> BracketVector:
    """The bracket tuple of a single tangle letter."""
    try:
        return _LETTER_TUPLES[letter]
    except KeyError:
        raise ValueError(f"unknown tangle letter {letter!r}") from None


def word_tuple(letters: Sequence[str]) -> BracketVector:
    """The bracket tuple of a word, by composing the letter tuples."""
    return reduce(compose, (letter_tuple(l) for l in letters), BracketVector.unit())


def compile_word(letters: Sequence[str]) -> ShadowDiagram:
    """Compile a tangle word into a shadow diagram, gluing left to right.

    Crossing letters spend one crossing each; cup-cap letters join the two
    current strands (extracting a free loop when they are already the same
    arc) and open a fresh arc in their place.
    """
    state = _Builder()
    strands = [state.fresh() for _ in range(3)]
    left = tuple(strands)
    for letter in letters:
        if letter in ("X1", "X2"):
            i = 0 if letter == "X1" else 1
            out_top, out_bot = state.fresh(), state.fresh()
            state.crossings.append((strands[i], out_top, out_bot, strands[i + 1]))
            strands[i], strands[i + 1] = out_top, out_bot
        elif letter in ("U1", "U2"):
            i = 0 if letter == "U1" else 1
            state.join(strands[i], strands[i + 1])
            bridge = state.fresh()
            strands[i] = strands[i + 1] = bridge
        else:
            raise ValueError(f"unknown tangle letter {letter!r}")
    return state.finish(Boundary(left, tuple(strands)))


@dataclass
class _Builder:
    """Accumulates crossings and crossingless joins while assembling a diagram."""

    crossings: list[tuple[str, str, str, str]] = field(default_factory=list)
    merges: _UnionFind = field(default_factory=_UnionFind)
    free_loops: int = 0
    _counter: int = 0

    def fresh(self) -> str:
        name = f"e{self._counter}"
        self._counter += 1
        return name

    def join(self, a: str, b: str) -> None:
        # Joining the two ends of one arc closes it into a crossingless circle.
        if self.merges.find(a) == self.merges.find(b):
            self.free_loops += 1
        else:
            self.merges.union(a, b)

    def finish(self, boundary: Boundary | None, extra_loops: int = 0) -> ShadowDiagram:
        find = self.merges.find
        crossings = tuple(tuple(find(e) for e in quad) for quad in self.crossings)
        if boundary is not None:
            boundary = Boundary(tuple(find(e) for e in boundary.left),
                                tuple(find(e) for e in boundary.right))
        diagram = ShadowDiagram(crossings, boundary, self.free_loops + extra_loops)
        return _relabel(diagram)


def _relabel(diagram: ShadowDiagram) -> ShadowDiagram:
    # Rename edges to e0, e1, ... in first-seen order for stable output.
    names: dict[str, str] = {}

    def rename(edge: str) -> str:
        if edge not in names:
            names[edge] = f"e{len(names)}"
        return names[edge]

    crossings = tuple(tuple(rename(e) for e in quad) for quad in diagram.crossings)
    boundary = diagram.boundary
    if boundary is not None:
        boundary = Boundary(tuple(rename(e) for e in boundary.left),
                            tuple(rename(e) for e in boundary.right))
    return ShadowDiagram(crossings, boundary, diagram.free_loops)


def close_diagram(diagram: ShadowDiagram) -> ShadowDiagram:
    """Join each left endpoint to the matching right endpoint, closing the tangle."""
    if diagram.boundary is None:
        raise MalformedDiagramError("diagram is already closed")
    diagram.validate()
    builder = _Builder()
    builder.crossings = list(diagram.crossings)
    for a, b in zip(diagram.boundary.left, diagram.boundary.right):
        builder.join(a, b)
    return builder.finish(None, extra_loops=diagram.free_loops)


def glue(first: ShadowDiagram, second: ShadowDiagram) -> ShadowDiagram:
    """The tangle product: glue the right boundary of ``first`` to the left of ``second``."""
    if first.boundary is None or second.boundary is None:
        raise MalformedDiagramError("tangle product requires two open tangles")
    first.validate()
    second.validate()
    # Namespace the two edge sets before joining the shared boundary.
    builder = _Builder()
    builder.crossings = [tuple(f"a.{e}" for e in quad) for quad in first.crossings]
    builder.crossings += [tuple(f"b.{e}" for e in quad) for quad in second.crossings]
    for a, b in zip(first.boundary.right, second.boundary.left):
        builder.join(f"a.{a}", f"b.{b}")
    boundary = Boundary(tuple(f"a.{e}" for e in first.boundary.left),
                        tuple(f"b.{e}" for e in second.boundary.right))
    return builder.finish(boundary, extra_loops=first.free_loops + second.free_loops)


def mirror_diagram(diagram: ShadowDiagram) -> ShadowDiagram:
    """Flip the diagram top to bottom; cyclic orders reverse, sides keep their role."""
    crossings = tuple(tuple(reversed(quad)) for quad in diagram.crossings)
    boundary = diagram.boundary
    if boundary is not None:
        boundary = Boundary(tuple(reversed(boundary.left)),
                            tuple(reversed(boundary.right)))
    return _relabel(ShadowDiagram(crossings, boundary, diagram.free_loops))


# The five non-crossing perfect matchings of the boundary circle, keyed by
# the induced pairing of labels.
def _pairing(*pairs: tuple[str, str]) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(pair) for pair in pairs)


_PAIRING_TO_ELEMENT = {
    _pairing(("L1", "R1"), ("L2", "R2"), ("L3", "R3")): TLElement.ID3,
    _pairing(("L1", "L2"), ("R1", "R2"), ("L3", "R3")): TLElement.U1,
    _pairing(("L2", "L3"), ("R2", "R3"), ("L1", "R1")): TLElement.U2,
    _pairing(("L2", "L3"), ("L1", "R3"), ("R1", "R2")): TLElement.R,
    _pairing(("L1", "L2"), ("L3", "R1"), ("R2", "R3")): TLElement.S,
}


def classify_boundary(pairing: frozenset[frozenset[str]]) -> TLElement:
    """Map a boundary pairing to its crossingless diagram.

    Only the five planar matchings can arise from a planar shadow; anything
    else signals a diagram-encoding bug and raises MalformedDiagramError.
    """
    try:
        return _PAIRING_TO_ELEMENT[frozenset(frozenset(p) for p in pairing)]
    except KeyError:
        raise MalformedDiagramError(
            f"boundary pairing {sorted(map(sorted, pairing))} is not planar") from None


def smooth(diagram: ShadowDiagram,
           choices: Sequence[int]) -> tuple[int, frozenset[frozenset[str]]]:
    """Resolve every crossing according to ``choices`` (one bit per crossing).

    Returns the number of closed loops (including free loops) and the induced
    pairing of the boundary labels (empty for a closed diagram).
    """
    diagram.validate()
    if len(choices) != diagram.crossing_count:
        raise ValueError(
            f"need {diagram.crossing_count} smoothing bits, got {len(choices)}")
    return _smooth_unchecked(diagram, choices)


def _smooth_unchecked(diagram: ShadowDiagram,
                      choices: Sequence[int]) -> tuple[int, frozenset[frozenset[str]]]:
    uf = _UnionFind()
    for (e1, e2, e3, e4), bit in zip(diagram.crossings, choices):
        if bit:
            uf.union(e2, e3)
            uf.union(e4, e1)
        else:
            uf.union(e1, e2)
            uf.union(e3, e4)
    edges = {e for quad in diagram.crossings for e in quad}
    edges.update(diagram.boundary_edges())
    label_roots: dict[str, list[str]] = {}
    if diagram.boundary is not None:
        for label, edge in zip(BOUNDARY_LABELS,
                               diagram.boundary.left + diagram.boundary.right):
            label_roots.setdefault(uf.find(edge), []).append(label)
    open_roots = set(label_roots)
    components = {uf.find(e) for e in edges}
    loops = len(components) - len(open_roots) + diagram.free_loops
    pairs = []
    for root, labels in label_roots.items():
        if len(labels) != 2:
            raise MalformedDiagramError(
                f"smoothed component pairs {len(labels)} boundary endpoints: {labels}")
        pairs.append(frozenset(labels))
    return loops, frozenset(pairs)


def enumerate_states(diagram: ShadowDiagram,
                     max_crossings: int = DEFAULT_MAX_CROSSINGS,
                     ) -> BracketVector | Polynomial:
    """Sum ``x**loops`` over all Kauffman states of the diagram.

    For an open 3-tangle the result is a :class:`BracketVector`, each state
    accumulated into the slot of its boundary pairing; for a closed diagram
    it is the bracket polynomial itself.  States are visited in binary-counter
    order, crossing 0 being the least significant bit; every state contributes
    exactly what :func:`smooth` reports for its bit vector.

    Raises CrossingLimitError instead of attempting more than
    ``2**max_crossings`` states.
    """
    diagram.validate()
    count = diagram.crossing_count
    if count > max_crossings:
        raise CrossingLimitError(
            f"{count} crossings exceed the limit of {max_crossings} "
            f"({2 ** count} states); raise max_crossings to proceed")

    # Intern edge identifiers so each state works on a flat integer
    # union-find instead of string dictionaries.
    index: dict[str, int] = {}
    for quad in diagram.crossings:
        for edge in quad:
            index.setdefault(edge, len(index))
    for edge in diagram.boundary_edges():
        index.setdefault(edge, len(index))
    size = len(index)
    # Per crossing, the two edge pairs to join for bit 0 and for bit 1.
    joins = tuple(
        ((index[e1], index[e2], index[e3], index[e4]),
         (index[e2], index[e3], index[e4], index[e1]))
        for e1, e2, e3, e4 in diagram.crossings)
    boundary_ix = tuple(index[e] for e in diagram.boundary_edges())
    closed = diagram.boundary is None
    loop_counts: dict[TLElement | None, list[int]] = {}

    def find(parent: list[int], item: int) -> int:
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def tally_state(parent: list[int], components: int) -> None:
        if closed:
            key = None
            loops = components + diagram.free_loops
        else:
            roots = [find(parent, b) for b in boundary_ix]
            loops = components - len(set(roots)) + diagram.free_loops
            try:
                key = _BOUNDARY_PATTERNS[tuple(roots.index(r) for r in roots)]
            except KeyError:
                raise MalformedDiagramError(
                    "smoothed state induces a non-planar boundary pairing; "
                    "the diagram encoding is inconsistent") from None
        tally = loop_counts.setdefault(key, [])
        if len(tally) <= loops:
            tally.extend([0] * (loops + 1 - len(tally)))
        tally[loops] += 1

    # Depth-first over the smoothing choices, sharing the union-find of the
    # common prefix; crossing 0 varies fastest, matching binary-counter order.
    def walk(crossing: int, parent: list[int], components: int) -> None:
        if crossing < 0:
            tally_state(parent, components)
            return
        for option in joins[crossing]:
            branch = parent.copy()
            count_here = components
            for k in (0, 2):
                ra = find(branch, option[k])
                rb = find(branch, option[k + 1])
                if ra != rb:
                    branch[rb] = ra
                    count_here -= 1
            walk(crossing - 1, branch, count_here)

    walk(count - 1, list(range(size)), size)

    if closed:
        return Polynomial(loop_counts.get(None, [0]))
    entries = [Polynomial(loop_counts.get(element, []))
               for element in (TLElement.ID3, TLElement.U1, TLElement.U2,
                               TLElement.R, TLElement.S)]
    return BracketVector(*entries)


def _boundary_patterns() -> dict[tuple[int, ...], TLElement]:
    # First-occurrence patterns of the six boundary positions for each planar
    # matching, derived from the label table above.
    position = {label: i for i, label in enumerate(BOUNDARY_LABELS)}
    patterns = {}
    for pairing, element in _PAIRING_TO_ELEMENT.items():
        mate = {}
        for pair in pairing:
            first, second = sorted(position[label] for label in pair)
            mate[first] = first
            mate[second] = first
        pattern = tuple(mate[i] for i in range(6))
        patterns[pattern] = element
    return patterns


_BOUNDARY_PATTERNS = _boundary_patterns()
