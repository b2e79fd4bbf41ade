import logging

from ..cycles import longest_cycle
from ..exceptions import GraphError
from .base import BaseFamily, ChordSpec

logger = logging.getLogger(__name__)


class PathFamily(BaseFamily):
    """P^{3r}: path a_0 ... a_{3r}, vertex id = position."""

    name = "path"

    def _vertex_count(self):
        return 3 * self.r + 1

    def _edges(self):
        return [(i, i + 1) for i in range(3 * self.r)]

    def cover_witness(self):
        return frozenset(3 * i + 1 for i in range(self.r))


class CycleFamily(BaseFamily):
    """C^{3r}: cycle a_0 ... a_{3r-1} a_0, vertex id = position."""

    name = "cycle"

    def _vertex_count(self):
        return 3 * self.r

    def _edges(self):
        return self.cycle_edges(3 * self.r)

    def cover_witness(self):
        return frozenset(3 * i + 1 for i in range(self.r))


class ChordedCycleFamily(BaseFamily):
    """
    C^{3r} plus chords: each chord is a path of `length` edges through
    length-1 fresh vertices, appended after the cycle in chord order.

    Every accepted instance keeps C^{3r} a longest cycle.
    """

    name = "chorded_cycle"

    def __init__(self, r=1, chords=()):
        super().__init__(r)
        self.chords = tuple(c if isinstance(c, ChordSpec) else ChordSpec(*c) for c in chords)

    def validate(self):
        super().validate()
        size = 3 * self.r

        for chord in self.chords:
            if not (0 <= chord.start_index < size and 0 <= chord.end_index < size):
                raise GraphError(f"Chord {chord} has an endpoint outside the cycle C^{size}.")
            if chord.start_index == chord.end_index:
                raise GraphError(f"Chord {chord} starts and ends at the same cycle position.")
            if chord.length < 1 or chord.length % 3:
                raise GraphError(f"Chord {chord} length must be a positive multiple of 3.")

            arc = (chord.end_index - chord.start_index) % size
            for arc_length in (arc, size - arc):
                if chord.length + arc_length > size:
                    raise GraphError(
                        f"Chord {chord} creates a {chord.length + arc_length}-cycle "
                        f"in a C^{size} host, longer than its longest cycle."
                    )

    def build(self):
        g = super().build()
        if len(self.chords) > 1:
            witness = longest_cycle(g)
            if not witness.exact:
                raise GraphError(
                    f"Chords {list(self.chords)}: longest-cycle search ran out of budget, "
                    f"cannot confirm the C^{3 * self.r} host is still the longest cycle."
                )
            if witness.length > 3 * self.r:
                raise GraphError(
                    f"Chords {list(self.chords)} together create a {witness.length}-cycle "
                    f"{list(witness.vertices)} in a C^{3 * self.r} host."
                )
        return g

    def _vertex_count(self):
        return 3 * self.r + sum(c.length - 1 for c in self.chords)

    def _edges(self):
        edges = self.cycle_edges(3 * self.r)
        fresh = 3 * self.r

        for chord in self.chords:
            internal = list(range(fresh, fresh + chord.length - 1))
            fresh += chord.length - 1
            route = [chord.start_index] + internal + [chord.end_index]
            edges.extend(zip(route, route[1:]))

        return edges


class ErdosPosaFamily(BaseFamily):
    """
    C^{3r} plus h internally disjoint 3-edge paths between
    a_{3i+1} and a_{3i+4}, the counterexample family.
    """

    name = "erdos_posa"
    MIN_R = 2

    def __init__(self, r=2, h=1, attach_index=0):
        super().__init__(r)
        self.h = h
        self.attach_index = attach_index

    @property
    def ends(self):
        return 3 * self.attach_index + 1, 3 * self.attach_index + 4

    def validate(self):
        super().validate()
        if self.h < 1:
            raise GraphError(f"erdos_posa family requires h >= 1, got h={self.h}.")
        if self.attach_index < 0 or self.ends[1] >= 3 * self.r:
            raise GraphError(
                f"Attachment a_{self.ends[1]} overflows the cycle C^{3 * self.r}."
            )

    def _vertex_count(self):
        return 3 * self.r + 2 * self.h

    def _edges(self):
        edges = self.cycle_edges(3 * self.r)
        start, end = self.ends

        for j in range(self.h):
            first = 3 * self.r + 2 * j
            edges.extend([(start, first), (first, first + 1), (first + 1, end)])

        return edges

    def cover_witness(self):
        """Cover {a_{3j+1}}; it contains both attachment ends."""
        return frozenset(range(1, 3 * self.r, 3))
