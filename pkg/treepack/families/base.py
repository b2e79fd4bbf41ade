from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from ..exceptions import GraphError
from ..graph import from_edge_list

ALL_FAMILY_TAGS = (
    "path",
    "cycle",
    "chorded_cycle",
    "erdos_posa",
    "g3",
    "h_chain",
)


@dataclass(frozen=True)
class ChordSpec:
    """Path of `length` edges through fresh vertices between two cycle positions."""

    start_index: int
    end_index: int
    length: int


@dataclass(frozen=True)
class FamilySpec:
    family: str
    r: int = 1
    chords: tuple = field(default_factory=tuple)
    h: int = 0
    attach_index: int = 0


class BaseFamily(ABC):
    name = None
    MIN_R = 1

    def __init__(self, r=1):
        self.r = r

    @abstractmethod
    def _vertex_count(self) -> int:
        """Order of the generated graph"""

    @abstractmethod
    def _edges(self) -> list:
        """Edge list, deterministic order"""

    def validate(self):
        if self.r < self.MIN_R:
            raise GraphError(f"{self.name} family requires r >= {self.MIN_R}, got r={self.r}.")

    def build(self):
        self.validate()
        return from_edge_list(self._vertex_count(), self._edges())

    def cover_witness(self):
        """Explicit cover quoted for this family, or None."""
        return None

    def cycle_edges(self, length, offset=0):
        return [(offset + i, offset + (i + 1) % length) for i in range(length)]
