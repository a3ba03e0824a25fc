from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from stairperm.common.exceptions import InvalidInputError
from stairperm.common.models.encoding import Cell


ATOMS = "UDRC"
MERGE_SEPARATOR = "m"

Edge = Tuple[Cell, Cell]


def _canonical_atoms(text: str) -> str:
    atoms = set(text)
    unknown = atoms - set(ATOMS)
    if not atoms or unknown:
        raise InvalidInputError(f"Unknown core atoms in {text!r}; use a non-empty subset of {ATOMS}")
    return "".join(atom for atom in ATOMS if atom in atoms)


class CoreKind:
    """
    A core graph specification: a union of the atoms U, D, R, C on B_n, optionally merged with a
    second union on B_{n-1} overlaid on the off-diagonal cells (written ``outer m inner``,
    e.g. ``DmUR``).

    :param outer: Atoms acting on B_n
    :type outer: str
    :param inner: Atoms acting on the overlaid B_{n-1}, if merged
    :type inner: Optional[str]
    """

    def __init__(self, outer: str, inner: Optional[str] = None) -> None:
        self.outer: str = _canonical_atoms(outer)
        self.inner: Optional[str] = _canonical_atoms(inner) if inner is not None else None

    @classmethod
    def parse(cls, text: str) -> "CoreKind":
        text = text.strip()
        if MERGE_SEPARATOR in text:
            outer, inner = text.split(MERGE_SEPARATOR, 1)
            return cls(outer, inner)
        return cls(text)

    @property
    def is_merged(self) -> bool:
        return self.inner is not None

    @property
    def name(self) -> str:
        return self.outer if self.inner is None else f"{self.outer}{MERGE_SEPARATOR}{self.inner}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoreKind) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"CoreKind({self.name})"


class CoreGraph:
    """
    A core graph on the cells of B_n.

    :param kind: The core kind
    :type kind: CoreKind
    :param n: Grid size
    :type n: int
    :param vertices: Cells of B_n in row-major order
    :type vertices: List[Cell]
    :param edges: Unordered edges, each stored with the smaller cell first
    :type edges: Iterable[Edge]
    """

    def __init__(self, kind: CoreKind, n: int, vertices: List[Cell], edges: Iterable[Edge]) -> None:
        self.kind = kind
        self.n = n
        self.vertices: List[Cell] = list(vertices)
        self.edges: FrozenSet[Edge] = frozenset(tuple(sorted(edge)) for edge in edges)
        self.adjacency: Dict[Cell, Set[Cell]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            self.adjacency[a].add(b)
            self.adjacency[b].add(a)

    def has_edge(self, a: Cell, b: Cell) -> bool:
        return b in self.adjacency.get(a, ())

    def is_independent(self, cells: Iterable[Cell]) -> bool:
        cells = list(cells)
        members = set(cells)
        if len(members) != len(cells) or not members.issubset(self.adjacency):
            return False
        return not any(self.adjacency[c] & members for c in members)

    def __str__(self) -> str:
        edges = ", ".join(f"{a}-{b}" for a, b in sorted(self.edges))
        return f"{self.kind} {self.n}; edges: {edges}"

    def __repr__(self) -> str:
        return f"CoreGraph({self.kind}, n={self.n}, edges={len(self.edges)})"


@dataclass
class LabelledIndependentSet:
    """An independent set of a core graph with the label of each member."""
    graph: CoreGraph
    members: Tuple[Cell, ...]
    labels: Dict[Cell, str] = field(default_factory=dict)

    def label_counts(self, alphabet: str) -> Tuple[int, ...]:
        return tuple(sum(1 for label in self.labels.values() if label == letter) for letter in alphabet)

    @property
    def rows_occupied(self) -> int:
        return len({cell.i for cell in self.members})
