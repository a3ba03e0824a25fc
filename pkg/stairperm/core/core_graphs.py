"""
Core graphs on staircase grids.

Edge rules between cells (i, j) and (k, l) of B_n:

- U: one cell strictly below and strictly left of the other (i > k, j < l).
- D: i < k <= j < l, i.e. the rectangle spanned by the two cells lies inside B_n.
- R: same row; C: same column.

A merged kind ``XmY`` applies X to all cells of B_n and Y to the off-diagonal cells through
(i, j) -> (i, j - 1) onto B_{n-1}; diagonal cells only see X.
"""
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, Optional, Tuple, Union

from stairperm.common.exceptions import InvalidInputError
from stairperm.common.models.encoding import Cell, grid_cells
from stairperm.common.models.graph import CoreGraph, CoreKind, LabelledIndependentSet


RL = "rl"
PHI = "phi"
PSI = "psi"

LABELLINGS = (RL, PHI, PSI)


def _atom_edge(atom: str, a: Cell, b: Cell) -> bool:
    if atom == "U":
        return (a.i > b.i and a.j < b.j) or (b.i > a.i and b.j < a.j)
    if atom == "D":
        upper, lower = (a, b) if a.i < b.i else (b, a)
        return upper.i < lower.i and upper.j < lower.j and upper.j >= lower.i
    if atom == "R":
        return a.i == b.i and a.j != b.j
    if atom == "C":
        return a.j == b.j and a.i != b.i
    raise InvalidInputError(f"Unknown core atom: {atom}")


def _overlay(cell: Cell) -> Cell:
    return Cell(cell.i, cell.j - 1)


@lru_cache(maxsize=None)
def _build_core(kind: CoreKind, n: int) -> CoreGraph:
    vertices = grid_cells(n)
    edges = []
    for a, b in combinations(vertices, 2):
        if any(_atom_edge(atom, a, b) for atom in kind.outer):
            edges.append((a, b))
        elif kind.is_merged and not a.is_diagonal() and not b.is_diagonal():
            if any(_atom_edge(atom, _overlay(a), _overlay(b)) for atom in kind.inner):
                edges.append((a, b))
    return CoreGraph(kind, n, vertices, edges)


def build_core(kind: Union[CoreKind, str], n: int) -> CoreGraph:
    """
    Build the core graph of the given kind on B_n.

    :param kind: Core kind or its name (``U``, ``UDC``, ``DmUR``, ...)
    :type kind: Union[CoreKind, str]
    :param n: Grid size
    :type n: int
    :return: The graph; cached per (kind, n)
    :rtype: CoreGraph
    """
    if n < 0:
        raise InvalidInputError(f"Grid size must be non-negative, got {n}")
    if isinstance(kind, str):
        kind = CoreKind.parse(kind)
    return _build_core(kind, n)


def independent_sets(graph: CoreGraph, max_size: Optional[int] = None) -> Iterator[Tuple[Cell, ...]]:
    """
    Every independent set of ``graph`` exactly once, as a sorted tuple of cells.

    Sets come in lexicographic order of their sorted member lists, starting with the empty set.

    :param graph: The core graph
    :type graph: CoreGraph
    :param max_size: Optional bound on the number of members
    :type max_size: Optional[int]
    :return: Iterator over independent sets
    :rtype: Iterator[Tuple[Cell, ...]]
    """
    vertices = sorted(graph.vertices)
    index = {v: position for position, v in enumerate(vertices)}
    conflict = [0] * len(vertices)
    for position, v in enumerate(vertices):
        for u in graph.adjacency[v]:
            conflict[position] |= 1 << index[u]
    limit = len(vertices) if max_size is None else max_size

    def extend(start: int, chosen: Tuple[Cell, ...], blocked: int) -> Iterator[Tuple[Cell, ...]]:
        yield chosen
        if len(chosen) == limit:
            return
        for position in range(start, len(vertices)):
            if not blocked >> position & 1:
                yield from extend(position + 1, chosen + (vertices[position],), blocked | conflict[position])

    return extend(0, (), 0)


def label(members: Tuple[Cell, ...], scheme: str, graph: CoreGraph) -> Dict[Cell, str]:
    """
    Label the members of an independent set.

    - ``rl``: y when another member lies strictly to the right in the same row, else z.
    - ``phi``: y off the diagonal; z when another member shares the column; s when another member
      lies north-east (row <= and column >=); t otherwise.
    - ``psi``: y off the diagonal; z when another member shares the column; s otherwise.

    :param members: The independent set
    :type members: Tuple[Cell, ...]
    :param scheme: ``rl``, ``phi`` or ``psi``
    :type scheme: str
    :param graph: The graph the set is independent in
    :type graph: CoreGraph
    :return: Label of each member
    :rtype: Dict[Cell, str]
    :raises InvalidInputError: if the set is not independent or the scheme is unknown
    """
    if scheme not in LABELLINGS:
        raise InvalidInputError(f"Unknown labelling {scheme!r}; use one of {LABELLINGS}")
    if not graph.is_independent(members):
        raise InvalidInputError(f"{[str(c) for c in members]} is not an independent set of {graph!r}")

    labels: Dict[Cell, str] = {}
    for v in members:
        others = [u for u in members if u != v]
        if scheme == RL:
            labels[v] = "y" if any(u.i == v.i and u.j > v.j for u in others) else "z"
        elif not v.is_diagonal():
            labels[v] = "y"
        elif any(u.j == v.j for u in others):
            labels[v] = "z"
        elif scheme == PHI and any(u.i <= v.i and u.j >= v.j for u in others):
            labels[v] = "s"
        else:
            labels[v] = "t" if scheme == PHI else "s"
    return labels


def labelled_independent_sets(graph: CoreGraph, scheme: Optional[str] = None,
                              max_size: Optional[int] = None) -> Iterator[LabelledIndependentSet]:
    """Independent sets of ``graph`` together with their labels under ``scheme`` (no labels when None)."""
    for members in independent_sets(graph, max_size):
        labels = label(members, scheme, graph) if scheme else {}
        yield LabelledIndependentSet(graph, members, labels)
