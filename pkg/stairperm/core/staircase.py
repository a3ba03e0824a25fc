"""
The staircase encoding of a permutation and its monotone inverses.

The left-to-right minima sit on the leading diagonal of B_n. Row i collects the values strictly
between the i-th and (i-1)-st minimum values (row 1 lies above the first minimum), column j the
positions strictly between the j-th and (j+1)-st minimum positions.
"""
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Sequence, Tuple

from stairperm.common.exceptions import InvalidInputError
from stairperm.common.models.encoding import Cell, StaircaseEncoding
from stairperm.common.models.permutation import Permutation


INCREASING = "increasing"
DECREASING = "decreasing"
BOTH = "both"
NEITHER = "neither"

DIRECTIONS = (INCREASING, DECREASING)

# A point of the plot as (position, value), both 1-based
Point = Tuple[int, int]


@dataclass
class CellPoints:
    """Minima and the raw points of every active cell of a permutation's staircase encoding."""
    minima_positions: List[int]
    minima_values: List[int]
    cells: Dict[Cell, List[Point]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.minima_positions)


def cell_points(sigma: Sequence[int]) -> CellPoints:
    """
    Distribute the non-minimum points of ``sigma`` over the cells of its staircase grid.

    :param sigma: The permutation
    :type sigma: Sequence[int]
    :return: Minima and per-cell points in left-to-right order
    :rtype: CellPoints
    """
    positions: List[int] = []
    values: List[int] = []
    cells: Dict[Cell, List[Point]] = {}
    for position, value in enumerate(sigma, start=1):
        if not values or value < values[-1]:
            positions.append(position)
            values.append(value)
            continue
        column = len(positions)
        row = 1 + sum(1 for minimum in values if minimum > value)
        cells.setdefault(Cell(row, column), []).append((position, value))
    return CellPoints(positions, values, dict(sorted(cells.items())))


def staircase_encode(sigma: Sequence[int]) -> StaircaseEncoding:
    """
    The staircase encoding SE(sigma): grid size plus the standardized contents of each active cell.

    :param sigma: The permutation
    :type sigma: Sequence[int]
    :return: The encoding
    :rtype: StaircaseEncoding
    """
    points = cell_points(sigma)
    fill = {cell: Permutation.standardize([v for _, v in pts]) for cell, pts in points.cells.items()}
    return StaircaseEncoding(points.n, fill)


def assemble(n: int, points: Sequence[Tuple[Tuple[Hashable, ...], Tuple[Hashable, ...]]]) -> Permutation:
    """
    Build a permutation from the n diagonal minima and keyed non-minimum points.

    Minimum j has position key ``(j, 0)`` and value key ``(n - j, 0)``; a point of cell (i, j)
    must use a position key starting with ``(j, 1, ...)`` and a value key starting with
    ``(n - i, 1, ...)``. Positions and values are the ranks of the keys.

    :param n: Grid size
    :type n: int
    :param points: ``(position key, value key)`` for every non-minimum point
    :type points: Sequence
    :return: The permutation
    :rtype: Permutation
    """
    keyed = [((j, 0), (n - j, 0)) for j in range(1, n + 1)] + list(points)
    by_position = sorted(range(len(keyed)), key=lambda index: keyed[index][0])
    value_rank = {index: rank for rank, index in enumerate(sorted(range(len(keyed)), key=lambda index: keyed[index][1]), start=1)}
    return Permutation._trusted(value_rank[index] for index in by_position)


def _check_direction(direction: str) -> None:
    if direction not in DIRECTIONS:
        raise InvalidInputError(f"Direction must be one of {DIRECTIONS}, got {direction!r}")


def column_key(i: int, cols: str) -> int:
    """Horizontal order of the cell of row ``i`` inside its column: increasing puts lower cells to the left."""
    return -i if cols == INCREASING else i


def row_key(j: int, rows: str) -> int:
    """Vertical order of the cell of column ``j`` inside its row: increasing puts left cells lower."""
    return j if rows == INCREASING else -j


def grid_realize(encoding: StaircaseEncoding, rows: str, cols: str) -> Permutation:
    """
    The permutation with the given row and column interleaving whose staircase encoding is ``encoding``.

    ``uperm`` is ``grid_realize(E, "decreasing", "decreasing")`` and ``dperm`` is
    ``grid_realize(E, "increasing", "increasing")``.

    :param encoding: The staircase encoding
    :type encoding: StaircaseEncoding
    :param rows: Row interleaving direction
    :type rows: str
    :param cols: Column interleaving direction
    :type cols: str
    :return: The realized permutation
    :rtype: Permutation
    """
    _check_direction(rows)
    _check_direction(cols)
    n = encoding.n
    points = []
    for cell, weight in encoding:
        for t, value in enumerate(weight):
            points.append(((cell.j, 1, column_key(cell.i, cols), t), (n - cell.i, 1, row_key(cell.j, rows), value)))
    return assemble(n, points)


def uperm(encoding: StaircaseEncoding) -> Permutation:
    return grid_realize(encoding, DECREASING, DECREASING)


def dperm(encoding: StaircaseEncoding) -> Permutation:
    return grid_realize(encoding, INCREASING, INCREASING)


def _pair_direction(first: List[int], second: List[int]) -> str:
    """INCREASING if every coordinate of ``first`` is below those of ``second``, DECREASING if above."""
    if max(first) < min(second):
        return INCREASING
    if min(first) > max(second):
        return DECREASING
    return NEITHER


def _combine(directions: List[str]) -> str:
    if not directions:
        return BOTH
    if all(d == INCREASING for d in directions):
        return INCREASING
    if all(d == DECREASING for d in directions):
        return DECREASING
    return NEITHER


@dataclass
class InterleavingProfile:
    """Per-row and per-column interleaving flags of a permutation's staircase encoding."""
    rows: Dict[int, str]
    columns: Dict[int, str]

    def rows_are(self, direction: str) -> bool:
        """True when every row is compatible with ``direction``."""
        return all(flag in (direction, BOTH) for flag in self.rows.values())

    def columns_are(self, direction: str) -> bool:
        return all(flag in (direction, BOTH) for flag in self.columns.values())


def row_column_profile(sigma: Sequence[int]) -> InterleavingProfile:
    """
    Report for each grid row and column how its active cells interleave.

    A row is decreasing when, for every two active cells, the cell further left has all its
    points above the other's; a column is increasing when the lower cell has all its points to
    the left. Rows or columns with at most one active cell are ``both``.

    :param sigma: The permutation
    :type sigma: Sequence[int]
    :return: The profile
    :rtype: InterleavingProfile
    """
    points = cell_points(sigma)
    n = points.n
    rows: Dict[int, str] = {}
    columns: Dict[int, str] = {}

    for i in range(1, n + 1):
        active = [cell for cell in points.cells if cell.i == i]
        pairs = []
        for a in range(len(active)):
            for b in range(a + 1, len(active)):
                # Left cell's values against right cell's values: below means increasing
                left = [v for _, v in points.cells[active[a]]]
                right = [v for _, v in points.cells[active[b]]]
                pairs.append(_pair_direction(left, right))
        rows[i] = _combine(pairs)

    for j in range(1, n + 1):
        active = sorted((cell for cell in points.cells if cell.j == j), key=lambda cell: -cell.i)
        pairs = []
        for a in range(len(active)):
            for b in range(a + 1, len(active)):
                lower = [p for p, _ in points.cells[active[a]]]
                upper = [p for p, _ in points.cells[active[b]]]
                pairs.append(_pair_direction(lower, upper))
        columns[j] = _combine(pairs)

    return InterleavingProfile(rows, columns)
