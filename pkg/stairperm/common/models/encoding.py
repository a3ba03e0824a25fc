from typing import Dict, Iterator, List, Mapping, NamedTuple, Tuple

from stairperm.common.exceptions import InvalidEncodingError
from stairperm.common.models.permutation import Permutation


class Cell(NamedTuple):
    """
    A cell of a staircase grid in matrix coordinates: row 1 is the topmost value band,
    column 1 the leftmost position band.
    """
    i: int
    j: int

    def in_grid(self, n: int) -> bool:
        return 1 <= self.i <= n and self.i <= self.j <= n

    def is_diagonal(self) -> bool:
        return self.i == self.j

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def grid_cells(n: int) -> List[Cell]:
    """The cells of the staircase grid B_n in row-major order."""
    return [Cell(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


class StaircaseEncoding:
    """
    A staircase grid size together with the non-empty permutations stored in its active cells.

    :param n: Grid size (number of left-to-right minima)
    :type n: int
    :param fill: Map from cells of B_n to non-empty permutations
    :type fill: Mapping[Tuple[int, int], Permutation]
    """

    def __init__(self, n: int, fill: Mapping[Tuple[int, int], Permutation]) -> None:
        if n < 0:
            raise InvalidEncodingError(f"Grid size must be non-negative, got {n}")
        cells: Dict[Cell, Permutation] = {}
        for key, value in fill.items():
            cell = Cell(*key)
            if not cell.in_grid(n):
                raise InvalidEncodingError(f"Cell {cell} is not a cell of B_{n}")
            if not isinstance(value, Permutation):
                value = Permutation(value)
            if len(value) == 0:
                raise InvalidEncodingError(f"Cell {cell} holds the empty permutation")
            cells[cell] = value
        self.n = n
        self.fill: Dict[Cell, Permutation] = dict(sorted(cells.items()))

    @property
    def active_cells(self) -> List[Cell]:
        return list(self.fill)

    @property
    def size(self) -> int:
        """Size of the encoded permutation: minima plus all stored points."""
        return self.n + sum(len(value) for value in self.fill.values())

    def __iter__(self) -> Iterator[Tuple[Cell, Permutation]]:
        return iter(self.fill.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StaircaseEncoding) and self.n == other.n and self.fill == other.fill

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.fill.items())))

    def __str__(self) -> str:
        return "".join([f"{self.n};"] + [f" ({c.i},{c.j})={p};" for c, p in self.fill.items()]).rstrip(";")

    def __repr__(self) -> str:
        return f"StaircaseEncoding({str(self)})"
