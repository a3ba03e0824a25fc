from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Tuple

from stairperm.common.exceptions import InvalidInputError
from stairperm.common.models.permutation import Permutation


@dataclass(frozen=True)
class MeshPattern:
    """
    A classical pattern with shaded unit cells.

    Cell ``(x, y)`` is the unit square whose bottom-left corner is ``(x, y)`` in the plot of the
    pattern, so ``0 <= x, y <= k`` for a pattern of size ``k``.
    """
    pattern: Permutation
    shading: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.pattern, Permutation):
            object.__setattr__(self, "pattern", Permutation(self.pattern))
        shading = frozenset((int(x), int(y)) for x, y in self.shading)
        k = len(self.pattern)
        for x, y in shading:
            if not (0 <= x <= k and 0 <= y <= k):
                raise InvalidInputError(f"Shaded cell ({x},{y}) lies outside the {k + 1}x{k + 1} mesh")
        object.__setattr__(self, "shading", shading)

    @staticmethod
    def parse_shading(text: str) -> FrozenSet[Tuple[int, int]]:
        """Parse the shading text format: cells ``x,y`` joined by ``;``."""
        cells = set()
        for part in text.replace(" ", "").split(";"):
            if not part:
                continue
            try:
                x, y = part.split(",")
                cells.add((int(x), int(y)))
            except ValueError:
                raise InvalidInputError(f"Malformed shaded cell: {part!r}")
        return frozenset(cells)

    @staticmethod
    def format_shading(cells: Iterable[Tuple[int, int]]) -> str:
        return ";".join(f"{x},{y}" for x, y in sorted(cells))

    def with_shading(self, cells: Iterable[Tuple[int, int]]) -> "MeshPattern":
        """A copy with additional shaded cells."""
        return MeshPattern(self.pattern, self.shading | frozenset(cells))

    def __str__(self) -> str:
        return f"({self.pattern}, {{{self.format_shading(self.shading)}}})"
