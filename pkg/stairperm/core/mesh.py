from itertools import combinations
from typing import Sequence

from stairperm.common.models.mesh_pattern import MeshPattern
from stairperm.common.models.permutation import Permutation


def _region_is_empty(sigma: Sequence[int], columns: Sequence[int], rows: Sequence[int], x: int, y: int) -> bool:
    low, high = rows[y], rows[y + 1]
    return not any(low < sigma[q - 1] < high for q in range(columns[x] + 1, columns[x + 1]))


def contains_mesh(sigma: Sequence[int], mesh: MeshPattern) -> bool:
    """
    Decide whether ``sigma`` contains the mesh pattern ``mesh``.

    Every classical occurrence is tried; it counts when each shaded region, bounded by the
    occurrence's positions and values (with 0 and n+1 as outer bounds), holds no point of ``sigma``.

    :param sigma: The permutation
    :type sigma: Sequence[int]
    :param mesh: The mesh pattern
    :type mesh: MeshPattern
    :return: True if an occurrence exists
    :rtype: bool
    """
    n, k = len(sigma), len(mesh.pattern)
    for positions in combinations(range(1, n + 1), k):
        values = [sigma[p - 1] for p in positions]
        if Permutation.standardize(values) != mesh.pattern:
            continue
        columns = [0, *positions, n + 1]
        rows = [0, *sorted(values), n + 1]
        if all(_region_is_empty(sigma, columns, rows, x, y) for x, y in mesh.shading):
            return True
    return False
