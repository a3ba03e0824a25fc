from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import SUM, Basis, Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


def ends_in_long_decreasing(pattern: Permutation) -> bool:
    """True when the last sum component of ``pattern`` is decreasing of size at least 2."""
    last = pattern.decompose(SUM)[-1]
    return len(last) >= 2 and all(a > b for a, b in zip(last, last[1:]))


class Rd2134Strategy(TheoremStrategy):
    """
    Av(2134, 2413, 1⊕P), counted through the merged core of D(B_n) and UR(B_{n-1}):

    A(x) = R(x, x/(1-x), (B(x) - 1 - x)/x, C(x) - 1, B(x) - 1), C enumerating Av(213, bstrip(P)).
    """
    theorem = THEOREMS.RD_2134
    required = (PATTERNS.P_2134, PATTERNS.R_D)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {
            "P avoids the decreasing mesh pattern": all(self.mesh_condition(p) for p in parameters),
            "no P ends in a decreasing sum component of size >= 2": not any(ends_in_long_decreasing(p) for p in parameters),
        }

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("DmUR")
        x = TruncatedSeries.x(order)
        decreasing = TruncatedSeries.geometric(order) - 1
        cells, cells_trace = resolve(Basis(("213",) + self.bstrip_all(match.parameters)), order)

        def corollary(b: TruncatedSeries) -> TruncatedSeries:
            return family(decreasing, (b - 1 - x) / x, cells - 1, b - 1)

        series, traces = self._weight_series(match, order, resolve, corollary)
        return series, [cells_trace] + traces
