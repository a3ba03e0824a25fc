from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import SKEW, Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


def ends_in_increasing(pattern: Permutation) -> bool:
    """True when the last skew component of ``pattern`` is increasing (a single point included)."""
    last = pattern.decompose(SKEW)[-1]
    return all(a < b for a, b in zip(last, last[1:]))


class Ru2143Strategy(TheoremStrategy):
    """
    Av(2314, 2143, 1⊕P), counted through the merged core of U(B_n) and DR(B_{n-1}):

    A(x) = R(x, x/(1-x), (B(x) - 1 - x)/x, B(x) - 1).
    """
    theorem = THEOREMS.RU_2143
    required = (PATTERNS.R_U, PATTERNS.P_2143)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {
            "P avoids the increasing mesh pattern": all(self.mesh_condition(p) for p in parameters),
            "no P ends in an increasing skew component": not any(ends_in_increasing(p) for p in parameters),
        }

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("UmDR")
        x = TruncatedSeries.x(order)
        increasing = TruncatedSeries.geometric(order) - 1
        return self._weight_series(match, order, resolve, lambda b: family(increasing, (b - 1 - x) / x, b - 1))
