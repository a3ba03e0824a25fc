from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


class DownCoreStrategy(TheoremStrategy):
    """
    Av(2413, 3142, 1⊕P) with every pattern of P sum-indecomposable.

    The down-core has the up-core's size distribution, so A(x) = F_U(x, B(x) - 1) as well.
    """
    theorem = THEOREMS.GF_DOWNCORE
    required = (PATTERNS.R_D, PATTERNS.C_D)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {"P sum-indecomposable": self.all_sum_indecomposable(parameters)}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("U")
        return self._weight_series(match, order, resolve, lambda b: family(b - 1))
