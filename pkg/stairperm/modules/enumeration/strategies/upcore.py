from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


class UpCoreStrategy(TheoremStrategy):
    """
    Av(2314, 3124, 1⊕P) with every pattern of P skew-indecomposable.

    A(x) = F_U(x, B(x) - 1) where B enumerates Av(2314, 3124, P).
    """
    theorem = THEOREMS.GF_UPCORE
    required = (PATTERNS.R_U, PATTERNS.C_U)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {"P skew-indecomposable": self.all_skew_indecomposable(parameters)}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("U")
        return self._weight_series(match, order, resolve, lambda b: family(b - 1))
