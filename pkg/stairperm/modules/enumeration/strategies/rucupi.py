from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


class RuCuPiStrategy(TheoremStrategy):
    """
    Av(2314, 3124, 3142, 1⊕P) with P skew-indecomposable.

    Only the set size matters here, so the row marker is set to 1: A(x) = F_UDC(x, B(x) - 1, 1).
    """
    theorem = THEOREMS.GF_RUCUPI
    required = (PATTERNS.R_U, PATTERNS.C_U, PATTERNS.C_D)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {"P skew-indecomposable": self.all_skew_indecomposable(parameters)}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("UDC")
        return self._weight_series(match, order, resolve, lambda b: family(b - 1, TruncatedSeries.one(order)))
