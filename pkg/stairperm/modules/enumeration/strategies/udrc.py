from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


class UDRCStrategy(TheoremStrategy):
    """Av(2413, 3142, 2314, 3124, 1⊕P) for any P: A(x) = F_UDRC(x, B(x) - 1)."""
    theorem = THEOREMS.GF_RDCDRUCU
    required = (PATTERNS.R_D, PATTERNS.C_D, PATTERNS.R_U, PATTERNS.C_U)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("UDRC")
        return self._weight_series(match, order, resolve, lambda b: family(b - 1))
