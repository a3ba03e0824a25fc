from typing import Dict, List, Tuple

from stairperm.common.constants import THEOREMS
from stairperm.common.models.permutation import Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


class _MonotoneWeightStrategy(TheoremStrategy):
    """A single pattern of size 3 whose weights are the nonempty monotone permutations: A = F_U(x, x/(1-x))."""
    accepts_parameters = False

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        monotone = TruncatedSeries.geometric(order) - 1
        return GFFactory.create("U")(monotone), []


class Base123Strategy(_MonotoneWeightStrategy):
    """Av(123): uperm of up-core independent sets weighted by decreasing permutations."""
    theorem = THEOREMS.BASE_123
    required = ("123",)


class Base132Strategy(_MonotoneWeightStrategy):
    """Av(132): dperm of down-core independent sets weighted by increasing permutations."""
    theorem = THEOREMS.BASE_132
    required = ("132",)
