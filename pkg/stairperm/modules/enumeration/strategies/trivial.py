from typing import Dict, List, Optional, Tuple

from stairperm.common.constants import THEOREMS
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


_POINT = Basis(["1"])
_MONOTONE = Basis(["12"])


class TrivialStrategy(TheoremStrategy):
    """
    Av(1) = {ε} and the monotone classes Av(12), Av(21).

    These are where the corollaries' recursions bottom out; answering them here keeps the
    oracle out of every chain that ends in a monotone weight class.
    """
    theorem = THEOREMS.TRIVIAL
    accepts_parameters = False

    def _match_image(self, image: Basis, symmetry: str) -> Optional[TheoremMatch]:
        if image == _POINT or image == _MONOTONE:
            return TheoremMatch(self.theorem, symmetry, image, (), {})
        return None

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        if match.image == _POINT:
            return TruncatedSeries.one(order), []
        return TruncatedSeries.geometric(order), []
