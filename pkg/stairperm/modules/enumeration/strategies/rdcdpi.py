from typing import Dict, List, Tuple

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.strategies.base import Resolver, TheoremStrategy


class RdCdPiStrategy(TheoremStrategy):
    """
    Av(2413, 3142, 3124, 1⊕P) with bstrip(P) sum-indecomposable.

    A(x) = F_UDC(x, C(x) - 1, (B(x) - 1) / (C(x) - 1)) with C enumerating Av(312, bstrip(P)),
    evaluated through the division-free relabelled form.
    """
    theorem = THEOREMS.GF_RDCDPI
    required = (PATTERNS.R_D, PATTERNS.C_D, PATTERNS.C_U)

    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        return {"bstrip(P) sum-indecomposable": self.all_sum_indecomposable(self.bstrip_all(parameters))}

    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        family = GFFactory.create("UDC")
        rows, rows_trace = resolve(Basis(("312",) + self.bstrip_all(match.parameters)), order)
        series, traces = self._weight_series(match, order, resolve, lambda b: family.relabelled(rows - 1, b - 1))
        return series, [rows_trace] + traces
