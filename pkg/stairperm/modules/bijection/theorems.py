"""
Structural theorems materialized by the bijection lab.

Each theorem pairs a core graph (with an optional labelling) with weight classes per label and
the row/column interleaving used to realize weighted independent sets as permutations.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from stairperm.common.constants import BIJECTIONS, PATTERNS
from stairperm.common.exceptions import UnsupportedTheoremError
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.core.core_graphs import PHI, PSI, RL
from stairperm.core.oracle import enumerate_class
from stairperm.core.staircase import DECREASING, INCREASING


# Label key used by theorems whose graph carries no labelling
UNLABELLED = ""


@dataclass(frozen=True)
class WeightClass:
    """Nonempty members of Av(basis), optionally without the single point."""
    basis: Basis
    exclude_point: bool = False

    def members(self, size: int) -> List[Permutation]:
        if size < 1 or (self.exclude_point and size == 1):
            return []
        return enumerate_class(self.basis, size)

    def __str__(self) -> str:
        text = f"Av+({self.basis})"
        return text + " minus {1}" if self.exclude_point else text


# Builds the weight class of every label from the parameter set P
WeightRule = Callable[[Tuple[Permutation, ...]], Dict[str, WeightClass]]


@dataclass(frozen=True)
class BijectionTheorem:
    """
    :param name: Theorem identifier
    :param template: Required patterns T; the theorem covers Av(T, 1⊕P)
    :param family: Core kind of the graph side
    :param labelling: Labelling scheme, or None
    :param weights: Weight classes per label for a given P
    :param rows: Row interleaving of the realization
    :param cols: Column interleaving of the realization
    :param split: Whether z-labelled diagonal weights are split around their column's off-diagonal points
    :param accepts_parameters: Whether P may be nonempty
    """
    name: str
    template: Tuple[str, ...]
    family: str
    labelling: Optional[str]
    weights: WeightRule
    rows: str
    cols: str
    split: bool = False
    accepts_parameters: bool = True

    def parameters(self, basis: Basis) -> Tuple[Permutation, ...]:
        """
        Extract P from ``basis`` = T ∪ 1⊕P.

        :raises UnsupportedTheoremError: if the basis is not of the theorem's form
        """
        required = {Permutation.from_string(p) for p in self.template}
        rest = [p for p in basis if p not in required]
        unsupported = UnsupportedTheoremError(f"{self.name} does not cover Av({basis}); "
                                              f"it needs {','.join(self.template)} plus patterns 1⊕P")
        if rest and not self.accepts_parameters:
            raise unsupported
        if any(p[0] != 1 or len(p) < 2 for p in rest):
            raise unsupported
        parameters = tuple(Permutation.standardize(p[1:]) for p in rest)
        lifted = [Permutation((1,)).direct_sum(p) for p in parameters]
        if Basis(list(required) + lifted) != basis:
            raise unsupported
        return parameters

    def weight_classes(self, basis: Basis) -> Dict[str, WeightClass]:
        return self.weights(self.parameters(basis))


def _same(template: Tuple[str, ...]) -> WeightRule:
    return lambda parameters: {UNLABELLED: WeightClass(Basis(template + parameters))}


def _monotone(pattern: str) -> WeightRule:
    return lambda parameters: {UNLABELLED: WeightClass(Basis([pattern]))}


def _rows_split(template: Tuple[str, ...]) -> WeightRule:
    def rule(parameters: Tuple[Permutation, ...]) -> Dict[str, WeightClass]:
        return {
            "y": WeightClass(Basis(("312",) + tuple(p.bstrip() for p in parameters))),
            "z": WeightClass(Basis(template + parameters)),
        }
    return rule


def _rd_2134(parameters: Tuple[Permutation, ...]) -> Dict[str, WeightClass]:
    template = (PATTERNS.P_2134, PATTERNS.R_D)
    return {
        "y": WeightClass(Basis(["12"])),
        "z": WeightClass(Basis(template + parameters), exclude_point=True),
        "s": WeightClass(Basis(("213",) + tuple(p.bstrip() for p in parameters))),
        "t": WeightClass(Basis(template + parameters)),
    }


def _ru_2143(parameters: Tuple[Permutation, ...]) -> Dict[str, WeightClass]:
    template = (PATTERNS.R_U, PATTERNS.P_2143)
    return {
        "y": WeightClass(Basis(["21"])),
        "z": WeightClass(Basis(template + parameters), exclude_point=True),
        "s": WeightClass(Basis(template + parameters)),
    }


_UP = (PATTERNS.R_U, PATTERNS.C_U)
_DOWN = (PATTERNS.R_D, PATTERNS.C_D)
_ALL = (PATTERNS.R_D, PATTERNS.C_D, PATTERNS.R_U, PATTERNS.C_U)
_CU_CD_RU = (PATTERNS.R_U, PATTERNS.C_U, PATTERNS.C_D)
_RD_CD_CU = (PATTERNS.R_D, PATTERNS.C_D, PATTERNS.C_U)
_RD_CU = (PATTERNS.R_D, PATTERNS.C_U)

THEOREM_TABLE: Dict[str, BijectionTheorem] = {
    BIJECTIONS.THM_123: BijectionTheorem(BIJECTIONS.THM_123, ("123",), "U", None, _monotone("12"),
                                         DECREASING, DECREASING, accepts_parameters=False),
    BIJECTIONS.THM_132: BijectionTheorem(BIJECTIONS.THM_132, ("132",), "D", None, _monotone("21"),
                                         INCREASING, INCREASING, accepts_parameters=False),
    BIJECTIONS.INF_UPCORE: BijectionTheorem(BIJECTIONS.INF_UPCORE, _UP, "U", None, _same(_UP), DECREASING, DECREASING),
    BIJECTIONS.INF_DOWNCORE: BijectionTheorem(BIJECTIONS.INF_DOWNCORE, _DOWN, "D", None, _same(_DOWN), INCREASING, INCREASING),
    BIJECTIONS.INF_UDRC: BijectionTheorem(BIJECTIONS.INF_UDRC, _ALL, "UDRC", None, _same(_ALL), DECREASING, DECREASING),
    BIJECTIONS.INF_CU_CD_RU: BijectionTheorem(BIJECTIONS.INF_CU_CD_RU, _CU_CD_RU, "UDC", None, _same(_CU_CD_RU),
                                              DECREASING, DECREASING),
    BIJECTIONS.INF_RD_CD_CU: BijectionTheorem(BIJECTIONS.INF_RD_CD_CU, _RD_CD_CU, "UDC", RL, _rows_split(_RD_CD_CU),
                                              INCREASING, INCREASING),
    BIJECTIONS.INF_RD_CU: BijectionTheorem(BIJECTIONS.INF_RD_CU, _RD_CU, "UD", RL, _rows_split(_RD_CU),
                                           INCREASING, DECREASING),
    BIJECTIONS.INF_RD_2134: BijectionTheorem(BIJECTIONS.INF_RD_2134, (PATTERNS.P_2134, PATTERNS.R_D), "DmUR", PHI, _rd_2134,
                                             INCREASING, DECREASING, split=True),
    BIJECTIONS.INF_RU_2143: BijectionTheorem(BIJECTIONS.INF_RU_2143, (PATTERNS.R_U, PATTERNS.P_2143), "UmDR", PSI, _ru_2143,
                                             DECREASING, INCREASING, split=True),
}


def get_theorem(name: str) -> BijectionTheorem:
    """
    Look up a theorem by identifier or alias.

    :raises UnsupportedTheoremError: for an unknown identifier
    """
    key = BIJECTIONS.ALIASES.get(name, name)
    try:
        return THEOREM_TABLE[key]
    except KeyError:
        known = sorted(list(THEOREM_TABLE) + list(BIJECTIONS.ALIASES))
        raise UnsupportedTheoremError(f"Unknown theorem {name!r}; use one of {known}")
