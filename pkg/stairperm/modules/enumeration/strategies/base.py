from abc import ABC, abstractmethod
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from stairperm.common.models.permutation import Basis, Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch
from stairperm.common.services.logger import Logger
from stairperm.core.fixed_point import solve_fixed_point


# Recursive class-gf callback: (basis, order) -> (series, trace)
Resolver = Callable[[Basis, int], Tuple[TruncatedSeries, GFTrace]]


class MeshCondition:
    """
    Pluggable mesh-pattern side condition on the parameters of the 2134 and 2143 theorems.

    Without a predicate, every parameter fails unless the operator confirms with ``assume=True``;
    an empty parameter set always passes since there is nothing to check.

    :param assume: Accept every parameter
    :type assume: bool
    :param predicate: Optional decision procedure for a single parameter
    :type predicate: Optional[Callable[[Permutation], bool]]
    """

    def __init__(self, assume: bool = False, predicate: Optional[Callable[[Permutation], bool]] = None) -> None:
        self.assume = assume
        self.predicate = predicate

    def __call__(self, pattern: Permutation) -> bool:
        if self.predicate is not None:
            return bool(self.predicate(pattern))
        return self.assume


class TheoremStrategy(ABC):
    """
    Abstract class for a class-enumeration theorem.

    A theorem covers the classes Av(T, 1⊕P) for a fixed set T of required patterns and parameter
    sets P meeting its side conditions. ``match`` tries every symmetry image of a basis,
    ``generating_function`` evaluates the theorem's corollary.
    """
    theorem: str = ""
    required: Tuple[str, ...] = ()
    accepts_parameters: bool = True

    def __init__(self, mesh_condition: Optional[MeshCondition] = None):
        self.logger = Logger(self.__class__.__name__)
        self.mesh_condition = mesh_condition or MeshCondition()
        self.required_patterns: FrozenSet[Permutation] = frozenset(Permutation.from_string(p) for p in self.required)

    @abstractmethod
    def conditions(self, parameters: Tuple[Permutation, ...]) -> Dict[str, bool]:
        """
        Check the theorem's side conditions on P.

        :param parameters: The parameter set P
        :type parameters: Tuple[Permutation, ...]
        :return: Outcome of every condition by name
        :rtype: Dict[str, bool]
        """
        pass

    @abstractmethod
    def generating_function(self, match: TheoremMatch, order: int, resolve: Resolver) -> Tuple[TruncatedSeries, List[GFTrace]]:
        """
        Compute the class generating function through the theorem's corollary.

        :param match: The match, whose image is the class actually evaluated
        :type match: TheoremMatch
        :param order: Truncation order
        :type order: int
        :param resolve: Callback computing the gf of an auxiliary class
        :type resolve: Resolver
        :return: The series and the traces of the auxiliary classes used
        :rtype: Tuple[TruncatedSeries, List[GFTrace]]
        """
        pass

    def match(self, basis: Basis) -> List[TheoremMatch]:
        """
        All matches of the theorem over the symmetry images of ``basis``, one per distinct image.

        :param basis: The basis
        :type basis: Basis
        :return: Matches in symmetry order, identity first
        :rtype: List[TheoremMatch]
        """
        matches: List[TheoremMatch] = []
        seen = set()
        for image, symmetry in basis.symmetry_orbit():
            if image in seen:
                continue
            seen.add(image)
            found = self._match_image(image, symmetry)
            if found is not None:
                matches.append(found)
        return matches

    def _match_image(self, image: Basis, symmetry: str) -> Optional[TheoremMatch]:
        rest = [p for p in image if p not in self.required_patterns]
        if rest and not self.accepts_parameters:
            return None
        if any(p[0] != 1 or len(p) < 2 for p in rest):
            return None

        parameters = tuple(sorted((Permutation.standardize(p[1:]) for p in rest), key=lambda p: (len(p), tuple(p))))
        if Basis(list(self.required_patterns) + [self.lift(p) for p in parameters]) != image:
            return None

        conditions = self.conditions(parameters)
        if not all(conditions.values()):
            self.logger.debug(f"{image} fits {self.theorem} but fails {[k for k, v in conditions.items() if not v]}")
            return None
        return TheoremMatch(self.theorem, symmetry, image, parameters, conditions)

    @staticmethod
    def lift(pattern: Permutation) -> Permutation:
        """1 ⊕ pattern."""
        return Permutation((1,)).direct_sum(pattern)

    def subclass(self, match: TheoremMatch) -> Basis:
        """The basis T ∪ P of the weight class B."""
        return Basis(list(self.required_patterns) + list(match.parameters))

    def _weight_series(self, match: TheoremMatch, order: int, resolve: Resolver,
                       corollary: Callable[[TruncatedSeries], TruncatedSeries]) -> Tuple[TruncatedSeries, List[GFTrace]]:
        """
        Evaluate ``corollary(B)`` where B is the gf of Av(T ∪ P); when P is empty B is the class
        itself and the equation is solved as a fixed point.
        """
        if not match.parameters:
            return solve_fixed_point(corollary, order, self.logger), []
        weights, trace = resolve(self.subclass(match), order)
        return corollary(weights), [trace]

    @staticmethod
    def all_skew_indecomposable(parameters: Tuple[Permutation, ...]) -> bool:
        return all(p.is_skew_indecomposable() for p in parameters)

    @staticmethod
    def all_sum_indecomposable(parameters: Tuple[Permutation, ...]) -> bool:
        return all(p.is_sum_indecomposable() for p in parameters)

    @staticmethod
    def bstrip_all(parameters: Tuple[Permutation, ...]) -> Tuple[Permutation, ...]:
        return tuple(p.bstrip() for p in parameters)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.theorem})"
