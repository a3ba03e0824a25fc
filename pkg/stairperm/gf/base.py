from abc import ABC, abstractmethod
from typing import Optional, Tuple, Union

from stairperm.common.exceptions import InvalidInputError
from stairperm.common.models.graph import LabelledIndependentSet
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.services.logger import Logger


Slot = Union[TruncatedSeries, int]


class CoreGF(ABC):
    """
    Abstract class for the generating function of a core graph's independent sets.

    A family evaluates its closed form (or functional equation) with every marker slot
    replaced by a series in x, and knows how to read the same marker statistics off a
    labelled independent set so formulas can be checked against exhaustive counts.
    """
    family: str = ""
    kind: str = ""
    labelling: Optional[str] = None
    slots: Tuple[str, ...] = ()

    def __init__(self):
        self.logger = Logger(self.__class__.__name__)

    @property
    def arity(self) -> int:
        return len(self.slots)

    def __call__(self, *arguments: Slot, order: int = -1) -> TruncatedSeries:
        return self.evaluate(*self._prepare(arguments, order))

    @abstractmethod
    def evaluate(self, *arguments: TruncatedSeries) -> TruncatedSeries:
        """
        Evaluate the generating function with the marker slots replaced by series in x.

        :param arguments: One series per slot, all of the same truncation order
        :type arguments: TruncatedSeries
        :return: The resulting series in x
        :rtype: TruncatedSeries
        """
        pass

    @abstractmethod
    def degree_bounds(self, n: int) -> Tuple[int, ...]:
        """
        Upper bounds on each marker's degree in the coefficient of x^m for every m <= n.

        :param n: Grid size
        :type n: int
        :return: One bound per slot
        :rtype: Tuple[int, ...]
        """
        pass

    @abstractmethod
    def multidegree(self, labelled: LabelledIndependentSet) -> Tuple[int, ...]:
        """
        Marker exponents contributed by one independent set.

        :param labelled: The labelled independent set
        :type labelled: LabelledIndependentSet
        :return: One exponent per slot
        :rtype: Tuple[int, ...]
        """
        pass

    def _prepare(self, arguments: Tuple[Slot, ...], order: int) -> Tuple[TruncatedSeries, ...]:
        if len(arguments) != self.arity:
            raise InvalidInputError(f"{self.family} takes {self.arity} slot(s) {self.slots}, got {len(arguments)}")
        orders = [a.order for a in arguments if isinstance(a, TruncatedSeries)]
        if order < 0:
            if not orders:
                raise InvalidInputError("An order is needed when every slot is a constant")
            order = min(orders)
        return tuple(a if isinstance(a, TruncatedSeries) else TruncatedSeries.constant(a, order) for a in arguments)

    @staticmethod
    def _variable(arguments: Tuple[TruncatedSeries, ...]) -> TruncatedSeries:
        # x is exact, so it may carry the largest order; products track the rest by valuation
        return TruncatedSeries.x(max(a.order for a in arguments))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.family})"
