from typing import Callable, Optional

from stairperm.common.exceptions import ContractionError
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.services.logger import Logger


SeriesMap = Callable[[TruncatedSeries], TruncatedSeries]


def solve_fixed_point(phi: SeriesMap, order: int, logger: Optional[Logger] = None) -> TruncatedSeries:
    """
    Solve A = phi(A) to order N by iterating from A = 1.

    ``phi`` must be an x-adic contraction (the unknown enters multiplied by x), so every
    iteration fixes at least one more coefficient. The loop stops when one application of
    ``phi`` changes nothing, which doubles as the stabilization check.

    :param phi: The map
    :type phi: Callable[[TruncatedSeries], TruncatedSeries]
    :param order: Truncation order N
    :type order: int
    :param logger: Optional logger for the iteration count
    :type logger: Optional[Logger]
    :return: The fixed point to order N
    :rtype: TruncatedSeries
    :raises ContractionError: if phi loses precision or does not stabilize within N + 2 applications
    """
    current = TruncatedSeries.one(order)
    for iteration in range(1, order + 3):
        image = phi(current)
        if image.order < order:
            raise ContractionError(f"Map returned order {image.order}, below the requested order {order}")
        image = image.truncate(order)
        if image == current:
            if logger:
                logger.debug(f"Fixed point stabilized after {iteration} applications at order {order}")
            return current
        current = image
    raise ContractionError(f"Fixed point did not stabilize within {order + 2} applications at order {order}")
