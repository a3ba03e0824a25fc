"""
Marker coefficients of the core generating functions.

Series stay univariate in x. To read off the coefficient of x^n y^a z^b ..., a family is evaluated
with every marker set to each integer 0..d on a grid; the marker polynomials are then recovered
axis by axis with an exact interpolation matrix, as a tensor contraction over numpy object arrays.
"""
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Dict, Optional, Tuple

import numpy as np

from stairperm.common.exceptions import NonIntegralSeriesError
from stairperm.common.models.series import TruncatedSeries
from stairperm.core.core_graphs import build_core, labelled_independent_sets
from stairperm.gf.base import CoreGF


Multidegree = Tuple[int, ...]


@lru_cache(maxsize=None)
def interpolation_matrix(degree: int) -> np.ndarray:
    """
    Matrix M with c = M v, where v holds a polynomial's values at 0..degree and c its monomial
    coefficients. Built from Newton's forward differences and the falling-factorial basis.

    :param degree: The degree bound d
    :type degree: int
    :return: (d + 1) x (d + 1) object array of Fractions
    :rtype: np.ndarray
    """
    size = degree + 1
    # falling[k] holds the monomial coefficients of t(t - 1)...(t - k + 1)
    falling = [[Fraction(1)] + [Fraction(0)] * degree]
    for k in range(1, size):
        previous = falling[-1]
        falling.append([(previous[m - 1] if m > 0 else 0) - (k - 1) * previous[m] for m in range(size)])

    matrix = np.empty((size, size), dtype=object)
    for m in range(size):
        for i in range(size):
            matrix[m, i] = sum((falling[k][m] * (-1) ** (k - i) * comb(k, i) / factorial(k) for k in range(i, size)), Fraction(0))
    return matrix


def marker_coefficients(family: CoreGF, order: int, bounds: Optional[Tuple[int, ...]] = None) -> Dict[Multidegree, int]:
    """
    Coefficients of x^n times marker monomials for every n <= order.

    :param family: The generating-function family
    :type family: CoreGF
    :param order: Largest power of x
    :type order: int
    :param bounds: Marker degree bounds; defaults to the family's bounds at ``order``
    :type bounds: Optional[Tuple[int, ...]]
    :return: Map from ``(n, d_1, ..., d_k)`` to the nonzero coefficient
    :rtype: Dict[Tuple[int, ...], int]
    """
    bounds = bounds if bounds is not None else family.degree_bounds(order)
    values = np.empty(tuple(b + 1 for b in bounds) + (order + 1,), dtype=object)
    for point in product(*(range(b + 1) for b in bounds)):
        arguments = [TruncatedSeries.constant(v, order) for v in point]
        values[point] = np.array(family.evaluate(*arguments).coefficients(), dtype=object)

    for axis, bound in enumerate(bounds):
        contracted = np.tensordot(interpolation_matrix(bound), values, axes=([1], [axis]))
        values = np.moveaxis(contracted, 0, axis)

    coefficients: Dict[Multidegree, int] = {}
    for index in product(*(range(s) for s in values.shape)):
        value = values[index]
        if value == 0:
            continue
        value = Fraction(value)
        if value.denominator != 1:
            raise NonIntegralSeriesError(f"{family.family} marker coefficient at {index} is {value}")
        degrees, n = index[:-1], index[-1]
        coefficients[(n,) + tuple(degrees)] = int(value)
    return coefficients


def exhaustive_coefficients(family: CoreGF, order: int) -> Dict[Multidegree, int]:
    """
    The same table as ``marker_coefficients`` counted directly from the independent sets of the
    family's core graph for every grid size n <= order.
    """
    counts: Counter = Counter()
    for n in range(order + 1):
        graph = build_core(family.kind, n)
        for labelled in labelled_independent_sets(graph, family.labelling):
            counts[(n,) + family.multidegree(labelled)] += 1
    return dict(counts)


def size_distribution(family: CoreGF, order: int) -> Dict[int, Dict[int, int]]:
    """
    For one-slot families: ``table[n][k]`` is the number of size-k independent sets of the core of B_n.
    """
    table: Dict[int, Dict[int, int]] = {n: {} for n in range(order + 1)}
    for (n, k), count in marker_coefficients(family, order).items():
        table[n][k] = count
    return table
