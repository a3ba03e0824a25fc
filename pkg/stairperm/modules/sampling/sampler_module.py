from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from stairperm.common.constants import PATTERNS, THEOREMS
from stairperm.common.exceptions import InvalidInputError, ResourceLimitError, StairpermError, UnsupportedTheoremError
from stairperm.common.models.encoding import Cell, StaircaseEncoding
from stairperm.common.models.permutation import SYMMETRY_INVERSES, Basis, Permutation
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import TheoremMatch
from stairperm.common.services.settings import Settings
from stairperm.core.core_graphs import build_core, independent_sets
from stairperm.core.oracle import enumerate_class
from stairperm.core.staircase import dperm, uperm
from stairperm.gf.factory import GFFactory
from stairperm.gf.markers import marker_coefficients
from stairperm.modules.base_module import BaseModule, BasisLike
from stairperm.modules.enumeration.class_enumerator_module import ClassEnumerator


# Theorems whose classes are sampled structurally, with the core and realization they use
SAMPLABLE = {
    THEOREMS.BASE_123: ("U", uperm),
    THEOREMS.BASE_132: ("D", dperm),
    THEOREMS.GF_UPCORE: ("U", uperm),
    THEOREMS.GF_DOWNCORE: ("D", dperm),
}

# Independent-set distributions are checked against exhaustive counts up to this grid size
EXHAUSTIVE_CHECK_GRID = 5

Seed = Union[int, np.random.Generator, None]


def make_rng(seed: Seed) -> np.random.Generator:
    """A PCG64 generator seeded through a SeedSequence; a Generator passes through unchanged."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrarily large ``bound``."""
    if bound <= 0:
        raise InvalidInputError(f"Cannot draw below {bound}")
    if bound < 1 << 62:
        return int(rng.integers(bound))
    bits = bound.bit_length()
    chunks = (bits + 31) // 32
    while True:
        value = 0
        for _ in range(chunks):
            value = (value << 32) | int(rng.integers(1 << 32))
        value >>= 32 * chunks - bits
        if value < bound:
            return value


def _choose(rng: np.random.Generator, options: Sequence[Tuple[object, int]]) -> object:
    """Pick an option with probability proportional to its integer weight."""
    target = _randbelow(rng, sum(weight for _, weight in options))
    for option, weight in options:
        if target < weight:
            return option
        target -= weight
    raise StairpermError("Weighted choice ran past its total")


@dataclass
class CountTable:
    """
    Exact counts driving the sampler for one class, up to size ``order``.

    :param basis: The class as requested
    :param match: The theorem match; the class actually sampled is ``match.image``
    :param core: ``U`` or ``D``
    :param counts: c_0..c_N of the class
    :param independent_sets: ``independent_sets[n][k]`` is the number of size-k independent sets of the core of B_n
    :param weight_basis: Basis of the weight class in the image orientation; None when it is the class itself
    :param weight_counts: Number of weights of each size (index 0 unused)
    :param compositions: ``compositions[k][r]`` sums the products of weight counts over compositions of r into k parts
    :param weight_table: Tables of the weight class when it is structurally samplable itself
    """
    basis: Basis
    match: TheoremMatch
    core: str
    order: int
    counts: List[int]
    independent_sets: Dict[int, Dict[int, int]]
    weight_basis: Optional[Basis]
    weight_counts: List[int]
    compositions: List[List[int]] = field(default_factory=list)
    weight_table: Optional["CountTable"] = None

    def decomposition_total(self, n: int) -> int:
        """Σ over minima m and set size k of m[m][k] times the weighted compositions of n - m."""
        if n == 0:
            return 1
        return sum(count * self.compositions[k][n - m]
                   for m in range(1, n + 1)
                   for k, count in self.independent_sets.get(m, {}).items()
                   if k <= n - m)


class UniformSampler(BaseModule):
    """
    Uniform random permutations of the classes counted by the up-core and down-core theorems.

    A size-n permutation is drawn by choosing the number of minima and the number of active
    cells proportionally to exact counts, then a uniform independent set of that size, then
    a composition of the remaining size weighted by weight-class counts, then each weight
    recursively; the staircase encoding is realized and mapped back through the symmetry.
    """

    def __init__(self, settings: Optional[Settings] = None, enumerator: Optional[ClassEnumerator] = None) -> None:
        super().__init__(settings)
        self.enumerator = enumerator or ClassEnumerator(self.settings)
        self._tables: Dict[Basis, CountTable] = {}
        self._sets: Dict[Tuple[str, int], Dict[int, List[Tuple[Cell, ...]]]] = {}

    def _samplable_match(self, basis: Basis) -> Optional[TheoremMatch]:
        for match in self.enumerator.detect(basis):
            if match.theorem in SAMPLABLE:
                return match
        return None

    def build_tables(self, basis: BasisLike, order: int) -> CountTable:
        """
        Build (or reuse) the count tables of Av(basis) up to size ``order``.

        :param basis: A basis covered by the up-core or down-core theorem, or 123/132, under some symmetry
        :type basis: Union[Basis, str, Iterable]
        :param order: Largest size to sample
        :type order: int
        :return: The tables
        :rtype: CountTable
        :raises UnsupportedTheoremError: if the class is not structurally samplable
        """
        basis = self._parse_basis(basis)
        cached = self._tables.get(basis)
        if cached is not None and cached.order >= order:
            return cached

        match = self._samplable_match(basis)
        if match is None:
            raise UnsupportedTheoremError(f"Av({basis}) is not covered by an up-core or down-core theorem, cannot sample it")
        core, _ = SAMPLABLE[match.theorem]
        counts = self.enumerator.class_gf(match.image, order).coefficients()

        if match.theorem == THEOREMS.BASE_123:
            weight_basis: Optional[Basis] = Basis(["12"])
        elif match.theorem == THEOREMS.BASE_132:
            weight_basis = Basis(["21"])
        elif match.parameters:
            template = (PATTERNS.R_U, PATTERNS.C_U) if match.theorem == THEOREMS.GF_UPCORE else (PATTERNS.R_D, PATTERNS.C_D)
            weight_basis = Basis(template + match.parameters)
        else:
            weight_basis = None
        weights = self.enumerator.class_gf(weight_basis, order).series if weight_basis is not None \
            else TruncatedSeries(counts, order)
        nonempty = weights - 1

        compositions = []
        power = TruncatedSeries.one(order)
        for _ in range(order + 1):
            compositions.append(power.to_integers())
            power = power * nonempty

        table = CountTable(basis, match, core, order, counts, self._set_distribution(core, order),
                           weight_basis, [0] + nonempty.to_integers()[1:], compositions)
        for n in range(order + 1):
            if table.decomposition_total(n) != counts[n]:
                raise StairpermError(f"Decomposition of Av({basis}) gives {table.decomposition_total(n)} "
                                     f"members of size {n}, the class has {counts[n]}")
        if weight_basis is not None and self._samplable_match(weight_basis) is not None:
            table.weight_table = self.build_tables(weight_basis, order)
        self.logger.info(f"Built sampling tables for Av({basis}) via {match} up to size {order}")
        self._tables[basis] = table
        return table

    def _set_distribution(self, core: str, order: int) -> Dict[int, Dict[int, int]]:
        table: Dict[int, Dict[int, int]] = {n: {} for n in range(order + 1)}
        for (n, k), count in marker_coefficients(GFFactory.create("U"), order).items():
            table[n][k] = count
        for n in range(min(order, EXHAUSTIVE_CHECK_GRID) + 1):
            exhaustive = Counter(len(members) for members in independent_sets(build_core(core, n)))
            if dict(exhaustive) != table[n]:
                raise StairpermError(f"Independent sets of {core}(B_{n}) by size are {dict(exhaustive)}, "
                                     f"the generating function gives {table[n]}")
        return table

    def _sets_of_size(self, core: str, m: int, k: int) -> List[Tuple[Cell, ...]]:
        if m > self.settings.sampler_grid_ceiling:
            raise ResourceLimitError(f"Independent sets of {core}(B_{m}) exceed the sampler grid ceiling "
                                     f"{self.settings.sampler_grid_ceiling}", subject=f"{core}(B_{m})")
        by_size = self._sets.get((core, m))
        if by_size is None:
            by_size = {}
            for members in independent_sets(build_core(core, m)):
                by_size.setdefault(len(members), []).append(members)
            self._sets[(core, m)] = by_size
        return by_size.get(k, [])

    def draw(self, table: CountTable, n: int, rng: np.random.Generator) -> Permutation:
        """
        One uniform member of Av(table.basis) of size ``n``.

        :raises InvalidInputError: if ``n`` lies beyond the tables
        """
        if n < 0 or n > table.order:
            raise InvalidInputError(f"Size {n} lies beyond the sampling tables of Av({table.basis}) (built to {table.order})")
        if n == 0:
            return Permutation()

        options = [((m, k), count * table.compositions[k][n - m])
                   for m in range(1, n + 1)
                   for k, count in sorted(table.independent_sets[m].items())
                   if k <= n - m and table.compositions[k][n - m]]
        m, k = _choose(rng, options)

        candidates = self._sets_of_size(table.core, m, k)
        members = candidates[_randbelow(rng, len(candidates))]

        sizes = []
        remaining = n - m
        for left in range(k, 0, -1):
            parts = [(a, table.weight_counts[a] * table.compositions[left - 1][remaining - a])
                     for a in range(1, remaining + 1)]
            size = _choose(rng, [(a, w) for a, w in parts if w])
            sizes.append(size)
            remaining -= size

        fill = {cell: self._draw_weight(table, size, rng) for cell, size in zip(members, sizes)}
        _, realize = SAMPLABLE[table.match.theorem]
        image = realize(StaircaseEncoding(m, fill))
        return image.apply_symmetry(SYMMETRY_INVERSES[table.match.symmetry])

    def _draw_weight(self, table: CountTable, size: int, rng: np.random.Generator) -> Permutation:
        if table.weight_basis is None:
            return self.draw(table, size, rng)
        if table.weight_table is not None:
            return self.draw(table.weight_table, size, rng)
        if size > self.settings.oracle_ceiling:
            raise ResourceLimitError(f"Weights of Av({table.weight_basis}) beyond size {self.settings.oracle_ceiling} "
                                     f"need the oracle", subject=str(table.weight_basis))
        members = enumerate_class(table.weight_basis, size)
        return members[_randbelow(rng, len(members))]

    def sample(self, basis: BasisLike, n: int, seed: Seed = None) -> Permutation:
        """
        A uniform member of Av_n(basis), determined by ``seed``.

        :param basis: The basis
        :type basis: Union[Basis, str, Iterable]
        :param n: The size
        :type n: int
        :param seed: Integer seed or an existing generator
        :type seed: Union[int, np.random.Generator, None]
        :return: The sampled permutation
        :rtype: Permutation
        """
        return self.draw(self.build_tables(basis, n), n, make_rng(seed))

    def samples(self, basis: BasisLike, n: int, count: int, seed: Seed = None) -> List[Permutation]:
        """``count`` independent uniform members of Av_n(basis) from one seeded stream."""
        table = self.build_tables(basis, n)
        rng = make_rng(seed)
        return [self.draw(table, n, rng) for _ in range(count)]
