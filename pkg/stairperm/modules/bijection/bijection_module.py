import json
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Iterator, Optional, Tuple

import pandas as pd
from tqdm import tqdm

from stairperm.common.exceptions import InvalidEncodingError, ResourceLimitError, StairpermError
from stairperm.common.models.encoding import Cell, StaircaseEncoding
from stairperm.common.models.graph import CoreGraph, LabelledIndependentSet
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.common.services.settings import Settings
from stairperm.core.core_graphs import build_core, label, labelled_independent_sets
from stairperm.core.oracle import enumerate_class
from stairperm.core.staircase import assemble, cell_points, column_key, grid_realize, row_key, staircase_encode
from stairperm.modules.base_module import BaseModule, BasisLike
from stairperm.modules.bijection.theorems import UNLABELLED, BijectionTheorem, WeightClass, get_theorem


SPLIT_LABEL = "z"


@dataclass
class WeightedSet:
    """
    A labelled independent set whose members carry nonempty permutations.

    ``total`` is the size of the permutation it realizes: the grid size plus the weight sizes,
    minus one for every split weight (its maximum is dropped).
    """
    labelled: LabelledIndependentSet
    weights: Dict[Cell, Permutation]
    total: int

    @property
    def graph(self) -> CoreGraph:
        return self.labelled.graph

    @property
    def n(self) -> int:
        return self.labelled.graph.n

    def __str__(self) -> str:
        cells = "; ".join(f"{cell}{self.labelled.labels.get(cell, '')}={self.weights[cell]}" for cell in self.labelled.members)
        return f"{self.n}; {cells}" if cells else str(self.n)


@dataclass
class BijectionReport:
    """Per (n, total) comparison of both sides of a structural theorem."""
    theorem: str
    basis: str
    table: pd.DataFrame
    mismatches: Dict[Tuple[int, int], str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.table["passed"].all()) if len(self.table) else True

    @property
    def first_mismatch(self) -> Optional[str]:
        if self.passed:
            return None
        row = self.table.loc[~self.table["passed"]].iloc[0]
        return self.mismatches.get((int(row["n"]), int(row["total"])))

    def to_dict(self) -> Dict:
        return {
            "theorem": self.theorem,
            "basis": self.basis,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "rows": self.table.to_dict(orient="records"),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), default=lambda value: value.item() if hasattr(value, "item") else str(value))


class BijectionLab(BaseModule):
    """
    Materialize both sides of the structural theorems at small sizes and check the bijections.

    One side is the set of weighted labelled independent sets of the theorem's core graph, the
    other the permutations of Av(basis) with a given number of left-to-right minima.
    """

    def __init__(self, settings: Optional[Settings] = None) -> None:
        super().__init__(settings)

    def _check_total(self, total: int) -> None:
        if total > self.settings.bijection_ceiling:
            raise ResourceLimitError(f"Total size {total} exceeds the bijection ceiling {self.settings.bijection_ceiling}",
                                     subject=str(total))

    def weighted_sets(self, theorem: str, basis: BasisLike, n: int, total: int) -> Iterator[WeightedSet]:
        """
        Every weighted labelled independent set of the theorem's graph on B_n realizing size ``total``.

        :param theorem: Theorem identifier or alias
        :type theorem: str
        :param basis: The basis T ∪ 1⊕P the weight classes derive from
        :type basis: Union[Basis, str, Iterable]
        :param n: Grid size (number of minima)
        :type n: int
        :param total: Size of the realized permutations
        :type total: int
        :return: Iterator yielding each set exactly once
        :rtype: Iterator[WeightedSet]
        """
        definition = get_theorem(theorem)
        classes = definition.weight_classes(self._parse_basis(basis))
        self._check_total(total)
        if n < 0 or total < n:
            return iter(())
        return self._weighted_sets(definition, classes, n, total)

    def _weighted_sets(self, definition: BijectionTheorem, classes: Dict[str, WeightClass], n: int, total: int) -> Iterator[WeightedSet]:
        graph = build_core(definition.family, n)
        free = total - n
        for labelled in labelled_independent_sets(graph, definition.labelling, max_size=free):
            members = labelled.members
            if not members:
                if free == 0:
                    yield WeightedSet(labelled, {}, total)
                continue
            offsets = [1 if definition.split and labelled.labels.get(c) == SPLIT_LABEL else 0 for c in members]
            weight_classes = [classes[labelled.labels.get(c, UNLABELLED)] for c in members]
            for sizes in _compositions(free, len(members)):
                choices = [weight_class.members(size + offset)
                           for weight_class, size, offset in zip(weight_classes, sizes, offsets)]
                for weights in product(*choices):
                    yield WeightedSet(labelled, dict(zip(members, weights)), total)

    def realize(self, theorem: str, weighted: WeightedSet) -> Permutation:
        """
        The permutation a weighted set maps to.

        Unsplit theorems realize the staircase encoding with the theorem's interleaving. Split
        theorems place each z-labelled diagonal weight αmβ as α left of and β right of its
        column's off-diagonal points, dropping m.

        :param theorem: Theorem identifier or alias
        :type theorem: str
        :param weighted: The weighted set
        :type weighted: WeightedSet
        :return: The realized permutation
        :rtype: Permutation
        :raises InvalidEncodingError: if a split weight has fewer than two points
        """
        definition = get_theorem(theorem)
        n = weighted.n
        if not definition.split:
            return grid_realize(StaircaseEncoding(n, weighted.weights), definition.rows, definition.cols)

        points = []
        for cell, weight in weighted.weights.items():
            value_key = (n - cell.i, 1, row_key(cell.j, definition.rows))
            if weighted.labelled.labels.get(cell) == SPLIT_LABEL:
                if len(weight) < 2:
                    raise InvalidEncodingError(f"Split weight {weight} of cell {cell} needs at least two points")
                peak = weight.index(len(weight))
                for t, value in enumerate(weight):
                    if t != peak:
                        side = 0 if t < peak else 2
                        points.append(((cell.j, 1, side, 0, t), value_key + (value,)))
            else:
                for t, value in enumerate(weight):
                    points.append(((cell.j, 1, 1, column_key(cell.i, definition.cols), t), value_key + (value,)))
        return assemble(n, points)

    def encode(self, theorem: str, sigma: Permutation) -> WeightedSet:
        """
        Invert ``realize``: recover members, labels and weights from a permutation.

        :param theorem: Theorem identifier or alias
        :type theorem: str
        :param sigma: The permutation
        :type sigma: Permutation
        :return: The weighted set
        :rtype: WeightedSet
        :raises InvalidEncodingError: if the active cells are not independent or a split weight cannot be rebuilt
        """
        definition = get_theorem(theorem)
        encoding = staircase_encode(sigma)
        n = encoding.n
        graph = build_core(definition.family, n)
        members = tuple(encoding.active_cells)
        if not graph.is_independent(members):
            raise InvalidEncodingError(f"Active cells of {sigma} are not independent in {definition.family}(B_{n})")
        labels = label(members, definition.labelling, graph) if definition.labelling else {}
        weights = dict(encoding.fill)

        if definition.split:
            located = cell_points(sigma).cells
            for cell in members:
                if labels.get(cell) != SPLIT_LABEL:
                    continue
                column = [position for other in members if other.j == cell.j and other != cell
                          for position, _ in located[other]]
                left, right = min(column), max(column)
                own = located[cell]
                if any(left < position < right for position, _ in own):
                    raise InvalidEncodingError(f"Cell {cell} of {sigma} has points between its column's off-diagonal points")
                alpha = [value for position, value in own if position < left]
                beta = [value for position, value in own if position > right]
                weights[cell] = Permutation.standardize(alpha + [len(sigma) + 1] + beta)

        return WeightedSet(LabelledIndependentSet(graph, members, labels), weights, len(sigma))

    def verify_bijection(self, theorem: str, basis: BasisLike, max_total: int) -> BijectionReport:
        """
        Check for every n <= total <= ``max_total`` that ``realize`` maps the weighted sets
        injectively onto the members of Av_total(basis) with n left-to-right minima, and that
        ``encode`` inverts it there.

        :param theorem: Theorem identifier or alias
        :type theorem: str
        :param basis: The basis
        :type basis: Union[Basis, str, Iterable]
        :param max_total: Largest size checked
        :type max_total: int
        :return: The report; failures are report content
        :rtype: BijectionReport
        """
        definition = get_theorem(theorem)
        basis = self._parse_basis(basis)
        classes = definition.weight_classes(basis)
        self._check_total(max_total)

        rows = []
        mismatches: Dict[Tuple[int, int], str] = {}
        pairs = [(n, total) for total in range(max_total + 1) for n in range(0 if total == 0 else 1, total + 1)]
        for n, total in tqdm(pairs, desc=f"{definition.name} on Av({basis})", disable=not self.settings.verbose, leave=False):
            row, mismatch = self._verify_pair(definition, basis, classes, n, total)
            rows.append(row)
            if mismatch:
                mismatches[(n, total)] = mismatch
                self.logger.warning(f"{definition.name} fails at n={n}, total={total}: {mismatch}")

        table = pd.DataFrame(rows, columns=["n", "total", "weighted_sets", "class_members", "injective",
                                            "onto", "round_trip", "passed"])
        report = BijectionReport(definition.name, str(basis), table, mismatches)
        self.logger.info(f"{definition.name} on Av({basis}) up to size {max_total}: {'pass' if report.passed else 'fail'}")
        return report

    def _verify_pair(self, definition: BijectionTheorem, basis: Basis, classes: Dict[str, WeightClass],
                     n: int, total: int) -> Tuple[Dict, Optional[str]]:
        members = {sigma for sigma in enumerate_class(basis, total) if len(sigma.left_to_right_minima()) == n}
        images: Dict[Permutation, WeightedSet] = {}
        injective, mismatch = True, None
        count = 0
        for weighted in self._weighted_sets(definition, classes, n, total):
            count += 1
            image = self.realize(definition.name, weighted)
            if image in images:
                injective = False
                mismatch = mismatch or f"{images[image]} and {weighted} both realize {image}"
            images[image] = weighted

        outside = sorted(set(images) - members)
        missed = sorted(members - set(images))
        if outside:
            mismatch = mismatch or f"{images[outside[0]]} realizes {outside[0]}, outside the class"
        elif missed:
            mismatch = mismatch or f"{missed[0]} is not realized"

        round_trip = True
        for sigma in sorted(members):
            try:
                back = self.realize(definition.name, self.encode(definition.name, sigma))
            except StairpermError as error:
                back, detail = None, str(error)
            else:
                detail = f"encodes and realizes back to {back}"
            if back != sigma:
                round_trip = False
                mismatch = mismatch or f"{sigma}: {detail}"
                break

        onto = not outside and not missed
        row = {"n": n, "total": total, "weighted_sets": count, "class_members": len(members),
               "injective": injective, "onto": onto, "round_trip": round_trip,
               "passed": injective and onto and round_trip}
        return row, mismatch


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive parts, in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))
