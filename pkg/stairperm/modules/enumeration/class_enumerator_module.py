import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import pandas as pd
from tqdm import tqdm

from stairperm.common.constants import THEOREMS
from stairperm.common.exceptions import ResourceLimitError
from stairperm.common.models.permutation import Basis
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace, TheoremMatch, WilfReport
from stairperm.common.services.settings import Settings
from stairperm.core.oracle import count_class
from stairperm.modules.base_module import BaseModule, BasisLike
from stairperm.modules.enumeration.strategies import (Base123Strategy, Base132Strategy, DownCoreStrategy, MeshCondition,
                                                      RdCdPiStrategy, RdCuStrategy, Rd2134Strategy, Ru2143Strategy,
                                                      RuCuPiStrategy, TheoremStrategy, TrivialStrategy, UDRCStrategy,
                                                      UpCoreStrategy)


class _OracleRequired(Exception):
    """Raised while searching for a route that avoids the oracle; carries the uncovered basis."""


@dataclass
class ClassGF:
    """The generating function of a class, truncated at ``series.order``, with its provenance."""
    basis: Basis
    series: TruncatedSeries
    trace: GFTrace

    def coefficients(self, positive: bool = False) -> List[int]:
        values = self.series.to_integers()
        return values[1:] if positive else values


class ClassEnumerator(BaseModule):
    """
    Detect which enumeration theorem covers a basis and compute the class generating function.

    Matches with fewer lifted parameters are tried first, then ``THEOREMS.ORDER``; a route whose
    auxiliary classes all resolve without the oracle wins over one that needs it. Auxiliary classes
    are resolved recursively and memoized by canonical basis. A class no theorem covers is counted
    by the brute-force oracle, up to the configured ceiling.

    :param settings: The settings to use
    :type settings: Optional[Settings]
    :param mesh_condition: Side condition on P for the 2134 and 2143 theorems
    :type mesh_condition: Optional[MeshCondition]
    """

    def __init__(self, settings: Optional[Settings] = None, mesh_condition: Optional[MeshCondition] = None) -> None:
        super().__init__(settings)

        self.mesh_condition: MeshCondition = mesh_condition or MeshCondition()
        self.strategy_map: Dict[str, TheoremStrategy] = {
            THEOREMS.TRIVIAL: TrivialStrategy(),
            THEOREMS.BASE_123: Base123Strategy(),
            THEOREMS.BASE_132: Base132Strategy(),
            THEOREMS.GF_UPCORE: UpCoreStrategy(),
            THEOREMS.GF_DOWNCORE: DownCoreStrategy(),
            THEOREMS.GF_RDCDRUCU: UDRCStrategy(),
            THEOREMS.GF_RUCUPI: RuCuPiStrategy(),
            THEOREMS.GF_RDCDPI: RdCdPiStrategy(),
            THEOREMS.GF_RDCU: RdCuStrategy(),
            THEOREMS.RD_2134: Rd2134Strategy(self.mesh_condition),
            THEOREMS.RU_2143: Ru2143Strategy(self.mesh_condition),
        }

        self._memo: Dict[Basis, Tuple[TruncatedSeries, GFTrace]] = {}
        self._oracle_bound: Set[Basis] = set()
        self._lock = threading.Lock()

    def detect(self, basis: BasisLike) -> List[TheoremMatch]:
        """
        Every theorem that applies to ``basis`` under some symmetry, in priority order.

        :param basis: The basis
        :type basis: Union[Basis, str, Iterable]
        :return: The matches; empty when no theorem applies
        :rtype: List[TheoremMatch]
        """
        basis = self._parse_basis(basis)
        matches: List[TheoremMatch] = []
        for theorem in THEOREMS.ORDER:
            matches.extend(self.strategy_map[theorem].match(basis))
        return matches

    def class_gf(self, basis: BasisLike, order: Optional[int] = None) -> ClassGF:
        """
        The generating function of Av(basis) to order N, c_0 = 1 included.

        :param basis: The basis
        :type basis: Union[Basis, str, Iterable]
        :param order: Truncation order; defaults to the configured truncation order
        :type order: Optional[int]
        :return: The series and its trace
        :rtype: ClassGF
        :raises ResourceLimitError: if a class without theorem needs the oracle beyond its ceiling
        """
        basis = self._parse_basis(basis)
        order = self.settings.truncation_order if order is None else order
        series, trace = self._resolve(basis, order)
        return ClassGF(basis, series, trace)

    def _ranked_matches(self, basis: Basis) -> List[TheoremMatch]:
        """Matches with the fewest lifted parameters first, ``THEOREMS.ORDER`` among equals."""
        return sorted(self.detect(basis), key=lambda m: len(m.parameters))

    def _resolve(self, basis: Basis, order: int, allow_oracle: bool = True) -> Tuple[TruncatedSeries, GFTrace]:
        canonical = basis.canonical()
        with self._lock:
            cached = self._memo.get(canonical)
            oracle_bound = canonical in self._oracle_bound
        if cached is not None and cached[0].order >= order:
            if not allow_oracle and cached[1].uses_oracle():
                raise _OracleRequired(str(canonical))
            return cached[0].truncate(order), cached[1]
        if oracle_bound and not allow_oracle:
            raise _OracleRequired(str(canonical))

        matches = self._ranked_matches(canonical)
        for match in ([] if oracle_bound else matches):
            try:
                return self._apply(canonical, match, order, allow_oracle=False)
            except _OracleRequired as error:
                self.logger.debug(f"Av({canonical}) by {match} needs the oracle for Av({error}); trying the next route")

        with self._lock:
            self._oracle_bound.add(canonical)
        if not allow_oracle:
            raise _OracleRequired(str(canonical))
        if matches:
            return self._apply(canonical, matches[0], order, allow_oracle=True)

        series = self._oracle_series(canonical, order)
        return self._remember(canonical, series, GFTrace(THEOREMS.ORACLE, "identity", str(canonical), oracle_backed=True))

    def _apply(self, canonical: Basis, match: TheoremMatch, order: int,
               allow_oracle: bool) -> Tuple[TruncatedSeries, GFTrace]:
        self.logger.debug(f"Av({canonical}) by {match}")
        series, children = self.strategy_map[match.theorem].generating_function(
            match, order, lambda basis, n: self._resolve(basis, n, allow_oracle))
        trace = GFTrace(match.theorem, match.symmetry, str(canonical), [str(p) for p in match.parameters], children)
        return self._remember(canonical, series.truncate(order), trace)

    def _remember(self, canonical: Basis, series: TruncatedSeries, trace: GFTrace) -> Tuple[TruncatedSeries, GFTrace]:
        with self._lock:
            previous = self._memo.get(canonical)
            if previous is None or previous[0].order < series.order:
                self._memo[canonical] = (series, trace)
        return series, trace

    def _oracle_series(self, basis: Basis, order: int) -> TruncatedSeries:
        if order > self.settings.oracle_ceiling:
            raise ResourceLimitError(f"No theorem covers Av({basis}) and the oracle stops at size "
                                     f"{self.settings.oracle_ceiling}, below the requested order {order}; "
                                     f"supply its generating function or lower the order", subject=str(basis))
        self.logger.warning(f"No theorem covers Av({basis}); counting it by brute force up to size {order}")
        return TruncatedSeries([count_class(basis, n) for n in range(order + 1)], order)

    def wilf_check(self, first: BasisLike, second: BasisLike, order: Optional[int] = None) -> WilfReport:
        """
        Compare the counting sequences of two classes up to x^N.

        :param first: The first basis
        :type first: Union[Basis, str, Iterable]
        :param second: The second basis
        :type second: Union[Basis, str, Iterable]
        :param order: Truncation order
        :type order: Optional[int]
        :return: Equality report or first differing coefficient
        :rtype: WilfReport
        """
        order = self.settings.truncation_order if order is None else order
        left = self.class_gf(first, order).coefficients()
        right = self.class_gf(second, order).coefficients()
        difference = next((k for k in range(order + 1) if left[k] != right[k]), None)
        report = WilfReport(left, right, order, difference)
        self.logger.info(f"Av({first}) vs Av({second}): {report}")
        return report

    def verify(self, basis: BasisLike, max_size: int) -> pd.DataFrame:
        """
        Compare the class generating function with brute-force counts for every size up to ``max_size``.

        :param basis: The basis
        :type basis: Union[Basis, str, Iterable]
        :param max_size: The largest size checked
        :type max_size: int
        :return: One row per size: ``n``, ``gf``, ``oracle``, ``match``
        :rtype: pd.DataFrame
        """
        basis = self._parse_basis(basis)
        if max_size > self.settings.oracle_ceiling:
            raise ResourceLimitError(f"Cannot verify Av({basis}) beyond the oracle ceiling {self.settings.oracle_ceiling}",
                                     subject=str(basis))
        gf = self.class_gf(basis, max_size)
        coefficients = gf.coefficients()
        rows = []
        for n in tqdm(range(max_size + 1), desc=f"verify Av({basis})", disable=not self.settings.verbose, leave=False):
            oracle = count_class(basis, n)
            rows.append({"n": n, "gf": coefficients[n], "oracle": oracle, "match": coefficients[n] == oracle})

        report = pd.DataFrame(rows, columns=["n", "gf", "oracle", "match"])
        report.attrs["theorem"] = gf.trace.theorem
        if not report["match"].all():
            self.logger.error(f"Av({basis}) disagrees with the oracle at n = {int(report.loc[~report['match'], 'n'].iloc[0])}")
        return report
