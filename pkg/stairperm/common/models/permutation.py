"""
Permutations in one-line notation and pattern bases.

Classes:
    - Permutation: an immutable permutation of 1..n (n may be 0)
    - Basis: an antichain of patterns defining a permutation class

Functions:
    - occurs: backtracking pattern-occurrence search, optionally with one pinned point
"""
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from stairperm.common.exceptions import InvalidInputError


SUM = "sum"
SKEW = "skew"


@lru_cache(maxsize=None)
def _neighbour_constraints(pattern: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    For each pattern index j, the earlier index holding the largest smaller value and the
    earlier index holding the smallest larger value (-1 when absent).
    """
    below, above = [], []
    for j, value in enumerate(pattern):
        lo, hi = -1, -1
        for i in range(j):
            if pattern[i] < value and (lo < 0 or pattern[i] > pattern[lo]):
                lo = i
            if pattern[i] > value and (hi < 0 or pattern[i] < pattern[hi]):
                hi = i
        below.append(lo)
        above.append(hi)
    return tuple(below), tuple(above)


def occurs(values: Sequence[int], pattern: Sequence[int], pinned: Optional[Tuple[int, int]] = None) -> bool:
    """
    Decide whether ``pattern`` occurs in ``values``.

    Positions are chosen left to right; each candidate is checked against the two already
    placed neighbours in value order, so partial occurrences are pruned immediately.

    :param values: Sequence of distinct integers
    :type values: Sequence[int]
    :param pattern: The pattern, in one-line notation
    :type pattern: Sequence[int]
    :param pinned: Optional ``(pattern_index, position)`` pair forcing one pattern entry onto one position (0-based)
    :type pinned: Optional[Tuple[int, int]]
    :return: True if an occurrence exists
    :rtype: bool
    """
    k, n = len(pattern), len(values)
    if k == 0:
        return True
    if k > n:
        return False

    below, above = _neighbour_constraints(tuple(pattern))
    pin_index, pin_position = pinned if pinned is not None else (-1, -1)
    chosen = [0] * k

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True

        if j == pin_index:
            candidates: Iterable[int] = (pin_position,) if pin_position >= start else ()
        else:
            stop = n - (k - j) + 1
            if j < pin_index:
                stop = min(stop, pin_position - (pin_index - j) + 1)
            candidates = range(start, stop)

        low = values[chosen[below[j]]] if below[j] >= 0 else float("-inf")
        high = values[chosen[above[j]]] if above[j] >= 0 else float("inf")
        for position in candidates:
            if low < values[position] < high:
                chosen[j] = position
                if extend(j + 1, position + 1):
                    return True
        return False

    return extend(0, 0)


class Permutation(tuple):
    """
    An immutable permutation of ``1..n`` in one-line notation.

    The empty permutation (epsilon) is ``Permutation()``. Comparison is lexicographic on the
    value sequence, so sorting a list of same-size permutations gives lexicographic order.
    """

    def __new__(cls, values: Iterable[int] = ()) -> "Permutation":
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInputError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        """Wrap values already known to form a permutation."""
        return tuple.__new__(cls, values)

    @classmethod
    def standardize(cls, word: Sequence[int]) -> "Permutation":
        """
        Replace the i-th smallest entry of ``word`` by i.

        :param word: Sequence of pairwise distinct integers
        :type word: Sequence[int]
        :return: The order-isomorphic permutation
        :rtype: Permutation
        """
        if len(set(word)) != len(word):
            raise InvalidInputError(f"Cannot standardize {tuple(word)}: entries are not distinct")
        rank = {value: i + 1 for i, value in enumerate(sorted(word))}
        return cls._trusted(rank[value] for value in word)

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """
        Parse the permutation text format: a digit string when every value is at most 9,
        otherwise values joined by ``.``. The empty string and ``ε`` denote the empty permutation.
        """
        text = text.strip()
        if text in ("", "ε", "e"):
            return cls()
        try:
            if "." in text:
                values = [int(part) for part in text.split(".")]
            else:
                values = [int(char) for char in text]
        except ValueError:
            raise InvalidInputError(f"Malformed permutation: {text!r}")
        return cls(values)

    def __str__(self) -> str:
        if len(self) == 0:
            return "ε"
        if len(self) <= 9:
            return "".join(str(v) for v in self)
        return ".".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Permutation({str(self)})"

    def contains(self, pattern: Sequence[int]) -> bool:
        """True iff some subsequence standardizes to ``pattern``."""
        return occurs(self, pattern)

    def avoids(self, patterns: Iterable[Sequence[int]]) -> bool:
        """True iff no pattern of ``patterns`` occurs."""
        return not any(occurs(self, pattern) for pattern in patterns)

    def left_to_right_minima(self) -> Tuple[int, ...]:
        """
        Positions (1-based) of the entries smaller than everything before them.

        :return: Increasing tuple of positions; the values there strictly decrease
        :rtype: Tuple[int, ...]
        """
        positions = []
        current = float("inf")
        for position, value in enumerate(self, start=1):
            if value < current:
                positions.append(position)
                current = value
        return tuple(positions)

    def direct_sum(self, other: Sequence[int]) -> "Permutation":
        """alpha ⊕ beta: beta shifted above and to the right of alpha."""
        n = len(self)
        return Permutation._trusted(tuple(self) + tuple(v + n for v in other))

    def skew_sum(self, other: Sequence[int]) -> "Permutation":
        """alpha ⊖ beta: alpha shifted above and to the left of beta."""
        m = len(other)
        return Permutation._trusted(tuple(v + m for v in self) + tuple(other))

    def decompose(self, kind: str = SUM) -> List["Permutation"]:
        """
        Split into sum (or skew) indecomposable components.

        :param kind: ``"sum"`` or ``"skew"``
        :type kind: str
        :return: The components, left to right
        :rtype: List[Permutation]
        """
        if len(self) == 0:
            raise InvalidInputError("Cannot decompose the empty permutation")
        if kind not in (SUM, SKEW):
            raise InvalidInputError(f"Unknown decomposition kind: {kind}")

        n = len(self)
        components, start = [], 0
        extreme = 0 if kind == SUM else n + 1
        for k in range(1, n + 1):
            value = self[k - 1]
            if kind == SUM:
                extreme = max(extreme, value)
                cut = extreme == k
            else:
                extreme = min(extreme, value)
                cut = extreme == n - k + 1
            if cut:
                components.append(Permutation.standardize(self[start:k]))
                start = k
        return components

    def is_sum_indecomposable(self) -> bool:
        return len(self) > 0 and len(self.decompose(SUM)) == 1

    def is_skew_indecomposable(self) -> bool:
        return len(self) > 0 and len(self.decompose(SKEW)) == 1

    def bstrip(self) -> "Permutation":
        """Remove a trailing maximum: alpha ⊕ 1 becomes alpha, anything else is returned unchanged."""
        if len(self) > 0 and self[-1] == len(self):
            return Permutation._trusted(self[:-1])
        return self

    def delete(self, position: int) -> "Permutation":
        """Standardized permutation after deleting the entry at ``position`` (0-based)."""
        return Permutation.standardize(self[:position] + self[position + 1:])

    def reverse(self) -> "Permutation":
        return Permutation._trusted(self[::-1])

    def complement(self) -> "Permutation":
        n = len(self)
        return Permutation._trusted(n + 1 - v for v in self)

    def inverse(self) -> "Permutation":
        result = [0] * len(self)
        for position, value in enumerate(self, start=1):
            result[value - 1] = position
        return Permutation._trusted(result)

    def apply_symmetry(self, name: str) -> "Permutation":
        """Image under one of the eight named symmetries (see ``SYMMETRIES``)."""
        try:
            steps = SYMMETRIES[name]
        except KeyError:
            raise InvalidInputError(f"Unknown symmetry: {name}")
        image = self
        for step in steps:
            image = step(image)
        return image


# Each symmetry is named by the order in which its generators are applied
SYMMETRIES: Dict[str, Tuple[Callable[[Permutation], Permutation], ...]] = {
    "identity": (),
    "reverse": (Permutation.reverse,),
    "complement": (Permutation.complement,),
    "reverse-complement": (Permutation.reverse, Permutation.complement),
    "inverse": (Permutation.inverse,),
    "inverse-reverse": (Permutation.inverse, Permutation.reverse),
    "inverse-complement": (Permutation.inverse, Permutation.complement),
    "inverse-reverse-complement": (Permutation.inverse, Permutation.reverse, Permutation.complement),
}

SYMMETRY_INVERSES: Dict[str, str] = {
    "identity": "identity",
    "reverse": "reverse",
    "complement": "complement",
    "reverse-complement": "reverse-complement",
    "inverse": "inverse",
    "inverse-reverse": "inverse-complement",
    "inverse-complement": "inverse-reverse",
    "inverse-reverse-complement": "inverse-reverse-complement",
}


def _pattern_key(pattern: Permutation) -> Tuple[int, Tuple[int, ...]]:
    return len(pattern), tuple(pattern)


class Basis:
    """
    A set of patterns with no pattern containing another.

    Redundant patterns are removed at construction and kept in ``stripped``.

    :param patterns: The patterns (Permutations, sequences or text)
    :type patterns: Iterable
    """

    def __init__(self, patterns: Iterable) -> None:
        parsed = set()
        for pattern in patterns:
            if isinstance(pattern, str):
                pattern = Permutation.from_string(pattern)
            elif not isinstance(pattern, Permutation):
                pattern = Permutation(pattern)
            if len(pattern) == 0:
                raise InvalidInputError("The empty permutation cannot be a basis pattern")
            parsed.add(pattern)
        if not parsed:
            raise InvalidInputError("A basis needs at least one pattern")

        ordered = sorted(parsed, key=_pattern_key)
        kept: List[Permutation] = []
        stripped: List[Permutation] = []
        for pattern in ordered:
            if any(len(small) < len(pattern) and occurs(pattern, small) for small in kept):
                stripped.append(pattern)
            else:
                kept.append(pattern)

        self.patterns: FrozenSet[Permutation] = frozenset(kept)
        self.stripped: Tuple[Permutation, ...] = tuple(stripped)
        self._sorted: Tuple[Permutation, ...] = tuple(kept)

    @classmethod
    def from_string(cls, text: str) -> "Basis":
        """Parse the basis text format: patterns joined by ``,``."""
        parts = [part for part in text.replace(" ", "").split(",") if part]
        if not parts:
            raise InvalidInputError(f"Malformed basis: {text!r}")
        return cls(Permutation.from_string(part) for part in parts)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self._sorted)

    def __contains__(self, pattern: object) -> bool:
        return pattern in self.patterns

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Basis) and self.patterns == other.patterns

    def __hash__(self) -> int:
        return hash(self.patterns)

    def __str__(self) -> str:
        return ",".join(str(pattern) for pattern in self._sorted)

    def __repr__(self) -> str:
        return f"Basis({str(self)})"

    def key(self) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
        """Sortable key identifying the basis."""
        return tuple(_pattern_key(pattern) for pattern in self._sorted)

    def admits(self, sigma: Sequence[int]) -> bool:
        """True iff ``sigma`` avoids every pattern of the basis."""
        return not any(occurs(sigma, pattern) for pattern in self._sorted)

    def union(self, patterns: Iterable) -> "Basis":
        """The reduced basis of this basis together with ``patterns``."""
        return Basis(list(self._sorted) + list(patterns))

    def apply_symmetry(self, name: str) -> "Basis":
        return Basis(pattern.apply_symmetry(name) for pattern in self._sorted)

    def symmetry_orbit(self) -> List[Tuple["Basis", str]]:
        """
        Images under the eight symmetries of pattern containment, identity first.

        :return: ``(image, symmetry name)`` for every symmetry; images may repeat
        :rtype: List[Tuple[Basis, str]]
        """
        return [(self.apply_symmetry(name), name) for name in SYMMETRIES]

    def canonical(self) -> "Basis":
        """The symmetry image with the smallest key; equal for all bases of one orbit."""
        return min((image for image, _ in self.symmetry_orbit()), key=Basis.key)
