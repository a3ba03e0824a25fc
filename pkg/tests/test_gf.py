from collections import Counter

import pytest

from stairperm.common.exceptions import InvalidInputError
from stairperm.common.models.series import TruncatedSeries
from stairperm.core.core_graphs import build_core, independent_sets
from stairperm.gf.factory import GFFactory
from stairperm.gf.markers import exhaustive_coefficients, interpolation_matrix, marker_coefficients, size_distribution


CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


class TestGeneratingFunctions:
    """Test suite for the core generating-function families."""

    @pytest.fixture(autouse=True)
    def setup(self):
        self.order = 10
        self.x = TruncatedSeries.x(self.order)
        self.monotone = TruncatedSeries.geometric(self.order) - 1

    def _markers(self, family: str, order: int = 2):
        """Helper method extracting marker coefficients of a family."""
        return marker_coefficients(GFFactory.create(family), order)

    @pytest.mark.parametrize("family", GFFactory.names())
    def test_formula_matches_independent_sets(self, family: str):
        """Test every family's formula against exhaustive independent-set counts for n <= 5."""
        gf = GFFactory.create(family)
        formula = marker_coefficients(gf, 5)
        exhaustive = exhaustive_coefficients(gf, 5)
        assert formula == exhaustive, f"{family}: formula and independent sets disagree"

    @pytest.mark.slow
    @pytest.mark.parametrize("family", GFFactory.names())
    def test_formula_matches_independent_sets_at_six(self, family: str):
        """Test every family's formula against exhaustive independent-set counts for n <= 6."""
        gf = GFFactory.create(family)
        assert marker_coefficients(gf, 6) == exhaustive_coefficients(gf, 6)

    @pytest.mark.parametrize("family,key,expected", [
        ("U", (2, 1), 3),
        ("U", (2, 2), 3),
        ("UDRC", (2, 1), 3),
        ("UDRC", (2, 2), 1),
        ("UDC", (1, 1, 1), 1),
        ("UDC", (2, 2, 1), 1),
        ("UDC", (2, 2, 2), 1),
        ("UD", (2, 2, 1), 1),
        ("UD", (2, 2, 2), 2),
        ("UD", (2, 3, 2), 1),
        ("DmUR", (1, 0, 0, 0, 1), 1),
        ("DmUR", (1, 0, 0, 0, 0), 1),
        ("DmUR", (2, 1, 0, 0, 0), 1),
        ("DmUR", (2, 1, 1, 0, 0), 1),
        ("UmDR", (1, 0, 0, 1), 1),
        ("UmDR", (2, 1, 0, 0), 1),
    ])
    def test_marker_examples(self, family: str, key, expected: int):
        """Test individual marker coefficients on B_1 and B_2."""
        coefficients = self._markers(family)
        assert coefficients.get(key, 0) == expected, f"{family}{key}: expected {expected}, got {coefficients.get(key, 0)}"

    @pytest.mark.parametrize("family", ["U", "UDRC"])
    def test_empty_sets_only(self, family: str):
        """Test that a zero marker leaves one empty set per grid size."""
        series = GFFactory.create(family)(TruncatedSeries.zero(self.order))
        assert series == TruncatedSeries.geometric(self.order)

    def test_two_slot_families_at_zero(self):
        """Test UD, UDC and UmDR with zero markers."""
        zero = TruncatedSeries.zero(self.order)
        assert GFFactory.create("UD")(zero, zero) == TruncatedSeries.geometric(self.order)
        assert GFFactory.create("UDC")(zero, zero) == TruncatedSeries.geometric(self.order)
        assert GFFactory.create("UmDR")(zero, zero, zero) == TruncatedSeries.geometric(self.order)

    def test_catalan(self):
        """Test that monotone weights on the up-core count Av(123)."""
        series = GFFactory.create("U")(self.monotone)
        assert series.to_integers()[:len(CATALAN)] == CATALAN[:self.order + 1]

    def test_closed_form(self):
        """Test the up-core quadratic against its functional equation."""
        family = GFFactory.create("U")
        closed = family.closed_form(self.monotone)
        assert closed.order == self.order - 1, "Dividing by y costs one order"
        assert family(self.monotone).agrees_with(closed)

    @pytest.mark.parametrize("family", ["UDC", "UD"])
    def test_relabelled(self, family: str):
        """Test that the relabelled form agrees with substituting z = w / y."""
        gf = GFFactory.create(family)
        y = self.monotone
        w = y * (1 + self.x)
        assert gf.relabelled(y, w).agrees_with(gf(y, w / y))

    def test_udc_weighted_by_size(self):
        """Test UDC at y = 2, z = 1 against a direct sum over independent sets."""
        series = GFFactory.create("UDC")(2, 1, order=5)
        for n in range(6):
            expected = sum(2 ** len(s) for s in independent_sets(build_core("UDC", n)))
            assert series[n] == expected, f"n={n}: {series[n]} vs {expected}"

    def test_size_distribution(self):
        """Test the size table of the up-core."""
        table = size_distribution(GFFactory.create("U"), 4)
        for n in range(5):
            exhaustive = Counter(len(s) for s in independent_sets(build_core("U", n)))
            assert table[n] == dict(exhaustive), f"n={n}: {table[n]} vs {dict(exhaustive)}"

    def test_interpolation_matrix(self):
        """Test that the matrix recovers monomial coefficients from values at 0..d."""
        matrix = interpolation_matrix(3)
        values = [2 + 3 * t - t ** 3 for t in range(4)]
        coefficients = [sum(matrix[m, i] * values[i] for i in range(4)) for m in range(4)]
        assert coefficients == [2, 3, 0, -1]

    def test_factory(self):
        """Test family lookup."""
        assert GFFactory.create("U") is GFFactory.create("U")
        assert GFFactory.create("DmUR").slots == ("y", "z", "s", "t")
        with pytest.raises(InvalidInputError):
            GFFactory.create("X")
        with pytest.raises(InvalidInputError):
            GFFactory.create("UD")(TruncatedSeries.zero(3))
