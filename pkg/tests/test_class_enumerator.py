import pytest

from stairperm.common.exceptions import InvalidInputError, ResourceLimitError
from stairperm.common.models.permutation import SYMMETRIES, Basis
from stairperm.common.models.series import TruncatedSeries
from stairperm.common.models.theorem_match import GFTrace
from stairperm.core.oracle import count_class
from stairperm.gf.factory import GFFactory
from stairperm.modules.enumeration.class_enumerator_module import ClassEnumerator
from stairperm.modules.enumeration.strategies import MeshCondition


CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
SCHRODER = [1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]


class TestClassEnumerator:
    """Test suite for theorem detection and class generating functions."""

    @pytest.fixture(autouse=True)
    def setup(self, enumerator, settings):
        self.enumerator = enumerator
        self.settings = settings

    def _oracle(self, basis: str, order: int):
        """Helper method counting a class by brute force."""
        parsed = Basis.from_string(basis)
        return [count_class(parsed, n) for n in range(order + 1)]

    def test_detect_down_core(self):
        """Test that the down-core pair matches without symmetry and with P empty."""
        matches = self.enumerator.detect("2413,3142")
        assert matches, "Expected at least one match"
        assert str(matches[0]) == "gf_downcore (symmetry: identity, P=∅)"

    def test_detect_parameters(self):
        """Test that the lifted pattern 1⊕P is recognized."""
        match = self.enumerator.detect("2314,3124,1234")[0]
        assert match.theorem == "gf_upcore"
        assert match.symmetry == "identity"
        assert [str(p) for p in match.parameters] == ["123"]

    def test_detect_through_symmetry(self):
        """Test a match only reachable through the inverse."""
        matches = self.enumerator.detect("2413,123")
        found = [m for m in matches if m.theorem == "gf_rucupi" and m.symmetry == "inverse"]
        assert found, f"Expected a gf_rucupi match under the inverse, got {[str(m) for m in matches]}"
        assert [str(p) for p in found[0].parameters] == ["12"]

    def test_detect_nothing(self):
        """Test that Av(1234) is not covered by any theorem."""
        assert self.enumerator.detect("1234") == []

    def test_mesh_condition(self):
        """Test that the 2134 theorem needs the mesh condition confirmed when P is nonempty."""
        basis = "2134,2413,1234"
        assert not [m for m in self.enumerator.detect(basis) if m.theorem == "rd_2134"]
        assuming = ClassEnumerator(self.settings, MeshCondition(assume=True))
        matches = [m for m in assuming.detect(basis) if m.theorem == "rd_2134"]
        assert matches, "Assuming the mesh condition should admit P = {123}"
        assert [str(p) for p in matches[0].parameters] == ["123"]
        predicate = ClassEnumerator(self.settings, MeshCondition(predicate=lambda p: len(p) < 3))
        assert not [m for m in predicate.detect(basis) if m.theorem == "rd_2134"]

    @pytest.mark.parametrize("basis", ["123", "132", "321", "213"])
    def test_catalan(self, basis: str):
        """Test the classes of a single pattern of size 3."""
        assert self.enumerator.class_gf(basis, 9).coefficients() == CATALAN

    @pytest.mark.parametrize("basis", ["2314,3124", "2413,3142", "3142,2413"])
    def test_schroder(self, basis: str):
        """Test that both core pairs give the large Schröder numbers."""
        gf = self.enumerator.class_gf(basis, 10)
        assert gf.coefficients() == SCHRODER
        assert not gf.trace.uses_oracle()

    def test_four_patterns(self):
        """Test the class avoiding all four interleaving patterns."""
        gf = self.enumerator.class_gf("2314,3124,2413,3142", 5)
        assert gf.coefficients() == [1, 1, 2, 6, 20, 70]
        assert gf.trace.theorem == "gf_rdcdrucu"

    def test_four_patterns_closed_form(self):
        """Test the four-pattern class at the default order against its closed form, without the oracle."""
        gf = self.enumerator.class_gf("2413,3142,2314,3124")
        assert gf.series.order == self.settings.truncation_order
        assert not gf.trace.uses_oracle(), f"Unexpected oracle in {gf.trace.theorems()}"
        x = TruncatedSeries.x(gf.series.order + 1)
        closed = (x * x - x + 1 - (x ** 4 - 2 * x ** 3 + 7 * x * x - 6 * x + 1).sqrt()) / (2 * x)
        assert closed.to_integers() == gf.coefficients()

    def test_rdcdpi_route(self):
        """Test that Av(2413, 3142, 3124) is counted by the rd/cd/cu theorem with P empty."""
        gf = self.enumerator.class_gf("2413,3142,3124", 9)
        assert gf.trace.theorem == "gf_rdcdpi"
        assert gf.trace.parameters == []
        assert not gf.trace.uses_oracle()
        assert gf.coefficients() == self._oracle("2413,3142,3124", 9)

    def test_ru_2143_closed_form(self):
        """Test Av(2314, 2143) against its closed form."""
        gf = self.enumerator.class_gf("2314,2143", 9)
        x = TruncatedSeries.x(10)
        closed = (1 - (1 - 8 * x + 16 * x * x - 8 * x ** 3).sqrt()) / (4 * (x - x * x))
        assert closed.order == 9
        assert closed.to_integers() == gf.coefficients()

    def test_ru_2143(self):
        """Test Av(2314, 2143) against its first terms."""
        gf = self.enumerator.class_gf("2314,2143", 5)
        assert gf.coefficients() == [1, 1, 2, 6, 22, 88]
        assert gf.trace.theorem == "ru_2143"

    @pytest.mark.parametrize("basis", [
        "2314,3124",
        "2413,3142",
        "2314,3124,2413,3142",
        "2314,3124,3142",
        "2413,3142,3124",
        "2413,3124",
        "2134,2413",
        "2314,2143",
        "2314,3124,1234",
        "2413,3142,1342",
        "2413,123",
    ])
    def test_against_oracle(self, basis: str):
        """Test class generating functions against brute-force counts."""
        gf = self.enumerator.class_gf(basis, 7)
        assert not gf.trace.uses_oracle(), f"Av({basis}) should be covered by a theorem: {gf.trace.theorems()}"
        assert gf.coefficients() == self._oracle(basis, 7), f"Av({basis}) by {gf.trace.theorems()}"

    @pytest.mark.slow
    @pytest.mark.parametrize("basis", [
        "2314,3124",
        "2413,3142",
        "2413,3124",
        "2134,2413",
        "2314,2143",
    ])
    def test_against_oracle_two_patterns(self, basis: str):
        """Test two-pattern classes against brute-force counts up to size 10."""
        assert self.enumerator.class_gf(basis, 10).coefficients() == self._oracle(basis, 10)

    @pytest.mark.slow
    @pytest.mark.parametrize("basis", [
        "2314,3124,2413,3142",
        "2314,3124,3142",
        "2413,3142,3124",
        "2314,3124,1234",
        "2413,3142,1342",
        "2413,123",
    ])
    def test_against_oracle_larger(self, basis: str):
        """Test the remaining classes against brute-force counts up to size 9."""
        assert self.enumerator.class_gf(basis, 9).coefficients() == self._oracle(basis, 9)

    def test_symmetry_invariance(self):
        """Test that every symmetric image of a basis has the same counting sequence."""
        basis = Basis.from_string("2413,3124")
        expected = self.enumerator.class_gf(basis, 8).coefficients()
        for name in SYMMETRIES:
            image = basis.apply_symmetry(name)
            assert self.enumerator.class_gf(image, 8).coefficients() == expected, f"{name} image {image} differs"

    def test_oracle_fallback(self):
        """Test that uncovered classes are counted by brute force below the ceiling."""
        gf = self.enumerator.class_gf("1234", 6)
        assert gf.coefficients() == [1, 1, 2, 6, 23, 103, 513]
        assert gf.trace.theorem == "oracle"
        assert gf.trace.oracle_backed

    def test_oracle_ceiling(self):
        """Test that the oracle refuses orders beyond its ceiling."""
        with pytest.raises(ResourceLimitError) as error:
            self.enumerator.class_gf("1234", self.settings.oracle_ceiling + 1)
        assert error.value.subject == "1234"

    @pytest.mark.parametrize("basis,expected", [
        ("1", [1, 0, 0, 0, 0, 0]),
        ("12", [1, 1, 1, 1, 1, 1]),
        ("21", [1, 1, 1, 1, 1, 1]),
    ])
    def test_trivial_classes(self, basis: str, expected):
        """Test the classes the recursions bottom out in."""
        gf = self.enumerator.class_gf(basis, 5)
        assert gf.coefficients() == expected
        assert gf.trace.theorem == "trivial"

    def test_positive_coefficients(self):
        """Test dropping c_0."""
        assert self.enumerator.class_gf("123", 4).coefficients(positive=True) == [1, 2, 5, 14]

    def test_trace(self):
        """Test the trace tree and its dictionary form."""
        trace = self.enumerator.class_gf("2314,3124,1234", 6).trace
        assert trace.theorems() == ["gf_upcore", "base_123"]
        assert not trace.uses_oracle()
        data = trace.to_dict()
        assert set(data) == {"theorem", "symmetry", "basis", "P", "children", "oracle_backed"}
        assert GFTrace.from_dict(data) == trace

    def test_wilf_equal(self):
        """Test Wilf-equivalent pairs."""
        assert str(self.enumerator.wilf_check("123", "132", 10)) == "equal up to x^10"
        assert self.enumerator.wilf_check("2314,3124", "2413,3142", 10).equal

    def test_wilf_across_cores(self):
        """Test a Wilf-equivalence between a 2134 class and an up-core class, neither oracle-backed."""
        report = self.enumerator.wilf_check("2134,2413", "2314,3124,13524,12435", 10)
        assert report.equal, str(report)
        assert not self.enumerator.class_gf("2314,3124,13524,12435", 10).trace.uses_oracle()

    def test_wilf_same_core(self):
        """Test two classes of the 2134 theorem whose weight classes share the gf F_UDC(x, x/(1-x), 1)."""
        assuming = ClassEnumerator(self.settings, MeshCondition(assume=True))
        report = assuming.wilf_check("2413,2134,1234", "2413,2134,1324,12534", 10)
        assert report.equal, str(report)
        x = TruncatedSeries.x(10)
        expected = GFFactory.create("UDC")(x / (1 - x), 1)
        for weights in ("2413,123", "213,1423"):
            series = self.enumerator.class_gf(weights, 10).series
            assert series.agrees_with(expected, 10), f"Av({weights}) differs from F_UDC(x, x/(1-x), 1)"

    def test_wilf_differ(self):
        """Test the first differing coefficient."""
        report = self.enumerator.wilf_check("123", "1234", 6)
        assert not report.equal
        assert report.first_difference == 3
        assert str(report) == "differ at x^3: 5 vs 6"

    def test_verify(self):
        """Test the verification table."""
        report = self.enumerator.verify("2413,3142", 7)
        assert list(report.columns) == ["n", "gf", "oracle", "match"]
        assert len(report) == 8
        assert report["match"].all()
        assert report.attrs["theorem"] == "gf_downcore"
        with pytest.raises(ResourceLimitError):
            self.enumerator.verify("2413,3142", self.settings.oracle_ceiling + 1)

    def test_invalid_basis(self):
        """Test that malformed bases are rejected."""
        with pytest.raises(InvalidInputError):
            self.enumerator.class_gf("12a", 4)
