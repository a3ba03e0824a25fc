import json

import pytest

from stairperm.common.exceptions import InvalidEncodingError, ResourceLimitError, UnsupportedTheoremError
from stairperm.common.models.encoding import Cell
from stairperm.common.models.permutation import Permutation
from stairperm.modules.bijection.bijection_module import WeightedSet
from stairperm.modules.bijection.theorems import get_theorem


def perm(text: str) -> Permutation:
    return Permutation.from_string(text)


class TestBijectionLab:
    """Test suite for materializing the structural bijections."""

    @pytest.fixture(autouse=True)
    def setup(self, lab):
        self.lab = lab
        self.split_example = perm("41352")

    def _assert_passes(self, theorem: str, basis: str, max_total: int) -> None:
        """Helper method running the bijection check and reporting the first mismatch."""
        report = self.lab.verify_bijection(theorem, basis, max_total)
        assert report.passed, f"{theorem} on Av({basis}): {report.first_mismatch}"

    def test_split_example_encoding(self):
        """Test that a diagonal weight sharing its column is rebuilt around the off-diagonal point."""
        weighted = self.lab.encode("rd_2134", self.split_example)
        assert weighted.n == 2
        assert weighted.total == 5
        assert weighted.weights == {Cell(1, 2): perm("1"), Cell(2, 2): perm("231")}
        assert weighted.labelled.labels == {Cell(1, 2): "y", Cell(2, 2): "z"}
        assert self.lab.realize("rd_2134", weighted) == self.split_example

    def test_single_cell(self):
        """Test the only weighted set of B_1 with total size 2."""
        sets = list(self.lab.weighted_sets("inf_upcore", "2314,3124", 1, 2))
        assert len(sets) == 1
        assert self.lab.realize("inf_upcore", sets[0]) == perm("12")

    def test_stacked_cells(self):
        """Test that two cells of one column realize with decreasing columns in the up-core theorem."""
        sets = [w for w in self.lab.weighted_sets("inf_upcore", "2314,3124", 2, 4)
                if set(w.labelled.members) == {Cell(1, 2), Cell(2, 2)}]
        assert len(sets) == 1
        assert self.lab.realize("inf_upcore", sets[0]) == perm("3142")

    @pytest.mark.parametrize("n,total,expected", [(1, 2, 1), (2, 3, 3), (2, 1, 0)])
    def test_weighted_set_counts(self, n: int, total: int, expected: int):
        """Test small weighted set counts of the 2134 theorem."""
        assert len(list(self.lab.weighted_sets("rd_2134", "2134,2413", n, total))) == expected

    @pytest.mark.parametrize("theorem,basis", [
        ("thm_123", "123"),
        ("thm_132", "132"),
        ("inf_upcore", "2314,3124"),
        ("inf_downcore", "2413,3142"),
        ("inf_udrc", "2314,3124,2413,3142"),
        ("inf_cu_cd_ru", "2314,3124,3142"),
        ("inf_rd_cd_cu", "2413,3142,3124"),
        ("inf_rd_cu", "2413,3124"),
        ("inf_rd_2134", "2134,2413"),
        ("inf_ru_2143", "2314,2143"),
    ])
    def test_theorems(self, theorem: str, basis: str):
        """Test every structural bijection with P empty."""
        self._assert_passes(theorem, basis, 8)

    @pytest.mark.slow
    @pytest.mark.parametrize("theorem,basis", [
        ("inf_rd_cu", "2413,3124"),
        ("inf_rd_2134", "2134,2413"),
        ("inf_ru_2143", "2314,2143"),
    ])
    def test_theorems_larger(self, theorem: str, basis: str):
        """Test the split and relabelled bijections up to size 9."""
        self._assert_passes(theorem, basis, 9)

    @pytest.mark.parametrize("basis", ["2314,3124,1234", "2314,3124,1243", "2314,3124,1324"])
    def test_up_core_parameters(self, basis: str):
        """Test the up-core bijection with a skew-indecomposable P."""
        self._assert_passes("inf_upcore", basis, 8)

    @pytest.mark.parametrize("basis", ["2413,3142,1342", "2413,3142,1423", "2413,3142,1432"])
    def test_down_core_parameters(self, basis: str):
        """Test the down-core bijection with a sum-indecomposable P."""
        self._assert_passes("inf_downcore", basis, 7)

    def test_report(self):
        """Test the report table and its JSON form."""
        report = self.lab.verify_bijection("thm_132", "132", 5)
        assert report.first_mismatch is None
        assert list(report.table.columns) == ["n", "total", "weighted_sets", "class_members", "injective",
                                              "onto", "round_trip", "passed"]
        assert (report.table["weighted_sets"] == report.table["class_members"]).all()
        data = json.loads(report.to_json())
        assert data["theorem"] == "thm_132"
        assert data["passed"] is True
        assert len(data["rows"]) == len(report.table)

    def test_aliases(self):
        """Test theorem aliases."""
        assert get_theorem("udrc").name == "inf_udrc"
        assert get_theorem("rd_cu").name == "inf_rd_cu"
        assert get_theorem("ru_2143").name == "inf_ru_2143"

    def test_unknown_theorem(self):
        """Test that unknown identifiers are rejected."""
        with pytest.raises(UnsupportedTheoremError):
            self.lab.verify_bijection("inf_sideways", "123", 4)

    @pytest.mark.parametrize("theorem,basis", [
        ("inf_upcore", "2413,3142"),
        ("thm_123", "123,2143"),
        ("inf_downcore", "2413,3142,2134"),
    ])
    def test_basis_not_covered(self, theorem: str, basis: str):
        """Test that bases outside a theorem's form are rejected."""
        with pytest.raises(UnsupportedTheoremError):
            self.lab.verify_bijection(theorem, basis, 4)

    def test_ceiling(self):
        """Test that the total size is bounded."""
        with pytest.raises(ResourceLimitError):
            self.lab.verify_bijection("thm_123", "123", self.lab.settings.bijection_ceiling + 1)

    def test_short_split_weight(self):
        """Test that a split weight needs at least two points."""
        weighted = self.lab.encode("rd_2134", self.split_example)
        broken = WeightedSet(weighted.labelled, {Cell(1, 2): perm("1"), Cell(2, 2): perm("1")}, 4)
        with pytest.raises(InvalidEncodingError):
            self.lab.realize("rd_2134", broken)

    def test_dependent_active_cells(self):
        """Test that encoding rejects permutations whose active cells share a row in a row core."""
        with pytest.raises(InvalidEncodingError):
            self.lab.encode("inf_udrc", perm("2314"))
