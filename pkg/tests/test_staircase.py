from itertools import permutations
from typing import List

import pytest

from stairperm.common.exceptions import InvalidEncodingError, InvalidInputError
from stairperm.common.models.encoding import Cell, StaircaseEncoding, grid_cells
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.core.core_graphs import build_core
from stairperm.core.oracle import enumerate_class
from stairperm.core.staircase import (DECREASING, INCREASING, dperm, grid_realize, row_column_profile,
                                      staircase_encode, uperm)


def perm(text: str) -> Permutation:
    return Permutation.from_string(text)


def all_permutations(n: int) -> List[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


class TestStaircaseEncoding:
    """Test suite for the staircase encoding and its realizations."""

    @pytest.fixture(autouse=True)
    def setup(self):
        self.sigma = perm("659817432")

    def test_encode_example(self):
        """Test the encoding of 659817432."""
        encoding = staircase_encode(self.sigma)
        assert encoding.n == 3, f"Expected 3 minima, got {encoding.n}"
        expected = {Cell(1, 2): perm("21"), Cell(1, 3): perm("1"), Cell(3, 3): perm("321")}
        assert dict(encoding.fill) == expected, f"Unexpected fill {encoding}"
        assert str(encoding) == "3; (1,2)=21; (1,3)=1; (3,3)=321"
        assert encoding.size == len(self.sigma)

    def test_encoding_forgets_interleaving(self):
        """Test that two permutations differing only in cell interleaving share an encoding."""
        assert staircase_encode(perm("659814327")) == staircase_encode(perm("659718432"))

    def test_decreasing_permutation(self):
        """Test that a decreasing permutation has only minima."""
        encoding = staircase_encode(perm("321"))
        assert encoding.n == 3
        assert encoding.active_cells == []
        assert staircase_encode(Permutation()).n == 0

    def test_invalid_encodings(self):
        """Test that cells outside the grid and empty weights are rejected."""
        with pytest.raises(InvalidEncodingError):
            StaircaseEncoding(2, {(2, 1): perm("1")})
        with pytest.raises(InvalidEncodingError):
            StaircaseEncoding(2, {(1, 2): Permutation()})
        with pytest.raises(InvalidEncodingError):
            StaircaseEncoding(-1, {})

    @pytest.mark.parametrize("rows,cols,expected", [
        (DECREASING, DECREASING, "3142"),
        (INCREASING, INCREASING, "3124"),
    ])
    def test_grid_realize_examples(self, rows: str, cols: str, expected: str):
        """Test realizing two cells stacked in one column."""
        encoding = StaircaseEncoding(2, {(1, 2): perm("1"), (2, 2): perm("1")})
        assert str(grid_realize(encoding, rows, cols)) == expected

    def test_single_cell(self):
        """Test that one weighted cell on B_1 realizes 1 ⊕ weight in every direction."""
        encoding = StaircaseEncoding(1, {(1, 1): perm("1")})
        for rows in (INCREASING, DECREASING):
            for cols in (INCREASING, DECREASING):
                assert grid_realize(encoding, rows, cols) == perm("12")
        assert uperm(StaircaseEncoding(1, {(1, 1): perm("21")})) == perm("132")

    def test_unknown_direction(self):
        """Test that directions are validated."""
        with pytest.raises(InvalidInputError):
            grid_realize(StaircaseEncoding(1, {}), "sideways", INCREASING)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
    def test_realizations_keep_encoding(self, n: int):
        """Test that every realization of an encoding encodes back to it."""
        for sigma in all_permutations(n):
            encoding = staircase_encode(sigma)
            for rows in (INCREASING, DECREASING):
                for cols in (INCREASING, DECREASING):
                    realized = grid_realize(encoding, rows, cols)
                    assert staircase_encode(realized) == encoding, f"{rows}/{cols} realization of {encoding} is {realized}"

    def test_uperm_and_dperm_interleave(self):
        """Test the interleaving of uperm and dperm on every encoding of size 6."""
        for sigma in all_permutations(6):
            encoding = staircase_encode(sigma)
            up, down = row_column_profile(uperm(encoding)), row_column_profile(dperm(encoding))
            assert up.rows_are(DECREASING) and up.columns_are(DECREASING), f"uperm of {encoding}"
            assert down.rows_are(INCREASING) and down.columns_are(INCREASING), f"dperm of {encoding}"


class TestStructuralLemmas:
    """Test suite for the pattern-avoidance facts the core graphs rely on."""

    def _active(self, sigma: Permutation) -> List[Cell]:
        return staircase_encode(sigma).active_cells

    @pytest.mark.parametrize("pattern,axis,direction", [
        ("2314", "rows", DECREASING),
        ("2413", "rows", INCREASING),
        ("3124", "columns", DECREASING),
        ("3142", "columns", INCREASING),
    ])
    def test_interleaving_patterns(self, pattern: str, axis: str, direction: str):
        """Test that avoiding an interleaving pattern forces the direction of every row or column."""
        basis = Basis([pattern])
        for n in range(1, 9):
            for sigma in enumerate_class(basis, n):
                profile = row_column_profile(sigma)
                forced = profile.rows_are(direction) if axis == "rows" else profile.columns_are(direction)
                assert forced, f"{sigma} avoids {pattern} but its {axis} are not {direction}: {profile}"

    def _assert_independent(self, basis: Basis, kind: str) -> None:
        for n in range(1, 9):
            for sigma in enumerate_class(basis, n):
                active = self._active(sigma)
                graph = build_core(kind, len(sigma.left_to_right_minima()))
                assert graph.is_independent(active), f"{sigma} avoids {basis}; {active} is not independent in {kind}"

    @pytest.mark.parametrize("kind,pattern", [("U", "2314"), ("U", "3124"), ("D", "2413"), ("D", "3142")])
    def test_active_cells_independent_in_up_and_down_cores(self, kind: str, pattern: str):
        """Test that avoiding either interleaving pattern of a pair keeps the active cells independent."""
        self._assert_independent(Basis([pattern]), kind)

    @pytest.mark.parametrize("kind,patterns", [("R", ("2314", "2413")), ("C", ("3124", "3142"))])
    def test_active_cells_independent_in_row_and_column_cores(self, kind: str, patterns):
        """Test that avoiding both row (or both column) patterns leaves one active cell per row (column)."""
        self._assert_independent(Basis(patterns), kind)

    @pytest.mark.parametrize("pattern,kind,monotone", [("2134", "U", "21"), ("2143", "D", "12")])
    def test_off_diagonal_cells(self, pattern: str, kind: str, monotone: str):
        """Test that off-diagonal cells of Av(2134) / Av(2143) are monotone and independent in the shifted core."""
        forbidden = perm(monotone[::-1])
        for n in range(1, 9):
            for sigma in enumerate_class(Basis([pattern]), n):
                encoding = staircase_encode(sigma)
                off = [cell for cell in encoding.active_cells if not cell.is_diagonal()]
                shifted = [Cell(cell.i, cell.j - 1) for cell in off]
                assert build_core(kind, max(encoding.n - 1, 0)).is_independent(shifted), f"Off-diagonal cells of {sigma}"
                assert all(not encoding.fill[cell].contains(forbidden) for cell in off), f"Off-diagonal weights of {sigma}"

    @pytest.mark.parametrize("basis", ["2134,2413", "2143,2314"])
    def test_off_diagonal_rows(self, basis: str):
        """Test that adding the row pattern leaves at most one off-diagonal active cell per row."""
        for n in range(1, 9):
            for sigma in enumerate_class(Basis.from_string(basis), n):
                encoding = staircase_encode(sigma)
                shifted = [Cell(cell.i, cell.j - 1) for cell in encoding.active_cells if not cell.is_diagonal()]
                assert build_core("R", max(encoding.n - 1, 0)).is_independent(shifted), f"Off-diagonal rows of {sigma}"

    def test_grid_cells(self):
        """Test the cell layout of B_n."""
        assert grid_cells(2) == [Cell(1, 1), Cell(1, 2), Cell(2, 2)]
        assert len(grid_cells(5)) == 15
        assert Cell(2, 3).in_grid(3) and not Cell(3, 2).in_grid(3)
