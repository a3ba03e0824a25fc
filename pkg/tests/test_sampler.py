from collections import Counter
from itertools import permutations

import numpy as np
import pytest
from scipy.stats import chisquare

from stairperm.common.exceptions import InvalidInputError, UnsupportedTheoremError
from stairperm.common.models.permutation import Basis, Permutation
from stairperm.core.oracle import enumerate_class
from stairperm.modules.sampling.sampler_module import _randbelow, make_rng


class TestUniformSampler:
    """Test suite for the uniform sampler of up-core and down-core classes."""

    @pytest.fixture(autouse=True)
    def setup(self, sampler):
        self.sampler = sampler
        self.basis = "2413,3142"

    def _assert_members(self, basis: str, n: int, count: int, seed: int) -> None:
        """Helper method checking that samples have the right size and avoid the basis."""
        parsed = Basis.from_string(basis)
        for sigma in self.sampler.samples(basis, n, count, seed=seed):
            assert len(sigma) == n, f"Sample {sigma} should have size {n}"
            assert parsed.admits(sigma), f"Sample {sigma} contains a pattern of {parsed}"

    def test_tables(self):
        """Test the count tables of the down-core class."""
        table = self.sampler.build_tables(self.basis, 6)
        assert table.counts[6] == 394
        assert table.core == "D"
        assert table.independent_sets[2][1] == 3
        assert table.weight_basis is None

    def test_decomposition_identity(self):
        """Test that minima, set sizes and compositions account for every class member."""
        table = self.sampler.build_tables(self.basis, 12)
        for n in range(13):
            assert table.decomposition_total(n) == table.counts[n], f"n={n}"

    def test_smallest_sizes(self):
        """Test sizes 0 and 1."""
        assert self.sampler.sample(self.basis, 0, seed=1) == Permutation()
        assert str(self.sampler.sample(self.basis, 1, seed=1)) == "1"

    def test_covers_small_class(self):
        """Test that every permutation of size 3 is eventually drawn."""
        drawn = set(self.sampler.samples(self.basis, 3, 300, seed=3))
        assert drawn == {Permutation(p) for p in permutations((1, 2, 3))}

    @pytest.mark.parametrize("basis,n", [
        ("2413,3142", 8),
        ("2314,3124", 8),
        ("123", 7),
        ("321", 7),
        ("132", 7),
        ("2314,3124,1234", 7),
        ("2413,3142,1342", 7),
    ])
    def test_members(self, basis: str, n: int):
        """Test that samples belong to the class, symmetric images and P variants included."""
        self._assert_members(basis, n, 50, seed=11)

    def test_deterministic(self):
        """Test that a seed fixes the sample."""
        first = self.sampler.samples(self.basis, 7, 5, seed=42)
        assert first == self.sampler.samples(self.basis, 7, 5, seed=42)
        assert self.sampler.sample(self.basis, 7, seed=make_rng(42)) == first[0]

    def test_unsupported(self):
        """Test that classes outside the up-core and down-core theorems are refused."""
        with pytest.raises(UnsupportedTheoremError):
            self.sampler.sample("1234", 5, seed=0)

    def test_draw_beyond_tables(self):
        """Test that drawing past the table order is rejected."""
        table = self.sampler.build_tables(self.basis, 4)
        with pytest.raises(InvalidInputError):
            self.sampler.draw(table, table.order + 1, make_rng(0))

    def test_randbelow(self):
        """Test bounded draws beyond 64 bits."""
        rng = make_rng(5)
        bound = 10 ** 30
        values = [_randbelow(rng, bound) for _ in range(50)]
        assert all(0 <= v < bound for v in values)
        assert max(values) > 10 ** 28, "Draws should spread across the range"
        with pytest.raises(InvalidInputError):
            _randbelow(rng, 0)

    @pytest.mark.slow
    def test_uniformity(self):
        """Test with a chi-square test that size-6 samples are uniform over the class."""
        members = enumerate_class(Basis.from_string(self.basis), 6)
        assert len(members) == 394
        per_member = 1000
        observed = Counter(self.sampler.samples(self.basis, 6, per_member * len(members), seed=2024))
        assert set(observed) <= set(members)
        _, p_value = chisquare(np.array([observed[sigma] for sigma in members]))
        assert p_value > 1e-3, f"Samples look non-uniform (p = {p_value})"
