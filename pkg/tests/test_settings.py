import pytest

from stairperm.common.services.settings import Settings


class TestSettings:
    """Test suite for environment-driven settings."""

    @pytest.fixture(autouse=True)
    def setup(self, monkeypatch, tmp_path):
        self.monkeypatch = monkeypatch
        self.missing_dotenv = str(tmp_path / "missing.env")
        for name in ("TRUNCATION_ORDER", "ORACLE_CEILING", "SAMPLER_GRID_CEILING", "BIJECTION_CEILING", "VERBOSE"):
            # teardown removes values loaded from .env files
            monkeypatch.setenv(f"STAIRPERM_{name}", "")
            monkeypatch.delenv(f"STAIRPERM_{name}")

    def test_defaults(self):
        """Test the defaults when nothing is set."""
        settings = Settings.from_env(self.missing_dotenv)
        assert settings == Settings()
        assert settings.truncation_order == 14
        assert settings.oracle_ceiling == 11

    def test_overrides(self):
        """Test overriding through environment variables."""
        self.monkeypatch.setenv("STAIRPERM_TRUNCATION_ORDER", "20")
        self.monkeypatch.setenv("STAIRPERM_VERBOSE", "no")
        settings = Settings.from_env(self.missing_dotenv)
        assert settings.truncation_order == 20
        assert settings.verbose is False

    def test_dotenv_file(self, tmp_path):
        """Test reading a .env file."""
        path = tmp_path / ".env"
        path.write_text("STAIRPERM_BIJECTION_CEILING=8\n")
        assert Settings.from_env(str(path)).bijection_ceiling == 8

    def test_invalid_integer(self):
        """Test that malformed integers are reported with the variable name."""
        self.monkeypatch.setenv("STAIRPERM_ORACLE_CEILING", "many")
        with pytest.raises(ValueError, match="STAIRPERM_ORACLE_CEILING"):
            Settings.from_env(self.missing_dotenv)
