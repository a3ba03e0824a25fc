import sys
from pathlib import Path

import pytest

# Add the parent directory to sys.path
sys.path.append(str(Path(__file__).parent.parent))

from stairperm.common.services.settings import Settings  # noqa: E402
from stairperm.modules.bijection.bijection_module import BijectionLab  # noqa: E402
from stairperm.modules.enumeration.class_enumerator_module import ClassEnumerator  # noqa: E402
from stairperm.modules.sampling.sampler_module import UniformSampler  # noqa: E402


@pytest.fixture(scope="session")
def settings() -> Settings:
    return Settings(verbose=False)


@pytest.fixture(scope="session")
def enumerator(settings) -> ClassEnumerator:
    return ClassEnumerator(settings)


@pytest.fixture(scope="session")
def lab(settings) -> BijectionLab:
    return BijectionLab(settings)


@pytest.fixture(scope="session")
def sampler(settings, enumerator) -> UniformSampler:
    return UniformSampler(settings, enumerator)
