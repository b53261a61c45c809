import pytest

from newscheck.langid import load_profiles
from newscheck.models import TrainConfig
from newscheck.registry import Registry, packaged_data_root
from newscheck.training import build_registry_dir

FIXTURES = __import__("pathlib").Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def data_root():
    return packaged_data_root()


@pytest.fixture(scope="session")
def profiles(data_root):
    return load_profiles(data_root / "profiles")


@pytest.fixture(scope="session")
def cfg():
    return TrainConfig(seed=13)


@pytest.fixture(scope="session")
def registry_dir(tmp_path_factory):
    """A complete registry with small models trained for all 7 languages."""
    out = tmp_path_factory.mktemp("registry") / "registry"
    return build_registry_dir(out, docs_per_language=40, seed=13)


@pytest.fixture(scope="session")
def registry(registry_dir):
    return Registry.load(registry_dir)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
