import os
import tempfile

# Artifacts and logs go to a scratch directory before ggraph creates its Config.
os.environ.setdefault("BASE_DIR", tempfile.mkdtemp(prefix="ggraph-tests-"))
os.environ.setdefault("GGRAPH_LOG_TO_FILE", "false")

import pytest  # noqa: E402

from ggraph.config.config import Config  # noqa: E402
from ggraph.services.graph_service import GraphService  # noqa: E402
from ggraph.services.group_catalog_service import CatalogEntry, GroupCatalogService  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Every test starts from the built-in defaults with progress bars off."""
    monkeypatch.delenv("GGRAPH_BUDGET", raising=False)
    Config.reset()
    config = Config()
    config.show_progress = False
    yield config
    Config.reset()


@pytest.fixture
def config(fresh_config) -> Config:
    return fresh_config


@pytest.fixture
def graphs(config) -> GraphService:
    return GraphService(config)


@pytest.fixture
def catalog(config) -> GroupCatalogService:
    return GroupCatalogService(config)


@pytest.fixture
def lattice_of(graphs):
    """Cyclic lattice of a group spec, cached across one test."""
    return graphs.lattice


@pytest.fixture
def entry():
    def make(spec: str, family: str = "explicit", **params) -> CatalogEntry:
        return CatalogEntry(spec, family, params)

    return make
