import pytest

from loclab import corpus


@pytest.fixture(scope="session")
def cats():
    """All bundled categories by name, loaded once."""
    return {name: corpus.load_category(name) for name in corpus.CATEGORIES}


@pytest.fixture(scope="session")
def lattices(cats):
    return {name: cats[name] for name in corpus.LATTICES}


@pytest.fixture(scope="session")
def chain3(cats):
    return cats["chain3"]


@pytest.fixture(scope="session")
def chain2(cats):
    return cats["chain2"]


@pytest.fixture(scope="session")
def diamond(cats):
    return cats["diamond"]
