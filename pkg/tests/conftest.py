import pytest

from lockedmatroid import locked_structure, standard_corpus

CORPUS_SEED = 1


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus(CORPUS_SEED)


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    byname = {m.name: m for m in corpus}
    assert len(byname) == len(corpus)
    return byname


@pytest.fixture(scope="session")
def structures(corpus):
    """Locked structures for every corpus matroid, shared across tests."""
    return {m.name: locked_structure(m) for m in corpus}
