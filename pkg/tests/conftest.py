import pytest

from topolab.spaces import enumerate_topologies


@pytest.fixture(scope="session")
def corpus3():
    """All topologies on 1, 2 and 3 points, tagged with (n, index)."""
    out = []
    for n in (1, 2, 3):
        for i, space in enumerate(enumerate_topologies(n)):
            out.append((n, i, space))
    return out


@pytest.fixture(scope="session")
def corpus_n3():
    return list(enumerate_topologies(3))


@pytest.fixture(scope="session")
def corpus_n4():
    return list(enumerate_topologies(4))
