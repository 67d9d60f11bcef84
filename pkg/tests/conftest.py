import pytest

from helpers import named_family_corpus, random_connected_corpus


@pytest.fixture(scope="session")
def family_corpus():
    return named_family_corpus(max_n=12)


@pytest.fixture(scope="session")
def random_corpus():
    return random_connected_corpus(count=200, n_range=(3, 12))


@pytest.fixture(scope="session")
def nullity_of():
    """Memoized oracle nullity, shared so corpus-wide criteria pay for it once."""
    from stabdim.oracle import local_algebra_nullity

    cache = {}

    def compute(g):
        key = (g.n, g.adj)
        if key not in cache:
            cache[key] = local_algebra_nullity(g)
        return cache[key]

    return compute
