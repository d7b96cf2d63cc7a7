import pytest

import sumlab as sl


@pytest.fixture(scope="session")
def connected_by_n():
    """One representative per isomorphism class of connected graphs, keyed
    by vertex count, shared across the whole run."""
    return {n: list(sl.enumerate_connected(n)) for n in range(1, 7)}
