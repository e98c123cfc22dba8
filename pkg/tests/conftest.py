import pytest

from hyperfields import enumerate_hyperfields


@pytest.fixture(scope="session")
def classes():
    """Enumerated classes per order, computed once."""
    return {n: enumerate_hyperfields(n, workers=1) for n in range(2, 6)}


@pytest.fixture(scope="session")
def all_classes(classes):
    return [h for n in sorted(classes) for h in classes[n].classes]
