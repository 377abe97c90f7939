import pytest

from coha import hall


@pytest.fixture(autouse=True, scope="session")
def validate_every_product():
    """Assert block symmetry of every shuffle product computed in the suite."""
    hall.VALIDATE_PRODUCTS = True
    yield
    hall.VALIDATE_PRODUCTS = False
