import pytest

from brace_forge.braces import make_radical_brace, make_trivial_brace
from brace_forge.corpus import default_corpus
from brace_forge.named_groups import cyclic, dihedral, klein_four, quaternion, symmetric3


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def b212():
    """Z/4 with a o b = a + b + 2ab."""
    return make_radical_brace(2, 2, 1)


@pytest.fixture(scope="session")
def s3():
    return symmetric3()


@pytest.fixture(scope="session")
def trivial_s3(s3):
    return make_trivial_brace(s3)


@pytest.fixture(scope="session")
def small_groups():
    return {"Z4": cyclic(4), "V4": klein_four(), "S3": symmetric3(), "D4": dihedral(4), "Q8": quaternion(), "Z6": cyclic(6)}
