import pytest

from unitwreath.catalog import default_corpus_dir
from unitwreath.grpalg import GroupAlgebra
from unitwreath.pcgroup import load_file


@pytest.fixture(scope="session")
def corpus_dir():
    return default_corpus_dir()


@pytest.fixture(scope="session")
def d8xc2(corpus_dir):
    return load_file(corpus_dir / "o16" / "D8xC2.pc2")


@pytest.fixture(scope="session")
def d8(corpus_dir):
    return load_file(corpus_dir / "o8" / "D8.pc2")


@pytest.fixture(scope="session")
def corpus32(corpus_dir):
    return [load_file(p) for p in sorted((corpus_dir / "o32").glob("*.pc2"))]


@pytest.fixture(scope="session")
def d8xc2_algebra(d8xc2):
    return GroupAlgebra(d8xc2)


@pytest.fixture(scope="session")
def d8_algebra(d8):
    return GroupAlgebra(d8)
