import random
from functools import lru_cache

import pytest

from superhaar.fileio import builtin_fixture, load_algebra, load_module

ALGEBRA_FILES = {
    "g2": "g2_grassmann.json",
    "g3": "g3_grassmann.json",
    "bad2": "bad2.json",
    "gl11": "gl11.json",
    "osp12": "osp12.json",
    "sl2": "sl2.json",
}

MODULE_FILES = {
    # algebra key -> module file
    "g2": ["exterior_module.json"],
    "g3": ["exterior3_module.json"],
    "bad2": ["trivial_module.json"],
    "gl11": ["defining_module.json", "jordan_module.json"],
    "osp12": ["osp12_defining_module.json", "osp12_tensor_module.json"],
    "sl2": ["sl2_defining_module.json"],
}

# fixtures satisfying the trace condition (bad2 is the non-unimodular one)
UNIMODULAR = ["g2", "g3", "gl11", "osp12", "sl2"]


@lru_cache(maxsize=None)
def fixture_algebra(key):
    return load_algebra(builtin_fixture(ALGEBRA_FILES[key]))


@lru_cache(maxsize=None)
def fixture_module(algebra_key, filename):
    return load_module(builtin_fixture(filename), fixture_algebra(algebra_key))


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture
def g2():
    return fixture_algebra("g2")


@pytest.fixture
def g3():
    return fixture_algebra("g3")


@pytest.fixture
def bad2():
    return fixture_algebra("bad2")


@pytest.fixture
def gl11():
    return fixture_algebra("gl11")


@pytest.fixture
def osp12():
    return fixture_algebra("osp12")


@pytest.fixture
def sl2():
    return fixture_algebra("sl2")
