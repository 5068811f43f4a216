from __future__ import annotations

import pytest

from heffter.algebra import make_field
from heffter.arrays import build_rank_one
from heffter.embedding import build_embedding
from heffter.orderings import natural_orderings


@pytest.fixture(scope="session")
def z31():
    return make_field(31, 1)


@pytest.fixture(scope="session")
def h35(z31):
    return build_rank_one(z31, 3, 5)


@pytest.fixture(scope="session")
def h35_pair(h35):
    return natural_orderings(h35, 0)


@pytest.fixture(scope="session")
def h35_embedding(h35, h35_pair):
    return build_embedding(h35, h35_pair)


@pytest.fixture(scope="session")
def gf343():
    return make_field(7, 3)
