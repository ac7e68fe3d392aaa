import random

import pytest

from enbc_kit.errors import InputError
from enbc_kit.inputs import catalog, load_input
from enbc_kit.matroid import matroid_from_matrix

K4_COLUMNS = [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, -1), (0, 0, 1, -1)]
K4_ROWS = [[c[i] for c in K4_COLUMNS] for i in range(4)]

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def k4():
    return matroid_from_matrix(K4_ROWS)


@pytest.fixture(scope="session")
def u22():
    return matroid_from_matrix([[1, 0], [0, 1]])


@pytest.fixture(scope="session")
def u23():
    return matroid_from_matrix([[1, 0, 1], [0, 1, 1]])


@pytest.fixture(scope="session")
def u24():
    return load_input("u24").matroid()


@pytest.fixture(scope="session")
def u34():
    return load_input("u34").matroid()


@pytest.fixture(scope="session")
def rank1():
    return matroid_from_matrix([[1]])


@pytest.fixture(scope="session")
def catalog_inputs():
    return catalog()


def random_simple_matrices(count, seed=20161021, rows=3, min_cols=4, max_cols=6, lo=-3, hi=3):
    """Seeded integer matrices with entries in [lo, hi], keeping only simple matroids."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ncols = rng.randint(min_cols, max_cols)
        m = [[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(rows)]
        try:
            matroid_from_matrix(m)
        except InputError:
            continue
        out.append(m)
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line("%s %s: %s" % ("PASS" if ok else "FAIL", key, desc))
