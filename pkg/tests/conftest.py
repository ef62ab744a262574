import time

import pytest

import wbk

# session start, read by the wall-clock budget test that runs last
SESSION_T0 = time.monotonic()


@pytest.fixture(scope="session")
def z6():
    return wbk.catalog_get("z6_exotic").as_dual()


@pytest.fixture(scope="session")
def c3_sym3():
    return wbk.compose(wbk.catalog_get("c3_sym3"))


@pytest.fixture(scope="session")
def c2_c4():
    return wbk.compose(wbk.catalog_get("c2_c4_braces"))


@pytest.fixture(scope="session")
def all_structures():
    """Every catalog entry as a dual weak brace, specs composed."""
    return wbk.catalog_structures()
