import pytest

from unifan import validate_fan
from unifan.families import build, parse_family


def family(spec: str):
    return build(parse_family(spec))


# Radiant fixture fans used by the property suites, keyed by a short name.
RADIANT_FIXTURES = {
    "F1": "hirzebruch:1",
    "F2": "hirzebruch:2",
    "P2": "pn:2",
    "P1xP1": "p1xp1",
    "P112": "wps:1,1,2",
    "P1124": "wps:1,1,2,4",
}


def del_pezzo6():
    return validate_fan(
        2,
        [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
        [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]],
        require_complete=True,
    )


def negative_surface(d: int):
    """Radiant surface with negative rays -(1, d) and -(1, 0)."""
    return validate_fan(
        2,
        [(1, 0), (0, 1), (-1, -d), (-1, 0)],
        [[0, 1], [1, 3], [2, 3], [0, 2]],
        require_complete=True,
    )


@pytest.fixture(scope="session")
def f2():
    return family("hirzebruch:2")


@pytest.fixture(scope="session")
def p2():
    return family("pn:2")


@pytest.fixture(scope="session")
def p112():
    return family("wps:1,1,2")


@pytest.fixture(scope="session")
def p1xp1():
    return family("p1xp1")


@pytest.fixture(scope="session")
def p123():
    return family("wps:1,2,3")


@pytest.fixture(scope="session")
def dp6():
    return del_pezzo6()
