import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from fthresh import QuotientRing

SESSIONS = os.path.join(os.path.dirname(__file__), os.pardir, "sessions")


def session_path(name: str) -> str:
    return os.path.abspath(os.path.join(SESSIONS, name))


@pytest.fixture(scope="session")
def regular2():
    return QuotientRing(2, ["x", "y"])


@pytest.fixture(scope="session")
def node2():
    return QuotientRing(2, ["x", "y"], ["x*y"])


@pytest.fixture(scope="session")
def node4():
    return QuotientRing(2, ["x", "y", "z", "w"], ["x*y"])


@pytest.fixture(scope="session")
def blowup():
    return QuotientRing(2, ["x", "y", "z", "w"], ["x*y - z^2*w"])


@pytest.fixture(scope="session")
def fermat_cubic():
    return QuotientRing(2, ["x", "y", "z"], ["x^3 + y^3 + z^3"])


@pytest.fixture(scope="session")
def cusp3():
    return QuotientRing(3, ["x", "y"], ["x^2 - y^3"])
