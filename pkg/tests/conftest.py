"""Pytest configuration and shared fixtures"""

import pytest

from equifuse.arith import Tolerance
from equifuse.extended_algebra import build_s_c
from equifuse.ring_solver import build_ring
from equifuse.verlinde_d import ModularDataD


@pytest.fixture(scope="session")
def d10():
    """V(D) at kappa = 10 (delta = 8, m = 2)"""
    return ModularDataD.build(10)


@pytest.fixture(scope="session")
def d18():
    """V(D) at kappa = 18 (m = 4)"""
    return ModularDataD.build(18)


@pytest.fixture(scope="session")
def ring2():
    """The m = 2 ring of C"""
    return build_ring(2)


@pytest.fixture(scope="session")
def ring4():
    """The m = 4 ring of C"""
    return build_ring(4)


@pytest.fixture(scope="session")
def ext2(ring2, d10):
    """Graded s-matrix data for m = 2"""
    return build_s_c(ring2, d10)


@pytest.fixture(scope="session")
def ext4(ring4, d18):
    """Graded s-matrix data for m = 4"""
    return build_s_c(ring4, d18)


@pytest.fixture
def tol():
    """The default tolerance"""
    return Tolerance(1e-9)


@pytest.fixture
def label():
    """Factory fixture parsing C labels for a given m"""
    from equifuse.ring_solver import CLabel

    def _parse(text, m=2):
        return CLabel.parse(text, m)

    return _parse
