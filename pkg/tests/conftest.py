import pytest

from canmod.core import PolyRing
from canmod.ideal import Ideal
from canmod.modules import QuotientRing


def quotient(names, *gens, char=0):
    from canmod.core import GF

    S = PolyRing(names, GF(char)) if char else PolyRing(names)
    return QuotientRing(S, Ideal(S, [S(g) for g in gens]))


def ideal_of(A, *gens):
    S = A.S
    return Ideal(S, [S(g) for g in gens])


_GALLERY = None


def built_gallery():
    """[(name, A, primes, canonical ideal)], built once per session."""
    global _GALLERY
    if _GALLERY is None:
        from canmod.gallery import gallery

        out = []
        for g in gallery():
            A, primes, J = g.build()
            out.append((g.name, A, primes, J))
        _GALLERY = out
    return _GALLERY


@pytest.fixture(scope="session")
def gallery_rings():
    return built_gallery()


_ACCEPTANCE = []


def record_acceptance(line: str):
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
