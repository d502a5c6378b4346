import random
from fractions import Fraction

import pytest

from canmod.classifier import cm_gorenstein_report
from canmod.core import PolyRing
from canmod.errors import PreconditionError
from canmod.gallery import (
    determinantal,
    gallery,
    gallery_ring,
    idealization,
    rees_of_parameters,
    semigroup_ring,
    stanley_reisner,
)
from canmod.homological import canonical_module
from canmod.ideal import Ideal
from canmod.modules import FPModule, QuotientRing

from oracles import evaluate


def _ideal(doc):
    A, _, _ = doc.build()
    return A


def _same(A, *gens):
    S = A.S
    return A.I == Ideal(S, [S(g) for g in gens])


def test_stanley_reisner_examples():
    assert _same(_ideal(stanley_reisner(3, [{1, 2}, {3}])), "x1*x3", "x2*x3")
    assert _same(_ideal(stanley_reisner(3, [{1, 2}, {2, 3}])), "x1*x3")
    A = _ideal(stanley_reisner(2, [{1, 2}]))
    assert A.I.is_zero()
    with pytest.raises(PreconditionError):
        stanley_reisner(3, [{1, 4}])
    with pytest.raises(PreconditionError):
        stanley_reisner(3, [{1, 2}, {1}])
    with pytest.raises(PreconditionError):
        stanley_reisner(3, [])


def test_stanley_reisner_primes_are_facet_complements():
    doc = stanley_reisner(3, [{1, 2}, {3}])
    A, primes, _ = doc.build()
    assert sorted(str(P) for P in primes) == ["(x1, x2)", "(x3)"]
    for P in primes:
        assert P.contains_ideal(A.I)


def _substitution_kills(A, values):
    rng = random.Random(2)
    for g in A.I.gens:
        for _ in range(4):
            t = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            pt = {name: t ** a if a else Fraction(rng.randint(-5, 5)) for name, a in values.items()}
            if evaluate(g, pt) != 0:
                return False
    return True


def test_semigroup_rings():
    A = _ideal(semigroup_ring([2, 3]))
    assert _same(A, "y^2 - x^3")
    assert _substitution_kills(A, {"x": 2, "y": 3})
    B = _ideal(semigroup_ring([3, 4, 5]))
    assert _same(B, "x*z - y^2", "x^3 - y*z", "x^2*y - z^2")
    assert _substitution_kills(B, {"x": 3, "y": 4, "z": 5})
    assert B.codim() == 2 and len(B.I.minimalized().gens) == 3
    C = _ideal(semigroup_ring([2, 3], adjoin_free_var=True))
    assert C.S.names == ("s", "x", "y")
    assert _same(C, "y^2 - x^3")
    assert C.dim() == 2
    with pytest.raises(PreconditionError):
        semigroup_ring([2, 4])
    with pytest.raises(PreconditionError):
        semigroup_ring([1, 3])


def test_determinantal_rings():
    A = _ideal(determinantal(2, 2, 2))
    assert len(A.I.gens) == 1
    assert cm_gorenstein_report(A)[1]
    B = _ideal(determinantal(2, 3, 2))
    assert B.dim() == 4 and cm_gorenstein_report(B)[0]
    C = _ideal(determinantal(2, 3, 2, (1, 1, 1, 1, 1, 1)))
    assert _same(C, "x*z - y^2 - y*v", "x^2 - y*z", "x*y + v*x - z^2")
    with pytest.raises(PreconditionError):
        determinantal(2, 3, 3)
    with pytest.raises(PreconditionError):
        determinantal(3, 3, 2, (1, 1, 1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        determinantal(2, 3, 2, (1, 0, 1, 1, 1, 1))


def test_rees_algebras():
    A = _ideal(rees_of_parameters(3, 3))
    assert A.S.n == 6 and A.dim() == 4
    B = _ideal(rees_of_parameters(4, 3))
    assert B.S.n == 7 and B.dim() == 5
    with pytest.raises(PreconditionError):
        rees_of_parameters(3, 2)
    with pytest.raises(PreconditionError):
        rees_of_parameters(3, 4)


def test_idealization():
    A, _, _ = semigroup_ring([3, 4, 5]).build()
    T, _, _ = idealization(A, canonical_module(A)).build()
    assert T.dim() == A.dim()
    assert cm_gorenstein_report(T) == (True, True, 1)
    Z = _ideal(idealization(A, FPModule.zero(A)))
    assert Z.S.names == A.S.names and Z.I == A.I
    S = PolyRing(["x"])
    X = QuotientRing(S)
    W, _, _ = idealization(X, FPModule.free(X, 1)).build()
    assert _same(W, "Y1^2")
    assert cm_gorenstein_report(W)[1]
    with pytest.raises(PreconditionError):
        idealization(QuotientRing(PolyRing(["Y1"])), FPModule.free(QuotientRing(PolyRing(["Y1"])), 1))


def test_gallery_is_complete():
    names = [g.name for g in gallery()]
    assert len(names) >= 10 and len(set(names)) == len(names)
    assert gallery_ring("node").doc.canonical_ideal is not None
    with pytest.raises(KeyError):
        gallery_ring("missing")
    for g in gallery():
        A, primes, _ = g.build()
        for P in primes:
            assert P.contains_ideal(A.I), g.name
