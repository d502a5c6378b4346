import random

import pytest
from hypothesis import given, settings, strategies as st

from canmod.core import PolyRing
from canmod.ideal import Ideal
from canmod.matrix import Matrix
from canmod.modules import (
    FPModule,
    QuotientRing,
    annihilator,
    contained_in_span,
    double_dual_with_map,
    dual,
    fitting_ideal,
    is_zero_module,
    module_dimension,
    prune,
    syzygy_matrix,
)
from canmod.homological import canonical_module, ext_module, auslander_transpose
from canmod.errors import PreconditionError

from conftest import ideal_of, quotient


def xyz_ring():
    return quotient(["x", "y", "z"], "x*y", "x*z")


def test_quotient_ring_basics():
    A = xyz_ring()
    assert A.dim() == 2 and A.codim() == 1
    x, y, z = A.S.gens()
    assert A.reduce(x * y + z) == z
    with pytest.raises(PreconditionError):
        quotient(["x"], "x - 1")


# ---------------------------------------------------------------- duals


def test_dual_of_free_is_free():
    A = xyz_ring()
    D = dual(FPModule.free(A, 3))
    assert D.prune().rank == 3
    assert is_zero_module(FPModule(A, D.P)) is False
    assert annihilator(D) == A.I


def test_dual_of_canonical_module_is_kernel_of_x():
    A = xyz_ring()
    K = canonical_module(A)
    D = dual(K)
    # K* is the kernel of x on A, i.e. (y, z)A, with annihilator (x)
    assert D.prune().rank == 2
    assert annihilator(D) == ideal_of(A, "x")
    emb = D.embedding
    assert emb.nrows == 1
    gens = Ideal(A.S, [c[0] for c in emb.cols] + list(A.I.gens))
    assert gens == ideal_of(A, "y", "z") + A.I


def test_dual_of_torsion_module_is_zero():
    S = PolyRing(["x", "y"])
    A = QuotientRing(S)
    M = FPModule.cyclic(A, [S("x^2 + y")])
    assert is_zero_module(dual(M))


def test_double_dual_examples():
    A = quotient(["x", "y"], "x^2", "x*y")
    _, kz, cz = double_dual_with_map(canonical_module(A))
    assert (kz, cz) == (True, False)
    B = xyz_ring()
    _, kz, cz = double_dual_with_map(canonical_module(B))
    assert (kz, cz) == (True, True)
    Mdd, kz, cz = double_dual_with_map(FPModule.free(B, 2))
    assert (kz, cz) == (True, True)
    assert Mdd.prune().rank == 2


def test_double_dual_detects_torsion():
    A = quotient(["x", "y"])
    M = FPModule.cyclic(A, ["x"])
    _, kz, _ = double_dual_with_map(M)
    assert kz is False


# ---------------------------------------------------------------- annihilators


def test_annihilator_examples():
    A = xyz_ring()
    assert annihilator(canonical_module(A)) == ideal_of(A, "x")
    assert annihilator(FPModule.free(A, 2)) == A.I
    B = quotient(["x", "y"], "x^2", "x*y")
    assert annihilator(canonical_module(B)) == ideal_of(B, "x")
    assert annihilator(FPModule.zero(A)).is_unit()


def test_module_dimension_examples():
    A = xyz_ring()
    assert module_dimension(canonical_module(A)) == 2
    assert module_dimension(FPModule.zero(A)) == -1
    S = A.S
    E2 = ext_module(2, FPModule.cyclic(QuotientRing(S), A.I.gens), over=QuotientRing(S))
    assert module_dimension(E2) == 1
    # the oracle: ann Ext^2 is a monomial ideal whose dimension counts free variables
    assert annihilator(E2).radical_contains_ideal(ideal_of(A, "y", "z"))


# ---------------------------------------------------------------- Fitting ideals


def test_fitting_conventions():
    A = xyz_ring()
    F = FPModule.free(A, 1)
    assert fitting_ideal(F, 0) == A.I
    assert fitting_ideal(F, 1).is_unit()
    S = A.S
    C = FPModule.cyclic(QuotientRing(S), [S("x + y^2")])
    assert fitting_ideal(C, 0) == Ideal(S, [S("x + y^2")])
    with pytest.raises(ValueError):
        fitting_ideal(F, -1)


def test_fitting_one_of_determinantal_canonical_module(gallery_rings):
    A = next(a for n, a, _, _ in gallery_rings if n == "determinantal_specialized")
    K = canonical_module(A)
    F1 = fitting_ideal(K, 1)
    m = ideal_of(A, "x", "y", "z", "v")
    assert F1.radical_contains_ideal(m)
    assert not F1.is_unit()


def _containments(M):
    r = M.rank
    fitts = [fitting_ideal(M, i) for i in range(r + 1)]
    ann = annihilator(M)
    assert ann.contains_ideal(fitts[0])
    assert fitts[0].contains_ideal(ann ** r if r else ann)
    for a, b in zip(fitts, fitts[1:]):
        assert b.contains_ideal(a)
    assert fitts[-1].is_unit()


def test_fitting_containments_on_gallery(gallery_rings):
    for name, A, _, _ in gallery_rings:
        _containments(canonical_module(A))


# ---------------------------------------------------------------- pruning


def test_prune_examples():
    S = PolyRing(["x", "y"])
    A = QuotientRing(S)
    assert prune(FPModule(A, Matrix.identity(S, 1))).rank == 0
    x, y = S.gens()
    # A/(x^2) plus a free summand killed by a unit relation
    P = Matrix.from_rows(S, [[x ** 2, 0 * x, y], [0 * x, S.one(), x]])
    M = FPModule(A, P)
    N = prune(M)
    assert N.rank == 1
    assert annihilator(N) == annihilator(M)


def test_prune_of_determinantal_canonical_module(gallery_rings):
    A = next(a for n, a, _, _ in gallery_rings if n == "determinantal_specialized")
    K = prune(canonical_module(A))
    assert K.rank == 2
    assert K.P.ncols == 3


def _invariants(M):
    return (
        M.is_zero(),
        annihilator(M),
        M.dim(),
        [fitting_ideal(M, i) for i in range(M.rank + 1)][:3],
    )


def test_prune_preserves_invariants():
    S = PolyRing(["x", "y", "z"])
    A = QuotientRing(S, Ideal(S, [S("x*y"), S("x*z")]))
    rng = random.Random(4)
    x, y, z = S.gens()
    pool = [S.one(), S.const(2), x, y, z, x + y, y * z, S.zero()]
    for _ in range(12):
        rows = [[rng.choice(pool) for _ in range(3)] for _ in range(2)]
        M = FPModule(A, Matrix.from_rows(S, rows))
        N = prune(M)
        a, b = _invariants(M), _invariants(N)
        assert a[0] == b[0] and a[1] == b[1] and a[2] == b[2]
        # Fitting ideals are presentation invariants
        for i in range(3):
            assert fitting_ideal(M, i) == fitting_ideal(N, i)


def test_is_zero_module_examples():
    A = xyz_ring()
    assert is_zero_module(FPModule(A, Matrix.identity(A.S, 2)))
    assert not is_zero_module(FPModule.free(A, 1))
    K = canonical_module(A)
    D = auslander_transpose(K)
    assert is_zero_module(ext_module(2, D))
    assert not is_zero_module(ext_module(3, D))


# ---------------------------------------------------------------- nonzerodivisors


def _kills_nothing(A, M, a) -> bool:
    """(0 :_M a) = 0 for M = coker P."""
    S = A.S
    r = M.rank
    if r == 0:
        return True
    z = S.zero()
    scaled = [[a if i == j else z for i in range(r)] for j in range(r)]
    big = Matrix(S, r, scaled + list(M.P.cols))
    syz = syzygy_matrix(big, A)
    vectors = [col[:r] for col in syz.cols]
    return contained_in_span(A, vectors, M.P.cols, r)


def _is_nonzerodivisor(A, a) -> bool:
    return Ideal(A.S, list(A.I.gens)).colon(Ideal(A.S, [a])) == A.I


def test_nonzerodivisors_pass_to_canonical_module(gallery_rings):
    checked = 0
    for name, A, _, _ in gallery_rings:
        S = A.S
        K = canonical_module(A)
        cands = [sum(S.gens(), S.zero())] + list(S.gens())
        for a in cands:
            if A.I.is_zero() or _is_nonzerodivisor(A, a):
                assert _kills_nothing(A, K, a), (name, str(a))
                checked += 1
    assert checked >= len(gallery_rings)


# ---------------------------------------------------------------- properties

R2 = PolyRing(["x", "y"])
small = st.sampled_from([R2.one(), R2("x"), R2("y"), R2("x*y"), R2("x^2"), R2("x+y"), R2.zero(), R2("y^2 - x")])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=1, max_size=3))
def test_random_presentations(cols):
    A = QuotientRing(R2, Ideal(R2, [R2("x^2*y")]))
    M = FPModule(A, Matrix(R2, 2, cols))
    N = prune(M)
    assert N.is_zero() == M.is_zero()
    assert annihilator(N) == annihilator(M)
    for i in range(3):
        assert fitting_ideal(N, i) == fitting_ideal(M, i)
    if not M.is_zero():
        _containments(M)


def test_dual_dual_of_free_same_rank():
    A = xyz_ring()
    F = FPModule.free(A, 2)
    DD = dual(dual(F))
    assert prune(DD).rank == 2
    assert annihilator(DD) == A.I
