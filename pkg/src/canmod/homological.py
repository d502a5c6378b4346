"""Free resolutions, Ext, the Auslander transpose, canonical modules, depth."""

from __future__ import annotations

from .errors import PreconditionError, ResourceExceeded
from .ideal import Ideal
from .matrix import Matrix
from .modules import (
    FPModule,
    QuotientRing,
    minimize_columns,
    as_quotient,
    colon_of_vectors,
    prune_matrix,
    relation_terms,
    syzygy_matrix,
)
from . import groebner as gb


class FreeResolution:
    """``F_0 <- F_1 <- ... <- F_L`` given by matrices ``maps[k-1] = d_k``.

    Every map except possibly the last one is minimal.  ``complete`` means
    the kernel of the last map is known to be zero.
    """

    def __init__(self, A: QuotientRing, maps: list[Matrix], rank0: int):
        self.A = A
        self.maps = maps
        self.rank0 = rank0
        self.complete = False
        self._orders = [gb.FreeModuleOrder.top(A.S, rank0)]

    @property
    def over_S(self) -> bool:
        return self.A.is_polynomial()

    @property
    def length(self) -> int:
        return len(self.maps)

    def rank(self, k: int) -> int:
        if k == 0:
            return self.rank0
        if k <= len(self.maps):
            return self.maps[k - 1].ncols
        if self.complete:
            return 0
        raise IndexError("resolution not computed that far")

    def betti(self) -> list[int]:
        out = [self.rank0] + [d.ncols for d in self.maps]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def map(self, k: int) -> Matrix:
        """d_k : F_k -> F_{k-1}; a zero map past the end of a complete resolution."""
        if k <= len(self.maps):
            return self.maps[k - 1]
        if self.complete:
            return Matrix(self.A.S, self.rank(k - 1), [])
        raise IndexError("resolution not computed that far")

    def _order(self, k: int) -> gb.FreeModuleOrder:
        """Schreyer order on F_k induced by the current (pruned) maps."""
        while len(self._orders) <= k:
            j = len(self._orders)
            prev = self._orders[j - 1]
            d = self.maps[j - 1]
            self._orders.append(gb.FreeModuleOrder.induced(prev, [prev.to_terms(c) for c in d.cols]))
        return self._orders[k]

    def extend(self) -> bool:
        """Compute one more map; returns False once the resolution is complete."""
        if self.complete:
            return False
        k = len(self.maps)
        if k == 0:
            self.complete = self.rank0 == 0
            return not self.complete
        d = self.maps[-1]
        if d.ncols == 0:
            self.complete = True
            return False
        order = self._order(k - 1)
        syz = syzygy_matrix(d, self.A, order=order)
        if syz.ncols == 0:
            self.complete = True
            return False
        d_new, syz = prune_matrix(syz, self.A, partner=d)
        self.maps[-1] = d_new
        del self._orders[k:]
        if syz.ncols == 0:
            self.complete = True
            return False
        self.maps.append(syz)
        return True

    def extend_to(self, length: int):
        while len(self.maps) < length and self.extend():
            pass

    def check_composition(self) -> bool:
        for k in range(1, len(self.maps)):
            prod = self.maps[k - 1] * self.maps[k]
            if any(self.A.reduce(e) for c in prod.cols for e in c):
                return False
        return True


def start_resolution(M: FPModule) -> FreeResolution:
    P = prune_matrix(M.P, M.A)
    return FreeResolution(M.A, [P], P.nrows)


def free_resolution(M: FPModule, max_length: int = 10) -> FreeResolution:
    """Minimal resolution up to ``max_length`` maps (complete when it ends
    earlier).  Over A a cap that is reached raises nothing: the result is
    simply not ``complete``."""
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    res = start_resolution(M)
    try:
        res.extend_to(max_length + 1)
    except ResourceExceeded as exc:
        exc.partial = res
        raise
    if len(res.maps) > max_length:
        # the extra map only served to make the last kept map minimal
        del res.maps[max_length:]
        res.complete = False
        res._orders = res._orders[: max_length + 1]
    return res


# ---------------------------------------------------------------- subquotients


class Subquotient:
    """(span of ``gens`` + N) / N inside A^rank, N = span of ``rels`` + I·A^rank."""

    def __init__(self, A: QuotientRing, rank: int, gens: Matrix, rels: Matrix):
        self.A = A
        self.rank_ = rank
        self.gens = gens
        self.rels = rels
        self._rel_gb = None
        self._ann = None
        self._zero = None

    def rel_gb(self) -> list[dict]:
        if self._rel_gb is None:
            ford = gb.FreeModuleOrder.top(self.A.S, self.rank_)
            self._rel_gb = relation_terms(self.A, ford, self.rels.cols)
        return self._rel_gb

    def is_zero(self) -> bool:
        if self._zero is None:
            S = self.A.S
            ford = gb.FreeModuleOrder.top(S, self.rank_)
            G = gb.GroebnerBasis(S, ford, self.rel_gb(), True)
            self._zero = all(G.contains(c) for c in self.gens.cols)
        return self._zero

    def annihilator(self) -> Ideal:
        if self._ann is None:
            S = self.A.S
            if self.is_zero():
                self._ann = Ideal(S, [S.one()])
            else:
                self._ann = colon_of_vectors(self.A, self.rank_, self.gens.cols, self.rel_gb())
        return self._ann

    def dim(self) -> int:
        return self.annihilator().dim()

    def to_module(self) -> FPModule:
        A = self.A
        S = A.S
        if self.gens.ncols == 0:
            return FPModule.zero(A)
        ford = gb.FreeModuleOrder.top(S, self.rank_)
        tracked = [ford.to_terms(c) for c in self.gens.cols]
        so, syz = gb.syzygy_terms(ford, tracked, pre=self.rel_gb(), ideal_gb=A.ideal_gb())
        P = Matrix(S, self.gens.ncols, [so.from_terms(s) for s in syz])
        return FPModule(A, prune_matrix(P, A))


def ext_subquotient(res: FreeResolution, i: int) -> Subquotient:
    """Ext^i(M, A) = ker(d_{i+1}^T) / im(d_i^T) from a resolution of M."""
    A = res.A
    S = A.S
    res.extend_to(i + 1)
    ri = res.rank(i)
    if ri == 0:
        return Subquotient(A, 0, Matrix(S, 0, []), Matrix(S, 0, []))
    d_next = res.map(i + 1)
    if d_next.ncols == 0:
        K = Matrix.identity(S, ri)
    else:
        K = syzygy_matrix(d_next.transpose(), A)
    rels = res.map(i).transpose() if i >= 1 else Matrix(S, ri, [])
    return Subquotient(A, ri, K, rels)


def ext_module(i: int, M: FPModule, over=None, resolution_cap: int = 10) -> FPModule:
    """Ext^i(M, ring) where ring is ``over`` (a QuotientRing, default M's ring)."""
    if i < 0:
        raise ValueError("negative Ext index")
    if over is not None:
        over = as_quotient(over)
        if over != M.A:
            if not over.is_polynomial() or over.S != M.A.S:
                raise PreconditionError("Ext is only available over S or over the module's ring")
            M = M.over_S()
    if not M.A.is_polynomial() and i + 1 > resolution_cap:
        raise ResourceExceeded(f"Ext^{i} needs {i + 1} resolution steps, cap is {resolution_cap}")
    res = start_resolution(M)
    return ext_subquotient(res, i).to_module()


def auslander_transpose(M: FPModule) -> FPModule:
    P = prune_matrix(M.P, M.A)
    return FPModule(M.A, P.transpose())


# ---------------------------------------------------------------- S-side data


def _cache(A: QuotientRing) -> dict:
    c = getattr(A, "_hcache", None)
    if c is None:
        c = {}
        A._hcache = c
    return c


def s_resolution(M: FPModule) -> FreeResolution:
    """Complete minimal resolution of M over the ambient polynomial ring."""
    N = M.over_S()
    res = start_resolution(N)
    res.extend_to(N.A.S.n + 2)
    if not res.complete:
        raise AssertionError("resolution over a polynomial ring did not terminate")
    return res


def ring_as_module(A: QuotientRing) -> FPModule:
    """A as a cyclic S-module."""
    S = A.S
    return FPModule(QuotientRing(S), Matrix(S, 1, [[g] for g in A.I.gens]))


def ring_s_resolution(A: QuotientRing) -> FreeResolution:
    c = _cache(A)
    if "sres" not in c:
        c["sres"] = s_resolution(ring_as_module(A))
    return c["sres"]


class ExtProfile:
    """Ext^i_S(M, S) for all i, with cached annihilators."""

    def __init__(self, res: FreeResolution):
        self.res = res
        self.n = res.A.S.n
        self.pd = len(res.betti()) - 1
        self._subs = {}

    def sub(self, i: int) -> Subquotient:
        if i not in self._subs:
            self._subs[i] = ext_subquotient(self.res, i)
        return self._subs[i]

    def ann(self, i: int) -> Ideal:
        S = self.res.A.S
        if i < 0 or i > self.pd:
            return Ideal(S, [S.one()])
        return self.sub(i).annihilator()

    def nonzero(self, i: int) -> bool:
        return 0 <= i <= self.pd and not self.sub(i).is_zero()


def ext_profile(M) -> ExtProfile:
    """Ext profile over S of an FPModule, or of a QuotientRing as a module."""
    if isinstance(M, QuotientRing):
        c = _cache(M)
        if "prof" not in c:
            c["prof"] = ExtProfile(ring_s_resolution(M))
        return c["prof"]
    cache = getattr(M, "_prof", None)
    if cache is None:
        cache = ExtProfile(s_resolution(M))
        M._prof = cache
    return cache


def canonical_module(A: QuotientRing) -> FPModule:
    """K_A = Ext^c_S(A, S), c = codim, as a pruned A-module."""
    A = as_quotient(A)
    c = _cache(A)
    if "K" not in c:
        if A.I.is_unit():
            raise PreconditionError("the zero ring has no canonical module")
        codim = A.codim()
        E = ext_profile(A).sub(codim).to_module()
        c["K"] = FPModule(A, minimize_columns(prune_matrix(E.P, A), A))
    return c["K"]


def depth_and_pd(M):
    """(depth, projective dimension over S) of a module or of A itself."""
    if isinstance(M, QuotientRing):
        if M.I.is_unit():
            raise PreconditionError("depth of the zero ring")
        prof = ext_profile(M)
    else:
        if M.is_zero():
            raise PreconditionError("depth of the zero module")
        prof = ext_profile(M)
    pd = prof.pd
    return prof.n - pd, pd


def depth(M) -> int:
    return depth_and_pd(M)[0]
