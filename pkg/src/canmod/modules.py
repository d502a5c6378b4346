"""Quotient rings and finitely presented modules.

Every module is a cokernel ``coker(P: A^s -> A^r)`` over ``A = S/I``.  The
polynomial ring itself is the quotient by the zero ideal.  Matrices over
``A`` are stored with entries reduced modulo ``I``; module Gröbner bases
are computed over ``S`` with the columns ``I·e_c`` appended.
"""

from __future__ import annotations

from .core import Poly, PolyRing
from .errors import PreconditionError, RingMismatchError
from .ideal import Ideal
from .matrix import Matrix, minors
from . import groebner as gb


class QuotientRing:
    """A = S/I with I inside the ideal of the origin."""

    def __init__(self, S: PolyRing, I=None):
        if I is None:
            I = Ideal(S)
        elif not isinstance(I, Ideal):
            I = Ideal(S, I)
        if I.ring != S:
            raise RingMismatchError("ideal lives in another ring")
        for g in I.gens:
            if g.constant_term():
                raise PreconditionError("defining ideal must vanish at the origin")
        self.S = S
        self.I = I
        self._dim = None

    @property
    def ring(self) -> PolyRing:
        return self.S

    def is_polynomial(self) -> bool:
        return self.I.is_zero()

    def ideal_gb(self) -> list[dict]:
        return [] if self.I.is_zero() else self.I.gb_terms()

    def dim(self) -> int:
        if self._dim is None:
            self._dim = self.I.dim()
        return self._dim

    def codim(self) -> int:
        return self.S.n - self.dim()

    def reduce(self, f: Poly) -> Poly:
        if self.I.is_zero():
            return f
        return self.I.normal_form(f)

    def ideal(self, gens) -> Ideal:
        """The ideal of S generated by ``gens`` and I (an ideal of A, lifted)."""
        gens = [self.S(g) if not isinstance(g, Poly) else g for g in gens]
        return Ideal(self.S, list(gens) + list(self.I.gens))

    def reduce_matrix(self, P: Matrix) -> Matrix:
        if self.I.is_zero():
            return P
        return P.map_entries(self.reduce)

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.S == other.S and self.I == other.I

    def __hash__(self):
        return hash((self.S, self.I))

    def __repr__(self):
        return f"QuotientRing({self.S.field.name()}[{','.join(self.S.names)}]/{self.I})"


def as_quotient(A) -> QuotientRing:
    if isinstance(A, QuotientRing):
        return A
    if isinstance(A, PolyRing):
        return QuotientRing(A)
    raise TypeError(f"expected a ring, got {type(A).__name__}")


# ---------------------------------------------------------------- GB helpers


def relation_terms(A: QuotientRing, ford: gb.FreeModuleOrder, cols) -> list[dict]:
    """Reduced GB (term dicts) of the span of ``cols`` plus I·F."""
    pre = gb._pre_terms(A.S, ford, A.ideal_gb())
    return gb.gb_terms(ford, [ford.to_terms(c) for c in cols], pre=pre)


def syzygy_matrix(P: Matrix, A=None, order: gb.FreeModuleOrder | None = None) -> Matrix:
    """Columns generating the kernel of ``P`` over ``A`` (default: over S)."""
    A = as_quotient(A if A is not None else P.ring)
    S = A.S
    ford = order or gb.FreeModuleOrder.top(S, P.nrows)
    ideal_gb = A.ideal_gb()
    pre = gb._pre_terms(S, ford, ideal_gb)
    tracked = [ford.to_terms(c) for c in P.cols]
    so, syz = gb.syzygy_terms(ford, tracked, pre=pre, ideal_gb=ideal_gb)
    return Matrix(S, P.ncols, [so.from_terms(s) for s in syz])


def colon_of_vectors(A: QuotientRing, rank: int, vectors, rel_gb: list[dict]) -> Ideal:
    """{a in S : a*v in N for every v}, where N has the reduced TOP-order GB
    ``rel_gb`` (which must contain I·F)."""
    S = A.S
    vectors = [v for v in vectors]
    if not vectors:
        return Ideal(S, [S.one()])
    m = len(vectors)
    small = gb.FreeModuleOrder.top(S, rank)
    big = gb.FreeModuleOrder.top(S, rank * m)
    cs = S.comp_shift
    pre = []
    v = {}
    for k, vec in enumerate(vectors):
        off = (k * rank) << cs
        for d in rel_gb:
            pre.append({t + off: c for t, c in d.items()})
        for t, c in small.to_terms(vec).items():
            v[t + off] = c
    if not v:
        return Ideal(S, [S.one()])
    _, syz = gb.syzygy_terms(big, [v], pre=pre)
    return Ideal(S, [Poly(S, s) for s in syz] + list(A.I.gens)).minimalized()


# ---------------------------------------------------------------- modules


class FPModule:
    """coker(P) over A, with ``P.nrows`` generators."""

    def __init__(self, A, P: Matrix, labels=None):
        A = as_quotient(A)
        if P.ring != A.S:
            raise RingMismatchError("presentation over another ring")
        self.A = A
        self.P = A.reduce_matrix(P)
        self.labels = labels
        self._rel_gb = None
        self._ann = None

    @classmethod
    def free(cls, A, r: int) -> "FPModule":
        A = as_quotient(A)
        return cls(A, Matrix(A.S, r, []))

    @classmethod
    def cyclic(cls, A, gens) -> "FPModule":
        """A/(gens) as an A-module."""
        A = as_quotient(A)
        return cls(A, Matrix(A.S, 1, [[A.S(g)] for g in gens]))

    @classmethod
    def zero(cls, A) -> "FPModule":
        A = as_quotient(A)
        return cls(A, Matrix(A.S, 0, []))

    @property
    def ring(self) -> QuotientRing:
        return self.A

    @property
    def rank(self) -> int:
        """Number of generators of the presentation (rank of F_0)."""
        return self.P.nrows

    def relation_gb(self) -> list[dict]:
        if self._rel_gb is None:
            ford = gb.FreeModuleOrder.top(self.A.S, self.rank)
            self._rel_gb = relation_terms(self.A, ford, self.P.cols)
        return self._rel_gb

    def is_zero(self) -> bool:
        if self.rank == 0:
            return True
        # the reduced GB of the whole free module is {e_1, ..., e_r}
        S = self.A.S
        ford = gb.FreeModuleOrder.top(S, self.rank)
        leads = {max(d) for d in self.relation_gb()}
        return all(b in leads for b in ford.bases)

    def annihilator(self) -> Ideal:
        if self._ann is None:
            S = self.A.S
            r = self.rank
            if r == 0 or self.is_zero():
                self._ann = Ideal(S, [S.one()])
            else:
                one, z = S.one(), S.zero()
                units = [[one if i == j else z for i in range(r)] for j in range(r)]
                self._ann = colon_of_vectors(self.A, r, units, self.relation_gb())
        return self._ann

    def dim(self) -> int:
        return self.annihilator().dim()

    def fitting_ideal(self, i: int) -> Ideal:
        if i < 0:
            raise ValueError("Fitting index must be nonnegative")
        S = self.A.S
        k = self.rank - i
        if k <= 0:
            return Ideal(S, [S.one()])
        return Ideal(S, minors(self.P, k) + list(self.A.I.gens))

    def prune(self) -> "FPModule":
        return FPModule(self.A, prune_matrix(self.P, self.A))

    def num_generators(self) -> int:
        """Minimal number of generators (graded inputs)."""
        return self.prune().rank

    def over_S(self) -> "FPModule":
        """The same module viewed over the ambient polynomial ring."""
        S = self.A.S
        if self.A.is_polynomial():
            return self
        r = self.rank
        z = S.zero()
        extra = []
        for c in range(r):
            for g in self.A.I.gens:
                col = [z] * r
                col[c] = g
                extra.append(col)
        return FPModule(QuotientRing(S), Matrix(S, r, self.P.cols + extra))

    def __repr__(self):
        return f"FPModule({self.rank} generators, {self.P.ncols} relations over {self.A})"


def _is_unit(f: Poly) -> bool:
    return bool(f.terms) and len(f.terms) == 1 and 0 in f.terms


def prune_matrix(P: Matrix, A=None, partner: Matrix | None = None):
    """Remove unit entries of ``P`` by row and column operations.

    With ``partner`` (the preceding map ``d`` with ``d*P = 0``) the
    columns of ``partner`` matching deleted rows of ``P`` are dropped too,
    and the pair is returned.
    """
    A = as_quotient(A if A is not None else P.ring)
    S = A.S
    F = S.field
    cols = [list(c) for c in P.cols]
    rows_alive = list(range(P.nrows))
    while True:
        pos = None
        for j, c in enumerate(cols):
            for i, e in enumerate(c):
                if _is_unit(e):
                    pos = (i, j)
                    break
            if pos:
                break
        if pos is None:
            break
        r, c = pos
        piv = cols[c]
        uinv = F.inv(piv[r].constant_term())
        for k, col in enumerate(cols):
            if k == c or not col[r]:
                continue
            f = col[r].scale(uinv)
            cols[k] = [A.reduce(a - f * b) if b else a for a, b in zip(col, piv)]
        del cols[c]
        for col in cols:
            del col[r]
        del rows_alive[r]
    cols = [c for c in cols if any(c)]
    out = Matrix(S, len(rows_alive), cols)
    if partner is None:
        return out
    kept = Matrix(S, partner.nrows, [partner.cols[i] for i in rows_alive])
    return kept, out


def minimize_columns(P: Matrix, A=None) -> Matrix:
    """Drop columns lying in the span of the others plus I·F (greedy by
    degree; a minimal set of relations for graded input)."""
    A = as_quotient(A if A is not None else P.ring)
    S = A.S
    cols = [c for c in P.cols if any(c)]
    deg = lambda c: min(f.total_degree() for f in c if f)
    cols.sort(key=deg)
    kept = []
    for j, c in enumerate(cols):
        others = kept + cols[j + 1:]
        if others and contained_in_span(A, [c], others, P.nrows):
            continue
        kept.append(c)
    return Matrix(S, P.nrows, kept)


def prune(M: FPModule) -> FPModule:
    return M.prune()


def is_zero_module(M: FPModule) -> bool:
    return M.is_zero()


def annihilator(M: FPModule) -> Ideal:
    return M.annihilator()


def fitting_ideal(M: FPModule, i: int) -> Ideal:
    return M.fitting_ideal(i)


def module_dimension(M: FPModule) -> int:
    return M.dim()


def contained_in_span(A: QuotientRing, vectors, span_cols, rank: int) -> bool:
    """Every vector lies in the span of ``span_cols`` plus I·F."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return True
    S = A.S
    ford = gb.FreeModuleOrder.top(S, rank)
    G = gb.GroebnerBasis(S, ford, relation_terms(A, ford, span_cols), True)
    return all(G.contains(v) for v in vectors)


class DualModule(FPModule):
    """M* = Hom(M, A), with ``embedding`` the matrix whose columns are its
    generators inside A^r (r = number of generators of M)."""

    def __init__(self, A, P: Matrix, embedding: Matrix):
        super().__init__(A, P)
        self.embedding = embedding


def dual(M: FPModule) -> DualModule:
    A = M.A
    P = prune_matrix(M.P, A)
    K = syzygy_matrix(P.transpose(), A)
    K = Matrix(A.S, P.nrows, [c for c in K.cols])
    Q = syzygy_matrix(K, A)
    return DualModule(A, Q, K)


def double_dual_with_map(M: FPModule):
    """(M**, kernel of M -> M** is zero, cokernel is zero)."""
    A = M.A
    P = prune_matrix(M.P, A)
    r = P.nrows
    if r == 0:
        return FPModule.zero(A), True, True
    K = syzygy_matrix(P.transpose(), A)  # generators of M* in A^r
    k = K.ncols
    Q = syzygy_matrix(K, A)  # presentation of M*
    L = syzygy_matrix(Q.transpose(), A) if k else Matrix(A.S, 0, [])  # M** inside A^k
    Mdd = FPModule(A, syzygy_matrix(L, A), None)
    Kt = K.transpose()  # phi: A^r -> A^k
    if k == 0:
        ker_zero = M.is_zero()
        return Mdd, ker_zero, True
    ker_gens = syzygy_matrix(Kt, A)
    kernel_zero = contained_in_span(A, ker_gens.cols, P.cols, r)
    cokernel_zero = contained_in_span(A, L.cols, Kt.cols, k)
    return Mdd, kernel_zero, cokernel_zero
