"""Constructors for example families, returned as ``RingInput`` documents."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from functools import reduce

from .core import PolyRing
from .errors import PreconditionError
from .ideal import Ideal
from .matrix import Matrix, minors
from .modules import FPModule, as_quotient
from .ringfile import RingInput


def _doc(S: PolyRing, gens, primes=(), canonical=None) -> RingInput:
    return RingInput(
        names=S.names,
        characteristic=S.char,
        ideal=[g for g in gens if g],
        primes=[(f"P{k + 1}", list(p)) for k, p in enumerate(primes)],
        canonical_ideal=("J", list(canonical)) if canonical else None,
    )


def _names(prefix: str, n: int, short: str = "") -> list[str]:
    if short and n <= len(short):
        return list(short[:n])
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _maximal(S: PolyRing):
    return list(S.gens())


# ---------------------------------------------------------------- families


def stanley_reisner(n: int, facets) -> RingInput:
    """Face ring of the simplicial complex on {1..n} with the given facets."""
    if n < 1:
        raise PreconditionError("need at least one vertex")
    fs = [frozenset(f) for f in facets]
    if not fs:
        raise PreconditionError("need at least one facet")
    for f in fs:
        if not f or not f <= set(range(1, n + 1)):
            raise PreconditionError(f"invalid facet {sorted(f)}")
    for a, b in combinations(fs, 2):
        if a <= b or b <= a:
            raise PreconditionError("facets must be mutually non-contained")
    S = PolyRing([f"x{i}" for i in range(1, n + 1)])
    nonfaces = []
    for k in range(1, n + 1):
        for sub in combinations(range(1, n + 1), k):
            s = set(sub)
            if any(s <= f for f in fs):
                continue
            if any(m <= s for m in nonfaces):
                continue
            nonfaces.append(frozenset(s))
    gens = []
    for s in nonfaces:
        g = S.one()
        for i in sorted(s):
            g = g * S.var(i - 1)
        gens.append(g)
    # the minimal primes are generated by the complements of the facets
    primes = [[S.var(i - 1) for i in range(1, n + 1) if i not in f] for f in fs]
    primes = [p for p in primes if p]
    return _doc(S, gens, primes)


def semigroup_ring(gens, adjoin_free_var: bool = False) -> RingInput:
    """k[t^a : a in gens] (with a free variable s when flagged) by eliminating t."""
    gens = list(gens)
    if not gens or any(a < 2 for a in gens):
        raise PreconditionError("semigroup generators must be at least 2")
    if reduce(gcd, gens) != 1:
        raise PreconditionError("semigroup generators must have gcd 1")
    names = _names("u", len(gens), "xyzw")
    lead = ["s"] if adjoin_free_var else []
    S = PolyRing(lead + names)
    T = S.extend(["t"])
    t = T.var("t")
    rel = [T.var(v) - t ** a for v, a in zip(names, gens)]
    I = Ideal(T, rel).eliminate(["t"]).map_to(S).minimalized()
    return _doc(S, I.gens, [I.gens, _maximal(S)])


def determinantal(l: int, m: int, t: int, specialize=None) -> RingInput:
    """Ideal of t x t minors of the generic l x m matrix, or with
    ``specialize = (a, b, c, a', b', c')`` the 2 x 2 minors of
    [[x^a, y^b + v, z^c], [y^b', z^c', x^a']] in Q[x,y,z,v]."""
    if specialize is not None:
        if (l, m, t) != (2, 3, 2):
            raise PreconditionError("specialization is only defined for the 2 x 3 shape")
        if len(specialize) != 6 or any(e < 1 for e in specialize):
            raise PreconditionError("specialization needs six exponents >= 1")
        a, b, c, a2, b2, c2 = specialize
        S = PolyRing(["x", "y", "z", "v"])
        x, y, z, v = S.gens()
        M = Matrix.from_rows(S, [[x ** a, y ** b + v, z ** c], [y ** b2, z ** c2, x ** a2]])
        I = minors(M, 2)
        return _doc(S, I, [I, _maximal(S)])
    if not (2 <= t <= min(l, m)):
        raise PreconditionError("need 2 <= t <= min(l, m)")
    S = PolyRing([f"x{i}{j}" for i in range(1, l + 1) for j in range(1, m + 1)])
    M = Matrix.from_rows(S, [[S.var(f"x{i}{j}") for j in range(1, m + 1)] for i in range(1, l + 1)])
    I = minors(M, t)
    return _doc(S, I, [I, _maximal(S)])


def rees_of_parameters(d: int, l: int) -> RingInput:
    """Rees algebra of (x_1, ..., x_l) in Q[x_1..x_d], as Q[x, T]/I_2."""
    if not (3 <= l <= d):
        raise PreconditionError("need 3 <= l <= d")
    xs = _names("x", d, "xyzw")
    Ts = [f"T{i}" for i in range(1, l + 1)]
    S = PolyRing(xs + Ts)
    M = Matrix.from_rows(S, [[S.var(v) for v in Ts], [S.var(v) for v in xs[:l]]])
    I = minors(M, 2)
    return _doc(S, I, [I, _maximal(S)])


def idealization(A, M: FPModule, prefix: str = "Y") -> RingInput:
    """A x M with M^2 = 0: new variables Y_1..Y_r for the generators of M."""
    A = as_quotient(A)
    S = A.S
    r = M.rank
    if r == 0:
        return _doc(S, A.I.gens)
    new = [f"{prefix}{j}" for j in range(1, r + 1)]
    if set(new) & set(S.names):
        raise PreconditionError("idealization variable names clash with the ring")
    T = S.extend(new, order=S.order)
    Y = [T.var(v) for v in new]
    gens = [T.convert(g) for g in A.I.gens]
    gens += [Y[j] * Y[k] for j in range(r) for k in range(j, r)]
    for col in M.P.cols:
        rel = T.zero()
        for j, p in enumerate(col):
            if p:
                rel = rel + T.convert(p) * Y[j]
        gens.append(rel)
    return _doc(T, Ideal(T, gens).minimalized().gens)


# ---------------------------------------------------------------- gallery


@dataclass
class GalleryRing:
    name: str
    doc: RingInput
    note: str = ""

    def build(self):
        """(QuotientRing, [prime Ideals], canonical Ideal or None)."""
        return self.doc.build()


def _from_text(S: PolyRing, gens, primes, canonical=None) -> RingInput:
    conv = lambda fs: [S(f) for f in fs]
    return _doc(S, conv(gens), [conv(p) for p in primes], conv(canonical) if canonical else None)


def _idealization_345() -> RingInput:
    from .homological import canonical_module

    base = semigroup_ring([3, 4, 5])
    A, _, _ = base.build()
    K = canonical_module(A)
    doc = idealization(A, K)
    S = doc.poly_ring()
    conv = lambda fs: [S.convert(f) for f in fs]
    ys = [S.var(v) for v in S.names if v.startswith("Y")]
    doc.primes = [("P1", conv(base.ideal) + ys), ("P2", list(S.gens()))]
    return doc


def gallery() -> list[GalleryRing]:
    """The example rings with curated prime lists covering Ass."""
    x3 = PolyRing(["x", "y", "z"])
    x2 = PolyRing(["x", "y"])
    out = [
        GalleryRing(
            "xy_xz",
            _from_text(x3, ["x*y", "x*z"], [["x"], ["y", "z"], ["x", "y", "z"]]),
            "plane union line",
        ),
        GalleryRing(
            "plane_and_fat_line",
            _from_text(x3, ["x*y^2", "x*y*z", "x*z^2"], [["x"], ["y", "z"], ["x", "y", "z"]]),
            "(x) intersect (y,z)^2",
        ),
        GalleryRing(
            "embedded_origin",
            _from_text(x2, ["x^2", "x*y"], [["x"], ["x", "y"]]),
            "(x) intersect (x^2,y)",
        ),
        GalleryRing("face_ring_two_planes_line", stanley_reisner(3, [{1, 2}, {3}]), "facets {1,2},{3}"),
        GalleryRing("face_ring_two_lines", stanley_reisner(3, [{1, 2}, {2, 3}]), "facets {1,2},{2,3}"),
        GalleryRing("semigroup_345", semigroup_ring([3, 4, 5]), "k[t^3,t^4,t^5]"),
        GalleryRing("semigroup_23", semigroup_ring([2, 3]), "k[t^2,t^3]"),
        GalleryRing("semigroup_23_free", semigroup_ring([2, 3], adjoin_free_var=True), "k[s,t^2,t^3]"),
        GalleryRing("determinantal_specialized", determinantal(2, 3, 2, (1, 1, 1, 1, 1, 1)), "type two"),
        GalleryRing("segre_2x3", determinantal(2, 3, 2), "generic 2 x 3 minors"),
        GalleryRing("generic_2x2", determinantal(2, 2, 2), "Gorenstein hypersurface"),
        GalleryRing("rees_3_3", rees_of_parameters(3, 3), "Rees algebra of (x,y,z)"),
        GalleryRing("idealization_345", _idealization_345(), "k[t^3,t^4,t^5] x K"),
        GalleryRing("node", _from_text(x2, ["x*y"], [["x"], ["y"], ["x", "y"]], ["x+y"]), "xy = 0"),
        GalleryRing("polynomial_xy", _from_text(x2, [], [[]]), "no relations"),
        GalleryRing(
            "double_plane_and_line",
            _from_text(x3, ["x^2*y", "x^2*z"], [["x"], ["y", "z"], ["x", "y", "z"]]),
            "(x^2) intersect (y,z)",
        ),
    ]
    # canonical ideals for the one-dimensional semigroup rings
    S345 = out[5].doc.poly_ring()
    out[5].doc.canonical_ideal = ("J", [S345("x"), S345("y")])
    S23 = out[6].doc.poly_ring()
    out[6].doc.canonical_ideal = ("J", [S23("x")])
    return out


def gallery_ring(name: str) -> GalleryRing:
    for g in gallery():
        if g.name == name:
            return g
    raise KeyError(name)
