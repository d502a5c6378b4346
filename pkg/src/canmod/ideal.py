"""Ideals of a polynomial ring with a cached reduced Gröbner basis."""

from __future__ import annotations

from .core import Poly, PolyRing
from .errors import RingMismatchError
from . import groebner as gb


class Ideal:
    def __init__(self, ring: PolyRing, gens=()):
        gens = [ring(g) if not isinstance(g, Poly) else g for g in gens]
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from another ring")
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._gb = None

    # -- Gröbner data

    def groebner(self) -> gb.GroebnerBasis:
        if self._gb is None:
            self._gb = gb.buchberger(self.gens, ring=self.ring)
        return self._gb

    def gb_terms(self) -> list[dict]:
        return self.groebner().terms

    def basis(self) -> list[Poly]:
        return self.groebner().elements

    def normal_form(self, f: Poly) -> Poly:
        return self.groebner().normal_form(self.ring(f))

    # -- predicates

    def contains(self, f) -> bool:
        return self.groebner().contains(self.ring(f))

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return self.gb_terms() == other.gb_terms()

    def __hash__(self):
        return hash(tuple(frozenset(d.items()) for d in self.gb_terms()))

    def radical_contains(self, f) -> bool:
        """``f`` lies in the radical (via 1 - t f)."""
        f = self.ring(f)
        if not f:
            return True
        name = "_r"
        while name in self.ring.names:
            name += "_"
        R = self.ring.extend([name])
        t = R.var(name)
        gens = [R.convert(g) for g in self.gens] + [1 - t * R.convert(f)]
        return Ideal(R, gens).is_unit()

    def radical_contains_ideal(self, other: "Ideal") -> bool:
        return all(self.radical_contains(g) for g in other.gens)

    # -- invariants

    def dim(self) -> int:
        """Krull dimension of S/I (-1 for the unit ideal)."""
        if self.is_zero():
            return self.ring.n
        return gb.dimension_from_leads(self.groebner().leads(), self.ring)

    def codim(self) -> int:
        d = self.dim()
        return self.ring.n - d if d >= 0 else self.ring.n + 1

    # -- operations

    def _check(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise RingMismatchError("ideals of different rings")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, k: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out.minimalized()

    def minimalized(self) -> "Ideal":
        """Same ideal generated by its reduced Gröbner basis."""
        J = Ideal(self.ring, self.basis())
        J._gb = self._gb
        return J

    def intersect(self, other: "Ideal") -> "Ideal":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        return Ideal(self.ring, gb.intersect_gens(self.gens, other.gens, self.ring)).minimalized()

    def colon(self, other, saturate: bool = False) -> "Ideal":
        """(self : other); with ``saturate`` the stable value of iterated colons."""
        if isinstance(other, Poly):
            other = Ideal(self.ring, [other])
        self._check(other)
        if other.is_zero():
            raise ValueError("colon by the zero ideal")
        if not saturate:
            return colon_ideal(self, other)
        cur = self
        while True:
            nxt = colon_ideal(cur, other)
            if nxt == cur:
                return cur
            cur = nxt

    def saturate(self, other) -> "Ideal":
        return self.colon(other, saturate=True)

    def eliminate(self, names) -> "Ideal":
        return Ideal(self.ring, gb.eliminate_gens(self.gens, self.ring, names))

    def map_to(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, [ring.convert(g) for g in self.gens])

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens)) or '0'})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) in one syzygy computation: a with a*g_k in I for every k."""
    ring = I.ring
    m = len(J.gens)
    if I.is_zero():
        # (0 : J) is zero in a domain
        return Ideal(ring)
    ford = gb.FreeModuleOrder.top(ring, m)
    pre = gb._pre_terms(ring, ford, I.gb_terms())
    v = ford.to_terms(list(J.gens))
    _, syz = gb.syzygy_terms(ford, [v], pre=pre)
    gens = [Poly(ring, s) for s in syz]
    return Ideal(ring, gens).minimalized()


def ideal(ring: PolyRing, *gens) -> Ideal:
    if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
        gens = gens[0]
    return Ideal(ring, gens)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    return I.intersect(J)


def ideal_colon(I: Ideal, J: Ideal, saturate: bool = False) -> Ideal:
    return I.colon(J, saturate=saturate)


def eliminate(I: Ideal, names) -> Ideal:
    return I.eliminate(names)


def krull_dimension(I: Ideal) -> int:
    return I.dim()


def ideal_membership(f, I: Ideal) -> bool:
    return I.contains(f)


def radical_membership(f, I: Ideal) -> bool:
    return I.radical_contains(f)
