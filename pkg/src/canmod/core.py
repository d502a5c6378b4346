"""Coefficient fields, monomial orders, polynomial rings and polynomials.

A monomial is stored as one packed integer.  From the least significant
bit upwards the layout is::

    exponents (16 bits per variable, top bit is a guard bit)
    component index (24 bits, zero for ring monomials)
    order key (one 32 bit field per linear functional of the order)

The order key holds linear functionals of the exponent vector, most
significant first, so comparing two packed monomials as integers compares
them in the monomial order.  Multiplying monomials is integer addition.
``a`` divides ``b`` exactly when ``(b - a) & guards == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

from gmpy2 import mpq

from .errors import RingMismatchError, ResourceExceeded

EXP_BITS = 16
MAX_EXPONENT = (1 << (EXP_BITS - 1)) - 1
COMP_BITS = 24
KEY_BITS = 32
MAX_VARS = 16


# ---------------------------------------------------------------- fields


class RationalField:
    """The rationals, with ``gmpy2.mpq`` elements (always reduced)."""

    characteristic = 0

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, x):
        if isinstance(x, str):
            return mpq(Fraction(x.strip()))
        if isinstance(x, (Integral, Rational)) or type(x).__name__ == "mpq":
            return mpq(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def name(self) -> str:
        return "Q"


class PrimeField:
    """GF(p) for a prime p < 2**31; elements are ints in [0, p)."""

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or p >= 2**31 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {p}")
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, x):
        p = self.characteristic
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Integral):
            return int(x) % p
        if isinstance(x, Rational) or type(x).__name__ == "mpq":
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes in GF({p})")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {x!r} into GF({p})")

    def inv(self, x):
        if not x % self.characteristic:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(x), -1, self.characteristic)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"

    def name(self) -> str:
        return f"GF({self.characteristic})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------- orders


@dataclass(frozen=True)
class MonomialOrder:
    """A ring monomial order.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``.  ``"elim"`` compares
    ``weights . e`` first and breaks ties by grevlex; with a 0/1 weight
    vector it is an elimination order for the weighted variables.
    """

    kind: str = "grevlex"
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and not self.weights:
            raise ValueError("elim order needs a weight vector")
        if self.weights is not None and any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    def functionals(self, n: int) -> list[tuple[int, ...]]:
        """Linear forms compared lexicographically, most significant first."""
        grevlex = [tuple(1 if i < n - f else 0 for i in range(n)) for f in range(n)]
        if self.kind == "grevlex":
            return grevlex
        if self.kind == "lex":
            return [tuple(1 if i == f else 0 for i in range(n)) for f in range(n)]
        if len(self.weights) != n:
            raise ValueError("weight vector length must equal the number of variables")
        return [tuple(self.weights)] + grevlex

    def key(self, exps) -> tuple[int, ...]:
        return tuple(sum(a * e for a, e in zip(f, exps)) for f in self.functionals(len(exps)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def compare_monomials(m1, m2, order: MonomialOrder = GREVLEX) -> int:
    """Return -1, 0 or 1 as the exponent vector ``m1`` is below, equal to or
    above ``m2``."""
    if len(m1) != len(m2):
        raise RingMismatchError(f"arity mismatch: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    if k1 == k2:
        return 0 if tuple(m1) == tuple(m2) else (1 if tuple(m1) > tuple(m2) else -1)
    return 1 if k1 > k2 else -1


# ---------------------------------------------------------------- rings


class PolyRing:
    """k[x_1, ..., x_n] with a fixed monomial order (x_1 > x_2 > ... )."""

    def __init__(self, names, field=QQ, order: MonomialOrder | str = GREVLEX):
        names = tuple(names)
        if len(names) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables are supported")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if isinstance(order, str):
            order = MonomialOrder(order)
        self.names = names
        self.field = field
        self.order = order
        self.n = n = len(names)
        self.char = field.characteristic

        funcs = order.functionals(n) if n else [()]
        self.nkeys = len(funcs)
        self.exp_bits = EXP_BITS * n
        self.exp_mask = (1 << self.exp_bits) - 1
        self.guards = sum(1 << (EXP_BITS * i + EXP_BITS - 1) for i in range(n))
        self.comp_shift = self.exp_bits
        self.comp_mask = (1 << COMP_BITS) - 1
        self.key_shift = self.exp_bits + COMP_BITS
        self.p_shift = self.key_shift + KEY_BITS * self.nkeys
        self.test_mask = self.guards | (self.comp_mask << self.comp_shift)
        self._shifts = tuple(EXP_BITS * i for i in range(n))
        self._emask = (1 << EXP_BITS) - 1
        var = []
        for i in range(n):
            key = 0
            for f in funcs:
                key = (key << KEY_BITS) | f[i]
            var.append((key << self.key_shift) | (1 << (EXP_BITS * i)))
        self.var_enc = tuple(var)
        self._index = {name: i for i, name in enumerate(names)}

    # -- identity

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"PolyRing({self.field.name()}[{','.join(self.names)}], {self.order.kind})"

    # -- monomial encoding

    def enc(self, exps) -> int:
        if len(exps) != self.n:
            raise RingMismatchError(f"exponent vector of length {len(exps)} in a ring of arity {self.n}")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        if any(e > MAX_EXPONENT for e in exps):
            raise ResourceExceeded(f"exponent above {MAX_EXPONENT}")
        return sum(e * v for e, v in zip(exps, self.var_enc))

    def exps(self, m: int) -> tuple[int, ...]:
        em = self._emask
        return tuple((m >> s) & em for s in self._shifts)

    def enc_packed(self, packed: int) -> int:
        """Ring monomial from the packed exponent part of a (module) term."""
        em = self._emask
        return sum(((packed >> s) & em) * v for s, v in zip(self._shifts, self.var_enc))

    def mono_degree(self, m: int) -> int:
        return (m & self.exp_mask) % self._emask if self.n else 0

    def lcm_packed(self, a: int, b: int) -> int:
        """Fieldwise max of the exponent parts of two terms."""
        a &= self.exp_mask
        b &= self.exp_mask
        g = ((a | self.guards) - b) & self.guards
        full = g - (g >> (EXP_BITS - 1))
        return (a & full) | (b & ~full & self.exp_mask)

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self.test_mask)

    # -- element construction

    def __call__(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring != self:
                raise RingMismatchError("polynomial from another ring")
            return x
        if isinstance(x, str):
            from .ringfile import parse_poly

            return parse_poly(x, self)
        return self.const(x)

    def const(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {0: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {0: self.field.one})

    def var(self, name_or_index) -> "Poly":
        i = self._index[name_or_index] if isinstance(name_or_index, str) else int(name_or_index)
        return Poly(self, {self.var_enc[i]: self.field.one})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(i) for i in range(self.n))

    def index(self, name: str) -> int:
        return self._index[name]

    def monomial(self, exps, coeff=1) -> "Poly":
        c = self.field(coeff)
        return Poly(self, {self.enc(exps): c} if c else {})

    def from_dict(self, d) -> "Poly":
        """Build from ``{exponent tuple: coefficient}``."""
        terms = {}
        F = self.field
        for e, c in d.items():
            c = F(c)
            if c:
                m = self.enc(tuple(e))
                v = terms.get(m, F.zero) + c
                if self.char:
                    v %= self.char
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return Poly(self, terms)

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.names, self.field, order)

    def extend(self, names, order=None) -> "PolyRing":
        """Ring with extra variables appended (after the existing ones)."""
        return PolyRing(self.names + tuple(names), self.field, order or GREVLEX)

    def convert(self, f: "Poly") -> "Poly":
        """Map ``f`` into this ring by variable name; missing variables must not occur."""
        if f.ring == self:
            return f
        pos = []
        for i, name in enumerate(f.ring.names):
            pos.append(self._index.get(name))
        out = {}
        for m, c in f.terms.items():
            e = f.ring.exps(m)
            new = [0] * self.n
            for i, ei in enumerate(e):
                if ei:
                    if pos[i] is None:
                        raise RingMismatchError(f"variable {f.ring.names[i]} not in target ring")
                    new[pos[i]] = ei
            out[self.enc(new)] = self.field(c) if f.ring.field != self.field else c
        return Poly(self, {m: c for m, c in out.items() if c})


# ---------------------------------------------------------------- polys


class Poly:
    """An element of a :class:`PolyRing`.

    ``terms`` maps packed monomials to nonzero coefficients.  Treat as
    immutable; every operation returns a new polynomial.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, self.ring.field.zero)

    def lead(self) -> int:
        return max(self.terms)

    def leading_data(self):
        """(exponent tuple, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return self.ring.exps(m), self.terms[m]

    def sorted_terms(self):
        """``[(exponents, coefficient)]`` in descending order."""
        r = self.ring
        return [(r.exps(m), self.terms[m]) for m in sorted(self.terms, reverse=True)]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.mono_degree(m) for m in self.terms)

    def is_homogeneous(self, weights=None) -> bool:
        if not self.terms:
            return True
        r = self.ring
        if weights is None:
            degs = {r.mono_degree(m) for m in self.terms}
        else:
            degs = {sum(w * e for w, e in zip(weights, r.exps(m))) for m in self.terms}
        return len(degs) == 1

    def variables(self) -> set[int]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(self.ring.exps(m)):
                if e:
                    used.add(i)
        return used

    def exponent_dict(self) -> dict:
        return {self.ring.exps(m): c for m, c in self.terms.items()}

    # -- arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError("polynomials from different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.char
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.char
        if p:
            return Poly(self.ring, {m: (-c) % p for m, c in self.terms.items()})
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.char
        if p:
            return Poly(self.ring, {m: v * c % p for m, v in self.terms.items()})
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, m: int, c) -> "Poly":
        p = self.ring.char
        if p:
            return Poly(self.ring, {t + m: v * c % p for t, v in self.terms.items()})
        return Poly(self.ring, {t + m: v * c for t, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        if self.total_degree() + other.total_degree() > MAX_EXPONENT:
            raise ResourceExceeded("degree overflow in multiplication")
        p = self.ring.char
        out: dict = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 + m2
                v = get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        if p:
            out = {m: v % p for m, v in out.items() if v % p}
        else:
            out = {m: v for m, v in out.items() if v}
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.terms[max(self.terms)]))

    def substitute(self, values: dict) -> "Poly":
        """Substitute polynomials (of the same ring) for variables by name."""
        r = self.ring
        images = [values.get(name, r.var(i)) for i, name in enumerate(r.names)]
        images = [r(v) if not isinstance(v, Poly) else v for v in images]
        out = r.zero()
        for m, c in self.terms.items():
            term = r.const(c)
            for i, e in enumerate(r.exps(m)):
                if e:
                    term = term * images[i] ** e
            out = out + term
        return out

    # -- printing

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def format_coeff(c) -> str:
    return str(c)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    r = f.ring
    parts = []
    for m in sorted(f.terms, reverse=True):
        c = f.terms[m]
        mono = "*".join(
            r.names[i] if e == 1 else f"{r.names[i]}^{e}"
            for i, e in enumerate(r.exps(m))
            if e
        )
        neg = False
        if not r.char and c < 0:
            neg, c = True, -c
        cs = format_coeff(c)
        if "/" in cs and mono:
            cs = f"({cs})"
        if not mono:
            body = cs
        elif c == 1:
            body = mono
        else:
            body = f"{cs}*{mono}"
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_ring_arith(op: str, f: Poly, g=None) -> Poly:
    """Dispatch helper for the four basic operations."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "neg":
        return -f
    if op == "scalar":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def leading_data(f: Poly, order: MonomialOrder | None = None):
    """Leading monomial and coefficient of ``f`` under ``order`` (default:
    the ring's own order)."""
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    if order is None or order == f.ring.order:
        return f.leading_data()
    return f.ring.with_order(order).convert(f).leading_data()
