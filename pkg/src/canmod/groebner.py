"""Buchberger's algorithm for ideals and submodules of free modules.

Module elements are dicts ``packed term -> coefficient``.  A term of a
free module is ``base[c] + m`` where ``m`` is a packed ring monomial and
``base[c]`` carries the component index together with an order shift (see
:class:`FreeModuleOrder`).  Because all bases share the packing of the
ring, multiplying a module term by a ring monomial is still integer
addition and comparing terms is integer comparison.
"""

from __future__ import annotations

import heapq

from .core import KEY_BITS, Poly, PolyRing, MonomialOrder
from .errors import ResourceExceeded, RingMismatchError

DEFAULT_MAX_STEPS = 10**6


# ---------------------------------------------------------------- orders


class FreeModuleOrder:
    """A term order on a free module ``R^rank``.

    ``shifts[i]`` is added above the component field of ``e_i``; zero
    shifts give term-over-position, ``shifts[i] = i << (KEY_BITS*nkeys)``
    gives position-over-term, and shifts copied from lead terms of a
    matrix give the Schreyer (induced) order.  ``dshifts`` are degree
    shifts used for sugar.
    """

    def __init__(self, ring: PolyRing, rank: int, shifts=None, dshifts=None, kind="top"):
        self.ring = ring
        self.rank = rank
        if shifts is None:
            if kind == "pot":
                shifts = [i << (KEY_BITS * ring.nkeys) for i in range(rank)]
            else:
                shifts = [0] * rank
        self.kind = kind
        self.shifts = list(shifts)
        self.dshifts = list(dshifts) if dshifts is not None else [0] * rank
        ks, cs = ring.key_shift, ring.comp_shift
        self.bases = [(s << ks) + (i << cs) for i, s in enumerate(self.shifts)]

    @classmethod
    def top(cls, ring, rank):
        return cls(ring, rank, kind="top")

    @classmethod
    def pot(cls, ring, rank):
        return cls(ring, rank, kind="pot")

    @classmethod
    def induced(cls, target: "FreeModuleOrder", columns):
        """Schreyer order on the source of a matrix whose columns (as term
        dicts in ``target``) are ``columns``."""
        ring = target.ring
        shifts, dshifts = [], []
        for col in columns:
            if col:
                lt = max(col)
                shifts.append(lt >> ring.key_shift)
                dshifts.append(target.degree(lt))
            else:
                shifts.append(0)
                dshifts.append(0)
        return cls(ring, len(columns), shifts, dshifts, kind="schreyer")

    def comp(self, t: int) -> int:
        return (t >> self.ring.comp_shift) & self.ring.comp_mask

    def degree(self, t: int) -> int:
        r = self.ring
        return r.mono_degree(t) + self.dshifts[(t >> r.comp_shift) & r.comp_mask]

    def to_terms(self, col) -> dict:
        """Column (sequence of Poly, one per component) -> term dict."""
        if len(col) != self.rank:
            raise RingMismatchError(f"vector of length {len(col)} in a free module of rank {self.rank}")
        out = {}
        for c, f in enumerate(col):
            if f.ring != self.ring:
                raise RingMismatchError("entry from another ring")
            b = self.bases[c]
            for m, v in f.terms.items():
                out[b + m] = v
        return out

    def from_terms(self, d: dict) -> list:
        parts = [dict() for _ in range(self.rank)]
        r = self.ring
        cs, cm = r.comp_shift, r.comp_mask
        bases = self.bases
        for t, v in d.items():
            c = (t >> cs) & cm
            parts[c][t - bases[c]] = v
        return [Poly(r, p) for p in parts]

    def split(self, t: int):
        """(component, ring monomial) of a term."""
        c = self.comp(t)
        return c, t - self.bases[c]


# ---------------------------------------------------------------- helpers


def _axpy(f: dict, c, q: int, g: dict, p: int):
    """f -= c * x^q * g in place."""
    get = f.get
    if p:
        for s, d in g.items():
            u = s + q
            v = get(u)
            if v is None:
                f[u] = (-c * d) % p
            else:
                v = (v - c * d) % p
                if v:
                    f[u] = v
                else:
                    del f[u]
    else:
        for s, d in g.items():
            u = s + q
            v = get(u)
            if v is None:
                f[u] = -c * d
            else:
                v = v - c * d
                if v:
                    f[u] = v
                else:
                    del f[u]


def _scale(f: dict, c, p: int) -> dict:
    if p:
        return {t: v * c % p for t, v in f.items()}
    return {t: v * c for t, v in f.items()}


def _shift_scale(f: dict, c, q: int, p: int) -> dict:
    if p:
        return {t + q: v * c % p for t, v in f.items()}
    return {t + q: v * c for t, v in f.items()}


class _Elem:
    __slots__ = ("lead", "poly", "sugar", "rep", "comp", "pre", "tracked", "active", "exps")

    def __init__(self, lead, poly, sugar, rep, comp, pre, tracked, exps):
        self.lead = lead
        self.poly = poly
        self.sugar = sugar
        self.rep = rep
        self.comp = comp
        self.pre = pre
        self.tracked = tracked
        self.active = True
        self.exps = exps


# ---------------------------------------------------------------- engine


class ModuleEngine:
    """Buchberger over a polynomial ring for a submodule of ``R^rank``.

    Generators come in three flavours: ``pre`` (already a Gröbner basis
    among themselves, not tracked), ``extra`` (untracked) and ``tracked``
    (their syzygies are wanted).  ``track`` turns on representation
    bookkeeping for tracked generators.
    """

    def __init__(self, order: FreeModuleOrder, track=False, ntracked=0, max_steps=DEFAULT_MAX_STEPS):
        self.order = order
        self.ring = ring = order.ring
        self.p = ring.char
        self.field = ring.field
        self.track = track
        self.elems: list[_Elem] = []
        self.buckets = [[] for _ in range(order.rank)]
        self.pairs = []
        self.live = set()
        self.zero_syz = {}
        self.made_new = set()
        self.steps = 0
        self.max_steps = max_steps
        self.rank1 = order.rank == 1
        self.guards = ring.guards
        self.exp_mask = ring.exp_mask
        self.syz_order = FreeModuleOrder.top(ring, ntracked) if track else None
        self.zero_inputs = []

    # -- bookkeeping

    def _tick(self, n=1):
        self.steps += n
        if self.steps > self.max_steps:
            raise ResourceExceeded(f"reduction step cap {self.max_steps} exceeded")

    def _lcm(self, a: _Elem, b: _Elem) -> int:
        ring = self.ring
        e = ring.lcm_packed(a.exps, b.exps)
        return self.order.bases[a.comp] + ring.enc_packed(e)

    def _monic(self, f: dict, rep):
        lt = max(f)
        c = f[lt]
        if c != 1:
            inv = self.field.inv(c)
            f = _scale(f, inv, self.p)
            if rep:
                rep = _scale(rep, inv, self.p)
        return lt, f, rep

    def _sugar(self, f: dict) -> int:
        deg = self.order.degree
        return max(deg(t) for t in f)

    # -- reduction

    def find(self, t: int):
        cs = self.ring.comp_shift
        g = self.guards
        for L, e in self.buckets[(t >> cs) & self.ring.comp_mask]:
            if not ((t - L) & g):
                return e
        return None

    def reduce(self, f: dict, rep, full=True):
        """Reduce ``f`` (in place) against the active basis.  Returns the
        remainder and the updated representation."""
        p = self.p
        track = rep is not None
        rem = {}
        find = self.find
        steps = 0
        try:
            while f:
                t = max(f)
                e = find(t)
                if e is None:
                    if not full:
                        f.update(rem)
                        return f, rep
                    rem[t] = f.pop(t)
                    continue
                c = f[t]
                q = t - e.lead
                _axpy(f, c, q, e.poly, p)
                if track and e.rep:
                    _axpy(rep, c, q, e.rep, p)
                steps += 1
                if steps >= 1000:
                    self._tick(steps)
                    steps = 0
        finally:
            self._tick(steps)
        return rem, rep

    # -- insertion and pairs

    def add(self, f: dict, rep=None, pre=False, tracked=False, update=True):
        """Insert ``f`` as a basis element (it is made monic, not reduced)."""
        lt, f, rep = self._monic(f, rep)
        comp = self.order.comp(lt)
        e = _Elem(lt, f, self._sugar(f), rep, comp, pre, tracked, lt & self.exp_mask)
        k = len(self.elems)
        self.elems.append(e)
        if update:
            self._update(k)
        else:
            self.buckets[comp].append((lt, e))
        return k

    def _update(self, k: int):
        """Gebauer-Möller pair update for a new element ``k``."""
        elems = self.elems
        h = elems[k]
        guards = self.guards
        emask = self.exp_mask
        hx = h.exps
        cand = []
        for i, g in enumerate(elems[:k]):
            if not g.active or g.comp != h.comp:
                continue
            if g.pre and h.pre:
                continue
            lcm = self._lcm(g, h)
            coprime = self.rank1 and self.ring.lcm_packed(g.exps, hx) == g.exps + hx
            cand.append([lcm, i, coprime])
        # criterion M: drop (i,k) when some (j,k) has a proper divisor lcm
        keep = []
        for a in cand:
            la = a[0] & emask
            drop = False
            for b in cand:
                if b is a:
                    continue
                lb = b[0] & emask
                if lb != la and not ((la - lb) & guards):
                    drop = True
                    break
            if not drop:
                keep.append(a)
        # criterion F plus product criterion: one pair per lcm
        bylcm = {}
        for a in keep:
            bylcm.setdefault(a[0], []).append(a)
        newpairs = []
        for lcm, group in bylcm.items():
            if any(a[2] for a in group):
                continue
            newpairs.append(group[0])
        # chain criterion on old pairs
        if self.live:
            hl = h.lead
            hcomp = h.comp
            dead = []
            for (i, j) in self.live:
                gi, gj = elems[i], elems[j]
                if gi.comp != hcomp:
                    continue
                lij = self._lcm(gi, gj)
                if (lij - hl) & guards:
                    continue
                if self._lcm(gi, h) != lij and self._lcm(gj, h) != lij:
                    dead.append((i, j))
            for pr in dead:
                self.live.discard(pr)
        for lcm, i, _ in newpairs:
            gi = elems[i]
            deg = self.ring.mono_degree
            s = max(gi.sugar + deg(lcm - gi.lead), h.sugar + deg(lcm - h.lead))
            heapq.heappush(self.pairs, (s, lcm, i, k))
            self.live.add((i, k))
        # retire elements whose lead is a multiple of the new lead
        hl = h.lead
        keepb = []
        for L, g in self.buckets[h.comp]:
            if not ((L - hl) & guards):
                g.active = False
            else:
                keepb.append((L, g))
        keepb.append((hl, h))
        self.buckets[h.comp] = keepb

    def spoly(self, i: int, j: int, lcm: int | None = None):
        gi, gj = self.elems[i], self.elems[j]
        if lcm is None:
            lcm = self._lcm(gi, gj)
        qi, qj = lcm - gi.lead, lcm - gj.lead
        p = self.p
        f = _shift_scale(gi.poly, 1, qi, p)
        _axpy(f, 1, qj, gj.poly, p)
        rep = None
        if self.track:
            rep = _shift_scale(gi.rep, 1, qi, p) if gi.rep else {}
            if gj.rep:
                _axpy(rep, 1, qj, gj.rep, p)
        return f, rep

    def run(self):
        pairs = self.pairs
        live = self.live
        while pairs:
            s, lcm, i, j = heapq.heappop(pairs)
            if (i, j) not in live:
                continue
            live.discard((i, j))
            f, rep = self.spoly(i, j, lcm)
            h, rep = self.reduce(f, rep, full=True)
            if not h:
                if self.track:
                    self.zero_syz[(i, j)] = rep
                continue
            self.made_new.add((i, j))
            self.add(h, rep)

    # -- results

    def reduced_basis(self) -> list[dict]:
        """The reduced Gröbner basis, sorted by descending lead term."""
        mins = []
        for bucket in self.buckets:
            for L, e in bucket:
                mins.append(e)
        # keep only elements whose lead is minimal
        guards = self.ring.test_mask
        leads = [e.lead for e in mins]
        chosen = []
        for e in mins:
            if any(L != e.lead and not ((e.lead - L) & guards) for L in leads):
                continue
            if any(c.lead == e.lead for c in chosen):
                continue
            chosen.append(e)
        saved = self.buckets
        self.buckets = [[] for _ in range(self.order.rank)]
        for e in chosen:
            self.buckets[e.comp].append((e.lead, e))
        out = []
        try:
            for e in chosen:
                tail = dict(e.poly)
                del tail[e.lead]
                rem, _ = self.reduce(tail, None, full=True)
                rem[e.lead] = self.field.one
                out.append(rem)
        finally:
            self.buckets = saved
        out.sort(key=lambda d: max(d), reverse=True)
        return out

    def syzygies(self) -> list[dict]:
        """Generators of the syzygies of the tracked generators, as term
        dicts in ``syz_order`` (Schreyer's construction)."""
        if not self.track:
            raise ValueError("engine was not tracking representations")
        out = list(self.zero_inputs)
        elems = self.elems
        guards = self.guards
        emask = self.exp_mask
        bycomp = {}
        for k, e in enumerate(elems):
            bycomp.setdefault(e.comp, []).append(k)
        for comp, idx in bycomp.items():
            for jpos, j in enumerate(idx):
                ej = elems[j]
                cands = []
                for i in idx[:jpos]:
                    ei = elems[i]
                    lcm = self._lcm(ei, ej)
                    q = (lcm - ej.lead) & emask
                    pref = 0 if ((i, j) in self.zero_syz or (i, j) in self.made_new) else 1
                    cands.append((self.ring.mono_degree(q), q, pref, i, lcm))
                cands.sort()
                kept = []
                for deg, q, pref, i, lcm in cands:
                    if any(not ((q - kq) & guards) for kq, _, _ in kept):
                        continue
                    kept.append((q, i, lcm))
                for q, i, lcm in kept:
                    ei = elems[i]
                    if (i, j) in self.made_new:
                        continue
                    if (i, j) in self.zero_syz:
                        rep = self.zero_syz[(i, j)]
                    else:
                        if not ei.tracked and not ej.tracked and ei.pre and ej.pre:
                            continue
                        f, rep = self.spoly(i, j, lcm)
                        h, rep = self.reduce(f, rep, full=False)
                        if h:
                            raise AssertionError("S-polynomial of a Gröbner basis did not reduce to zero")
                    if rep:
                        out.append(rep)
        return out


# ---------------------------------------------------------------- API types


class GroebnerBasis:
    """Reduced Gröbner basis of an ideal or of a submodule of ``R^rank``.

    For ideals ``elements`` is a list of :class:`Poly`; for modules it is a
    list of columns (lists of Poly).
    """

    def __init__(self, ring: PolyRing, order: FreeModuleOrder, terms: list[dict], module: bool):
        self.ring = ring
        self.order = order
        self.terms = terms
        self.module = module
        self.reduced = True
        self._engine = None

    @property
    def elements(self):
        if self.module:
            return [self.order.from_terms(d) for d in self.terms]
        return [Poly(self.ring, d) for d in self.terms]

    def __len__(self):
        return len(self.terms)

    def leads(self):
        return [max(d) for d in self.terms]

    def _reducer(self) -> ModuleEngine:
        if self._engine is None:
            eng = ModuleEngine(self.order)
            for d in self.terms:
                eng.add(dict(d), update=False)
            self._engine = eng
        return self._engine

    def reduce_terms(self, f: dict) -> dict:
        eng = self._reducer()
        rem, _ = eng.reduce(dict(f), None, full=True)
        return rem

    def normal_form(self, f):
        if self.module:
            return self.order.from_terms(self.reduce_terms(self.order.to_terms(f)))
        if f.ring != self.ring:
            raise RingMismatchError("polynomial from another ring")
        return Poly(self.ring, self.reduce_terms(f.terms))

    def contains(self, f) -> bool:
        if self.module:
            return not self.reduce_terms(self.order.to_terms(f))
        return not self.reduce_terms(f.terms)

    def is_unit(self) -> bool:
        return not self.module and any(max(d) == 0 for d in self.terms)

    def check_criterion(self) -> bool:
        """Every S-polynomial of basis pairs has normal form zero."""
        eng = self._reducer()
        for i in range(len(eng.elems)):
            for j in range(i + 1, len(eng.elems)):
                if eng.elems[i].comp != eng.elems[j].comp:
                    continue
                f, _ = eng.spoly(i, j)
                rem, _ = eng.reduce(f, None, full=True)
                if rem:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.terms == other.terms

    def __repr__(self):
        return f"GroebnerBasis({len(self.terms)} elements)"


def _order_for(ring, rank, order):
    if order is None:
        return FreeModuleOrder.top(ring, rank)
    if isinstance(order, str):
        return FreeModuleOrder(ring, rank, kind=order)
    return order


def _pre_terms(ring, order: FreeModuleOrder, ideal_gb_terms):
    """GB(I)·e_c for every component c."""
    out = []
    for c in range(order.rank):
        b = order.bases[c]
        for d in ideal_gb_terms:
            out.append({b + m: v for m, v in d.items()})
    return out


def buchberger(gens, ring: PolyRing | None = None, rank: int | None = None, order=None,
               max_steps=DEFAULT_MAX_STEPS) -> GroebnerBasis:
    """Reduced Gröbner basis.

    ``gens`` is a list of Poly (ideal case) or of columns (module case;
    pass ``rank`` if the list may be empty).
    """
    gens = list(gens)
    module = rank is not None or (gens and not isinstance(gens[0], Poly))
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring if isinstance(gens[0], Poly) else gens[0][0].ring
    if module:
        rank = rank if rank is not None else len(gens[0])
        ford = _order_for(ring, rank, order)
        terms = [ford.to_terms(c) for c in gens]
    else:
        if order is not None and isinstance(order, (MonomialOrder, str)) and not isinstance(order, FreeModuleOrder):
            raise ValueError("change the ring order with PolyRing.with_order")
        ford = FreeModuleOrder.top(ring, 1)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generators from different rings")
        terms = [dict(g.terms) for g in gens]
    return GroebnerBasis(ring, ford, gb_terms(ford, terms, max_steps=max_steps), module)


def gb_terms(ford: FreeModuleOrder, terms, pre=(), max_steps=DEFAULT_MAX_STEPS) -> list[dict]:
    eng = ModuleEngine(ford, max_steps=max_steps)
    for d in pre:
        if d:
            eng.add(dict(d), pre=True)
    for d in terms:
        if d:
            eng.add(dict(d))
    eng.run()
    return eng.reduced_basis()


def syzygy_terms(ford: FreeModuleOrder, tracked, pre=(), extra=(), ideal_gb=None,
                 max_steps=DEFAULT_MAX_STEPS):
    """Syzygies of ``tracked`` modulo the submodule generated by ``pre``
    (a Gröbner basis) and ``extra``.  Returns ``(syz_order, [term dicts])``."""
    ring = ford.ring
    n = len(tracked)
    eng = ModuleEngine(ford, track=True, ntracked=n, max_steps=max_steps)
    sb = eng.syz_order.bases
    for d in pre:
        if d:
            eng.add(dict(d), rep={}, pre=True)
    for d in extra:
        if d:
            eng.add(dict(d), rep={})
    for j, d in enumerate(tracked):
        if d:
            eng.add(dict(d), rep={sb[j]: ring.field.one}, tracked=True)
        else:
            eng.zero_inputs.append({sb[j]: ring.field.one})
    eng.run()
    syz = eng.syzygies()
    if ideal_gb:
        red = ModuleEngine(FreeModuleOrder.top(ring, 1), max_steps=max_steps)
        red.steps = eng.steps
        for d in ideal_gb:
            red.add(dict(d), update=False)
        syz = [reduce_mod_ideal(s, ideal_gb, ring, red) for s in syz]
    out, seen = [], set()
    for s in syz:
        if not s:
            continue
        key = frozenset(s.items())
        if key in seen:
            continue
        seen.add(key)
        out.append(s)
    out = autoreduce(out, ring, ideal_gb)
    return eng.syz_order, out


def autoreduce(vectors: list[dict], ring, ideal_gb=None) -> list[dict]:
    """Make each vector monic and clear every non-lead term that is
    divisible by the lead of another vector (or of an element of
    ``ideal_gb``).  Only column operations are used, so the span and the
    number of vectors are unchanged."""
    p = ring.char
    F = ring.field
    guards = ring.guards
    cs, cm = ring.comp_shift, ring.comp_mask
    vecs = []
    for v in vectors:
        lt = max(v)
        c = v[lt]
        vecs.append(_scale(v, F.inv(c), p) if c != 1 else dict(v))
    leads = [max(v) for v in vecs]
    bycomp = {}
    for k, L in enumerate(leads):
        bycomp.setdefault((L >> cs) & cm, []).append((L, k))
    ileads = [(max(d), d) for d in (ideal_gb or [])]
    for j, v in enumerate(vecs):
        lead = leads[j]
        rem = {lead: v.pop(lead)}
        f = v
        steps = 0
        while f:
            t = max(f)
            hit = None
            for L, k in bycomp.get((t >> cs) & cm, ()):
                if k != j and L != lead and not ((t - L) & guards):
                    hit = vecs[k]
                    break
            if hit is None:
                for L, g in ileads:
                    if not ((t - L) & guards):
                        hit = g
                        break
                else:
                    rem[t] = f.pop(t)
                    continue
                L = max(hit)
            c = f[t]
            _axpy(f, c, t - L, hit, p)
            steps += 1
            if steps > DEFAULT_MAX_STEPS:
                raise ResourceExceeded("autoreduction did not settle")
        vecs[j] = rem
    return vecs


def reduce_mod_ideal(f: dict, ideal_gb, ring, red: ModuleEngine | None = None) -> dict:
    """Reduce every coordinate of a module term dict modulo an ideal GB."""
    if not ideal_gb or not f:
        return f
    guards = ring.guards
    leads = [(max(d), d) for d in ideal_gb]
    p = ring.char
    rem = {}
    f = dict(f)
    steps = 0
    while f:
        t = max(f)
        for L, g in leads:
            if not ((t - L) & guards):
                c = f[t]
                _axpy(f, c, t - L, g, p)
                steps += 1
                break
        else:
            rem[t] = f.pop(t)
    if red is not None:
        red._tick(steps)
    return rem


# ---------------------------------------------------------------- ideal calculus


def normal_form(f, gb: GroebnerBasis):
    return gb.normal_form(f)


def ideal_gb(gens, ring: PolyRing, max_steps=DEFAULT_MAX_STEPS) -> list[dict]:
    ford = FreeModuleOrder.top(ring, 1)
    return gb_terms(ford, [g.terms for g in gens], max_steps=max_steps)


def syzygies_of_polys(polys, ring: PolyRing, modulo=(), max_steps=DEFAULT_MAX_STEPS):
    """Syzygies of a row of polynomials modulo an ideal GB (term dicts)."""
    ford = FreeModuleOrder.top(ring, 1)
    return syzygy_terms(ford, [f.terms for f in polys], pre=modulo, max_steps=max_steps)


def eliminate_gens(gens, ring: PolyRing, names) -> list[Poly]:
    """Generators of ``(gens) ∩ k[other variables]`` as Polys of ``ring``."""
    names = set(names)
    for v in names:
        ring.index(v)
    if not names:
        return [Poly(ring, d) for d in ideal_gb(gens, ring)]
    w = tuple(1 if v in names else 0 for v in ring.names)
    er = ring.with_order(MonomialOrder("elim", w))
    G = ideal_gb([er.convert(g) for g in gens], er)
    idx = [er.index(v) for v in names]
    out = []
    for d in G:
        f = Poly(er, d)
        if any(i in f.variables() for i in idx):
            continue
        out.append(ring.convert(f))
    return out


def intersect_gens(I, J, ring: PolyRing) -> list[Poly]:
    tname = "_t"
    while tname in ring.names:
        tname += "_"
    R = ring.extend([tname], order=MonomialOrder("elim", (0,) * ring.n + (1,)))
    t = R.var(tname)
    gens = [t * R.convert(f) for f in I] + [(1 - t) * R.convert(g) for g in J]
    G = ideal_gb(gens, R)
    out = []
    k = R.index(tname)
    for d in G:
        f = Poly(R, d)
        if k not in f.variables():
            out.append(ring.convert(f))
    return out


def colon_gens(I, g: Poly, ring: PolyRing) -> list[Poly]:
    """Generators of (I : g) via syzygies of [g | I]."""
    if g.is_zero():
        raise ValueError("colon by the zero ideal")
    ford = FreeModuleOrder.top(ring, 1)
    pre = ideal_gb(I, ring)
    _, syz = syzygy_terms(ford, [g.terms], pre=pre)
    out = []
    for s in syz:
        f = Poly(ring, s)  # rank one syzygy module: base 0, so terms are monomials
        if f:
            out.append(f)
    return out


def _min_hitting_set(supports, n) -> int:
    """Size of a smallest set of variables meeting every support mask."""
    supports = sorted(set(supports), key=lambda m: bin(m).count("1"))
    best = [n + 1]

    def go(chosen, size):
        if size >= best[0]:
            return
        for s in supports:
            if not (s & chosen):
                break
        else:
            best[0] = size
            return
        m = s
        while m:
            bit = m & -m
            go(chosen | bit, size + 1)
            m ^= bit

    go(0, 0)
    return best[0]


def dimension_from_leads(leads, ring: PolyRing) -> int:
    if any(L == 0 for L in leads):
        return -1
    masks = []
    for L in leads:
        e = ring.exps(L)
        masks.append(sum(1 << i for i, x in enumerate(e) if x))
    if not masks:
        return ring.n
    return ring.n - _min_hitting_set(masks, ring.n)
