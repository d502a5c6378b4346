"""Decision procedures for canonical-module properties.

Notation used throughout: ``S`` is the ambient polynomial ring with ``n``
variables, ``E_i = Ext^i_S(M, S)`` and ``a_i = ann E_i`` (the unit ideal
when ``E_i = 0``).  For a prime ``p`` of height ``h`` in S,

    depth M_p = h - max{i : p in V(a_i)},   dim M_p = h - min{i : p in V(a_i)}

so all pointwise depth/dimension questions become dimension counts of
sums of these annihilators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import PreconditionError, ResourceExceeded
from .ideal import Ideal
from .matrix import Matrix
from .modules import FPModule, QuotientRing, as_quotient, double_dual_with_map, syzygy_matrix
from .homological import (
    auslander_transpose,
    canonical_module,
    depth_and_pd,
    ext_profile,
    ext_subquotient,
    start_resolution,
)


def _cache(A: QuotientRing) -> dict:
    c = getattr(A, "_ccache", None)
    if c is None:
        c = {}
        A._ccache = c
    return c


def _unit(S) -> Ideal:
    return Ideal(S, [S.one()])


def _saturate(J: Ideal, K: Ideal) -> Ideal:
    # V(J) minus V(0) is empty
    return _unit(J.ring) if K.is_zero() else J.saturate(K)


def _product(ideals, S) -> Ideal:
    out = _unit(S)
    for J in ideals:
        out = (out * J).minimalized()
    return out


# ---------------------------------------------------------------- torsionfree


def torsionfree_profile(M: FPModule, q_max: int, cap: int = 10) -> list[bool]:
    """[Ext^i(D(M), A) == 0 for i = 1..] stopping at the first nonzero one."""
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    D = auslander_transpose(M)
    if D.is_zero():
        return [True] * q_max
    res = start_resolution(D)
    out = []
    for i in range(1, q_max + 1):
        if i + 1 > cap:
            raise ResourceExceeded(f"Ext^{i} of the transpose needs {i + 1} resolution steps, cap is {cap}")
        z = ext_subquotient(res, i).is_zero()
        out.append(z)
        if not z:
            break
    return out


def torsionfree_level(M: FPModule, q_max: int = 5, cap: int = 10) -> int:
    """Largest q <= q_max with Ext^i(D(M), A) = 0 for 1 <= i <= q."""
    prof = torsionfree_profile(M, q_max, cap)
    level = 0
    for z in prof:
        if not z:
            break
        level += 1
    return level


# ---------------------------------------------------------------- Serre and loci


def _profiles(M):
    """(profile of M over S, profile of its ring A over S, ring)."""
    if isinstance(M, QuotientRing):
        p = ext_profile(M)
        return p, p, M
    A = M.A
    return ext_profile(M), ext_profile(A), A


def serre_Sn(M, n: int, on: Ideal | None = None):
    """Does M satisfy depth M_p >= min(n, dim A_p) at every prime p (of
    V(on), when given)?  Returns ``(verdict, defect locus ideal)``; the
    locus is the unit ideal when the verdict is true."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pm, pa, A = _profiles(M)
    S = A.S
    if isinstance(M, FPModule) and M.is_zero():
        raise PreconditionError("(S_n) of the zero module")
    nS = S.n
    bad = []
    for i in range(1, pm.pd + 1):
        ai = pm.ann(i)
        if ai.is_unit():
            continue
        for j in range(0, min(i, pa.pd + 1)):
            bj = pa.ann(j)
            if bj.is_unit():
                continue
            J = ai + bj
            if on is not None:
                J = J + on
            if J.dim() > nS - i - n:
                bad.append(J.minimalized())
    if not bad:
        return True, _unit(S)
    return False, _product(bad, S)


def noncm_components(A: QuotientRing) -> list[Ideal]:
    """Ideals whose zero sets cover the non-Cohen-Macaulay locus of A."""
    c = _cache(A)
    if "nc" not in c:
        prof = ext_profile(A)
        comps = []
        for i in range(1, prof.pd + 1):
            ai = prof.ann(i)
            if ai.is_unit():
                continue
            for j in range(0, i):
                aj = prof.ann(j)
                if aj.is_unit():
                    continue
                J = (ai + aj).minimalized()
                if not J.is_unit():
                    comps.append(J)
        c["nc"] = comps
    return c["nc"]


def noncm_locus(A: QuotientRing) -> Ideal:
    A = as_quotient(A)
    return _product(noncm_components(A), A.S)


def unmixed_component(A: QuotientRing) -> Ideal:
    A = as_quotient(A)
    c = _cache(A)
    if "U" not in c:
        c["U"] = canonical_module(A).annihilator()
    return c["U"]


def _bad_gorenstein_components(A: QuotientRing) -> list[Ideal]:
    """Ideals covering the points of Supp K_A where A is not Gorenstein."""
    c = _cache(A)
    if "badgor" not in c:
        U = unmixed_component(A)
        K = canonical_module(A)
        comps = [(U + K.fitting_ideal(1)).minimalized()]
        comps += [(U + J).minimalized() for J in noncm_components(A)]
        c["badgor"] = [J for J in comps if not J.is_unit()]
    return c["badgor"]


def gn_on_canonical_support(A: QuotientRing, n: int) -> bool:
    """A_p is Gorenstein at every p in Supp K_A with dim A_p <= n."""
    A = as_quotient(A)
    if n < 0:
        return True
    d = A.dim()
    return all(J.dim() < d - n for J in _bad_gorenstein_components(A))


def is_generically_gorenstein(A: QuotientRing) -> bool:
    """A_p is Gorenstein at every minimal prime p of A.

    A minimal prime of height i is a component of V(a_i) of dimension n-i
    lying in no V(a_j), j < i, and there the canonical module of A_p is
    (E_i)_p; Gorenstein means it is cyclic, i.e. p does not contain
    Fitt_1(E_i).
    """
    A = as_quotient(A)
    prof = ext_profile(A)
    nS = A.S.n
    for i in range(0, prof.pd + 1):
        ai = prof.ann(i)
        if ai.is_unit() or ai.dim() < nS - i:
            continue
        F1 = prof.sub(i).to_module().fitting_ideal(1)
        J = F1
        for j in range(0, i):
            aj = prof.ann(j)
            if not aj.is_unit():
                J = _saturate(J, aj)
        if J.dim() == nS - i:
            return False
    return True


# ---------------------------------------------------------------- CM / Gorenstein


def cm_gorenstein_report(A: QuotientRing):
    """(is_CM, is_Gorenstein, type) with type = minimal generators of K_A."""
    A = as_quotient(A)
    dep, _ = depth_and_pd(A)
    is_cm = dep == A.dim()
    typ = canonical_module(A).num_generators()
    return is_cm, is_cm and typ == 1, typ


def q_gorenstein_level(A: QuotientRing, q_max: int = 5):
    """(level, scope): largest q <= q_max with (S_q) and (G_{q-1}).

    The scope is ``"global"`` when Supp K_A = Spec A is certified (U lies
    in the radical of I); otherwise Serre conditions are only evaluated on
    Supp K_A and the scope says so.
    """
    A = as_quotient(A)
    U = unmixed_component(A)
    glob = A.I.radical_contains_ideal(U) if not A.I.is_zero() else True
    on = None if glob else U
    level = 0
    for q in range(1, q_max + 1):
        if not (serre_Sn(A, q, on=on)[0] and gn_on_canonical_support(A, q - 1)):
            break
        level = q
    return level, ("global" if glob else "on Supp K_A")


# ---------------------------------------------------------------- primes


@dataclass
class PrimeCandidate:
    """A prime ideal of S containing I (primality is assumed)."""

    ideal: Ideal
    name: str = ""

    def __post_init__(self):
        if self.ideal.is_unit():
            raise PreconditionError("a prime candidate must be proper")
        self.dim = self.ideal.dim()
        self.height = self.ideal.ring.n - self.dim

    def contains_ideal(self, J: Ideal) -> bool:
        return self.ideal.contains_ideal(J)

    def __str__(self):
        return self.name or str(self.ideal)


def _as_prime(A: QuotientRing, p) -> PrimeCandidate:
    if isinstance(p, PrimeCandidate):
        P = p
    else:
        P = PrimeCandidate(p)
    if not P.ideal.contains_ideal(A.I):
        raise PreconditionError(f"prime {P} does not contain the defining ideal")
    return P


def is_associated_prime(A: QuotientRing, p) -> bool:
    """p in Ass(S/I) iff p contains ann Ext^{ht p}_S(S/I, S)."""
    A = as_quotient(A)
    P = _as_prime(A, p)
    a = ext_profile(A).ann(P.height)
    if a.is_unit():
        return False
    return all(P.ideal.radical_contains(g) for g in a.gens)


def is_monomial_ideal(I: Ideal) -> bool:
    return all(len(g.terms) == 1 for g in I.gens)


def monomial_associated_primes(A: QuotientRing) -> list[PrimeCandidate]:
    """Ass(S/I) for a monomial ideal I: its associated primes are generated
    by subsets of the variables, each tested exactly."""
    A = as_quotient(A)
    if not is_monomial_ideal(A.I):
        raise PreconditionError("ideal is not monomial", kind="monomial")
    S = A.S
    support = set()
    for g in A.I.gens:
        support |= g.variables()
    out = []
    for k in range(0, len(support) + 1):
        for sub in combinations(sorted(support), k):
            P = PrimeCandidate(Ideal(S, [S.var(i) for i in sub]))
            if P.ideal.contains_ideal(A.I) and is_associated_prime(A, P):
                out.append(P)
    return out


def check_prime_coverage(A: QuotientRing, primes) -> None:
    """Raise PreconditionError unless every associated prime of A is listed.

    The associated primes of height i are the height-i minimal primes of
    a_i; saturating a_i by the listed height-i primes must leave nothing
    of dimension n - i.
    """
    prof = ext_profile(A)
    nS = A.S.n
    for i in range(0, prof.pd + 1):
        ai = prof.ann(i)
        if ai.is_unit() or ai.dim() < nS - i:
            continue
        J = ai
        for P in primes:
            if P.height == i and P.contains_ideal(ai):
                J = _saturate(J, P.ideal)
        if J.dim() >= nS - i:
            raise PreconditionError(
                f"prime list misses an associated prime of height {i}", kind="prime-coverage"
            )


def _gorenstein_at(A: QuotientRing, P: PrimeCandidate) -> bool:
    """For p in Supp K_A: A_p is CM and (K_A)_p is cyclic."""
    return not any(P.contains_ideal(J) for J in _bad_gorenstein_components(A))


@dataclass
class CrossCheck:
    name: str
    status: str  # "agree", "disagree" or "skipped"
    certificate: dict = field(default_factory=dict)

    def as_dict(self):
        return {"name": self.name, "status": self.status, "certificate": self.certificate}


def _verdict(name, left, right, **cert) -> CrossCheck:
    cert = dict(cert, left=left, right=right)
    return CrossCheck(name, "agree" if left == right else "disagree", cert)


def reflexivity_theorem_crosscheck(A: QuotientRing, primes, q_max_cap: int = 10) -> list[CrossCheck]:
    """Both sides of the torsionless (level 1) and reflexive (level 2)
    criteria, the right sides from prime-wise data."""
    A = as_quotient(A)
    P = [_as_prime(A, p) for p in primes]
    check_prime_coverage(A, P)
    K = canonical_module(A)
    level = torsionfree_level(K, 2, q_max_cap)
    U = unmixed_component(A)
    d = A.dim()
    ass = [p for p in P if is_associated_prime(A, p)]
    assh = [p for p in ass if p.dim == d]
    # torsionless side
    gor_assh = all(_gorenstein_at(A, p) for p in assh)
    out = [
        _verdict(
            "torsionless_iff_gorenstein_on_assh",
            level >= 1,
            gor_assh and gn_on_canonical_support(A, 0),
            assh=[str(p) for p in assh],
        )
    ]
    # reflexive side
    in_vu = [p for p in ass if p.contains_ideal(U)]
    ass_vu_is_assh = all(p.dim == d for p in in_vu)
    right = ass_vu_is_assh and gn_on_canonical_support(A, 1)
    out.append(
        _verdict(
            "reflexive_iff_low_codim_gorenstein",
            level >= 2,
            right,
            ass=[str(p) for p in ass],
            ass_in_V_U=[str(p) for p in in_vu],
            gorenstein_in_codim_1_on_support=gn_on_canonical_support(A, 1),
        )
    )
    return out


def main_theorem_crosscheck(A: QuotientRing, q: int, cap: int = 10, level: int | None = None) -> list[CrossCheck]:
    """Equivalences and implications relating the torsionfree level of K_A
    to Serre and Gorenstein conditions of A on Supp K_A."""
    A = as_quotient(A)
    K = canonical_module(A)
    U = unmixed_component(A)
    if level is None:
        level = torsionfree_level(K, max(q + 1, 1), cap)
    out = []
    hyp = serre_Sn(K, q)[0]
    left = level >= q
    if hyp:
        right = gn_on_canonical_support(A, q - 1) and serre_Sn(A, q - 1, on=U)[0]
        out.append(_verdict("main_equivalence", left, right, q=q, level=level))
    else:
        out.append(CrossCheck("main_equivalence", "skipped", {"q": q, "reason": "K_A fails (S_q)"}))
    is_cm, _, _ = cm_gorenstein_report(A)
    if is_cm:
        qg, _ = q_gorenstein_level(A, q)
        out.append(_verdict("cm_equivalence", left, qg >= q, q=q, level=level, q_gorenstein=qg))
    else:
        out.append(CrossCheck("cm_equivalence", "skipped", {"q": q, "reason": "A is not CM"}))
    dA, _ = depth_and_pd(A)
    if level >= dA + 2:
        dK, _ = depth_and_pd(K)
        out.append(_verdict("depth_rigidity", dK, dA, level=level))
    else:
        out.append(CrossCheck("depth_rigidity", "skipped", {"level": level, "depth_A": dA}))
    if level >= q + 1 and hyp:
        out.append(_verdict("serre_descent", True, serre_Sn(A, q, on=U)[0], q=q, level=level))
    else:
        out.append(CrossCheck("serre_descent", "skipped", {"q": q, "level": level}))
    return out


def double_dual_crosscheck(M: FPModule, cap: int = 10) -> CrossCheck:
    """Level >= 1 / >= 2 against the kernel / cokernel of M -> M**."""
    level = torsionfree_level(M, 2, cap)
    _, kz, cz = double_dual_with_map(M)
    left = (level >= 1, level >= 2)
    right = (kz, kz and cz)
    return CrossCheck(
        "double_dual_routes",
        "agree" if left == right else "disagree",
        {"level": level, "kernel_zero": kz, "cokernel_zero": cz},
    )


# ---------------------------------------------------------------- colon criterion


def ideal_as_module(A: QuotientRing, J: Ideal) -> FPModule:
    """The ideal (J + I)/I of A as an A-module."""
    gens = [A.reduce(g) for g in J.gens]
    gens = [g for g in gens if g]
    S = A.S
    if not gens:
        return FPModule.zero(A)
    row = Matrix.from_rows(S, [gens])
    return FPModule(A, syzygy_matrix(row, A)).prune()


def canonical_ideal_colon_test(A: QuotientRing, Ican: Ideal) -> bool:
    """Gorenstein verdict from J^2 : J = J for a canonical ideal J of a
    one-dimensional CM ring."""
    A = as_quotient(A)
    if A.dim() != 1:
        raise PreconditionError(f"ring has dimension {A.dim()}, not 1", kind="dimension")
    is_cm, _, _ = cm_gorenstein_report(A)
    if not is_cm:
        raise PreconditionError("ring is not Cohen-Macaulay", kind="cm")
    J = Ican + A.I
    if J.is_unit():
        raise PreconditionError("canonical ideal must be proper", kind="canonical")
    K = canonical_module(A)
    M = ideal_as_module(A, J)
    same = M.rank == K.rank and M.annihilator() == K.annihilator()
    if same:
        same = all(M.fitting_ideal(i) == K.fitting_ideal(i) for i in range(K.rank + 1))
    if not same:
        raise PreconditionError("ideal does not have the invariants of the canonical module", kind="canonical")
    J2 = (J * J + A.I).minimalized()
    return J2.colon(J) == J


# ---------------------------------------------------------------- report


def _prime_candidates(A: QuotientRing, primes):
    out = []
    for k, p in enumerate(primes):
        if isinstance(p, PrimeCandidate):
            out.append(p)
        elif isinstance(p, tuple):
            out.append(PrimeCandidate(p[1], p[0]))
        else:
            out.append(PrimeCandidate(p, f"P{k + 1}"))
    return out


def classify(A: QuotientRing, q_max: int = 5, cap: int = 10, primes=None, canonical_ideal: Ideal | None = None) -> dict:
    """The full report as a JSON-ready dict.

    ``primes`` (PrimeCandidates, Ideals or (name, Ideal) pairs) switches on
    the prime-wise cross-checks; for monomial ideals the associated primes
    are computed when no list is given.
    """
    A = as_quotient(A)
    S = A.S
    if A.I.is_unit():
        raise PreconditionError("the defining ideal is the unit ideal")
    d = A.dim()
    K = canonical_module(A)
    dep, _ = depth_and_pd(A)
    is_cm, is_gor, typ = cm_gorenstein_report(A)
    U = unmixed_component(A)
    level = torsionfree_level(K, q_max, cap)
    serre = {str(n): serre_Sn(A, n)[0] for n in range(1, q_max + 1)}
    gn = {str(n): gn_on_canonical_support(A, n) for n in range(0, q_max + 1)}
    qg, scope = q_gorenstein_level(A, q_max)
    checks = []
    for q in range(1, q_max + 1):
        for c in main_theorem_crosscheck(A, q, cap, level=level if level < q_max else None):
            c.certificate.setdefault("q", q)
            checks.append(c)
    P = None
    if primes:
        P = _prime_candidates(A, primes)
    elif is_monomial_ideal(A.I):
        P = monomial_associated_primes(A)
        for k, p in enumerate(P):
            p.name = str(p.ideal)
    if P:
        checks += reflexivity_theorem_crosscheck(A, P, cap)
    checks.append(double_dual_crosscheck(K, cap))
    report = {
        "dim": d,
        "codim": S.n - d,
        "depth": dep,
        "is_cm": is_cm,
        "is_gorenstein": is_gor,
        "type": typ,
        "unmixed_component": [str(g) for g in U.basis()],
        "torsionfree_level": level,
        "torsionless": level >= 1,
        "reflexive": level >= 2 if q_max >= 2 else None,
        "generically_gorenstein": is_generically_gorenstein(A),
        "quasi_normal": serre["2"] and gn["1"] if q_max >= 2 else None,
        "quasi_gorenstein_flag": typ == 1 and U == A.I,
        "serre": serre,
        "gn_on_supp_k": gn,
        "q_gorenstein_level": qg,
        "q_gorenstein_scope": scope,
        "crosschecks": [c.as_dict() for c in checks],
    }
    if P:
        report["primes"] = [
            {"name": str(p), "height": p.height, "associated": is_associated_prime(A, p)} for p in P
        ]
    if canonical_ideal is not None:
        report["canonical_ideal_colon"] = canonical_ideal_colon_test(A, canonical_ideal)
    return report
