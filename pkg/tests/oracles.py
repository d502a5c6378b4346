"""Independent reference computations used by the tests.

Nothing here calls the Gröbner engine: linear algebra is plain Fraction
Gaussian elimination on degree-truncated coefficient systems, dimensions of
monomial ideals come from counting independent variable sets, and
polynomial identities are checked by evaluation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, combinations_with_replacement


def evaluate(f, point: dict):
    """f at a point {name: Fraction}, by direct expansion of the terms."""
    names = f.ring.names
    total = Fraction(0)
    for exps, c in f.exponent_dict().items():
        t = Fraction(int(c.numerator), int(c.denominator)) if hasattr(c, "numerator") else Fraction(int(c))
        for name, e in zip(names, exps):
            if e:
                t *= point[name] ** e
        total += t
    return total


def random_point(names, rng: random.Random, lo=-7, hi=7):
    return {n: Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for n in names}


def rank(rows) -> int:
    """Rank of a list of Fraction rows."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows, ncols: int):
    """Basis of {v : rows . v = 0} as Fraction lists."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def monomials(n: int, d: int):
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _coeffs(f):
    return {e: Fraction(int(c.numerator), int(c.denominator)) for e, c in f.exponent_dict().items()}


def column_degrees(P, row_degrees):
    """Degrees of the columns of a homogeneous matrix."""
    out = []
    for col in P.cols:
        deg = None
        for i, e in enumerate(col):
            if e:
                d = row_degrees[i] + e.total_degree()
                if deg is not None and d != deg:
                    raise ValueError("matrix is not homogeneous")
                deg = d
        out.append(deg if deg is not None else 0)
    return out


def _map_rows(P, row_degrees, col_degrees, D):
    """Coefficient matrix of P : (+)_j S_{D - deg_j} -> (+)_i S_{D - row_i}."""
    n = P.ring.n
    src = [(j, m) for j, dj in enumerate(col_degrees) for m in monomials(n, D - dj)]
    tgt = [(i, m) for i, di in enumerate(row_degrees) for m in monomials(n, D - di)]
    tindex = {t: k for k, t in enumerate(tgt)}
    cols = []
    coeff = [[_coeffs(e) for e in c] for c in P.cols]
    for j, m in src:
        v = [Fraction(0)] * len(tgt)
        for i in range(P.nrows):
            for e, c in coeff[j][i].items():
                v[tindex[(i, _add(e, m))]] += c
        cols.append(v)
    rows = [[cols[k][t] for k in range(len(src))] for t in range(len(tgt))]
    return rows, src


def kernel_dimension(P, row_degrees, col_degrees, D) -> int:
    rows, src = _map_rows(P, row_degrees, col_degrees, D)
    return len(src) - rank(rows)


def kernel_vectors(P, row_degrees, col_degrees, D):
    """A basis of the degree-D kernel, as coefficient dicts per column."""
    rows, src = _map_rows(P, row_degrees, col_degrees, D)
    out = []
    for v in nullspace(rows, len(src)):
        vec = [dict() for _ in col_degrees]
        for (j, m), c in zip(src, v):
            if c:
                vec[j][m] = c
        out.append(vec)
    return out


def span_dimension(Z, col_degrees, D) -> int:
    """dim_k of the degree-D part of the submodule spanned by the columns of Z
    inside (+)_j S(-col_degrees[j])."""
    n = Z.ring.n
    zdeg = column_degrees(Z, col_degrees)
    coords = [(j, m) for j, dj in enumerate(col_degrees) for m in monomials(n, D - dj)]
    index = {t: k for k, t in enumerate(coords)}
    vecs = []
    for k, col in enumerate(Z.cols):
        for mono in monomials(n, D - zdeg[k]):
            v = [Fraction(0)] * len(coords)
            for j, e in enumerate(col):
                for ex, c in _coeffs(e).items():
                    v[index[(j, _add(ex, mono))]] += c
            vecs.append(v)
    return rank(vecs)


def monomial_dimension(gens_exps, n: int) -> int:
    """dim S/I for a monomial ideal: the largest set of variables containing
    the support of no generator (-1 if I is the unit ideal)."""
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens_exps]
    if any(not s for s in supports):
        return -1
    for k in range(n, -1, -1):
        for T in combinations(range(n), k):
            T = set(T)
            if not any(s <= T for s in supports):
                return k
    return 0


def semigroup_contains(gens, v: int) -> bool:
    reach = {0}
    for k in range(1, v + 1):
        if any(k - a in reach for a in gens if k - a >= 0):
            reach.add(k)
    return v in reach


def semigroup_module_values(gens, ideal_values, bound: int) -> set:
    """Values v(f) <= bound of elements of the monomial ideal generated by
    t^a (a in ideal_values) inside k[t^H]."""
    out = set()
    for a in ideal_values:
        for s in range(0, bound + 1):
            if semigroup_contains(gens, s) and a + s <= bound:
                out.add(a + s)
    return out
