"""Brute-force point counts of quiver Grassmannians over prime fields.

This is the independent oracle of the package: subspace tuples are enumerated
as reduced-row-echelon bases and tested for arrow stability, with no input
from the structural algorithms they validate.

Enumeration order is fixed (pivot patterns in colexicographic order, free
entries odometer-style, vertices ascending) so golden tests are stable.  For
counting only, sink vertices are never enumerated: once all arrow sources are
chosen, the admissible subspaces at a sink are those containing a known span,
and their number is a Gaussian binomial.  The enumerated/summed split is what
makes the large fixtures (millions of lines) feasible; exhaustive and summed
counts are cross-asserted on every small fixture in the test suite.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from . import rep as rp
from .errors import BudgetError, DomainError
from .fields import PrimeField, QQ
from .quiver import linear_quiver

DEFAULT_BUDGET = 10_000_000


def gaussian_binomial(d, e, p):
    """Number of e-dimensional subspaces of F_p^d (0 when e is out of range)."""
    if e < 0 or e > d:
        return 0
    num = den = 1
    for i in range(e):
        num *= p ** (d - i) - 1
        den *= p ** (i + 1) - 1
    assert num % den == 0
    return num // den


def pivot_patterns(d, e):
    """All e-subsets of columns 0..d-1 in colexicographic order."""
    return sorted(itertools.combinations(range(d), e), key=lambda J: tuple(reversed(J)))


def free_positions(pattern, d):
    """Free entries of an RREF matrix with the given pivot columns, row-major."""
    piv = set(pattern)
    out = []
    for r, j in enumerate(pattern):
        for c in range(j + 1, d):
            if c not in piv:
                out.append((r, c))
    return out


class SubspaceIter:
    """Iterator over all e-dimensional subspaces of F_p^d as RREF bases."""

    def __init__(self, d, e, p):
        if e < 0 or e > d:
            raise DomainError(f"subspace dimension {e} out of range 0..{d}")
        self.d, self.e, self.p = d, e, p

    def __len__(self):
        return gaussian_binomial(self.d, self.e, self.p)

    def __iter__(self):
        d, e, p = self.d, self.e, self.p
        if e == 0:
            yield ()
            return
        for pattern in pivot_patterns(d, e):
            free = free_positions(pattern, d)
            base = [[0] * d for _ in range(e)]
            for r, j in enumerate(pattern):
                base[r][j] = 1
            for values in itertools.product(range(p), repeat=len(free)):
                m = [row[:] for row in base]
                for (r, c), v in zip(free, values):
                    m[r][c] = v
                yield tuple(tuple(row) for row in m)

    def batches(self, chunk=1 << 15):
        """Same subspaces, same order, as numpy arrays of shape (m, e, d)."""
        d, e, p = self.d, self.e, self.p
        if e == 0:
            yield np.zeros((1, 0, d), dtype=np.int64)
            return
        for pattern in pivot_patterns(d, e):
            free = free_positions(pattern, d)
            k = len(free)
            base = np.zeros((e, d), dtype=np.int64)
            for r, j in enumerate(pattern):
                base[r, j] = 1
            total = p ** k
            start = 0
            while start < total:
                stop = min(start + chunk, total)
                mats = np.broadcast_to(base, (stop - start, e, d)).copy()
                if k:
                    digits = np.unravel_index(np.arange(start, stop), (p,) * k)
                    for idx, (r, c) in enumerate(free):
                        mats[:, r, c] = digits[idx]
                yield mats
                start = stop


def batched_rank_mod_p(mats, p):
    """Ranks of a stack of small integer matrices mod p (vectorized)."""
    a = np.ascontiguousarray(mats % p)
    m, rows, cols = a.shape
    if rows == 0 or cols == 0:
        return np.zeros(m, dtype=np.int64)
    inv_table = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    rank = np.zeros(m, dtype=np.int64)
    cur = np.zeros(m, dtype=np.int64)
    row_idx = np.arange(rows)[None, :]
    for c in range(cols):
        col = a[:, :, c]
        usable = (row_idx >= cur[:, None]) & (col != 0)
        has = usable.any(axis=1)
        mi = np.nonzero(has)[0]
        if mi.size == 0:
            continue
        piv = usable[mi].argmax(axis=1)
        r0 = cur[mi]
        tmp = a[mi, r0, :].copy()
        a[mi, r0, :] = a[mi, piv, :]
        a[mi, piv, :] = tmp
        a[mi, r0, :] = a[mi, r0, :] * inv_table[a[mi, r0, c]][:, None] % p
        colvals = a[mi, :, c].copy()
        colvals[np.arange(mi.size), r0] = 0
        a[mi] = (a[mi] - colvals[:, :, None] * a[mi, r0, :][:, None, :]) % p
        cur[mi] += 1
        rank[mi] += 1
        if (cur == rows).all():
            break
    return rank


def _require_prime_field(m_rep):
    if not isinstance(m_rep.field, PrimeField):
        raise DomainError("finite-field enumeration needs a representation over GF(p)")
    return m_rep.field.p


def _check_sub_dim_vector(m_rep, e):
    e = m_rep.quiver.check_dim_vector(e)
    if any(x > d for x, d in zip(e, m_rep.dims)):
        raise DomainError(f"e={e} exceeds dim M={m_rep.dims}")
    return e


def enumerate_subreps(m_rep, e, budget=DEFAULT_BUDGET):
    """All subrepresentation witnesses of dimension vector e, materialized."""
    p = _require_prime_field(m_rep)
    e = _check_sub_dim_vector(m_rep, e)
    q, field = m_rep.quiver, m_rep.field
    estimate = 1
    for v in range(q.vertex_count):
        estimate *= gaussian_binomial(m_rep.dims[v], e[v], p)
    if estimate > budget:
        raise BudgetError(f"enumeration of ~{estimate} tuples exceeds budget {budget}",
                          estimate=estimate)
    per_vertex = [list(SubspaceIter(m_rep.dims[v], e[v], p)) for v in range(q.vertex_count)]
    pivots = [[la.rref(b, field)[1] if b else [] for b in vx] for vx in per_vertex]
    out = []
    for choice in itertools.product(*(range(len(vx)) for vx in per_vertex)):
        ok = True
        for a, (s, t) in enumerate(q.arrows):
            bs = per_vertex[s - 1][choice[s - 1]]
            bt = per_vertex[t - 1][choice[t - 1]]
            piv = pivots[t - 1][choice[t - 1]]
            ma = m_rep.matrix(a)
            for row in bs:
                img = la.mat_vec(ma, row, field)
                if not bt:
                    if any(x % p for x in img):
                        ok = False
                        break
                elif not la.row_space_contains(bt, piv, img, field):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(rp.SubrepWitness(q, field, [per_vertex[v][choice[v]]
                                                   for v in range(q.vertex_count)]))
    return out


def _span_rank(rows_list, d, field):
    if not rows_list:
        return 0
    return la.rank(tuple(rows_list), field)


def count_points(m_rep, e, budget=DEFAULT_BUDGET, sum_sinks=True):
    """Number of points of the Grassmannian of e-dimensional subreps over F_p.

    With sum_sinks (the default), only non-sink vertices are enumerated and
    each sink contributes a closed-form Gaussian-binomial factor; set it to
    False to force the fully enumerated count.
    """
    p = _require_prime_field(m_rep)
    e = _check_sub_dim_vector(m_rep, e)
    if not sum_sinks:
        return len(enumerate_subreps(m_rep, e, budget=budget))
    q, field = m_rep.quiver, m_rep.field
    sinks = set(q.sinks())
    enumerated = [v for v in q.topological_order if v not in sinks]
    estimate = 1
    for v in enumerated:
        estimate *= gaussian_binomial(m_rep.dims[v - 1], e[v - 1], p)
    if estimate > budget:
        raise BudgetError(f"enumeration of ~{estimate} tuples exceeds budget {budget}",
                          estimate=estimate)
    sink_list = sorted(sinks)
    if len(enumerated) <= 1:
        return _count_single_enumerated(m_rep, e, enumerated, sink_list)
    return _count_dfs(m_rep, e, enumerated, sink_list)


def _sink_factor(m_rep, e, t, incoming_rows, field):
    r = _span_rank(incoming_rows, m_rep.dims[t - 1], field)
    return gaussian_binomial(m_rep.dims[t - 1] - r, e[t - 1] - r, field.p)


def _count_dfs(m_rep, e, enumerated, sink_list, witness_sink=None):
    q, field = m_rep.quiver, m_rep.field
    p = field.p
    per_vertex = {v: list(SubspaceIter(m_rep.dims[v - 1], e[v - 1], p)) for v in enumerated}
    pivots = {v: [la.rref(b, field)[1] if b else [] for b in per_vertex[v]]
              for v in enumerated}
    pos = {v: i for i, v in enumerate(enumerated)}
    # arrows between enumerated vertices, checkable once the later endpoint is set
    check_at = {v: [] for v in enumerated}
    for a, (s, t) in enumerate(q.arrows):
        if s in pos and t in pos:
            later = s if pos[s] > pos[t] else t
            check_at[later].append((a, s, t))
    total = 0
    choice = {}

    def descend(k):
        nonlocal total
        if k == len(enumerated):
            factor = 1
            for t in sink_list:
                rows = []
                for a, s, _ in q.arrows_into(t):
                    ma = m_rep.matrix(a)
                    for row in per_vertex[s][choice[s]]:
                        rows.append(la.mat_vec(ma, row, field))
                factor *= _sink_factor(m_rep, e, t, rows, field)
                if factor == 0:
                    return
            total += factor
            return
        v = enumerated[k]
        for i in range(len(per_vertex[v])):
            choice[v] = i
            ok = True
            for a, s, t in check_at[v]:
                bs = per_vertex[s][choice[s]]
                bt = per_vertex[t][choice[t]]
                piv = pivots[t][choice[t]]
                ma = m_rep.matrix(a)
                for row in bs:
                    img = la.mat_vec(ma, row, field)
                    if not bt:
                        if any(x % p for x in img):
                            ok = False
                            break
                    elif not la.row_space_contains(bt, piv, img, field):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                descend(k + 1)
        del choice[v]

    descend(0)
    return total


def _count_single_enumerated(m_rep, e, enumerated, sink_list):
    """Vectorized count when at most one vertex needs enumeration."""
    q, field = m_rep.quiver, m_rep.field
    p = field.p
    if not enumerated:
        total = 1
        for t in sink_list:
            total *= gaussian_binomial(m_rep.dims[t - 1], e[t - 1], p)
        return total
    v = enumerated[0]
    dv, ev = m_rep.dims[v - 1], e[v - 1]
    tables = {}
    for t in sink_list:
        dt = m_rep.dims[t - 1]
        tables[t] = np.array([[gaussian_binomial(n, k, p) for k in range(dt + 1)]
                              for n in range(dt + 1)], dtype=np.int64)
    arrow_mats = {}
    for a, s, t in q.arrows_from(v):
        arrow_mats[a] = np.array([[int(x) for x in row] for row in m_rep.matrix(a)],
                                 dtype=np.int64).T if m_rep.dims[t - 1] else None
    total = 0
    for batch in SubspaceIter(dv, ev, p).batches():
        m = batch.shape[0]
        factors = np.ones(m, dtype=np.int64)
        for t in sink_list:
            dt, et = m_rep.dims[t - 1], e[t - 1]
            images = []
            for a, s, tt in q.arrows_into(t):
                if s != v:
                    raise AssertionError("arrow source must be the enumerated vertex")
                if dt == 0 or ev == 0:
                    continue
                images.append(np.matmul(batch, arrow_mats[a]) % p)
            if images:
                stacked = np.concatenate(images, axis=1)
                r = batched_rank_mod_p(stacked, p)
            else:
                r = np.zeros(m, dtype=np.int64)
            kk = et - r
            valid = kk >= 0
            f = np.where(valid, tables[t][dt - r, np.maximum(kk, 0)], 0)
            factors = factors * f
        total += int(factors.sum())
    return total


@dataclass(frozen=True)
class CountPoly:
    """Integer counting polynomial in q with a consistency verdict.

    coefficients are ascending powers of q; consistency is "verified" when a
    held-out prime reproduced the interpolation, "assumed" when no held-out
    prime was available, "inconsistent" when interpolation or the held-out
    check failed (coefficients are then empty).
    """

    coefficients: tuple
    consistency: str
    primes: tuple = ()
    counts: tuple = ()
    held_out: tuple = ()
    skipped_primes: tuple = ()

    def evaluate(self, q):
        return sum(c * q ** i for i, c in enumerate(self.coefficients))

    @property
    def degree(self):
        return len(self.coefficients) - 1


def _good_reduction(m_rep, p):
    for i in range(m_rep.quiver.arrow_count):
        for row in m_rep.matrix(i):
            for x in row:
                if isinstance(x, Fraction) and x.denominator % p == 0:
                    return False
    return True


def _primes_from(start=2):
    from .fields import _is_prime
    cand = start
    while True:
        if _is_prime(cand):
            yield cand
        cand += 1


def _lagrange(points):
    """Interpolating polynomial through exact points, coefficients ascending."""
    poly = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis[:]
            for k in range(len(basis) - 1):
                basis[k] -= basis[k + 1] * xj
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            poly[k] += basis[k] * scale
    return poly


def counting_polynomial(m_rep, e, primes=None, budget=DEFAULT_BUDGET):
    """Interpolate #Gr_e(M) over F_p through enough good-reduction primes.

    M lives over Q; the degree bound is D = sum e_i (d_i - e_i), so D+1 primes
    interpolate and one more is held out for the consistency check.
    """
    if m_rep.field != QQ:
        raise DomainError("counting_polynomial expects a representation over Q")
    e = _check_sub_dim_vector(m_rep, e)
    degree_bound = sum(ei * (di - ei) for ei, di in zip(e, m_rep.dims))
    need = degree_bound + 2
    skipped = []
    good = []
    if primes is None:
        gen = _primes_from()
        while len(good) < need:
            p = next(gen)
            if _good_reduction(m_rep, p):
                good.append(p)
            else:
                skipped.append(p)
    else:
        for p in primes:
            if _good_reduction(m_rep, p):
                good.append(p)
            else:
                skipped.append(p)
        if len(good) < degree_bound + 1:
            raise DomainError(
                f"need at least {degree_bound + 1} good-reduction primes, have {len(good)}")
    interp_primes = good[:degree_bound + 1]
    held = good[degree_bound + 1] if len(good) > degree_bound + 1 else None
    counts = [count_points(rp.reduce_mod(m_rep, p), e, budget=budget)
              for p in interp_primes]
    poly = _lagrange(list(zip(interp_primes, counts)))
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    integral = all(c.denominator == 1 for c in poly)
    if not integral:
        return CountPoly((), "inconsistent", tuple(interp_primes), tuple(counts),
                         (), tuple(skipped))
    coeffs = tuple(int(c) for c in poly)
    if coeffs == (0,):
        coeffs = ()
    if held is None:
        return CountPoly(coeffs, "assumed", tuple(interp_primes), tuple(counts),
                         (), tuple(skipped))
    fresh = count_points(rp.reduce_mod(m_rep, held), e, budget=budget)
    predicted = sum(c * held ** i for i, c in enumerate(coeffs))
    verdict = "verified" if predicted == fresh else "inconsistent"
    if verdict == "inconsistent":
        coeffs = ()
    return CountPoly(coeffs, verdict, tuple(interp_primes), tuple(counts),
                     (held, fresh), tuple(skipped))


def euler_characteristic(count_poly):
    """Evaluation at q=1; refuses an inconsistent counting polynomial."""
    if count_poly.consistency == "inconsistent":
        raise DomainError("counting polynomial is inconsistent; no Euler characteristic")
    return sum(count_poly.coefficients)


def betti_numbers(count_poly):
    if count_poly.consistency == "inconsistent":
        raise DomainError("counting polynomial is inconsistent; no Betti numbers")
    return list(count_poly.coefficients)


def interval_test_family(n, field):
    """All interval modules of the equioriented A_n quiver, (i,j) lex order."""
    from .typea import interval_rep  # local import, typea builds on this module
    q = linear_quiver(n)
    return [interval_rep(q, field, i, j)
            for i in range(1, n + 1) for j in range(i, n + 1)]


def classify_strata_ff(m_rep, e, test_family=None, budget=DEFAULT_BUDGET):
    """Group enumerated witnesses by the Hom fingerprint of their restriction.

    The fingerprint of a witness W is ([T, restrict(M,W)] for T in the test
    family).  For equioriented A_n input the family defaults to all interval
    modules, making the fingerprint a complete isoclass invariant.
    """
    _require_prime_field(m_rep)
    if test_family is None:
        if not m_rep.quiver.is_linear_equioriented():
            raise DomainError("a test family is required away from equioriented A_n")
        test_family = interval_test_family(m_rep.quiver.vertex_count, m_rep.field)
    out = {}
    for w in enumerate_subreps(m_rep, e, budget=budget):
        fp = rp.hom_fingerprint(test_family, rp.restrict(m_rep, w))
        out[fp] = out.get(fp, 0) + 1
    return out
