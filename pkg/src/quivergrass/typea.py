"""Structure theory of the equioriented A_n quiver 1 -> 2 -> ... -> n.

Everything here runs on closed forms.  Indecomposables are the interval
modules U[i,j] (1 <= i <= j <= n); isoclasses are encoded either by interval
multiplicities or by the rank sequence of the composite arrow maps, and the
two encodings are mutually inverse.  Hom and Ext^1 between intervals are 0/1
by explicit inequalities; torus fixed points of a Grassmannian are tuples of
suffix subintervals of the rows of the coefficient quiver, and each fixed
point carries an attracting cell whose dimension is read off the diagram.
"""

import random as _random
from dataclasses import dataclass

from . import linalg as la
from . import rep as rp
from .counting import CountPoly
from .errors import DomainError
from .quiver import linear_quiver


def _require_linear(quiver):
    if not quiver.is_linear_equioriented():
        raise DomainError("wrong quiver shape: expected the equioriented A_n quiver")
    return quiver.vertex_count


def interval_rep(quiver, field, i, j):
    """The thin indecomposable U[i,j] supported on vertices i..j."""
    n = _require_linear(quiver)
    if not (1 <= i <= j <= n):
        raise DomainError(f"bad interval ({i},{j}) for n={n}")
    dims = tuple(1 if i <= v <= j else 0 for v in range(1, n + 1))
    arrows = sorted(quiver.arrows)
    order = {a: quiver.arrows.index(a) for a in arrows}
    mats = [None] * quiver.arrow_count
    for (s, t) in arrows:
        mats[order[(s, t)]] = ((field.one,),) if i <= s and t <= j else ()
    return rp.Representation(quiver, field, dims, mats)


def interval_dims(n, i, j):
    return tuple(1 if i <= v <= j else 0 for v in range(1, n + 1))


class RankSequence:
    """Ranks r[i,j] of the composite maps M_i -> M_j, a complete isoclass key."""

    def __init__(self, n, r):
        self.n = n
        self.r = {(i, j): int(r[(i, j)]) for i in range(1, n + 1) for j in range(i, n + 1)}
        for v in self.r.values():
            if v < 0:
                raise DomainError("ranks must be nonnegative")
        get = self.get
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if get(i, j) + get(i - 1, j + 1) < get(i, j + 1) + get(i - 1, j):
                    raise DomainError(f"not a rank sequence: inequality fails at ({i},{j})")

    def get(self, i, j):
        if i == 0 or j == self.n + 1:
            return 0
        return self.r[(i, j)]

    def dim_vector(self):
        return tuple(self.r[(i, i)] for i in range(1, self.n + 1))

    def __eq__(self, other):
        return isinstance(other, RankSequence) and other.n == self.n and other.r == self.r

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.r.items()))))

    def __repr__(self):
        return f"RankSequence(n={self.n}, r={self.r})"


class IntervalDecomposition:
    """Multiset of intervals: M = (+) U[i,j]^m[i,j]."""

    def __init__(self, n, multiplicities):
        self.n = n
        m = {}
        for (i, j), mult in multiplicities.items():
            mult = int(mult)
            if mult < 0:
                raise DomainError("multiplicities must be nonnegative")
            if not (1 <= i <= j <= n):
                raise DomainError(f"bad interval ({i},{j}) for n={n}")
            if mult:
                m[(i, j)] = mult
        self.m = m

    def dim_vector(self):
        d = [0] * self.n
        for (i, j), mult in self.m.items():
            for v in range(i, j + 1):
                d[v - 1] += mult
        return tuple(d)

    def summands(self):
        """Intervals with multiplicity, in coefficient-quiver row order."""
        out = []
        for (i, j) in sorted(self.m, key=lambda ij: (-ij[1], -ij[0])):
            out.extend([(i, j)] * self.m[(i, j)])
        return out

    def total_dim(self):
        return sum(self.dim_vector())

    def to_representation(self, field):
        q = linear_quiver(self.n)
        parts = [interval_rep(q, field, i, j) for (i, j) in self.summands()]
        if not parts:
            return rp.zero_rep(q, field)
        return rp.direct_sum(*parts)

    def __eq__(self, other):
        return (isinstance(other, IntervalDecomposition) and other.n == self.n
                and other.m == self.m)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.m.items()))))

    def __repr__(self):
        terms = " + ".join(f"U[{i},{j}]" + (f"^{m}" if m > 1 else "")
                           for (i, j), m in sorted(self.m.items())) or "0"
        return terms


def rank_sequence(m_rep):
    """r[i,j] = rank of the composite map from vertex i to vertex j."""
    n = _require_linear(m_rep.quiver)
    field = m_rep.field
    arrow_index = {s: a for a, (s, t) in enumerate(m_rep.quiver.arrows)}
    d = m_rep.dims
    r = {}
    for i in range(1, n + 1):
        r[(i, i)] = d[i - 1]
        comp = la.identity(d[i - 1], field)
        for j in range(i + 1, n + 1):
            # a zero space anywhere along the chain kills the composite
            if comp is None or d[j - 1] == 0 or d[i - 1] == 0:
                comp = None
                r[(i, j)] = 0
                continue
            comp = la.mul(m_rep.matrix(arrow_index[j - 1]), comp, field)
            r[(i, j)] = la.rank(comp, field)
    return RankSequence(n, r)


def multiplicities_from_ranks(ranks):
    """Inclusion-exclusion inverse of ranks_from_multiplicities."""
    n = ranks.n
    g = ranks.get
    m = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            m[(i, j)] = g(i, j) - g(i - 1, j) - g(i, j + 1) + g(i - 1, j + 1)
    return IntervalDecomposition(n, m)


def ranks_from_multiplicities(dec):
    n = dec.n
    r = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            r[(i, j)] = sum(mult for (k, l), mult in dec.m.items() if k <= i and j <= l)
    return RankSequence(n, r)


def decompose(m_rep):
    return multiplicities_from_ranks(rank_sequence(m_rep))


def to_decomposition(x):
    if isinstance(x, IntervalDecomposition):
        return x
    if isinstance(x, RankSequence):
        return multiplicities_from_ranks(x)
    if isinstance(x, rp.Representation):
        return decompose(x)
    raise DomainError(f"cannot interpret {x!r} as a type-A module")


def to_ranks(x):
    if isinstance(x, RankSequence):
        return x
    return ranks_from_multiplicities(to_decomposition(x))


def hom_interval(ij, kl):
    """dim Hom(U[i,j], U[k,l]): 1 iff k <= i <= l <= j."""
    (i, j), (k, l) = ij, kl
    return 1 if k <= i <= l <= j else 0


def ext_interval(kl, ij):
    """dim Ext^1(U[k,l], U[i,j]): 1 iff k+1 <= i <= l+1 <= j."""
    (k, l), (i, j) = kl, ij
    return 1 if k + 1 <= i <= l + 1 <= j else 0


def hom_dim_decs(a, b):
    """[A, B] for interval sums, by the closed form."""
    a, b = to_decomposition(a), to_decomposition(b)
    return sum(ma * mb * hom_interval(ij, kl)
               for ij, ma in a.m.items() for kl, mb in b.m.items())


def ext_dim_decs(a, b):
    a, b = to_decomposition(a), to_decomposition(b)
    return sum(ma * mb * ext_interval(ij, kl)
               for ij, ma in a.m.items() for kl, mb in b.m.items())


def deg_leq_ranks(m, n):
    """Degeneration order by rank conditions: equal diagonal, m ranks >= n ranks."""
    rm, rn = to_ranks(m), to_ranks(n)
    if rm.n != rn.n:
        raise DomainError("rank sequences live on different A_n quivers")
    for i in range(1, rm.n + 1):
        if rm.r[(i, i)] != rn.r[(i, i)]:
            return False
        for j in range(i + 1, rm.n + 1):
            if rm.r[(i, j)] < rn.r[(i, j)]:
                return False
    return True


def deg_leq_hom(m, n):
    """Degeneration order by Hom conditions: [U, M] <= [U, N] for all intervals."""
    dm, dn = to_decomposition(m), to_decomposition(n)
    if dm.n != dn.n:
        raise DomainError("modules live on different A_n quivers")
    if dm.dim_vector() != dn.dim_vector():
        raise DomainError("degeneration order compares equal dimension vectors only")
    for k in range(1, dm.n + 1):
        for l in range(k, dm.n + 1):
            u = IntervalDecomposition(dm.n, {(k, l): 1})
            if hom_dim_decs(u, dm) > hom_dim_decs(u, dn):
                return False
    return True


class CoefficientQuiver:
    """Rows of the string diagram, sorted so Ext^1(row r, row r') = 0 for r < r'.

    The sort key (j descending, then i descending) realizes that property:
    Ext^1(U[a,b], U[c,d]) != 0 forces d >= b+1 > b, so a row can never have
    an extension into a row sorted after it.  Ties between identical rows are
    broken by insertion order, which is harmless since equal rows commute.
    """

    def __init__(self, rows):
        self.rows = tuple(sorted(rows, key=lambda ij: (-ij[1], -ij[0])))

    @property
    def n_rows(self):
        return len(self.rows)

    def __repr__(self):
        return f"CoefficientQuiver({list(self.rows)})"


def coefficient_quiver(m):
    return CoefficientQuiver(to_decomposition(m).summands())


class TorusFixedPoint:
    """A coordinate subrepresentation: per row, either None or a suffix start.

    Row r of the coefficient quiver is an interval [i_r, j_r]; its nonzero
    subrepresentations are exactly the suffixes U[a, j_r] with a >= i_r, so a
    fixed point selects one suffix (or nothing) in every row.
    """

    def __init__(self, cq, starts):
        starts = tuple(starts)
        if len(starts) != cq.n_rows:
            raise DomainError("one suffix choice per row required")
        for (i, j), a in zip(cq.rows, starts):
            if a is not None and not (i <= a <= j):
                raise DomainError(f"suffix start {a} outside row [{i},{j}]")
        self.cq = cq
        self.starts = starts

    def dim_vector(self, n):
        d = [0] * n
        for (i, j), a in zip(self.cq.rows, self.starts):
            if a is not None:
                for v in range(a, j + 1):
                    d[v - 1] += 1
        return tuple(d)

    def isoclass(self, n):
        m = {}
        for (i, j), a in zip(self.cq.rows, self.starts):
            if a is not None:
                m[(a, j)] = m.get((a, j), 0) + 1
        return IntervalDecomposition(n, m)

    def __eq__(self, other):
        return (isinstance(other, TorusFixedPoint) and other.cq.rows == self.cq.rows
                and other.starts == self.starts)

    def __hash__(self):
        return hash((self.cq.rows, self.starts))

    def __repr__(self):
        return f"TorusFixedPoint({list(self.starts)})"


def fixed_points(m, e):
    """All torus fixed points of Gr_e, as suffix choices in the row diagram."""
    dec = to_decomposition(m)
    n = dec.n
    e = tuple(int(x) for x in e)
    if len(e) != n or any(x < 0 for x in e):
        raise DomainError("bad dimension vector e")
    if any(x > d for x, d in zip(e, dec.dim_vector())):
        return []
    cq = coefficient_quiver(dec)
    out = []
    starts = []

    def descend(r, remaining):
        if r == len(cq.rows):
            if all(x == 0 for x in remaining):
                out.append(TorusFixedPoint(cq, tuple(starts)))
            return
        i, j = cq.rows[r]
        choices = [None] + list(range(j, i - 1, -1))
        for a in choices:
            if a is None:
                starts.append(None)
                descend(r + 1, remaining)
                starts.pop()
                continue
            nxt = list(remaining)
            ok = True
            for v in range(a, j + 1):
                nxt[v - 1] -= 1
                if nxt[v - 1] < 0:
                    ok = False
                    break
            if ok:
                starts.append(a)
                descend(r + 1, tuple(nxt))
                starts.pop()

    descend(0, e)
    return out


def cell_dimension(cq, point):
    """Dimension of the attracting cell of a fixed point.

    For each selected suffix, its leftmost vertex is a source of the black
    subdiagram; the cell dimension is the number of white vertices lying
    strictly below such a source in the same column (rows after r whose
    support contains the column but whose selection does not).
    """
    if point.cq.rows != cq.rows:
        raise DomainError("fixed point belongs to a different coefficient quiver")
    dim = 0
    for r, ((i, j), a) in enumerate(zip(cq.rows, point.starts)):
        if a is None:
            continue
        for r2 in range(r + 1, len(cq.rows)):
            i2, j2 = cq.rows[r2]
            if i2 <= a <= j2:
                a2 = point.starts[r2]
                if a2 is None or a < a2:
                    dim += 1
    return dim


def poincare_polynomial(m, e):
    """Sum of q^(cell dimension) over all torus fixed points."""
    dec = to_decomposition(m)
    cq = coefficient_quiver(dec)
    pts = fixed_points(dec, e)
    if not pts:
        return CountPoly((), "assumed")
    dims = [cell_dimension(cq, L) for L in pts]
    coeffs = [0] * (max(dims) + 1)
    for d in dims:
        coeffs[d] += 1
    return CountPoly(tuple(coeffs), "assumed")


def euler_char_cells(m, e):
    """Euler characteristic = number of torus fixed points (cells are affine)."""
    return len(fixed_points(m, e))


@dataclass(frozen=True)
class Stratum:
    isoclass: IntervalDecomposition
    dim: int
    cells: int


def strata(m, e):
    """Nonempty iso-strata of Gr_e(M), their dimensions, and their cell counts.

    A stratum is nonempty exactly when it contains a torus fixed point (every
    cell lies in the stratum of its fixed point); its dimension is
    [N,M] - [N,N] by the closed-form interval Homs.
    """
    dec = to_decomposition(m)
    n = dec.n
    classes = {}
    for pt in fixed_points(dec, e):
        iso = pt.isoclass(n)
        classes[iso] = classes.get(iso, 0) + 1
    out = []
    for iso, cells in classes.items():
        dim = hom_dim_decs(iso, dec) - hom_dim_decs(iso, iso)
        out.append(Stratum(iso, dim, cells))
    out.sort(key=lambda s: (-s.dim, sorted(s.isoclass.m.items())))
    return out


def is_catenoid(m):
    """True when the distinct summand intervals lie on one oriented path of
    the AR quiver, i.e. form a chain under componentwise <=."""
    dec = to_decomposition(m)
    intervals = sorted(dec.m.keys())
    for a in intervals:
        for b in intervals:
            if not (a[0] <= b[0] and a[1] <= b[1]) and not (b[0] <= a[0] and b[1] <= a[1]):
                return False
    return True


def flat_locus_class(m):
    """Position of a d = (n+1,...,n+1) module in the flat locus of the
    universal Grassmannian degenerating the complete flag variety."""
    ranks = to_ranks(m)
    n = ranks.n
    if ranks.dim_vector() != (n + 1,) * n:
        raise DomainError(f"flat-locus classification needs d = {(n + 1,) * n}")

    def at_least(threshold):
        return all(ranks.r[(i, j)] >= threshold(i, j)
                   for i in range(1, n + 1) for j in range(i + 1, n + 1))

    if at_least(lambda i, j: n + 1 - (j - i)):
        return "flat-irreducible"
    if at_least(lambda i, j: n - (j - i)):
        return "flat-only"
    return "non-flat"


def min_projective_resolution(m):
    """0 -> P -> R -> M -> 0 with R projective covering M summand by summand.

    Each summand U[i,j] lifts to P_i = U[i,n]; its syzygy is P_{j+1} = U[j+1,n]
    when j < n and vanishes when U[i,j] is already projective.
    """
    dec = to_decomposition(m)
    n = dec.n
    r = {}
    p = {}
    for (i, j), mult in dec.m.items():
        r[(i, n)] = r.get((i, n), 0) + mult
        if j < n:
            p[(j + 1, n)] = p.get((j + 1, n), 0) + mult
    return IntervalDecomposition(n, p), IntervalDecomposition(n, r)


def tau_interval(ij, n):
    """AR translate on intervals: U[i,j] -> U[i+1,j+1], none for projectives."""
    i, j = ij
    if not (1 <= i <= j <= n):
        raise DomainError(f"bad interval ({i},{j}) for n={n}")
    if j + 1 > n:
        return None
    return (i + 1, j + 1)


def tau_inverse_interval(ij, n):
    """Inverse AR translate: U[i,j] -> U[i-1,j-1], none for injectives."""
    i, j = ij
    if not (1 <= i <= j <= n):
        raise DomainError(f"bad interval ({i},{j}) for n={n}")
    if i - 1 < 1:
        return None
    return (i - 1, j - 1)


# Named modules of the theory, as interval decompositions.

def flag_dec(n):
    """P_1^(n+1): the module whose Grassmannian at e=(1,...,n) is the flag variety."""
    return IntervalDecomposition(n, {(1, n): n + 1})


def path_algebra_dec(n):
    """A = (+) P_i."""
    return IntervalDecomposition(n, {(i, n): 1 for i in range(1, n + 1)})


def injective_cogenerator_dec(n):
    """DA = (+) I_k."""
    return IntervalDecomposition(n, {(1, k): 1 for k in range(1, n + 1)})


def degenerate_flag_dec(n):
    """A (+) DA, the degenerate flag variety module."""
    m = {}
    for (i, j), mult in list(path_algebra_dec(n).m.items()) + \
            list(injective_cogenerator_dec(n).m.items()):
        m[(i, j)] = m.get((i, j), 0) + mult
    return IntervalDecomposition(n, m)


def most_flat_dec(n):
    """The most degenerate flat fiber: (+)P_i (+) I_1..I_{n-1} (+) all simples."""
    m = {}
    for i in range(1, n + 1):
        m[(i, n)] = m.get((i, n), 0) + 1
    for j in range(1, n):
        m[(1, j)] = m.get((1, j), 0) + 1
    for k in range(1, n + 1):
        m[(k, k)] = m.get((k, k), 0) + 1
    return IntervalDecomposition(n, m)


def semisimple_dec(n):
    return IntervalDecomposition(n, {(k, k): n + 1 for k in range(1, n + 1)})


def random_decomposition(n, rng_or_seed=0, max_mult=2):
    """Seeded random interval multiplicities (test plumbing)."""
    rng = rng_or_seed if isinstance(rng_or_seed, _random.Random) \
        else _random.Random(rng_or_seed)
    m = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            mult = rng.randint(0, max_mult)
            if mult:
                m[(i, j)] = mult
    return IntervalDecomposition(n, m)
