"""Quiver representations over an exact field, and their homological algebra.

The central computation is the defect map of a pair of representations N, M:

    Phi : Hom(e,d) -> Hom(e,d[1]),   (f_i)_i |-> (M_a f_{s(a)} - f_{t(a)} N_a)_a

whose kernel is Hom_Q(N,M) and whose cokernel is Ext^1_Q(N,M).  Its matrix is
written in a fixed basis (vertices ascending, column-major inside each block),
so phi_map output is reproducible bit for bit.

Conventions: arrow matrices have shape (d_target x d_source) and act on column
vectors; subspaces are row spaces of reduced-row-echelon basis matrices.
"""

import random

from . import linalg as la
from .errors import DomainError
from .fields import QQ, PrimeField
from .quiver import Quiver, euler_form


class Representation:
    """Immutable: a quiver, a field, a dimension vector, one matrix per arrow."""

    def __init__(self, quiver, field, dims, matrices):
        dims = quiver.check_dim_vector(dims)
        matrices = [la.mat(m, field) for m in matrices]
        if len(matrices) != quiver.arrow_count:
            raise DomainError(f"expected {quiver.arrow_count} matrices, got {len(matrices)}")
        for i, (s, t) in enumerate(quiver.arrows):
            want = (dims[t - 1], dims[s - 1])
            # matrices with a zero dimension lose their shape; normalize them
            if dims[t - 1] == 0:
                matrices[i] = ()
                continue
            if dims[s - 1] == 0:
                matrices[i] = tuple(() for _ in range(dims[t - 1]))
                continue
            if la.shape(matrices[i]) != want:
                raise DomainError(
                    f"arrow {i} matrix shape {la.shape(matrices[i])}, expected {want}")
        self.quiver = quiver
        self.field = field
        self.dims = dims
        self.matrices = tuple(matrices)

    def matrix(self, i):
        """Arrow matrix with explicit shape (zero-dim cases included)."""
        s, t = self.quiver.arrows[i]
        m = self.matrices[i]
        if not m:
            return la.zeros(self.dims[t - 1], self.dims[s - 1], self.field)
        return m

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def __eq__(self, other):
        return (isinstance(other, Representation) and other.quiver == self.quiver
                and other.field == self.field and other.dims == self.dims
                and tuple(other.matrix(i) for i in range(other.quiver.arrow_count))
                == tuple(self.matrix(i) for i in range(self.quiver.arrow_count)))

    def __hash__(self):
        return hash((self.quiver, self.field, self.dims))

    def __repr__(self):
        return f"Representation(dims={self.dims}, field={self.field})"


def zero_rep(quiver, field):
    return Representation(quiver, field, (0,) * quiver.vertex_count,
                          [()] * quiver.arrow_count)


def _check_pair(n, m):
    if n.quiver != m.quiver:
        raise DomainError("representations live on different quivers")
    if n.field != m.field:
        raise DomainError("representations live over different fields")


def phi_map(n_rep, m_rep):
    """Matrix of Phi for the pair (N, M); kernel = Hom(N,M), cokernel = Ext^1.

    Columns index Hom(e,d) = sum of blocks Hom(K^{e_i}, K^{d_i}), vertices
    ascending, each block vectorized column-major.  Rows index Hom(e,d[1]),
    arrows in quiver order, blocks vectorized the same way.
    """
    _check_pair(n_rep, m_rep)
    quiver, field = n_rep.quiver, n_rep.field
    e, d = n_rep.dims, m_rep.dims
    col_offsets = []
    off = 0
    for i in range(quiver.vertex_count):
        col_offsets.append(off)
        off += e[i] * d[i]
    total_cols = off
    rows = []
    for a, (s, t) in enumerate(quiver.arrows):
        block_rows = e[s - 1] * d[t - 1]
        block = [[field.zero] * total_cols for _ in range(block_rows)]
        # vec(M_a f_s) = (I_{e_s} (x) M_a) vec(f_s)
        ma = m_rep.matrix(a)
        left = la.kron(la.identity(e[s - 1], field), ma, field) if block_rows else ()
        for r in range(len(left)):
            base = col_offsets[s - 1]
            for c in range(e[s - 1] * d[s - 1]):
                block[r][base + c] = field.add(block[r][base + c], left[r][c])
        # vec(f_t N_a) = (N_a^T (x) I_{d_t}) vec(f_t)
        na = n_rep.matrix(a)
        nat = la.transpose(na, cols=e[s - 1])
        right = la.kron(nat, la.identity(d[t - 1], field), field) if block_rows else ()
        for r in range(len(right)):
            base = col_offsets[t - 1]
            for c in range(e[t - 1] * d[t - 1]):
                block[r][base + c] = field.sub(block[r][base + c], right[r][c])
        rows.extend(tuple(r) for r in block)
    return tuple(rows), total_cols


def hom_dim(n_rep, m_rep):
    phi, cols = phi_map(n_rep, m_rep)
    return cols - la.rank(phi, n_rep.field)


def ext1_dim(n_rep, m_rep):
    """dim Ext^1(N,M) = dim Hom(N,M) - <dim N, dim M> (cokernel rank of Phi)."""
    phi, cols = phi_map(n_rep, m_rep)
    r = la.rank(phi, n_rep.field)
    return len(phi) - r


def hom_basis(n_rep, m_rep):
    """Basis of Hom_Q(N,M) as tuples of per-vertex matrices (d_i x e_i)."""
    phi, cols = phi_map(n_rep, m_rep)
    field = n_rep.field
    e, d = n_rep.dims, m_rep.dims
    if cols == 0:
        vectors = []
    elif not phi:
        # no constraints: the whole degree-zero space is the kernel
        vectors = [tuple(field.one if i == j else field.zero for i in range(cols))
                   for j in range(cols)]
    else:
        vectors = la.nullspace(phi, field)
    out = []
    for v in vectors:
        mats = []
        off = 0
        for i in range(n_rep.quiver.vertex_count):
            block = v[off:off + e[i] * d[i]]
            off += e[i] * d[i]
            # column-major: entry (r,c) of the d_i x e_i matrix is block[c*d_i + r]
            mats.append(tuple(tuple(block[c * d[i] + r] for c in range(e[i]))
                              for r in range(d[i])))
        out.append(tuple(mats))
    return out


def is_rigid(m_rep):
    return ext1_dim(m_rep, m_rep) == 0


def simple(quiver, field, k):
    if not (1 <= k <= quiver.vertex_count):
        raise DomainError(f"bad vertex {k}")
    dims = tuple(1 if v == k else 0 for v in range(1, quiver.vertex_count + 1))
    mats = []
    for s, t in quiver.arrows:
        mats.append(() if dims[t - 1] == 0 else la.zeros(dims[t - 1], dims[s - 1], field))
    return Representation(quiver, field, dims, mats)


def projective(quiver, field, k):
    """P_k: basis at vertex i = paths k -> i, arrows act by concatenation."""
    paths = quiver.paths_from(k)
    dims = tuple(len(paths[v]) for v in range(1, quiver.vertex_count + 1))
    index = {v: {p: j for j, p in enumerate(paths[v])} for v in paths}
    mats = []
    for a, (s, t) in enumerate(quiver.arrows):
        m = [[field.zero] * dims[s - 1] for _ in range(dims[t - 1])]
        for j, p in enumerate(paths[s]):
            q = p + (a,)
            m[index[t][q]][j] = field.one
        mats.append(tuple(tuple(r) for r in m))
    return Representation(quiver, field, dims, mats)


def injective(quiver, field, k):
    """I_k = D(projective of the opposite quiver at k)."""
    return dual(projective(quiver.opposite(), field, k))


def dual(m_rep):
    """Linear dual over the opposite quiver: reverse arrows, transpose matrices."""
    q = m_rep.quiver
    mats = []
    for i, (s, t) in enumerate(q.arrows):
        mats.append(la.transpose(m_rep.matrix(i), cols=m_rep.dims[s - 1]))
    return Representation(q.opposite(), m_rep.field, m_rep.dims, mats)


def direct_sum(*reps):
    if not reps:
        raise DomainError("direct_sum of nothing")
    first = reps[0]
    for r in reps[1:]:
        _check_pair(first, r)
    q, field = first.quiver, first.field
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(q.vertex_count))
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        rtot = sum(r.dims[t - 1] for r in reps)
        ctot = sum(r.dims[s - 1] for r in reps)
        out = [[field.zero] * ctot for _ in range(rtot)]
        r0 = c0 = 0
        for r in reps:
            rr, cc = r.dims[t - 1], r.dims[s - 1]
            if rr and cc:
                m = r.matrix(a)
                for i in range(rr):
                    out[r0 + i][c0:c0 + cc] = list(m[i])
            r0 += rr
            c0 += cc
        mats.append(tuple(tuple(row) for row in out))
    return Representation(q, field, dims, mats)


class SubrepWitness:
    """A point of a quiver Grassmannian: per-vertex RREF row bases inside M.

    bases[i] is an (e_i x d_i) full-row-rank reduced-row-echelon matrix whose
    row space is the chosen subspace at vertex i+1.
    """

    def __init__(self, quiver, field, bases):
        bases = tuple(la.mat(b, field) if b else () for b in bases)
        if len(bases) != quiver.vertex_count:
            raise DomainError("one basis matrix per vertex required")
        pivots = []
        for b in bases:
            if b and not la.is_rref(b, field):
                raise DomainError("witness bases must be in reduced row echelon form")
            r, piv = la.rref(b, field) if b else ((), [])
            if b and len(piv) != len(b):
                raise DomainError("witness bases must have full row rank")
            pivots.append(tuple(piv))
        self.quiver = quiver
        self.field = field
        self.bases = bases
        self.pivots = tuple(pivots)

    @property
    def dims(self):
        return tuple(len(b) for b in self.bases)

    def ambient_dims(self):
        return tuple(len(b[0]) if b else None for b in self.bases)

    def is_stable(self, m_rep):
        """Arrow stability: each basis row maps into the target row space."""
        for a, (s, t) in enumerate(m_rep.quiver.arrows):
            bs, bt = self.bases[s - 1], self.bases[t - 1]
            piv = self.pivots[t - 1]
            ma = m_rep.matrix(a)
            for row in bs:
                img = la.mat_vec(ma, row, m_rep.field)
                if not bt:
                    if any(not m_rep.field.is_zero(x) for x in img):
                        return False
                elif not la.row_space_contains(bt, piv, img, m_rep.field):
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, SubrepWitness) and other.bases == self.bases

    def __hash__(self):
        return hash(self.bases)

    def __repr__(self):
        return f"SubrepWitness(dims={self.dims})"


def full_witness(m_rep):
    q, f = m_rep.quiver, m_rep.field
    return SubrepWitness(q, f, [la.identity(d, f) if d else () for d in m_rep.dims])


def zero_witness(m_rep):
    return SubrepWitness(m_rep.quiver, m_rep.field, [()] * m_rep.quiver.vertex_count)


def restrict(m_rep, witness):
    """The subrepresentation L with matrices written in the witness row bases."""
    q, field = m_rep.quiver, m_rep.field
    e = witness.dims
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        bs, bt = witness.bases[s - 1], witness.bases[t - 1]
        if e[t - 1] == 0:
            if e[s - 1] and bs:
                ma = m_rep.matrix(a)
                for row in bs:
                    img = la.mat_vec(ma, row, field)
                    if any(not field.is_zero(x) for x in img):
                        raise DomainError("witness is not arrow-stable")
            mats.append(())
            continue
        ma = m_rep.matrix(a)
        imgs = la.mul(ma, la.transpose(bs, cols=m_rep.dims[s - 1]), field) if e[s - 1] else \
            la.zeros(m_rep.dims[t - 1], 0, field)
        # coordinates of a vector in the RREF row basis are its pivot entries
        piv = witness.pivots[t - 1]
        coords = tuple(tuple(imgs[p][c] for c in range(e[s - 1])) for p in piv)
        check = la.mul(la.transpose(bt, cols=m_rep.dims[t - 1]), coords, field)
        if check != imgs:
            raise DomainError("witness is not arrow-stable")
        mats.append(coords)
    return Representation(q, field, e, mats)


def quotient(m_rep, witness):
    """M/L in the complementary coordinates (non-pivot columns of the bases)."""
    q, field = m_rep.quiver, m_rep.field
    d = m_rep.dims
    e = witness.dims
    qdims = tuple(d[i] - e[i] for i in range(q.vertex_count))
    if any(x < 0 for x in qdims):
        raise DomainError("witness larger than the ambient representation")
    nonpiv = [tuple(c for c in range(d[i]) if c not in witness.pivots[i])
              for i in range(q.vertex_count)]

    def project(i, v):
        # subtract the witness component, read off non-pivot coordinates
        b = witness.bases[i]
        if b:
            coeffs = [v[c] for c in witness.pivots[i]]
            for coef, row in zip(coeffs, b):
                if not field.is_zero(coef):
                    v = [field.sub(x, field.mul(coef, y)) for x, y in zip(v, row)]
        return tuple(v[c] for c in nonpiv[i])

    mats = []
    for a, (s, t) in enumerate(q.arrows):
        if qdims[t - 1] == 0:
            mats.append(())
            continue
        ma = m_rep.matrix(a)
        cols = []
        for c in nonpiv[s - 1]:
            unit = [field.zero] * d[s - 1]
            unit[c] = field.one
            cols.append(project(t - 1, list(la.mat_vec(ma, unit, field))))
        mats.append(tuple(tuple(col[r] for col in cols) for r in range(qdims[t - 1])))
    return Representation(q, field, qdims, mats)


def tangent_dim(m_rep, witness):
    """dim of the Grassmannian tangent space at the witness: [L, M/L]."""
    if not witness.is_stable(m_rep):
        raise DomainError("witness is not arrow-stable")
    return hom_dim(restrict(m_rep, witness), quotient(m_rep, witness))


def build_extension(s_rep, x_rep, cocycle):
    """Middle term of the extension of S by X given by a degree-one cocycle.

    cocycle is one matrix per arrow, of shape (dim X_{t(a)} x dim S_{s(a)});
    the result Y has Y_a = [[X_a, z_a], [0, S_a]] with X occupying the leading
    coordinates.  Returns (Y, iota, pi): per-vertex matrices of the inclusion
    X -> Y and the projection Y -> S.
    """
    _check_pair(x_rep, s_rep)
    q, field = x_rep.quiver, x_rep.field
    dx, ds = x_rep.dims, s_rep.dims
    cocycle = [la.mat(z, field) if z else () for z in cocycle]
    if len(cocycle) != q.arrow_count:
        raise DomainError("one cocycle matrix per arrow required")
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        rx, cx = dx[t - 1], dx[s - 1]
        rs, cs = ds[t - 1], ds[s - 1]
        z = cocycle[a]
        if rx and cs:
            if not z:
                z = la.zeros(rx, cs, field)  # empty block means zero
            if la.shape(z) != (rx, cs):
                raise DomainError(f"cocycle matrix {a} has shape {la.shape(z)}, want {(rx, cs)}")
        elif z and any(row for row in z):
            raise DomainError(f"cocycle matrix {a} should be empty")
        else:
            z = ()
        rows = []
        for r in range(rx):
            left = x_rep.matrix(a)[r] if cx else ()
            right = z[r] if cs else ()
            rows.append(tuple(left) + tuple(right))
        for r in range(rs):
            rows.append((field.zero,) * cx + tuple(s_rep.matrix(a)[r]))
        mats.append(tuple(rows))
    y = Representation(q, field, tuple(a + b for a, b in zip(dx, ds)), mats)
    iota = tuple(la.vstack([la.identity(dx[i], field), la.zeros(ds[i], dx[i], field)])
                 if dx[i] else la.zeros(dx[i] + ds[i], 0, field)
                 for i in range(q.vertex_count))
    pi = tuple(la.hstack([la.zeros(ds[i], dx[i], field), la.identity(ds[i], field)])
               if ds[i] else ()
               for i in range(q.vertex_count))
    return y, iota, pi


def nonzero_ext_cocycle(s_rep, x_rep):
    """A cocycle whose class spans Ext^1(S,X); requires that space nonzero.

    Found as the first standard basis vector of Hom(dim S, dim X[1]) outside
    the column space of Phi_S^X, so the output is deterministic.
    """
    phi, cols = phi_map(s_rep, x_rep)
    field = x_rep.field
    nrows = len(phi)
    base_rank = la.rank(phi, field)
    if nrows - base_rank == 0:
        raise DomainError("Ext^1(S,X) = 0, no nonzero class")
    phit = la.transpose(phi, cols=cols)
    for j in range(nrows):
        unit = tuple(field.one if i == j else field.zero for i in range(nrows))
        if la.rank(phit + (unit,), field) > base_rank:
            return _unvec_degree_one(x_rep, s_rep, [field.one if i == j else field.zero
                                                    for i in range(nrows)])
    raise AssertionError("unreachable: cokernel nonzero but no unit vector outside image")


def _unvec_degree_one(x_rep, s_rep, vec):
    """Split a Hom(dim S, dim X[1]) coordinate vector into per-arrow matrices."""
    q = x_rep.quiver
    field = x_rep.field
    out = []
    off = 0
    for a, (s, t) in enumerate(q.arrows):
        r, c = x_rep.dims[t - 1], s_rep.dims[s - 1]
        block = vec[off:off + r * c]
        off += r * c
        out.append(tuple(tuple(block[cc * r + rr] for cc in range(c)) for rr in range(r))
                   if r and c else ())
    return out


def morphism_image_witness(phi_mats, source, target):
    """Witness for the per-vertex image of a morphism source -> target."""
    field = target.field
    bases = []
    for i in range(target.quiver.vertex_count):
        if source.dims[i] == 0 or target.dims[i] == 0:
            bases.append(())
            continue
        bases.append(la.column_space_as_row_basis(phi_mats[i], field))
    return SubrepWitness(target.quiver, field, bases)


def morphism_kernel_witness(phi_mats, source, target):
    """Witness for the per-vertex kernel of a morphism source -> target."""
    field = source.field
    bases = []
    for i in range(source.quiver.vertex_count):
        if source.dims[i] == 0:
            bases.append(())
            continue
        if target.dims[i] == 0:
            bases.append(la.identity(source.dims[i], field))
            continue
        kern = la.nullspace(phi_mats[i], field)
        if not kern:
            bases.append(())
            continue
        r, piv = la.rref(tuple(kern), field)
        bases.append(tuple(r[j] for j in range(len(piv))))
    return SubrepWitness(source.quiver, field, bases)


class EmbeddingSearch:
    """Outcome of the randomized search for an injective morphism N -> M."""

    def __init__(self, found, witness, morphism, certainty):
        self.found = found
        self.witness = witness
        self.morphism = morphism
        self.certainty = certainty  # "exact" or "probabilistic"

    def __bool__(self):
        return self.found


def generic_embeds(n_rep, m_rep, trials=40, seed=0):
    """Search Hom(N,M) for an injective element by seeded random sampling.

    A positive answer is exactly verified (per-vertex ranks).  A negative
    answer is probabilistic unless Hom(N,M) = 0 rules every morphism out.
    """
    _check_pair(n_rep, m_rep)
    field = n_rep.field
    if any(e > d for e, d in zip(n_rep.dims, m_rep.dims)):
        raise DomainError("dim N must be <= dim M componentwise")
    if n_rep.is_zero():
        return EmbeddingSearch(True, zero_witness(m_rep), None, "exact")
    basis = hom_basis(n_rep, m_rep)
    if not basis:
        return EmbeddingSearch(False, None, None, "exact")
    rng = random.Random(seed)
    nverts = n_rep.quiver.vertex_count
    for trial in range(trials):
        bound = 2 + trial
        if field.characteristic == 0:
            coeffs = [field.of(rng.randint(-bound, bound)) for _ in basis]
        else:
            coeffs = [rng.randrange(field.characteristic) for _ in basis]
        mats = []
        for i in range(nverts):
            acc = la.zeros(m_rep.dims[i], n_rep.dims[i], field)
            for c, b in zip(coeffs, basis):
                if not field.is_zero(c):
                    scaled = tuple(tuple(field.mul(c, x) for x in row) for row in b[i])
                    acc = la.add(acc, scaled, field)
            mats.append(acc)
        if all(la.rank(mats[i], field) == n_rep.dims[i] for i in range(nverts)):
            bases = []
            for i in range(nverts):
                if n_rep.dims[i] == 0:
                    bases.append(())
                    continue
                r, piv = la.rref(la.transpose(mats[i], cols=n_rep.dims[i]), field)
                bases.append(tuple(r[j] for j in range(len(piv))))
            return EmbeddingSearch(True, SubrepWitness(m_rep.quiver, field, bases),
                                   tuple(mats), "exact")
    return EmbeddingSearch(False, None, None, "probabilistic")


def reduce_mod(m_rep, p):
    """Reduce a rational representation mod p; DomainError on bad reduction."""
    if m_rep.field != QQ:
        raise DomainError("reduce_mod expects a representation over Q")
    gf = PrimeField(p)
    mats = [la.mat(m_rep.matrix(i), gf) for i in range(m_rep.quiver.arrow_count)]
    return Representation(m_rep.quiver, gf, m_rep.dims, mats)


def hom_fingerprint(test_family, n_rep):
    """Tuple of Hom dimensions [T, N] over a fixed test family."""
    return tuple(hom_dim(t, n_rep) for t in test_family)
