"""Auslander-Reiten quivers of Dynkin quivers by knitting, at the level of
dimension vectors, plus the Coxeter transform.

Knitting builds the preprojective component mesh by mesh: starting from the
projectives (with the irreducible maps rad P -> P), a vertex X is completed
once every irreducible map out of it is known, and then

    dim tau^- X = sum of middle dims - dim X.

For a Dynkin quiver this produces every indecomposable exactly once (one per
positive root) and terminates at the injectives.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import DomainError
from .fields import QQ
from .quiver import Quiver


@dataclass(frozen=True)
class Classification:
    kind: str           # "dynkin" | "affine" | "wild"
    letter: str = ""    # "A" | "D" | "E" for Dynkin
    rank: int = 0

    @property
    def name(self):
        return f"{self.letter}{self.rank}" if self.kind == "dynkin" else self.kind


def _degree_data(quiver):
    n = quiver.vertex_count
    deg = [0] * (n + 1)
    adj = {v: [] for v in range(1, n + 1)}
    for s, t in quiver.arrows:
        deg[s] += 1
        deg[t] += 1
        adj[s].append(t)
        adj[t].append(s)
    return deg, adj


def _leg_lengths(adj, deg, branch):
    """Lengths of the legs hanging off a branch vertex of a tree."""
    legs = []
    for first in adj[branch]:
        length = 1
        prev, cur = branch, first
        while deg[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    return sorted(legs)


def classify(quiver):
    """Underlying-graph classification: Dynkin ADE, affine (extended), or wild."""
    n = quiver.vertex_count
    if n == 0:
        raise DomainError("empty quiver")
    if not quiver.is_connected():
        raise DomainError("classification expects a connected quiver")
    edges = quiver.arrow_count
    deg, adj = _degree_data(quiver)
    degs = deg[1:]
    if edges == n - 1:  # tree
        branch = [v for v in range(1, n + 1) if deg[v] >= 3]
        if not branch:
            return Classification("dynkin", "A", n)
        if len(branch) == 1:
            b = branch[0]
            legs = _leg_lengths(adj, deg, b)
            if deg[b] == 3:
                a, bb, c = legs
                if (a, bb) == (1, 1):
                    return Classification("dynkin", "D", c + 3)
                if legs == [1, 2, 2]:
                    return Classification("dynkin", "E", 6)
                if legs == [1, 2, 3]:
                    return Classification("dynkin", "E", 7)
                if legs == [1, 2, 4]:
                    return Classification("dynkin", "E", 8)
                if legs in ([2, 2, 2], [1, 3, 3], [1, 2, 5]):
                    return Classification("affine")
                return Classification("wild")
            if deg[b] == 4 and legs == [1, 1, 1, 1]:
                return Classification("affine")  # four-subspace shape
            return Classification("wild")
        if len(branch) == 2 and all(deg[b] == 3 for b in branch):
            ok = all(sorted(_leg_lengths(adj, deg, b))[:2] == [1, 1] for b in branch)
            if ok:
                return Classification("affine")
        return Classification("wild")
    if edges == n and all(d == 2 for d in degs):
        return Classification("affine")  # oriented cycle graph (incl. Kronecker)
    return Classification("wild")


POSITIVE_ROOT_COUNTS = {("A",): lambda n: n * (n + 1) // 2,
                        ("D",): lambda n: n * (n - 1),
                        ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}


def positive_root_count(letter, rank):
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter == "D":
        return rank * (rank - 1)
    return {6: 36, 7: 63, 8: 120}[rank]


class ARQuiver:
    """Mesh quiver on dimension vectors: vertices, arrows, and the translate."""

    def __init__(self, vertices, arrows, tau, projectives, injectives):
        self.vertices = tuple(vertices)          # dim vectors
        self.arrows = tuple(arrows)              # (source index, target index)
        self.tau = dict(tau)                     # target index -> translate index
        self.projectives = tuple(projectives)    # vertex indices of the P_k
        self.injectives = tuple(injectives)

    def index_of(self, dim):
        return self.vertices.index(tuple(dim))

    def meshes(self):
        """(start, middles, end) for every mesh end = tau^- start."""
        inv = {v: k for k, v in self.tau.items()}
        out = []
        for start, end in inv.items():
            middles = [s for s, t in self.arrows if t == end]
            out.append((start, middles, end))
        return out

    def __repr__(self):
        return f"ARQuiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def knit(quiver):
    """AR quiver of a Dynkin quiver by preprojective knitting."""
    cls = classify(quiver)
    if cls.kind != "dynkin":
        raise DomainError(f"knitting requires a Dynkin quiver, got {cls.kind}")
    n = quiver.vertex_count
    proj_dims = []
    for k in range(1, n + 1):
        paths = quiver.paths_from(k)
        proj_dims.append(tuple(len(paths[v]) for v in range(1, n + 1)))
    opp = quiver.opposite()
    inj_dims = []
    for k in range(1, n + 1):
        paths = opp.paths_from(k)
        inj_dims.append(tuple(len(paths[v]) for v in range(1, n + 1)))
    inj_set = set(inj_dims)

    vertices = list(proj_dims)
    index = {d: i for i, d in enumerate(vertices)}
    arrows = []
    # irreducible maps into a projective come from the summands of its radical
    for a, (k, j) in enumerate(quiver.arrows):
        arrows.append((index[proj_dims[j - 1]], index[proj_dims[k - 1]]))
    tau = {}
    completed = set()
    while True:
        expected = positive_root_count(cls.letter, cls.rank)
        ready = None
        for x in range(len(vertices)):
            if x in completed or vertices[x] in inj_set:
                continue
            preds = [s for s, t in arrows if t == x]
            if all(vertices[s] in inj_set or s in completed for s in preds):
                ready = x
                break
        if ready is None:
            break
        outs = [t for s, t in arrows if s == ready]
        new_dim = tuple(sum(vertices[t][i] for t in outs) - vertices[ready][i]
                        for i in range(n))
        if any(v < 0 for v in new_dim) or all(v == 0 for v in new_dim):
            raise AssertionError(f"mesh at {vertices[ready]} produced {new_dim}")
        if new_dim in index:
            raise AssertionError(f"dimension vector {new_dim} produced twice")
        new_idx = len(vertices)
        vertices.append(new_dim)
        index[new_dim] = new_idx
        for t in outs:
            arrows.append((t, new_idx))
        tau[new_idx] = ready
        completed.add(ready)
    if len(vertices) != positive_root_count(cls.letter, cls.rank):
        raise AssertionError(
            f"knitting produced {len(vertices)} vertices, expected "
            f"{positive_root_count(cls.letter, cls.rank)} positive roots")
    return ARQuiver(vertices, arrows,
                    tau,
                    [index[d] for d in proj_dims],
                    [index[d] for d in inj_dims])


def euler_matrix(quiver):
    """E with <e,d> = e^T E d: identity minus the arrow-count matrix."""
    n = quiver.vertex_count
    e = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for s, t in quiver.arrows:
        e[s - 1][t - 1] -= 1
    return tuple(tuple(row) for row in e)


def coxeter_matrix(quiver):
    """Integer matrix C with dim tau M = C dim M for non-projective M."""
    e = euler_matrix(quiver)
    n = quiver.vertex_count
    inv = la.solve(e, la.identity(n, QQ), QQ)
    et = la.transpose(e, cols=n)
    c = la.neg(la.mul(inv, et, QQ), QQ)
    out = []
    for row in c:
        for x in row:
            if x.denominator != 1:
                raise AssertionError("Coxeter matrix must be integral")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def tau_dim(quiver, dim):
    """Coxeter transform of a non-projective positive root's dimension vector."""
    dim = quiver.check_dim_vector(dim)
    n = quiver.vertex_count
    for k in range(1, n + 1):
        paths = quiver.paths_from(k)
        if dim == tuple(len(paths[v]) for v in range(1, n + 1)):
            raise DomainError(f"dimension vector of the projective P_{k} has no translate")
    c = coxeter_matrix(quiver)
    out = tuple(sum(c[i][j] * dim[j] for j in range(n)) for i in range(n))
    if any(v < 0 for v in out):
        raise DomainError(f"{dim} is not the dimension vector of a non-projective module")
    return out
