"""
The bound quiver of Lambda_n and exact representations over it.

Vertices are 1..n.  For 1 <= i <= n-1 there are two arrows,

    alpha_i  : i   -> i+1        (arrow index 2(i-1))
    alpha'_i : i+1 -> i          (arrow index 2(i-1) + 1)

so ``index ^ 1`` swaps an arrow with its partner, which is what the
simple-preserving duality does.  Paths are written right to left, ``pq``
meaning "first q, then p"; internally a path stores its arrows in the order
they are traversed.  The zero relations are

    alpha_{i+1} alpha_i,   alpha'_i alpha'_{i+1},   alpha_i alpha'_i.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from . import linalg


class DomainError(ValueError):
    """Raised for out-of-range algebra parameters (n < 2, bad vertices)."""


class Arrow(NamedTuple):
    index: int
    label: str
    source: int
    target: int


class Path(NamedTuple):
    start: int
    end: int
    arrows: tuple  # arrow indices in traversal order

    @property
    def length(self):
        return len(self.arrows)


def alpha(i):
    return 2 * (i - 1)


def alpha_prime(i):
    return 2 * (i - 1) + 1


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple

    @property
    def vertices(self):
        return tuple(range(1, self.n + 1))

    def arrow(self, index) -> Arrow:
        return self.arrows[index]

    def path_name(self, path: Path) -> str:
        if not path.arrows:
            return f"e_{path.start}"
        return " ".join(self.arrows[a].label for a in reversed(path.arrows))


@dataclass(frozen=True)
class PathBasis:
    quiver: Quiver
    paths: tuple
    relations: tuple  # (first, then) arrow index pairs that compose to zero

    def from_vertex(self, i):
        return tuple(p for p in self.paths if p.start == i)

    def __len__(self):
        return len(self.paths)


def check_n(n):
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"Lambda_n needs an integer n >= 2, got {n!r}")


def check_vertex(i, n):
    if not isinstance(i, int) or not 1 <= i <= n:
        raise DomainError(f"vertex {i!r} is outside 1..{n}")


@lru_cache(maxsize=None)
def lambda_quiver(n) -> Quiver:
    check_n(n)
    arrows = []
    for i in range(1, n):
        arrows.append(Arrow(alpha(i), f"alpha_{i}", i, i + 1))
        arrows.append(Arrow(alpha_prime(i), f"alpha'_{i}", i + 1, i))
    return Quiver(n, tuple(arrows))


@lru_cache(maxsize=None)
def relations(n):
    rels = []
    for i in range(1, n - 1):
        rels.append((alpha(i), alpha(i + 1)))              # alpha_{i+1} alpha_i
        rels.append((alpha_prime(i + 1), alpha_prime(i)))  # alpha'_i alpha'_{i+1}
    for i in range(1, n):
        rels.append((alpha_prime(i), alpha(i)))            # alpha_i alpha'_i
    return tuple(rels)


@lru_cache(maxsize=None)
def build_lambda(n):
    """
    Return ``(Quiver, PathBasis)`` for Lambda_n.

    The basis is every path, including the trivial paths e_i, that contains
    no zero relation as a consecutive factor.  Because the relations are
    monomial of length two, extending paths one arrow at a time and striking
    each new relation window enumerates the basis exactly.
    """
    Q = lambda_quiver(n)
    rels = set(relations(n))
    frontier = [Path(i, i, ()) for i in Q.vertices]
    paths = list(frontier)
    while frontier:
        nxt = []
        for p in frontier:
            for a in Q.arrows:
                if a.source != p.end:
                    continue
                if p.arrows and (p.arrows[-1], a.index) in rels:
                    continue
                nxt.append(Path(p.start, a.target, p.arrows + (a.index,)))
        paths.extend(nxt)
        frontier = nxt
    paths.sort(key=lambda p: (p.start, p.length, p.arrows))
    return Q, PathBasis(Q, tuple(paths), tuple(sorted(rels)))


def _extend(path: Path, arrow: Arrow, rels):
    if arrow.source != path.end:
        return None
    if path.arrows and (path.arrows[-1], arrow.index) in rels:
        return None
    return Path(path.start, arrow.target, path.arrows + (arrow.index,))


@dataclass(frozen=True, eq=False)
class Representation:
    """
    A finite-dimensional Lambda_n-module: one vector space per vertex and
    one exact matrix per arrow, of shape dims[target] x dims[source].

    Equality and hashing are literal (same dims, same matrices), not
    isomorphism; see ``strings.isomorphic`` for the latter.
    """

    n: int
    dims: tuple
    mats: tuple
    _key: tuple = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        Q = lambda_quiver(self.n)
        if len(self.dims) != self.n or any(d < 0 for d in self.dims):
            raise DomainError(f"bad dimension vector {self.dims}")
        if len(self.mats) != len(Q.arrows):
            raise DomainError("one matrix per arrow is required")
        for a in Q.arrows:
            shape = (self.dims[a.target - 1], self.dims[a.source - 1])
            if self.mats[a.index].shape != shape:
                raise DomainError(
                    f"{a.label} has shape {self.mats[a.index].shape}, expected {shape}"
                )
        key = (self.n, self.dims, tuple(tuple(m.flat) for m in self.mats))
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, Representation) and self._hash == other._hash
                and self._key == other._key)

    def __hash__(self):
        return self._hash

    @property
    def dim(self):
        return sum(self.dims)

    def dim_at(self, x):
        return self.dims[x - 1]

    def action(self, path: Path):
        """Matrix of the path acting from the space at path.start to path.end."""
        out = linalg.identity(self.dims[path.start - 1])
        for a in path.arrows:
            out = self.mats[a] @ out
        return out

    def satisfies_relations(self):
        for first, then in relations(self.n):
            if not linalg.is_zero(self.mats[then] @ self.mats[first]):
                return False
        return True

    def is_zero(self):
        return self.dim == 0


def representation(n, dims, mats=None):
    """Build a representation, filling unspecified arrows with zero maps."""
    Q = lambda_quiver(n)
    dims = tuple(int(d) for d in dims)
    if len(dims) != n:
        raise DomainError(f"dimension vector {dims} does not have {n} entries")
    mats = dict(mats or {})
    full = []
    for a in Q.arrows:
        shape = (dims[a.target - 1], dims[a.source - 1])
        m = mats.get(a.index)
        full.append(linalg.zeros(*shape) if m is None else m)
    return Representation(n, dims, tuple(full))


def zero_rep(n):
    return representation(n, (0,) * n)


def direct_sum(reps, n=None):
    reps = list(reps)
    if not reps:
        return zero_rep(n)
    n = reps[0].n
    if any(r.n != n for r in reps):
        raise DomainError("direct sum over different algebras")
    dims = tuple(sum(r.dims[x] for r in reps) for x in range(n))
    mats = tuple(linalg.block_diag([r.mats[a] for r in reps]) for a in range(2 * (n - 1)))
    return Representation(n, dims, mats)


def dual_rep(M: Representation) -> Representation:
    """Simple-preserving duality: transpose every map and swap alpha_i with alpha'_i."""
    mats = tuple(M.mats[a ^ 1].T.copy() for a in range(len(M.mats)))
    return Representation(M.n, M.dims, mats)


@dataclass(frozen=True)
class ProjectiveSum:
    """
    A direct sum of indecomposable projectives P(x) for x in ``generators``
    together with its path basis: ``basis[y-1]`` lists ``(g, path)`` for the
    basis vectors at vertex y, ordered as the rows/columns of ``rep``.
    """

    n: int
    generators: tuple
    basis: tuple
    rep: Representation

    def position(self, y, g, path):
        return self.basis[y - 1].index((g, path))

    def generator_position(self, g):
        x = self.generators[g]
        return self.position(x, g, Path(x, x, ()))


@lru_cache(maxsize=None)
def projective_sum(generators, n) -> ProjectiveSum:
    check_n(n)
    generators = tuple(generators)
    for x in generators:
        check_vertex(x, n)
    Q, PB = build_lambda(n)
    rels = set(PB.relations)
    basis = [[] for _ in range(n)]
    for g, x in enumerate(generators):
        for p in PB.from_vertex(x):
            basis[p.end - 1].append((g, p))
    index = [{b: t for t, b in enumerate(col)} for col in basis]
    dims = tuple(len(col) for col in basis)
    mats = []
    for a in Q.arrows:
        m = linalg.zeros(dims[a.target - 1], dims[a.source - 1])
        for t, (g, p) in enumerate(basis[a.source - 1]):
            q = _extend(p, a, rels)
            if q is not None:
                m[index[a.target - 1][(g, q)], t] = 1
        mats.append(m)
    rep = Representation(n, dims, tuple(mats))
    return ProjectiveSum(n, generators, tuple(tuple(c) for c in basis), rep)


def projective_rep(i, n) -> Representation:
    """P(i): spanned by the basis paths starting at i."""
    check_vertex(i, n)
    return projective_sum((i,), n).rep


def injective_rep(i, n) -> Representation:
    check_vertex(i, n)
    return dual_rep(projective_rep(i, n))


def simple_rep(i, n) -> Representation:
    check_vertex(i, n)
    dims = [0] * n
    dims[i - 1] = 1
    return representation(n, dims)


def standard_rep(i, n) -> Representation:
    """Delta(i): top L(i) over L(i-1), joined by alpha'_{i-1}; Delta(1) = L(1)."""
    check_vertex(i, n)
    if i == 1:
        return simple_rep(1, n)
    dims = [0] * n
    dims[i - 1] = dims[i - 2] = 1
    return representation(n, dims, {alpha_prime(i - 1): linalg.identity(1)})


def costandard_rep(i, n) -> Representation:
    check_vertex(i, n)
    return dual_rep(standard_rep(i, n))


def lambda_dimension(n):
    return len(build_lambda(n)[1])


def cartan_matrix(n):
    """C[x-1, y-1] = multiplicity of L(y) in P(x)."""
    C = linalg.zeros(n, n)
    for x in range(1, n + 1):
        for y, d in enumerate(projective_rep(x, n).dims):
            C[x - 1, y] = d
    return C
