"""
Projective covers, minimal projective resolutions and Ext.

Resolutions are built by repeatedly taking the projective cover of the
current kernel.  A term Q_m is a ``ProjectiveSum``, so Hom(Q_m, N) is just
the direct sum of the spaces N_x over the generators x of Q_m, and the
cochain differential can be read off the path coefficients of d_{m+1}.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .algebra import (
    DomainError,
    Path,
    ProjectiveSum,
    Representation,
    cartan_matrix,
    dual_rep,
    lambda_quiver,
    projective_sum,
)
from .morphisms import Morphism, hom_dim, kernel


def radical_bases(M: Representation):
    """Per vertex, a column basis of rad(M)_x = sum of arrow images."""
    out = []
    Q = lambda_quiver(M.n)
    for x in range(1, M.n + 1):
        blocks = [M.mats[a.index] for a in Q.arrows if a.target == x]
        span = linalg.hstack(blocks, M.dims[x - 1])
        cols = linalg.column_basis(span) if span.shape[1] else []
        out.append(span[:, cols] if cols else linalg.zeros(M.dims[x - 1], 0))
    return tuple(out)


def top_dims(M: Representation):
    return tuple(M.dims[x] - r.shape[1] for x, r in enumerate(radical_bases(M)))


def socle_dims(M: Representation):
    return top_dims(dual_rep(M))


@dataclass(frozen=True)
class Cover:
    """A projective P = ``proj.rep`` with a surjection onto M."""

    proj: ProjectiveSum
    map: Morphism


def projective_cover(M: Representation, extra=()) -> Cover:
    """
    Projective cover of M: one generator P(x) for each vector of a
    complement of rad(M)_x.  ``extra`` lists vertices of surplus summands
    P(x) mapped to zero, giving a deliberately non-minimal surjection.
    """
    gens, vectors = [], []
    for x, rad in enumerate(radical_bases(M), start=1):
        for t in linalg.complement_columns(rad, M.dims[x - 1]):
            v = linalg.zeros(M.dims[x - 1], 1)
            v[t, 0] = 1
            gens.append(x)
            vectors.append(v)
    for x in extra:
        gens.append(x)
        vectors.append(None)
    P = projective_sum(tuple(gens), M.n)
    comps = []
    for y in range(1, M.n + 1):
        col = linalg.zeros(M.dims[y - 1], len(P.basis[y - 1]))
        for t, (g, path) in enumerate(P.basis[y - 1]):
            if vectors[g] is not None:
                col[:, t:t + 1] = M.action(path) @ vectors[g]
        comps.append(col)
    f = Morphism(P.rep, M, tuple(comps))
    if not f.is_surjective():
        raise AssertionError("projective cover map is not onto")
    return Cover(P, f)


@dataclass(frozen=True)
class Resolution:
    """
    Q_d -> ... -> Q_1 -> Q_0 -> M -> 0.

    ``terms[m]`` is Q_m; ``diffs[m]`` is d_m : Q_m -> Q_{m-1} for m >= 1
    (``diffs[0]`` is the augmentation Q_0 -> M).
    """

    module: Representation
    terms: tuple
    diffs: tuple

    @property
    def length(self):
        return len(self.terms) - 1

    def is_complex(self):
        for m in range(1, len(self.diffs)):
            if not self.diffs[m - 1].compose(self.diffs[m]).is_zero():
                return False
        return True

    def is_exact(self):
        if not self.diffs[0].is_surjective():
            return False
        for m in range(len(self.terms)):
            inner = self.diffs[m].rank()
            outer = self.diffs[m + 1].rank() if m + 1 < len(self.diffs) else 0
            if inner + outer != self.terms[m].rep.dim:
                return False
        return True

    def is_minimal(self):
        """Every differential lands in the radical (no trivial-path terms)."""
        for m in range(1, len(self.diffs)):
            for c in _coefficients(self.terms[m - 1], self.terms[m], self.diffs[m]):
                for g, path, v in c:
                    if not path.arrows:
                        return False
        return True

    def generators(self):
        return [t.generators for t in self.terms]


def global_dimension_cap(n):
    return 2 * n - 2


def _resolve(M: Representation, extra_at=None) -> Resolution:
    cap = global_dimension_cap(M.n)
    terms, diffs = [], []
    current, into = M, None
    m = 0
    while current.dim:
        if m > cap:
            raise AssertionError(
                f"resolution did not stop by degree {cap}; global dimension bound violated"
            )
        extra = extra_at.get(m, ()) if extra_at else ()
        cov = projective_cover(current, extra)
        d = cov.map if into is None else into.compose(cov.map)
        terms.append(cov.proj)
        diffs.append(d)
        current, into = kernel(cov.map)
        m += 1
    if not terms:
        P = projective_sum((), M.n)
        terms.append(P)
        diffs.append(Morphism(P.rep, M, tuple(linalg.zeros(d, 0) for d in M.dims)))
    return Resolution(M, tuple(terms), tuple(diffs))


@lru_cache(maxsize=None)
def min_resolution(M: Representation) -> Resolution:
    res = _resolve(M)
    if not res.is_complex() or not res.is_exact():
        raise AssertionError("computed resolution is not exact")
    return res


def resolution(M: Representation, extra_at=None) -> Resolution:
    """A projective resolution; ``extra_at`` maps degree -> surplus vertices."""
    if not extra_at:
        return min_resolution(M)
    res = _resolve(M, extra_at)
    if not res.is_complex() or not res.is_exact():
        raise AssertionError("computed resolution is not exact")
    return res


def projective_dimension(M: Representation) -> int:
    return min_resolution(M).length if M.dim else -1


def _coefficients(target: ProjectiveSum, source: ProjectiveSum, d: Morphism):
    """
    For each generator g' of ``source``, the image d(e_{g'}) written as a
    list of (g, path, coefficient) in the path basis of ``target``.
    """
    out = []
    for gp, x in enumerate(source.generators):
        col = d.comps[x - 1][:, source.generator_position(gp)]
        terms = []
        for t, v in enumerate(col):
            if v != 0:
                g, path = target.basis[x - 1][t]
                terms.append((g, path, v))
        out.append(terms)
    return out


@lru_cache(maxsize=None)
def _cochain_data(M: Representation):
    res = min_resolution(M)
    data = []
    for m in range(1, len(res.terms)):
        data.append(_coefficients(res.terms[m - 1], res.terms[m], res.diffs[m]))
    return res, tuple(data)


def _path_action(N: Representation, path: Path, cache):
    key = path
    if key not in cache:
        cache[key] = N.action(path)
    return cache[key]


def _cochain_rank(N, lower: ProjectiveSum, upper: ProjectiveSum, coeffs, cache):
    """Rank of Hom(lower, N) -> Hom(upper, N) induced by d: upper -> lower."""
    rows_off, cols_off = [], []
    total = 0
    for x in upper.generators:
        rows_off.append(total)
        total += N.dims[x - 1]
    total = 0
    for x in lower.generators:
        cols_off.append(total)
        total += N.dims[x - 1]
    rows = [dict() for _ in range(sum(N.dims[x - 1] for x in upper.generators))]
    for gp, terms in enumerate(coeffs):
        for g, path, c in terms:
            A = _path_action(N, path, cache)
            r0, c0 = rows_off[gp], cols_off[g]
            for r in range(A.shape[0]):
                for s in range(A.shape[1]):
                    v = A[r, s]
                    if v:
                        row = rows[r0 + r]
                        row[c0 + s] = row.get(c0 + s, 0) + c * v
    rows = [{k: v for k, v in r.items() if v} for r in rows]
    if any(not isinstance(v, int) for r in rows for v in r.values()):
        mat = linalg.zeros(len(rows), total)
        for i, r in enumerate(rows):
            for k, v in r.items():
                mat[i, k] = v
        return linalg.rank(mat)
    return linalg.rank_rows([r for r in rows if r])


@lru_cache(maxsize=None)
def ext_dims(M: Representation, N: Representation) -> tuple:
    """(dim Ext^0, dim Ext^1, ...) up to the projective dimension of M."""
    if M.n != N.n:
        raise DomainError("Ext between modules over different algebras")
    if M.dim == 0 or N.dim == 0:
        return (0,)
    res, data = _cochain_data(M)
    cache = {}
    homs = [sum(N.dims[x - 1] for x in t.generators) for t in res.terms]
    ranks = [_cochain_rank(N, res.terms[m], res.terms[m + 1], data[m], cache)
             for m in range(len(data))]
    out = []
    for m, h in enumerate(homs):
        into = ranks[m - 1] if m >= 1 else 0
        outof = ranks[m] if m < len(ranks) else 0
        out.append(h - into - outof)
    return tuple(out)


def ext_dims_from(res: Resolution, N: Representation):
    """Ext dimensions from an arbitrary (possibly non-minimal) resolution."""
    data = [_coefficients(res.terms[m - 1], res.terms[m], res.diffs[m])
            for m in range(1, len(res.terms))]
    cache = {}
    homs = [sum(N.dims[x - 1] for x in t.generators) for t in res.terms]
    ranks = [_cochain_rank(N, res.terms[m], res.terms[m + 1], data[m], cache)
             for m in range(len(data))]
    return tuple(h - (ranks[m - 1] if m else 0) - (ranks[m] if m < len(ranks) else 0)
                 for m, h in enumerate(homs))


def ext(M: Representation, N: Representation, m: int) -> int:
    if m < 0:
        raise DomainError("Ext degree must be non-negative")
    dims = ext_dims(M, N)
    return dims[m] if m < len(dims) else 0


def ext_nonzero_any_degree(M: Representation, N: Representation) -> bool:
    return any(ext_dims(M, N)[1:])


def euler_form(M: Representation, N: Representation):
    """sum_m (-1)^m dim Ext^m(M, N), from dimension vectors and the Cartan matrix."""
    C = cartan_matrix(M.n)
    Ci = linalg.inverse(C)
    a = linalg.as_matrix([list(M.dims)])
    b = linalg.as_matrix([[d] for d in N.dims])
    return (a @ Ci @ b)[0, 0]


def dual_morphism(f: Morphism) -> Morphism:
    return Morphism(dual_rep(f.target), dual_rep(f.source),
                    tuple(m.T.copy() for m in f.comps))


def injective_envelope(M: Representation):
    """``(I, inclusion)`` obtained by dualising the projective cover of D M."""
    cov = projective_cover(dual_rep(M))
    iota = dual_morphism(cov.map)
    return iota.target, iota


def hom_matrix(catalogue):
    """H[a][b] = dim Hom(C_a, C_b) for a list of representations."""
    return linalg.as_matrix([[hom_dim(a, b) for b in catalogue] for a in catalogue])


def decompose(M: Representation, catalogue, labels):
    """
    Multiplicities of the indecomposables in ``catalogue`` as summands of M.

    The vector (dim Hom(C, M))_C determines M, and the matrix of its values on
    the catalogue itself is invertible, so solving one linear system recovers
    every multiplicity.
    """
    H = hom_matrix(catalogue)
    if linalg.rank(H) != len(catalogue):
        raise AssertionError("Hom fingerprint matrix of the catalogue is singular")
    h = linalg.as_matrix([[hom_dim(c, M)] for c in catalogue])
    mu = linalg.solve(H, h)
    out = {}
    for lab, v in zip(labels, mu[:, 0]):
        if v != int(v) or v < 0:
            raise AssertionError(f"non-integral multiplicity {v} for {lab}")
        if v:
            out[lab] = int(v)
    dims = [0] * M.n
    for lab, c in zip(labels, catalogue):
        for x in range(M.n):
            dims[x] += out.get(lab, 0) * c.dims[x]
    if tuple(dims) != M.dims:
        raise AssertionError("decomposition does not add up to the dimension vector")
    return out
