"""
Module homomorphisms, Hom spaces, kernels, cokernels and sub/quotient modules.

A morphism f: M -> N is a tuple of matrices f_x : M_x -> N_x, one per vertex,
with f_t M_a = N_a f_s for every arrow a: s -> t.  Hom(M, N) is the solution
space of that linear system; we either count it (rank only) or return a basis.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .algebra import DomainError, Representation, lambda_quiver


@dataclass(frozen=True, eq=False)
class Morphism:
    source: Representation
    target: Representation
    comps: tuple  # comps[x-1] has shape target.dims[x-1] x source.dims[x-1]

    def __post_init__(self):
        if self.source.n != self.target.n:
            raise DomainError("morphism between modules over different algebras")
        for x in range(self.source.n):
            shape = (self.target.dims[x], self.source.dims[x])
            if self.comps[x].shape != shape:
                raise DomainError(f"component at vertex {x + 1} has the wrong shape")

    @property
    def n(self):
        return self.source.n

    def is_homomorphism(self):
        M, N = self.source, self.target
        for a in lambda_quiver(self.n).arrows:
            s, t = a.source - 1, a.target - 1
            lhs = self.comps[t] @ M.mats[a.index]
            rhs = N.mats[a.index] @ self.comps[s]
            if not linalg.is_zero(lhs - rhs):
                return False
        return True

    def compose(self, other: "Morphism") -> "Morphism":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise DomainError("morphisms are not composable")
        comps = tuple(self.comps[x] @ other.comps[x] for x in range(self.n))
        return Morphism(other.source, self.target, comps)

    def __add__(self, other):
        comps = tuple(a + b for a, b in zip(self.comps, other.comps))
        return Morphism(self.source, self.target, comps)

    def scale(self, c):
        return Morphism(self.source, self.target, tuple(c * m for m in self.comps))

    def rank(self):
        return sum(linalg.rank(m) for m in self.comps)

    def is_zero(self):
        return all(linalg.is_zero(m) for m in self.comps)

    def is_injective(self):
        return self.rank() == self.source.dim

    def is_surjective(self):
        return self.rank() == self.target.dim

    def is_isomorphism(self):
        return self.source.dims == self.target.dims and self.is_injective()


def identity_morphism(M: Representation) -> Morphism:
    return Morphism(M, M, tuple(linalg.identity(d) for d in M.dims))


def zero_morphism(M: Representation, N: Representation) -> Morphism:
    return Morphism(M, N, tuple(linalg.zeros(N.dims[x], M.dims[x]) for x in range(M.n)))


def _unknown_offsets(M, N):
    offsets, total = [], 0
    for x in range(M.n):
        offsets.append(total)
        total += N.dims[x] * M.dims[x]
    return offsets, total


def _hom_equations(M, N):
    """Sparse rows of the intertwining system for Hom(M, N)."""
    offsets, total = _unknown_offsets(M, N)
    rows = []
    for a in lambda_quiver(M.n).arrows:
        s, t = a.source - 1, a.target - 1
        A, B = M.mats[a.index], N.mats[a.index]
        ms, nt, ns = M.dims[s], N.dims[t], N.dims[s]
        # entry (p, c) of f_t A - B f_s
        for p in range(nt):
            for c in range(ms):
                row = {}
                for q in range(M.dims[t]):
                    v = A[q, c]
                    if v:
                        k = offsets[t] + p * M.dims[t] + q
                        row[k] = row.get(k, 0) + int(v)
                for q in range(ns):
                    v = B[p, q]
                    if v:
                        k = offsets[s] + q * ms + c
                        row[k] = row.get(k, 0) - int(v)
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows, total


def _is_integral(M):
    return all(not hasattr(v, "denominator") or v.denominator == 1
               for m in M.mats for v in m.flat)


@lru_cache(maxsize=200_000)
def hom_dim(M: Representation, N: Representation) -> int:
    """dim_K Hom(M, N), computed as unknowns minus the rank of the system."""
    if M.n != N.n:
        raise DomainError("Hom between modules over different algebras")
    if M.dim == 0 or N.dim == 0:
        return 0
    if _is_integral(M) and _is_integral(N):
        rows, total = _hom_equations(M, N)
        return total - linalg.rank_rows(rows)
    return len(hom_basis(M, N))


def _hom_matrix(M, N):
    offsets, total = _unknown_offsets(M, N)
    eqs = []
    Q = lambda_quiver(M.n)
    for a in Q.arrows:
        s, t = a.source - 1, a.target - 1
        A, B = M.mats[a.index], N.mats[a.index]
        for p in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [0] * total
                for q in range(M.dims[t]):
                    row[offsets[t] + p * M.dims[t] + q] += A[q, c]
                for q in range(N.dims[s]):
                    row[offsets[s] + q * M.dims[s] + c] -= B[p, q]
                eqs.append(row)
    return linalg.as_matrix(eqs, total), offsets, total


def hom_basis(M: Representation, N: Representation):
    """A basis of Hom(M, N) as a list of Morphism objects."""
    if M.n != N.n:
        raise DomainError("Hom between modules over different algebras")
    E, offsets, total = _hom_matrix(M, N)
    K = linalg.nullspace(E) if E.shape[0] else linalg.identity(total)
    out = []
    for col in range(K.shape[1]):
        comps = []
        for x in range(M.n):
            r, c = N.dims[x], M.dims[x]
            block = K[offsets[x]:offsets[x] + r * c, col]
            comps.append(np.array(block, dtype=object).reshape(r, c))
        out.append(Morphism(M, N, tuple(comps)))
    return out


def end_dim(M: Representation) -> int:
    return hom_dim(M, M)


def submodule(M: Representation, bases):
    """
    The submodule spanned at each vertex x by the columns of ``bases[x-1]``
    (independent columns, jointly closed under the arrows).

    Returns ``(S, inclusion)``.
    """
    n = M.n
    dims = tuple(b.shape[1] for b in bases)
    mats = []
    for a in lambda_quiver(n).arrows:
        s, t = a.source - 1, a.target - 1
        image = M.mats[a.index] @ bases[s]
        try:
            mats.append(linalg.solve(bases[t], image))
        except ValueError as exc:
            raise DomainError("subspaces are not closed under the arrows") from exc
    S = Representation(n, dims, tuple(mats))
    return S, Morphism(S, M, tuple(bases))


def quotient(M: Representation, bases):
    """
    The quotient of M by the submodule spanned by ``bases``.

    Coordinates on M_x / U_x come from a complement made of standard basis
    vectors.  Returns ``(C, projection)``.
    """
    n = M.n
    chosen, projections = [], []
    for x in range(n):
        B = bases[x]
        keep = linalg.complement_columns(B, M.dims[x])
        chosen.append(keep)
        E = linalg.zeros(M.dims[x], len(keep))
        for col, t in enumerate(keep):
            E[t, col] = 1
        full = np.concatenate([B, E], axis=1)
        inv = linalg.inverse(full) if M.dims[x] else linalg.zeros(0, 0)
        projections.append(inv[B.shape[1]:, :])
    dims = tuple(len(k) for k in chosen)
    mats = []
    for a in lambda_quiver(n).arrows:
        s, t = a.source - 1, a.target - 1
        E = linalg.zeros(M.dims[s], dims[s])
        for col, r in enumerate(chosen[s]):
            E[r, col] = 1
        mats.append(projections[t] @ M.mats[a.index] @ E)
    C = Representation(n, dims, tuple(mats))
    return C, Morphism(M, C, tuple(projections))


def kernel(f: Morphism):
    """``(K, inclusion)`` for the kernel of f."""
    bases = tuple(linalg.nullspace(m) if m.shape[0] else linalg.identity(m.shape[1])
                  for m in f.comps)
    return submodule(f.source, bases)


def image_bases(f: Morphism):
    out = []
    for m in f.comps:
        cols = linalg.column_basis(m) if m.shape[1] else []
        out.append(m[:, cols] if cols else linalg.zeros(m.shape[0], 0))
    return tuple(out)


def image(f: Morphism):
    return submodule(f.target, image_bases(f))


def cokernel(f: Morphism):
    """``(C, projection)`` for the cokernel of f."""
    return quotient(f.target, image_bases(f))
