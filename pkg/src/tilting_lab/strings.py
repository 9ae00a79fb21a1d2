"""
String modules Omega(i, j, k) and the V-shaped walks that define them.

A walk is a sequence of vertices v_0, ..., v_r with |v_t - v_{t+1}| = 1 and a
sign eps_t for each step telling whether the step is traversed along an
arrow (+1) or against it (-1).  The walks relevant here are V-shaped: they
climb from i to k and come back down to j.  Omega(i, j, k) is the string
module of that walk with the sign pattern forced by the relations; equal
walk descriptors give equal modules, and every indecomposable Lambda_n-module
arises exactly once this way.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple

from . import linalg
from .algebra import (
    DomainError,
    Representation,
    alpha,
    alpha_prime,
    check_n,
    dual_rep,
    relations,
)
from .morphisms import hom_basis, hom_dim


class OmegaDescriptor(NamedTuple):
    """Parameters (i, j, k) of Omega(i, j, k): climb i -> k, descend to j."""

    i: int
    j: int
    k: int

    def validate(self, n):
        check_n(n)
        i, j, k = self
        for v in self:
            if not isinstance(v, int):
                raise DomainError(f"descriptor entries must be integers, got {self!r}")
        if not (1 <= i <= k and 1 <= j <= k <= n):
            raise DomainError(f"Omega{tuple(self)} is not a valid descriptor for n={n}")
        return self

    def __str__(self):
        return f"Omega({self.i},{self.j},{self.k})"


def descriptor(i, j, k, n) -> OmegaDescriptor:
    return OmegaDescriptor(i, j, k).validate(n)


# named modules, all in descriptor form

def standard_desc(i, n):
    return descriptor(1, 1, 1, n) if i == 1 else descriptor(i, i - 1, i, n)


def costandard_desc(i, n):
    return descriptor(1, 1, 1, n) if i == 1 else descriptor(i - 1, i, i, n)


def simple_desc(i, n):
    return descriptor(i, i, i, n)


def projective_desc(i, n):
    if i == 1:
        return descriptor(1, 1, 2, n)
    if i == n:
        return descriptor(n, n - 1, n, n)
    return descriptor(i - 1, i, i + 1, n)


def injective_desc(i, n):
    if i == 1:
        return descriptor(1, 1, 2, n)
    if i == n:
        return descriptor(n - 1, n, n, n)
    return descriptor(i, i - 1, i + 1, n)


def tilting_desc(k, n):
    """T(k) = Omega(1, 1, k), the indecomposable characteristic tilting summand."""
    return descriptor(1, 1, k, n)


@dataclass(frozen=True)
class Walk:
    vertices: tuple
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != max(len(self.vertices) - 1, 0):
            raise DomainError("a walk needs one sign per step")
        for a, b in zip(self.vertices, self.vertices[1:]):
            if abs(a - b) != 1:
                raise DomainError(f"walk step {a} -> {b} is not along an edge")
        if any(e not in (1, -1) for e in self.signs):
            raise DomainError("signs must be +1 or -1")

    @property
    def length(self):
        return len(self.signs)

    def arrows(self):
        """The arrow index used by each step."""
        out = []
        for t, e in enumerate(self.signs):
            a, b = self.vertices[t], self.vertices[t + 1]
            if e == 1:
                # traversed along an arrow a -> b
                out.append(alpha(a) if b == a + 1 else alpha_prime(b))
            else:
                # traversed against an arrow b -> a
                out.append(alpha(b) if a == b + 1 else alpha_prime(a))
        return tuple(out)

    def reversed(self) -> "Walk":
        return Walk(self.vertices[::-1], tuple(-e for e in self.signs[::-1]))

    def is_string(self, n):
        """
        Check the two string conditions: consecutive same-direction steps do
        not form a zero relation, and a change of direction never reuses the
        same arrow.
        """
        if any(not 1 <= v <= n for v in self.vertices):
            return False
        rels = set(relations(n))
        arr = self.arrows()
        for t in range(len(arr) - 1):
            e, f = self.signs[t], self.signs[t + 1]
            if e == f == 1 and (arr[t], arr[t + 1]) in rels:
                return False
            if e == f == -1 and (arr[t + 1], arr[t]) in rels:
                return False
            if e != f and arr[t] == arr[t + 1]:
                return False
        return True

    def is_v_shaped(self):
        """Strictly up then strictly down (either part may be empty)."""
        v = self.vertices
        t = 0
        while t + 1 < len(v) and v[t + 1] == v[t] + 1:
            t += 1
        while t + 1 < len(v) and v[t + 1] == v[t] - 1:
            t += 1
        return t == len(v) - 1

    def canonical(self) -> "Walk":
        """
        Pick one of the walk and its reverse.  A walk of length 0 is its own
        representative; otherwise keep the orientation whose step into the
        peak is along an arrow (for a walk that only descends, whose first
        step is along an arrow).
        """
        if self.length == 0:
            return self
        if self.is_v_shaped() and self._prefers_self():
            return self
        rev = self.reversed()
        if rev.is_v_shaped() and rev._prefers_self():
            return rev
        return min(self, rev, key=lambda w: (w.vertices, w.signs))

    def _prefers_self(self):
        p = self.vertices.index(max(self.vertices))
        if p > 0:
            return self.signs[p - 1] == 1
        return self.signs[0] == 1

    def descriptor(self) -> OmegaDescriptor:
        return OmegaDescriptor(self.vertices[0], self.vertices[-1], max(self.vertices))


def walk_of(d: OmegaDescriptor, n=None) -> Walk:
    """The sign-forced walk i, ..., k, ..., j of Omega(i, j, k)."""
    if n is not None:
        d.validate(n)
    i, j, k = d
    verts = list(range(i, k + 1)) + list(range(k - 1, j - 1, -1))
    signs = []
    for a in range(i, k):
        signs.append(1 if (a - (k - 1)) % 2 == 0 else -1)
    for a in range(k - 1, j - 1, -1):
        signs.append(1 if (a - (k - 1)) % 2 == 0 else -1)
    return Walk(tuple(verts), tuple(signs))


def string_module(w: Walk, n) -> Representation:
    """
    The string module of a walk: one basis vector per walk position, and each
    step maps the vector at its start of the arrow to the vector at the end.
    """
    if not w.is_string(n):
        raise DomainError(f"{w} is not a string for Lambda_{n}")
    slots = [[] for _ in range(n)]
    for pos, v in enumerate(w.vertices):
        slots[v - 1].append(pos)
    where = {}
    for x, col in enumerate(slots):
        for t, pos in enumerate(col):
            where[pos] = t
    dims = tuple(len(c) for c in slots)
    mats = [None] * (2 * (n - 1))
    for a in range(2 * (n - 1)):
        s = a // 2 + 1 if a % 2 == 0 else a // 2 + 2
        t = a // 2 + 2 if a % 2 == 0 else a // 2 + 1
        mats[a] = linalg.zeros(dims[t - 1], dims[s - 1])
    for t, (arrow, e) in enumerate(zip(w.arrows(), w.signs)):
        src, dst = (t, t + 1) if e == 1 else (t + 1, t)
        mats[arrow][where[dst], where[src]] = 1
    return Representation(n, dims, tuple(mats))


def omega(d, n) -> Representation:
    return _omega(OmegaDescriptor(*d).validate(n), n)


@lru_cache(maxsize=None)
def _omega(d, n):
    return string_module(walk_of(d), n)


def enumerate_indecomposables(n):
    """All descriptors for Lambda_n, sorted by (k, i, j)."""
    check_n(n)
    out = [OmegaDescriptor(i, j, k)
           for k in range(1, n + 1) for i in range(1, k + 1) for j in range(1, k + 1)]
    return out


def count_indecomposables(n):
    return n * (n + 1) * (2 * n + 1) // 6


def enumerate_v_sequences(n):
    """
    Enumerate every string for Lambda_n by depth-first search, keep the
    V-shaped ones and identify each with its reverse.

    Every walk is a string of bounded length; the search refuses to go past
    length 2n + 2, which it never reaches on a correct quiver.
    """
    check_n(n)
    cap = 2 * n + 2
    found = set()

    def grow(w):
        if w.length > cap:
            raise RuntimeError(f"string longer than {cap} found; relations are wrong")
        if w.is_v_shaped():
            found.add(w.canonical())
        v = w.vertices[-1]
        for nxt in (v - 1, v + 1):
            if not 1 <= nxt <= n:
                continue
            for e in (1, -1):
                cand = Walk(w.vertices + (nxt,), w.signs + (e,))
                if cand.is_string(n):
                    grow(cand)

    for v in range(1, n + 1):
        grow(Walk((v,), ()))
    return sorted(found, key=lambda w: (w.descriptor()[2], w.descriptor()[0],
                                        w.descriptor()[1], w.vertices, w.signs))


def check_bijection(n):
    """
    Compare the searched V-strings with the descriptor walks; returns the
    pair of sets, which agree exactly when the classification holds.
    """
    searched = {w for w in enumerate_v_sequences(n)}
    described = {walk_of(d).canonical() for d in enumerate_indecomposables(n)}
    return searched, described


def dual_star_desc(d: OmegaDescriptor) -> OmegaDescriptor:
    """The duality sends Omega(i, j, k) to Omega(j, i, k)."""
    return OmegaDescriptor(d.j, d.i, d.k)


def dual_star(M: Representation) -> Representation:
    return dual_rep(M)


def upper_arm(d: OmegaDescriptor):
    """Upper arm (i, ..., k) of a descriptor together with its step signs."""
    w = walk_of(d)
    r = d.k - d.i
    return Walk(w.vertices[:r + 1], w.signs[:r])


def lower_arm(d: OmegaDescriptor):
    w = walk_of(d)
    r = d.k - d.i
    return Walk(w.vertices[r:], w.signs[r:])


def hom_fingerprint_match(M: Representation, N: Representation) -> bool:
    """
    Equal dimension vectors and dim Hom(M, N) = dim Hom(N, M) = dim End(M)
    = dim End(N).  Necessary for M and N to be isomorphic, but not
    sufficient: Delta(2) and Nabla(2) already agree on all of it.
    """
    if M.n != N.n or M.dims != N.dims:
        return False
    e = hom_dim(M, M)
    return hom_dim(N, N) == e and hom_dim(M, N) == e and hom_dim(N, M) == e


def isomorphic(M: Representation, N: Representation) -> bool:
    """
    Exact isomorphism test.  After the Hom fingerprint, search for a
    morphism f: M -> N and g: N -> M with g f invertible; when End(M) is
    local that search over basis pairs is conclusive, because all products
    of basis morphisms lie in the radical exactly when M and N differ.
    Otherwise fall back to seeded random combinations of a Hom basis.
    """
    if not hom_fingerprint_match(M, N):
        return False
    if M.dim == 0:
        return True
    forward, backward = hom_basis(M, N), hom_basis(N, M)
    for f in forward:
        for g in backward:
            if g.compose(f).is_isomorphism():
                return True
    if is_local(M):
        return False
    rng = random.Random(0)
    for _ in range(8):
        f = forward[0].scale(rng.randint(1, 10**6))
        for h in forward[1:]:
            f = f + h.scale(rng.randint(1, 10**6))
        if f.is_isomorphism():
            return True
    return False


def is_local(M: Representation) -> bool:
    """
    True when End(M) is local: every endomorphism minus its scalar part is
    nilpotent, and those nilpotent parts span a subspace closed under
    composition (the radical).
    """
    if M.dim == 0:
        return False
    basis = hom_basis(M, M)
    nil = []
    for f in basis:
        big = linalg.block_diag(list(f.comps))
        size = big.shape[0]
        trace = sum(big[t, t] for t in range(size))
        scalar = Fraction(trace, size)
        g = big - scalar * linalg.identity(size)
        if not linalg.is_nilpotent(g):
            return False
        nil.append(g)
    flats = [list(g.flat) for g in nil]
    base = linalg.rank(linalg.as_matrix(flats, M.dim * M.dim)) if flats else 0
    # the radical has codimension one in End(M)
    if base != len(basis) - 1:
        return False
    for g in nil:
        for h in nil:
            trial = linalg.as_matrix(flats + [list((g @ h).flat)], M.dim * M.dim)
            if linalg.rank(trial) != base:
                return False
    return True
