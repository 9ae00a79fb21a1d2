"""
Membership in F(Delta) and F(Nabla), self-orthogonality and exceptionality.

Every property is decided twice: once by a parity rule on the descriptor and
once homologically from computed Ext groups.  The two must agree.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import DomainError, costandard_rep, standard_rep
from .homology import ext, ext_dims
from .morphisms import end_dim
from .strings import OmegaDescriptor, descriptor, omega


def _parity(a, b):
    return (a - b) % 2 == 0


def in_f_delta_parity(d: OmegaDescriptor) -> bool:
    i, j, k = d
    if i != 1 and j != 1:
        return _parity(i, k) and not _parity(j, k)
    if i == 1 and j != 1:
        return not _parity(j, k)
    if i != 1 and j == 1:
        return _parity(i, k)
    return True


def in_f_nabla_parity(d: OmegaDescriptor) -> bool:
    i, j, k = d
    if i != 1 and j != 1:
        return not _parity(i, k) and _parity(j, k)
    if i == 1 and j != 1:
        return _parity(j, k)
    if i != 1 and j == 1:
        return not _parity(i, k)
    return True


def in_f_delta_homological(M) -> bool:
    """M has a standard filtration iff Ext^1(M, Nabla(j)) = 0 for every j."""
    return all(ext(M, costandard_rep(j, M.n), 1) == 0 for j in range(1, M.n + 1))


def in_f_nabla_homological(M) -> bool:
    """M has a costandard filtration iff Ext^1(Delta(j), M) = 0 for every j."""
    return all(ext(standard_rep(j, M.n), M, 1) == 0 for j in range(1, M.n + 1))


def self_extension_witness(M):
    """The least m >= 1 with Ext^m(M, M) != 0 as ``(m, dim)``, or None."""
    for m, v in enumerate(ext_dims(M, M)):
        if m >= 1 and v:
            return m, v
    return None


def is_self_orthogonal(M) -> bool:
    """
    Ext^m(M, M) = 0 for all m >= 1.  The minimal resolution has length at
    most 2n - 2, so the computed list of Ext dimensions is exhaustive.
    """
    return self_extension_witness(M) is None


def self_orthogonal_closed_form(d: OmegaDescriptor) -> bool:
    i, j, _ = d
    if i == j == 1:
        return True
    return abs(i - j) == 1 and (in_f_delta_parity(d) or in_f_nabla_parity(d))


def is_exceptional(M) -> bool:
    return end_dim(M) == 1 and is_self_orthogonal(M)


def exceptional_closed_form(d: OmegaDescriptor, n) -> bool:
    """Exactly the standard and costandard modules are exceptional."""
    i, j, k = d
    return (i, j, k) == (1, 1, 1) or (k == max(i, j) and abs(i - j) == 1 and k >= 2)


@dataclass(frozen=True)
class ModuleClassification:
    descriptor: OmegaDescriptor
    in_f_delta: bool
    in_f_nabla: bool
    self_orthogonal: bool
    exceptional: bool
    witnesses: dict = field(default_factory=dict)


@lru_cache(maxsize=None)
def classify_module(d: OmegaDescriptor, n) -> ModuleClassification:
    """
    Homological classification of Omega(d), carrying for each negative
    answer the degree and pair of a nonzero Ext that refutes it.
    """
    d = OmegaDescriptor(*d).validate(n)
    M = omega(d, n)
    witnesses = {}
    delta = True
    for j in range(1, n + 1):
        v = ext(M, costandard_rep(j, n), 1)
        if v:
            delta = False
            witnesses["f_delta"] = {"degree": 1, "pair": ["module", f"Nabla({j})"], "dim": v}
            break
    nabla = True
    for j in range(1, n + 1):
        v = ext(standard_rep(j, n), M, 1)
        if v:
            nabla = False
            witnesses["f_nabla"] = {"degree": 1, "pair": [f"Delta({j})", "module"], "dim": v}
            break
    w = self_extension_witness(M)
    if w is not None:
        witnesses["self_orthogonal"] = {"degree": w[0], "pair": ["module", "module"], "dim": w[1]}
    e = end_dim(M)
    exceptional = w is None and e == 1
    if w is None and e != 1:
        witnesses["exceptional"] = {"end_dim": e}
    return ModuleClassification(d, delta, nabla, w is None, exceptional, witnesses)


def cross_pair_extension(dm: OmegaDescriptor, dn: OmegaDescriptor, n):
    """
    For self-orthogonal M in F(Nabla) outside F(Delta) and self-orthogonal N
    in F(Delta) outside F(Nabla), the least degree m >= 1 with
    Ext^m(M, N) != 0, returned as ``(m, dim)``.
    """
    dm = OmegaDescriptor(*dm).validate(n)
    dn = OmegaDescriptor(*dn).validate(n)
    cm, cn = classify_module(dm, n), classify_module(dn, n)
    if not (cm.in_f_nabla and not cm.in_f_delta and cm.self_orthogonal):
        raise DomainError(f"{dm} is not a self-orthogonal module of F(Nabla) outside F(Delta)")
    if not (cn.in_f_delta and not cn.in_f_nabla and cn.self_orthogonal):
        raise DomainError(f"{dn} is not a self-orthogonal module of F(Delta) outside F(Nabla)")
    dims = ext_dims(omega(dm, n), omega(dn, n))
    for m, v in enumerate(dims):
        if m >= 1 and v:
            return m, v
    raise AssertionError(f"no extension from {dm} to {dn} up to degree {len(dims) - 1}")


def M_of(i, k, n) -> OmegaDescriptor:
    """The self-orthogonal module of F(Delta) labelled by the pair (i, k)."""
    if not (1 <= i <= k <= n):
        raise DomainError(f"({i},{k}) is not a node for n={n}")
    if i == 1:
        return descriptor(1, 1, k, n)
    if _parity(i, k):
        return descriptor(i, i - 1, k, n)
    return descriptor(i - 1, i, k, n)


def node_of(d: OmegaDescriptor):
    """Inverse of M_of on self-orthogonal modules of F(Delta)."""
    i, j, k = d
    if i == j == 1:
        return (1, k)
    if j == i - 1 and _parity(i, k):
        return (i, k)
    if i == j - 1 and not _parity(j, k):
        return (j, k)
    raise DomainError(f"{d} is not a self-orthogonal module of F(Delta)")
