"""
The poset (Q_n, <) of self-orthogonal Delta-filtered modules, its anti-chains,
and the classification of generalized tilting modules.

Nodes are pairs (i, k) with 1 <= i <= k <= n; node (i, k) stands for the
module M(i, k) (see ``filtration.M_of``).  A tilting module is recorded as a
sorted tuple of descriptors; over Lambda_n it has exactly n summands.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .algebra import DomainError, check_n
from .filtration import M_of, node_of
from .homology import ext_dims, global_dimension_cap, projective_dimension
from .oracles import left_parity
from .strings import (
    OmegaDescriptor,
    dual_star_desc,
    omega,
    projective_desc,
    tilting_desc,
)

__all__ = [
    "M_of",
    "PosetNode",
    "TiltingPoset",
    "TiltingModule",
    "TiltingCertificate",
    "build_poset",
    "order_isomorphism_check",
    "antichains",
    "Z_module",
    "classify_tilting",
    "verify_tilting",
    "tier_of",
    "structural_checks",
    "restrict",
]


class PosetNode(NamedTuple):
    i: int
    k: int

    @property
    def degree(self):
        return self.i

    def __str__(self):
        return f"({self.i},{self.k})"


def poset_nodes(n):
    check_n(n)
    return [PosetNode(i, k) for i in range(1, n + 1) for k in range(i, n + 1)]


def cover_relations(n):
    """The generating relations, as (smaller, larger) node pairs."""
    out = set()
    for i in range(1, n):
        for l in range(i + 1, n + 1):
            out.add((PosetNode(i, i), PosetNode(i + 1, l)))
        for k in range(1, n):
            if i + 2 * k <= n:
                a = PosetNode(i, i + 2 * k)
                for l in range(k):
                    out.add((a, PosetNode(i + 1, i + 1 + 2 * l)))
                for l in range(i + 2 * k + 1, n + 1):
                    out.add((a, PosetNode(i + 1, l)))
            if i + 2 * k + 1 <= n:
                a = PosetNode(i, i + 2 * k + 1)
                for l in range(k):
                    out.add((a, PosetNode(i + 1, i + 1 + 2 * l)))
    return sorted(out)


def transitive_closure(R):
    """Repeated boolean squaring until the relation stops growing."""
    C = R.astype(bool)
    while True:
        nxt = C | ((C.astype(np.int64) @ C.astype(np.int64)) > 0)
        if (nxt == C).all():
            return C
        C = nxt


@dataclass(frozen=True)
class TiltingPoset:
    n: int
    nodes: tuple
    covers: tuple
    closure: np.ndarray = field(repr=False)

    def index(self, node):
        return self.nodes.index(PosetNode(*node))

    def prec(self, a, b) -> bool:
        return bool(self.closure[self.index(a), self.index(b)])

    def comparable(self, a, b) -> bool:
        return self.prec(a, b) or self.prec(b, a)

    def hasse_edges(self):
        """Pairs a < b with nothing strictly between them."""
        C = self.closure
        out = []
        for a in range(len(self.nodes)):
            for b in range(len(self.nodes)):
                if C[a, b] and not any(C[a, c] and C[c, b] for c in range(len(self.nodes))):
                    out.append((self.nodes[a], self.nodes[b]))
        return out

    def relation_pairs(self):
        idx = np.argwhere(self.closure)
        return [(self.nodes[a], self.nodes[b]) for a, b in idx]

    def check(self):
        """Strict partial order, graded by the first coordinate."""
        C = self.closure
        problems = []
        if C.diagonal().any():
            problems.append("not irreflexive")
        if (C & C.T).any():
            problems.append("not asymmetric")
        if (((C.astype(np.int64) @ C.astype(np.int64)) > 0) & ~C).any():
            problems.append("not transitive")
        for a, b in self.relation_pairs():
            if b.degree <= a.degree:
                problems.append(f"{a} < {b} does not raise the degree")
        return problems


def build_poset(n, closure=None) -> TiltingPoset:
    """
    The poset on Q_n.  ``closure`` replaces the computed order relation and
    exists only so that tests can feed a deliberately corrupted matrix
    through the checks.
    """
    nodes = tuple(poset_nodes(n))
    covers = tuple(cover_relations(n))
    pos = {v: t for t, v in enumerate(nodes)}
    R = np.zeros((len(nodes), len(nodes)), dtype=bool)
    for a, b in covers:
        R[pos[a], pos[b]] = True
    C = transitive_closure(R) if closure is None else np.array(closure, dtype=bool)
    return TiltingPoset(n, nodes, covers, C)


def module_of_node(node, n):
    return omega(M_of(node[0], node[1], n), n)


def order_isomorphism_check(n, poset=None):
    """
    Compare a < b with "Ext^m(M(a), M(b)) != 0 for some m >= 1" over all
    ordered pairs of nodes, reflexive ones included.
    """
    P = poset if poset is not None else build_poset(n)
    violations = []
    for a in P.nodes:
        Ma = module_of_node(a, n)
        for b in P.nodes:
            Mb = module_of_node(b, n)
            ext_side = any(ext_dims(Ma, Mb)[1:])
            order_side = P.prec(a, b)
            if ext_side != order_side:
                violations.append({"source": a, "target": b,
                                   "order": order_side, "ext_nonzero": ext_side})
    return {"n": n, "pairs_checked": len(P.nodes) ** 2, "violations": violations,
            "passed": not violations}


def antichains(n, size=None, poset=None):
    """
    All anti-chains of ``size`` (default n) nodes, each as a sorted tuple,
    found by depth-first search through nodes ordered by degree; a node is
    added only if it is incomparable with every node already chosen.
    """
    P = poset if poset is not None else build_poset(n)
    size = n if size is None else size
    order = sorted(range(len(P.nodes)), key=lambda t: P.nodes[t])
    comp = P.closure | P.closure.T
    out = []

    def grow(start, chosen):
        if len(chosen) == size:
            out.append(tuple(sorted(P.nodes[t] for t in chosen)))
            return
        if len(order) - start < size - len(chosen):
            return
        for pos in range(start, len(order)):
            t = order[pos]
            if any(comp[t, c] for c in chosen):
                continue
            chosen.append(t)
            grow(pos + 1, chosen)
            chosen.pop()

    grow(0, [])
    return sorted(out)


def Z_module(i, x, n):
    """The descriptors of Z(i, x) for 1 <= i <= n-1 and i < x <= n."""
    check_n(n)
    if not (1 <= i <= n - 1 and i < x <= n):
        raise DomainError(f"Z({i},{x}) needs 1 <= i <= n-1 and i < x <= n (n={n})")
    parts = [M_of(i, x, n), M_of(i + 1, x, n)]
    parts += [projective_desc(j, n) for j in range(1, i)]
    parts += [M_of(i, k, n) for k in left_parity(i + 1, x - 1)]
    parts += [M_of(i + 1, l, n) for l in left_parity(i + 2, x - 1)]
    return tuple(sorted(parts))


def nodes_of(summands):
    return tuple(sorted(PosetNode(*node_of(d)) for d in summands))


@dataclass(frozen=True)
class TiltingCertificate:
    n: int
    summand_count: int
    distinct: bool
    max_degree: int
    pairs_checked: int
    projective_dimensions: tuple
    failure: dict = None
    complete_by: str = "by-summand-count"

    @property
    def passed(self):
        return self.failure is None

    def as_dict(self):
        return {
            "passed": self.passed,
            "summand_count": self.summand_count,
            "distinct": self.distinct,
            "max_degree": self.max_degree,
            "pairs_checked": self.pairs_checked,
            "projective_dimensions": list(self.projective_dimensions),
            "finite_projective_dimension": True,
            "coresolves_regular_module": self.complete_by,
            "failure": self.failure,
        }


def _ext_failure(summands, n):
    reps = [omega(d, n) for d in summands]
    for a, Ma in zip(summands, reps):
        for b, Mb in zip(summands, reps):
            dims = ext_dims(Ma, Mb)
            for m in range(1, len(dims)):
                if dims[m]:
                    return {"reason": "extension", "source": a, "target": b,
                            "degree": m, "dim": dims[m]}
    return None


def verify_tilting(summands, n) -> TiltingCertificate:
    """
    Brute-force check of a tilting candidate: n pairwise distinct summands,
    and Ext^m between every ordered pair (including a summand with itself)
    vanishing for 1 <= m <= 2n-2.  Finite projective dimension is witnessed by
    the terminating resolutions; completing to a coresolution of the regular
    module is taken from the n-summand criterion rather than computed.
    """
    summands = tuple(sorted(OmegaDescriptor(*d).validate(n) for d in summands))
    distinct = len(set(summands)) == len(summands)
    pds = tuple(projective_dimension(omega(d, n)) for d in summands)
    failure = None
    if not distinct:
        failure = {"reason": "repeated summand"}
    elif len(summands) != n:
        failure = {"reason": "summand count", "expected": n, "found": len(summands)}
    else:
        failure = _ext_failure(summands, n)
    return TiltingCertificate(
        n=n,
        summand_count=len(summands),
        distinct=distinct,
        max_degree=global_dimension_cap(n),
        pairs_checked=len(summands) ** 2,
        projective_dimensions=pds,
        failure=failure,
    )


def is_self_orthogonal_set(summands, n):
    return _ext_failure(tuple(summands), n) is None


def _is_projective_node(node, n):
    i, k = node
    return k == i + 1 or (i == k == n)


def tier_of(summands, n, side="delta"):
    """
    The least row i holding a non-projective summand M(i, k).  Modules on the
    F(Nabla) side are measured through their duals.  Returns ``(tier,
    conventional)``: an all-projective module (only Z(n-1, n) can be one) is
    put in tier n-1, and the characteristic module in tier 1, both flagged as
    conventional.
    """
    if side == "nabla":
        summands = [dual_star_desc(d) for d in summands]
    if side == "characteristic":
        return 1, True
    rows = [v.i for v in nodes_of(summands) if not _is_projective_node(v, n)]
    if not rows:
        return n - 1, True
    return min(rows), False


def structural_checks(summands, n, side="delta"):
    """
    For a Delta-side tilting module of tier i: every summand lies in row i or
    i+1 or is some P(j) with j < i; all of P(1), ..., P(i-1) occur; M(i, n) or
    M(i+1, n) occurs; and if both occur the module is Z(i, n).
    Returns a list of failed checks (empty when all hold).
    """
    if side == "characteristic":
        return []
    if side == "nabla":
        summands = [dual_star_desc(d) for d in summands]
    summands = tuple(sorted(summands))
    tier, _ = tier_of(summands, n)
    present = set(summands)
    problems = []
    projectives = {projective_desc(j, n) for j in range(1, tier)}
    for v in nodes_of(summands):
        d = M_of(v.i, v.k, n)
        if v.i not in (tier, tier + 1) and d not in projectives:
            problems.append(f"summand {v} outside rows {tier}, {tier + 1}")
    missing = sorted(projectives - present)
    if missing:
        problems.append(f"missing projectives {[str(d) for d in missing]}")
    top = M_of(tier, n, n) in present
    below = tier + 1 <= n and M_of(tier + 1, n, n) in present
    if not (top or below):
        problems.append(f"neither M({tier},{n}) nor M({tier + 1},{n}) occurs")
    if top and below and summands != Z_module(tier, n, n):
        problems.append(f"contains M({tier},{n}) and M({tier + 1},{n}) but is not Z({tier},{n})")
    return problems


@dataclass(frozen=True)
class TiltingModule:
    summands: tuple
    side: str           # "characteristic", "delta" or "nabla"
    params: tuple       # (i, x) of the construction, () for the characteristic module
    tier: int
    tier_conventional: bool
    certificate: TiltingCertificate = None

    @property
    def n(self):
        return len(self.summands)


_SIDE_ORDER = {"characteristic": 0, "delta": 1, "nabla": 2}


def delta_side_module(i, x, n):
    """Z(i, x) followed by M(i, k) (x = i mod 2) or M(i+1, k) for x < k <= n."""
    row = i if (x - i) % 2 == 0 else i + 1
    parts = list(Z_module(i, x, n)) + [M_of(row, k, n) for k in range(x + 1, n + 1)]
    return tuple(sorted(parts))


@lru_cache(maxsize=None)
def _classify(n, verify):
    out = []

    def add(summands, side, params):
        tier, conv = tier_of(summands, n, side)
        cert = verify_tilting(summands, n) if verify else None
        out.append(TiltingModule(tuple(sorted(summands)), side, params, tier, conv, cert))

    add(tuple(tilting_desc(k, n) for k in range(1, n + 1)), "characteristic", ())
    for i in range(1, n):
        for x in range(i + 1, n + 1):
            T = delta_side_module(i, x, n)
            add(T, "delta", (i, x))
            add(tuple(dual_star_desc(d) for d in T), "nabla", (i, x))
    out.sort(key=lambda t: (_SIDE_ORDER[t.side], t.tier, t.params))
    return tuple(out)


def classify_tilting(n, verify=True):
    """
    Every basic generalized tilting module: the characteristic one, the
    n(n-1)/2 constructed on the F(Delta) side, and their duals.
    """
    check_n(n)
    return list(_classify(n, verify))


def antichain_modules(n, poset=None):
    """Tilting candidates read off from the size-n anti-chains."""
    return [tuple(sorted(M_of(v.i, v.k, n) for v in a)) for a in antichains(n, poset=poset)]


def restrict(summands, n):
    """
    Drop the summands with L(n) as a composition factor (peak k = n) and
    read the rest as Lambda_{n-1}-modules.
    """
    if n < 3:
        raise DomainError("restriction needs n >= 3")
    return tuple(sorted(OmegaDescriptor(*d) for d in summands if d[2] < n))


def restriction_report(T: TiltingModule, n):
    """
    Restrict T to Lambda_{n-1}.  When exactly one summand is lost, the
    restriction is re-verified as a tilting module; otherwise (Z(i, n) and its
    dual lose two) it is checked to stay self-orthogonal.
    """
    R = restrict(T.summands, n)
    lost = len(T.summands) - len(R)
    if lost == 1:
        ok = verify_tilting(R, n - 1).passed
        kind = "tilting"
    else:
        ok = is_self_orthogonal_set(R, n - 1)
        kind = "self-orthogonal"
    return {"lost": lost, "kind": kind, "passed": ok, "summands": R}


def non_antichain_failures(n, poset=None):
    """
    Every n-subset of Q_n that is not an anti-chain must fail the Ext check;
    returns the offending subsets (empty when the claim holds).
    """
    P = poset if poset is not None else build_poset(n)
    anti = set(antichains(n, poset=P))
    bad = []
    for subset in combinations(P.nodes, n):
        key = tuple(sorted(subset))
        if key in anti:
            continue
        if is_self_orthogonal_set([M_of(v.i, v.k, n) for v in key], n):
            bad.append(key)
    return bad
