from itertools import combinations

import pytest

from tilting_lab.algebra import DomainError
from tilting_lab.filtration import M_of
from tilting_lab.strings import OmegaDescriptor, dual_star_desc, projective_desc
from tilting_lab.tilting import (
    PosetNode,
    Z_module,
    antichain_modules,
    antichains,
    build_poset,
    classify_tilting,
    cover_relations,
    is_self_orthogonal_set,
    non_antichain_failures,
    nodes_of,
    order_isomorphism_check,
    restriction_report,
    structural_checks,
    tier_of,
    verify_tilting,
)


def nodes(*pairs):
    return tuple(sorted(PosetNode(*p) for p in pairs))


HASSE_4 = {
    ((1, 1), (2, 2)), ((1, 1), (2, 3)), ((1, 1), (2, 4)),
    ((1, 3), (2, 2)), ((1, 3), (2, 4)), ((1, 4), (2, 2)),
    ((2, 2), (3, 3)), ((2, 2), (3, 4)), ((2, 4), (3, 3)),
    ((3, 3), (4, 4)),
}

ANTICHAINS_4 = {
    nodes((1, 1), (1, 2), (1, 3), (1, 4)),
    nodes((1, 2), (1, 3), (1, 4), (2, 3)),
    nodes((1, 2), (2, 2), (2, 3), (2, 4)),
    nodes((1, 2), (1, 4), (2, 3), (2, 4)),
    nodes((1, 2), (2, 3), (3, 3), (3, 4)),
    nodes((1, 2), (2, 3), (2, 4), (3, 4)),
    nodes((1, 2), (2, 3), (3, 4), (4, 4)),
}


def test_hasse_diagram_at_n4():
    P = build_poset(4)
    assert {(tuple(a), tuple(b)) for a, b in P.hasse_edges()} == HASSE_4
    assert not P.check()


@pytest.mark.parametrize("n", range(2, 7))
def test_poset_is_a_graded_strict_order(n):
    P = build_poset(n)
    assert not P.check()
    for a, b in cover_relations(n):
        assert P.prec(a, b) and b.i == a.i + 1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_far_rows_are_always_related(n):
    P = build_poset(n)
    for a in P.nodes:
        for b in P.nodes:
            if a.k != a.i + 1 and b.i >= a.i + 2:
                assert P.prec(a, b)
            if a.k == a.i + 1:
                # projective nodes P(i) have no extensions to anything
                assert not P.prec(a, b)


def test_antichains_at_n4():
    assert set(antichains(4)) == ANTICHAINS_4
    assert len(antichains(4)) == 7


def test_antichains_at_n2():
    assert antichains(2) == sorted([nodes((1, 1), (1, 2)), nodes((1, 2), (2, 2))])


@pytest.mark.parametrize("n", range(2, 7))
def test_antichain_count(n):
    assert len(antichains(n)) == n * (n - 1) // 2 + 1


def test_first_tier_antichains_at_n5():
    found = {a for a in antichains(5) if all(v.i <= 2 for v in a)}
    assert found == {
        nodes((1, 1), (1, 2), (1, 3), (1, 4), (1, 5)),
        nodes((1, 2), (2, 2), (2, 3), (2, 4), (2, 5)),
        nodes((1, 2), (1, 4), (1, 5), (2, 3), (2, 5)),
        nodes((1, 2), (1, 4), (2, 3), (2, 4), (2, 5)),
        nodes((1, 2), (1, 3), (1, 4), (1, 5), (2, 3)),
    }


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_order_isomorphism(n):
    report = order_isomorphism_check(n)
    assert report["passed"] and report["pairs_checked"] == (n * (n + 1) // 2) ** 2


def test_corrupted_closure_is_caught_with_the_pair():
    P = build_poset(4)
    C = P.closure.copy()
    a, b = P.index((1, 1)), P.index((4, 4))
    C[a, b] = False
    report = order_isomorphism_check(4, build_poset(4, closure=C))
    assert not report["passed"]
    assert [(v["source"], v["target"]) for v in report["violations"]] == [((1, 1), (4, 4))]
    assert report["violations"][0]["ext_nonzero"] and not report["violations"][0]["order"]


@pytest.mark.parametrize("n,total", [(2, 3), (3, 7), (4, 13), (5, 21), (6, 31)])
def test_classification_counts_and_certificates(n, total):
    mods = classify_tilting(n)
    assert len(mods) == total
    assert sum(t.side == "delta" for t in mods) == n * (n - 1) // 2
    assert sum(t.side == "nabla" for t in mods) == n * (n - 1) // 2
    assert all(t.certificate.passed and len(t.summands) == n for t in mods)
    assert len({t.summands for t in mods}) == total


@pytest.mark.parametrize("n", range(2, 7))
def test_antichains_agree_with_the_classification(n):
    constructed = {t.summands for t in classify_tilting(n, verify=False)
               if t.side in ("characteristic", "delta")}
    assert set(antichain_modules(n)) == constructed


def test_non_antichains_fail_at_small_n():
    for n in (2, 3, 4):
        assert non_antichain_failures(n) == []


@pytest.mark.parametrize("n", range(2, 7))
def test_structural_rules_hold(n):
    for t in classify_tilting(n, verify=False):
        assert structural_checks(t.summands, n, t.side) == []


def test_tiers_and_projectives():
    n = 5
    for t in classify_tilting(n, verify=False):
        if t.side != "delta":
            continue
        present = set(t.summands)
        assert all(projective_desc(j, n) in present for j in range(1, t.tier))
    T = Z_module(2, n, n)
    assert tier_of(T, n) == (2, False)
    assert projective_desc(1, n) in T
    assert tier_of(Z_module(n - 1, n, n), n) == (n - 1, True)


def test_z_modules():
    assert Z_module(1, 2, 2) == tuple(sorted([projective_desc(1, 2), projective_desc(2, 2)]))
    for n in (3, 4, 5, 6):
        for i in range(1, n):
            assert len(Z_module(i, n, n)) == n
    Z = Z_module(3, 4, 4)
    assert projective_desc(1, 4) in Z and projective_desc(2, 4) in Z
    with pytest.raises(DomainError):
        Z_module(3, 3, 4)


def test_simple_one_lies_only_in_the_characteristic_module():
    for n in (3, 4, 5):
        holders = [t for t in classify_tilting(n, verify=False)
                   if OmegaDescriptor(1, 1, 1) in t.summands]
        assert [t.side for t in holders] == ["characteristic"]


def test_nabla_side_is_the_dual():
    n = 4
    mods = classify_tilting(n, verify=False)
    delta = {t.params: t.summands for t in mods if t.side == "delta"}
    for t in mods:
        if t.side == "nabla":
            assert t.summands == tuple(sorted(dual_star_desc(d) for d in delta[t.params]))


def test_broken_candidates_fail():
    n = 4
    Z = list(Z_module(1, n, n))
    assert verify_tilting(Z[:-1], n).failure["reason"] == "summand count"
    char = [OmegaDescriptor(1, 1, k) for k in (1, 2)]
    assert not verify_tilting(char + [projective_desc(2, 2)], 2).passed
    bad = verify_tilting([M_of(1, 1, 3), M_of(2, 2, 3), M_of(1, 2, 3)], 3)
    assert bad.failure["reason"] == "extension" and bad.failure["degree"] >= 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_restriction_to_the_smaller_algebra(n):
    for t in classify_tilting(n, verify=False):
        report = restriction_report(t, n)
        assert report["passed"], (t, report)
        assert report["lost"] in (1, 2)
        if report["lost"] == 2:
            assert t.side in ("delta", "nabla") and t.params[1] == n


def test_comparable_pairs_are_not_self_orthogonal():
    n = 4
    P = build_poset(n)
    for a, b in P.relation_pairs():
        assert not is_self_orthogonal_set([M_of(*a, n), M_of(*b, n)], n)
    for a, b in combinations(P.nodes, 2):
        if not P.comparable(a, b):
            assert is_self_orthogonal_set([M_of(*a, n), M_of(*b, n)], n)
    assert nodes_of([M_of(2, 3, n)]) == (PosetNode(2, 3),)
