from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilting_lab.algebra import (
    DomainError,
    costandard_rep,
    injective_rep,
    projective_rep,
    simple_rep,
    standard_rep,
)
from tilting_lab.strings import (
    OmegaDescriptor,
    Walk,
    check_bijection,
    costandard_desc,
    count_indecomposables,
    descriptor,
    dual_star,
    dual_star_desc,
    enumerate_indecomposables,
    enumerate_v_sequences,
    hom_fingerprint_match,
    injective_desc,
    is_local,
    isomorphic,
    lower_arm,
    omega,
    projective_desc,
    simple_desc,
    standard_desc,
    upper_arm,
    walk_of,
)


@pytest.mark.parametrize("n,size", [(2, 5), (3, 14), (4, 30), (5, 55), (6, 91)])
def test_catalogue_size(n, size):
    assert len(enumerate_indecomposables(n)) == size == count_indecomposables(n)
    assert len(enumerate_v_sequences(n)) == size


@pytest.mark.parametrize("n", range(2, 7))
def test_searched_strings_are_the_descriptor_walks(n):
    searched, described = check_bijection(n)
    assert searched == described


@pytest.mark.parametrize("n", [2, 3, 4])
def test_catalogue_is_indecomposable_and_irredundant(n):
    reps = [omega(d, n) for d in enumerate_indecomposables(n)]
    assert all(is_local(M) for M in reps)
    for M, N in combinations(reps, 2):
        assert not isomorphic(M, N)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_named_descriptors_match_the_named_modules(n):
    for i in range(1, n + 1):
        assert isomorphic(omega(standard_desc(i, n), n), standard_rep(i, n))
        assert isomorphic(omega(costandard_desc(i, n), n), costandard_rep(i, n))
        assert isomorphic(omega(simple_desc(i, n), n), simple_rep(i, n))
        assert isomorphic(omega(projective_desc(i, n), n), projective_rep(i, n))
        assert isomorphic(omega(injective_desc(i, n), n), injective_rep(i, n))


def test_fingerprint_is_not_an_isomorphism_test():
    D, N = standard_rep(2, 3), costandard_rep(2, 3)
    assert hom_fingerprint_match(D, N)
    assert not isomorphic(D, N)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n),
                                                     st.sampled_from(enumerate_indecomposables(n)))))
def test_duality_swaps_the_arms(case):
    n, d = case
    assert dual_star_desc(dual_star_desc(d)) == d
    assert isomorphic(dual_star(omega(d, n)), omega(dual_star_desc(d), n))


def test_walk_shape():
    w = walk_of(OmegaDescriptor(2, 1, 4))
    assert w.vertices == (2, 3, 4, 3, 2, 1)
    assert w.is_string(4) and w.is_v_shaped()
    assert w.canonical() == w
    assert upper_arm(OmegaDescriptor(2, 1, 4)).vertices == (2, 3, 4)
    assert lower_arm(OmegaDescriptor(2, 1, 4)).vertices == (4, 3, 2, 1)
    assert w.reversed().canonical() == w


def test_walk_through_a_zero_relation_is_not_a_string():
    # alpha_1 then alpha_2 composes to zero
    assert not Walk((1, 2, 3), (1, 1)).is_string(3)


def test_descriptor_validation():
    with pytest.raises(DomainError):
        descriptor(3, 1, 2, 3)
    with pytest.raises(DomainError):
        descriptor(1, 1, 4, 3)
    with pytest.raises(DomainError):
        omega((1, 1, 1), 1)
