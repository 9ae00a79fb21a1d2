import pytest

from tilting_lab import linalg
from tilting_lab.algebra import (
    DomainError,
    alpha,
    alpha_prime,
    build_lambda,
    cartan_matrix,
    costandard_rep,
    dual_rep,
    injective_rep,
    lambda_dimension,
    lambda_quiver,
    projective_rep,
    relations,
    representation,
    simple_rep,
    standard_rep,
)


def brute_force_paths(n):
    """Count nonzero paths by walking every arrow sequence up to length 3."""
    Q = lambda_quiver(n)
    rels = set(relations(n))
    count = n
    frontier = [(a.index,) for a in Q.arrows]
    while frontier:
        count += len(frontier)
        nxt = []
        for p in frontier:
            end = Q.arrow(p[-1]).target
            for a in Q.arrows:
                if a.source == end and (p[-1], a.index) not in rels and len(p) < 3:
                    nxt.append(p + (a.index,))
        frontier = nxt
    return count


@pytest.mark.parametrize("n", range(2, 8))
def test_dimension_is_4n_minus_3(n):
    assert lambda_dimension(n) == 4 * n - 3 == brute_force_paths(n)


def test_arrow_indexing_pairs_partners():
    Q = lambda_quiver(4)
    for i in range(1, 4):
        a, b = Q.arrow(alpha(i)), Q.arrow(alpha_prime(i))
        assert (a.source, a.target) == (i, i + 1)
        assert (b.source, b.target) == (i + 1, i)
        assert alpha(i) ^ 1 == alpha_prime(i)


def test_path_basis_has_no_path_longer_than_two():
    _, PB = build_lambda(5)
    assert max(p.length for p in PB.paths) == 2


def test_projective_dimension_vectors():
    n = 4
    assert projective_rep(1, n).dims == (2, 1, 0, 0)
    assert projective_rep(2, n).dims == (1, 2, 1, 0)
    assert projective_rep(3, n).dims == (0, 1, 2, 1)
    assert projective_rep(4, n).dims == (0, 0, 1, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_cartan_matrix_is_symmetric_and_unimodular(n):
    C = cartan_matrix(n)
    assert (C == C.T).all()
    inv = linalg.inverse(C)
    assert all(v == int(v) for v in inv.flat)


@pytest.mark.parametrize("n", range(2, 6))
def test_named_modules_satisfy_relations(n):
    for i in range(1, n + 1):
        for M in (projective_rep(i, n), injective_rep(i, n), simple_rep(i, n),
                  standard_rep(i, n), costandard_rep(i, n)):
            assert M.satisfies_relations()


def test_standard_and_costandard_are_dual():
    for i in range(1, 5):
        assert dual_rep(standard_rep(i, 4)) == costandard_rep(i, 4)
        assert dual_rep(dual_rep(projective_rep(i, 4))) == projective_rep(i, 4)


def test_domain_errors():
    with pytest.raises(DomainError):
        lambda_quiver(1)
    with pytest.raises(DomainError):
        simple_rep(0, 3)
    with pytest.raises(DomainError):
        representation(3, (1, 1))
    with pytest.raises(DomainError):
        representation(2, (1, 1), {0: linalg.zeros(2, 2)})
