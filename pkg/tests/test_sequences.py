from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilting_lab.algebra import DomainError
from tilting_lab.sequences import (
    Entry,
    dual_sequence,
    entry_of,
    enumerate_sequences,
    exceptional_modules,
    exhaustive_cross_check,
    sequence_for_subset,
    simple_generation,
    verify_sequence,
)
from tilting_lab.strings import costandard_desc, standard_desc


def names(n):
    return [str(s) for s in enumerate_sequences(n)]


def test_sequences_at_n2_and_n3():
    assert names(2) == ["(L(1), Delta(2))", "(Nabla(2), L(1))"]
    got = names(3)
    assert len(got) == 4
    assert "(Nabla(3), Nabla(2), L(1))" in got
    assert "(Nabla(2), L(1), Delta(3))" in got


@pytest.mark.parametrize("n", range(2, 7))
def test_count_and_shape(n):
    seqs = enumerate_sequences(n)
    assert len(seqs) == 2 ** (n - 1)
    assert [s.mask for s in seqs] == list(range(2 ** (n - 1)))
    for s in seqs:
        assert len(s.entries) == n
        assert set(s.costandard) | set(s.standard) == set(range(2, n + 1))
        assert list(s.costandard) == sorted(s.costandard, reverse=True)
        assert list(s.standard) == sorted(s.standard)
        kinds = [e.kind for e in s.entries if e.index > 1]
        # every costandard entry comes before every standard entry
        assert kinds == sorted(kinds)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_every_sequence_verifies_with_a_full_transcript(n):
    for s in enumerate_sequences(n):
        cert = verify_sequence(s)
        assert cert.passed and cert.full
        assert len(cert.transcript) == n - 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_duality_maps_sequences_to_sequences(n):
    family = {s.descriptors() for s in enumerate_sequences(n)}
    for s in family:
        assert dual_sequence(s) in family
        assert verify_sequence(dual_sequence(s), n).passed


@pytest.mark.parametrize("n,tried,passing", [(2, 9, 2), (3, 125, 4), (4, 2401, 8)])
def test_exhaustive_cross_check(n, tried, passing):
    report = exhaustive_cross_check(n)
    assert report["passed"]
    assert report["sequences_tried"] == tried and report["passing"] == passing
    assert report["unexpected"] == [] and report["missing"] == []


def test_wrong_order_names_the_pair():
    n = 2
    cert = verify_sequence([standard_desc(2, n), standard_desc(1, n)], n)
    assert not cert.passed and not cert.backward_vanishing
    assert cert.failure["later"] == standard_desc(1, n)
    assert cert.failure["earlier"] == standard_desc(2, n)
    assert cert.failure["degree"] == 0


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n))))
def test_standard_and_costandard_never_coexist(case):
    n, k = case
    for rest in permutations(exceptional_modules(n), n - 2):
        seq = [standard_desc(k, n), costandard_desc(k, n)] + list(rest)
        if len(set(seq)) < n:
            continue
        for order in (seq, seq[::-1]):
            assert not verify_sequence(order, n, full=False).passed


def test_non_exceptional_entries_are_rejected():
    cert = verify_sequence([(1, 1, 2), (1, 1, 1)], 2)
    assert not cert.exceptional_entries
    assert cert.failure == {"reason": "not exceptional", "entry": (1, 1, 2)}


def test_simple_generation_needs_every_index():
    n = 3
    ok, transcript = simple_generation((standard_desc(1, n), standard_desc(3, n)), n)
    assert not ok and "Delta(2)" in transcript[-1]
    ok, transcript = simple_generation((costandard_desc(2, n), costandard_desc(3, n)), n)
    assert not ok and transcript == ["L(1) is not an entry"]


def test_entries_and_subsets():
    n = 4
    assert entry_of(standard_desc(3, n), n) == Entry("standard", 3)
    assert entry_of(costandard_desc(2, n), n) == Entry("costandard", 2)
    assert str(Entry("standard", 1)) == "L(1)"
    with pytest.raises(DomainError):
        entry_of((1, 1, 2), n)
    with pytest.raises(DomainError):
        sequence_for_subset({1}, n)
    s = sequence_for_subset({2, 4}, n)
    assert str(s) == "(Nabla(4), Nabla(2), L(1), Delta(3))" and s.mask == 5
