"""
Acceptance suite: one check per criterion, each printing a single PASS/FAIL
line with its runtime.  Run with ``pytest -s tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from tilting_lab.checks import (
    classification_suite,
    hom_oracle_suite,
    ext_oracle_suite,
    kernel_table_suite,
    simple_resolution_suite,
)
from tilting_lab.filtration import classify_module
from tilting_lab.homology import ext
from tilting_lab.sequences import enumerate_sequences, exhaustive_cross_check, verify_sequence
from tilting_lab.strings import (
    check_bijection,
    costandard_desc,
    dual_star,
    dual_star_desc,
    enumerate_indecomposables,
    enumerate_v_sequences,
    omega,
    standard_desc,
)
from tilting_lab.tilting import (
    PosetNode,
    antichains,
    classify_tilting,
    order_isomorphism_check,
    restriction_report,
)

N4_ANTICHAINS = {
    frozenset(PosetNode(*p) for p in s) for s in [
        [(1, 1), (1, 2), (1, 3), (1, 4)],
        [(1, 2), (1, 3), (1, 4), (2, 3)],
        [(1, 2), (2, 2), (2, 3), (2, 4)],
        [(1, 2), (1, 4), (2, 3), (2, 4)],
        [(1, 2), (2, 3), (3, 3), (3, 4)],
        [(1, 2), (2, 3), (2, 4), (3, 4)],
        [(1, 2), (2, 3), (3, 4), (4, 4)],
    ]
}


def criterion_1():
    sizes = []
    for n in range(2, 7):
        cat = enumerate_indecomposables(n)
        searched, described = check_bijection(n)
        ok = (len(cat) == n * (n + 1) * (2 * n + 1) // 6 == len(enumerate_v_sequences(n))
              and searched == described)
        if not ok:
            return False, f"n={n}: catalogue {len(cat)}, strings {len(searched)}"
        sizes.append(len(cat))
    return True, f"catalogue sizes {sizes}, V-sequence bijection verified"


def criterion_2():
    got = {frozenset(a) for a in antichains(4)}
    return got == N4_ANTICHAINS and len(antichains(4)) == 7, f"{len(got)} anti-chains at n=4"


def criterion_3():
    counts = []
    for n in range(2, 7):
        mods = classify_tilting(n)
        delta = sum(t.side == "delta" for t in mods)
        ok = (len(mods) == n * (n - 1) + 1 and delta == n * (n - 1) // 2
              and all(t.certificate.passed for t in mods))
        if not ok:
            return False, f"n={n}: {len(mods)} modules, {delta} on the Delta side"
        counts.append(len(mods))
    return True, f"counts {counts}, all certificates pass"


def criterion_4():
    checked = 0
    for n in range(2, 6):
        r = order_isomorphism_check(n)
        checked += r["pairs_checked"]
        if not r["passed"]:
            return False, f"n={n}: {len(r['violations'])} violations, first {r['violations'][0]}"
    return True, f"{checked} ordered pairs, 0 violations"


def criterion_5():
    checked = 0
    for n in range(2, 6):
        for suite in (kernel_table_suite, simple_resolution_suite, hom_oracle_suite, ext_oracle_suite):
            r = suite(n)
            checked += r.checked
            if not r.passed:
                return False, f"n={n} {r.name}: {r.failures[:2]}"
    return True, f"{checked} closed-form values agree with the engine"


def criterion_6():
    total = 0
    for n in range(2, 6):
        r = classification_suite(n)
        total += r.checked
        exceptional = {d for d in enumerate_indecomposables(n) if classify_module(d, n).exceptional}
        named = {standard_desc(i, n) for i in range(1, n + 1)}
        named |= {costandard_desc(i, n) for i in range(1, n + 1)}
        if not r.passed or exceptional != named or len(named) != 2 * n - 1:
            return False, f"n={n}: {r.failures[:2]}"
    return True, f"{total} classification checks agree; exceptional = standard + costandard"


def criterion_7():
    for n in range(2, 6):
        seqs = enumerate_sequences(n)
        if len(seqs) != 2 ** (n - 1) or not all(verify_sequence(s).passed for s in seqs):
            return False, f"n={n}: enumeration or verification failed"
    tried = 0
    for n in range(2, 5):
        r = exhaustive_cross_check(n)
        tried += r["sequences_tried"]
        if not r["passed"]:
            return False, f"n={n}: unexpected {r['unexpected'][:2]}, missing {r['missing'][:2]}"
    return True, f"2^(n-1) sequences verified for n<=5; {tried} orderings swept for n<=4"


def criterion_8():
    for n in range(2, 7):
        for d in enumerate_indecomposables(n):
            if dual_star_desc(dual_star_desc(d)) != d:
                return False, f"duality is not an involution at {d}"
    n = 3
    cat = enumerate_indecomposables(n)
    pairs = 0
    for a in cat:
        for b in cat:
            M, N = omega(a, n), omega(b, n)
            for m in range(5):
                pairs += 1
                if ext(M, N, m) != ext(dual_star(N), dual_star(M), m):
                    return False, f"Ext^{m}({a},{b}) differs from its dual"
    restricted = 0
    for n in range(3, 7):
        for t in classify_tilting(n, verify=False):
            restricted += 1
            r = restriction_report(t, n)
            if not r["passed"]:
                return False, f"restriction of {t.summands} at n={n} fails"
    return True, f"{pairs} dual Ext comparisons, {restricted} restrictions re-verified"


CRITERIA = [
    (1, "indecomposable count", criterion_1, 1.0),
    (2, "n=4 anti-chains", criterion_2, 1.0),
    (3, "tilting counts", criterion_3, 30.0),
    (4, "order isomorphism", criterion_4, 60.0),
    (5, "closed forms vs brute force", criterion_5, 120.0),
    (6, "self-orthogonality", criterion_6, None),
    (7, "exceptional sequences", criterion_7, 60.0),
    (8, "duality and restriction", criterion_8, None),
]


def evaluate(number, title, check, limit):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    bound = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"{status} criterion {number} [{title}]: {detail}; {elapsed:.2f}s{bound}"
    return ok and within, line


@pytest.mark.parametrize("number,title,check,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, limit, capsys):
    ok, line = evaluate(number, title, check, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
