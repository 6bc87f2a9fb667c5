"""Acceptance criteria, one timed check each.

Run under pytest (the PASS/FAIL lines appear in the terminal summary) or
directly with ``python -m tests.test_acceptance``.  Each check rebuilds what
it measures from scratch so cached results from other tests cannot flatter
the timings.
"""

import time
from pathlib import Path

import pytest

from monext.action import (check_roundtrip, functor_P, functor_Q, naturality_report,
                           roundtrip_witness)
from monext.enumeration import (census_2x2, classification_agreement, classify,
                                enumerate_action_systems, flags)
from monext.formats import act_to_doc, dumps
from monext.monoid import enumerate_homomorphisms, enumerate_monoids, find_isomorphisms
from monext.registry import GROUPS_UP_TO_4, K4, G, M, Z4
from monext.semibiproduct import (CompositionObstruction, compose_semibiproducts,
                                  idempotent_tuple, pullback_semibiproduct,
                                  pullback_square, semibiproduct_search,
                                  sum_decomposition_report, verify_semibiproduct)

from . import corpus

GOLDEN = Path(__file__).parent / "golden" / "census_2x2.jsonl"
RESULTS = []


def _fresh_corpus():
    for fn in (corpus.realizations, corpus.pullbacks, corpus.composable_pairs,
               corpus.composites, corpus.all_semibiproducts):
        fn.cache_clear()


def census_exactness():
    counts = {}
    lines = []
    for X, B in ((G, G), (G, M), (M, G), (M, M)):
        systems = sorted(enumerate_action_systems(X, B), key=flags)
        counts[X.name + B.name] = len(systems)
        lines.extend(dumps(act_to_doc(T)) + "\n" for T in systems)
    assert counts == {"GG": 2, "GM": 4, "MG": 3, "MM": 5}, counts
    assert "".join(lines).encode() == GOLDEN.read_bytes(), "differs from golden file"
    return "14 systems, counts 2/4/3/5, golden file byte-exact"


def pq_identity():
    entries = census_2x2()
    for e in entries:
        assert functor_P(functor_Q(e.system).semibiproduct) == e.system, e.label
    return f"P(Q(T)) = T on all {len(entries)} census systems"


def roundtrip_iso():
    _fresh_corpus()
    n = 0
    for S in corpus.all_semibiproducts():
        W = roundtrip_witness(S)
        report = check_roundtrip(W)
        assert report.passed, report.to_dict()
        n += 1
    squares = 0
    for S, h, _ in corpus.pullbacks():
        _, m = pullback_square(S, h)
        assert naturality_report(m).passed
        squares += 1
    return f"alpha/beta mutually inverse on {n} semibiproducts, {squares} naturality squares"


def sum_decomposition():
    _fresh_corpus()
    pairs = 0
    for S in corpus.all_semibiproducts():
        r = sum_decomposition_report(S)
        assert r.passed, r.to_dict()
        pairs += S.A.size ** 2
    return f"decomposition exact on {pairs} element pairs"


def stability():
    census = [functor_Q(e.system).semibiproduct for e in census_2x2()]
    pulled = 0
    for S in census:
        for C in corpus.PULLBACK_SOURCES:
            for h in enumerate_homomorphisms(C, S.B):
                assert verify_semibiproduct(pullback_semibiproduct(S, h)).passed
                pulled += 1
    corpus.composable_pairs.cache_clear()
    composed = 0
    for S, Tn in corpus.composable_pairs():
        out = compose_semibiproducts(S, Tn)
        assert not isinstance(out, CompositionObstruction), out.to_dict()
        assert verify_semibiproduct(out).passed
        composed += 1
    assert pulled and composed
    return f"{pulled} pullbacks and {composed} split composites verified"


def group_pointedness():
    found = 0
    for X in GROUPS_UP_TO_4:
        for A in GROUPS_UP_TO_4:
            for B in GROUPS_UP_TO_4:
                for S in semibiproduct_search(X, A, B):
                    assert verify_semibiproduct(S).passed, (X.name, A.name, B.name)
                    found += 1
    return f"{found} group tuples from exhaustive search, all pointed"


def idempotent_characterization():
    checked = 0
    for n in (1, 2, 3):
        for A in enumerate_monoids(n):
            ok = verify_semibiproduct(idempotent_tuple(A), pointed=False).passed
            assert ok == A.is_idempotent()
            checked += 1
    return f"verifies iff idempotent on all {checked} monoids of order <= 3"


def realization_identification():
    entries = census_2x2()
    assert find_isomorphisms(functor_Q(entries[1].system).monoid, Z4)
    assert find_isomorphisms(functor_Q(entries[0].system).monoid, K4)
    sizes = [functor_Q(entries[i - 1].system).monoid.size for i in (6, 9, 14)]
    assert sizes == [3, 3, 3]
    return "item 2 ~ Z4, item 1 ~ K4, items 6/9/14 have 3 elements"


def non_isomorphism():
    entries = census_2x2()
    classes = classify(entries)
    assert len(classes) == 14 and all(len(c.members) == 1 for c in classes)
    _, psb, agree = classification_agreement(entries)
    assert agree and len(psb) == 14
    return "14 singleton classes (Act and Psb agree)"


CRITERIA = [
    (1, "census exactness", 1.0, census_exactness),
    (2, "PQ = 1 on the nose", 1.0, pq_identity),
    (3, "round-trip isomorphism", 5.0, roundtrip_iso),
    (4, "sum decomposition identity", 5.0, sum_decomposition),
    (5, "pullback and composition stability", 10.0, stability),
    (6, "group semibiproducts are pointed", 60.0, group_pointedness),
    (7, "idempotent characterization", 1.0, idempotent_characterization),
    (8, "realization identification", 1.0, realization_identification),
    (9, "pairwise non-isomorphism", 1.0, non_isomorphism),
]


def evaluate(number, title, limit, fn):
    start = time.perf_counter()
    try:
        detail, ok = fn(), True
    except AssertionError as exc:
        detail, ok = f"assertion failed: {exc}", False
    elapsed = time.perf_counter() - start
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    line = (f"[{status}] criterion {number}: {title}: {detail} "
            f"({elapsed:.3f}s, limit {limit:g}s)")
    return ok and within, line


@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn):
    ok, line = evaluate(number, title, limit, fn)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for crit in CRITERIA:
        ok, line = evaluate(*crit)
        failures += not ok
        print(line)
    raise SystemExit(1 if failures else 0)
