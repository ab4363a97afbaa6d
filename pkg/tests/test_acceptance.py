"""Acceptance gate: thirteen criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (lines appear in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from functools import lru_cache

import pytest

from stdcomplexes import corpus as cp
from stdcomplexes.latpath import (
    demarcation,
    hook_placement,
    marking_path,
    path_from_statistic,
    raise_path,
    statistic,
    statistic_trivial_scan,
    trivial_lower,
)
from stdcomplexes.stdcomplex import LexCache

SEED = 0

RUNNING = "e n e n e e n e n e e n e n n e e n"
RUNNING_ST = frozenset({3, 5, 8, 10, 13, 16, 17})
HARD_C = "n n n e e e n e e n e n n e n n n e e e e"
HARD_L = "e e e n e e e n n e n e e n n n n e e n n"
HARD_DEM = tuple("d d d ε e e d ε ε d ε d d ε n n n e e ε ε".split())
HARD_ST = frozenset({4, 5, 6, 8, 11, 14, 18, 19})
HOOKS = "e n n e n e e e n e e n n n n e e"


def best_time(fn, repeat=50):
    """Result of ``fn`` and its fastest wall time over ``repeat`` calls after a warm-up."""
    out = fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


@lru_cache(maxsize=None)
def full_corpus():
    return cp.build_corpus(cp.CorpusSpec())


_cache = LexCache()


def _verdict(bad, extra=""):
    if bad:
        return False, f"{len(bad)} counterexamples, first: {bad[0]}"
    return True, extra


def c01_running_example():
    def run():
        L = trivial_lower(18, 10)
        return statistic_trivial_scan(RUNNING), marking_path(RUNNING, L).marked

    (st, marked), t = best_time(run)
    ok = st == RUNNING_ST and marked == {1, 6, 11} and t < 1e-3
    return ok, f"st={sorted(st)} marked={sorted(marked)} {t * 1e3:.3f} ms"


def c02_general_example():
    def run():
        return demarcation(HARD_C, HARD_L).word, statistic(HARD_C, HARD_L), marking_path(HARD_C, HARD_L).marked

    (dem, st, marked), t = best_time(run)
    ok = dem == HARD_DEM and st == HARD_ST and marked == {9, 20, 21} and t < 1e-3
    return ok, f"st={sorted(st)} marked={sorted(marked)} {t * 1e3:.3f} ms"


def c03_hooks():
    st, t = best_time(lambda: hook_placement(HOOKS))
    return st == {4, 6, 7, 10, 16, 17} and t < 1e-3, f"{sorted(st)} {t * 1e3:.3f} ms"


def c04_statistic_family():
    def run():
        return {d: path_from_statistic(RUNNING_ST, 18, d, None) for d in range(19)}

    found, t = best_time(run, repeat=10)
    ds = sorted(d for d, C in found.items() if C is not None)
    ok = ds == [7, 8, 9, 10, 11]
    ok = ok and all(statistic(found[d]) == RUNNING_ST for d in ds)
    ok = ok and all(raise_path(found[d]) == found[d + 1] for d in ds[:-1])
    return ok and t < 1e-2, f"d in {ds} {t * 1e3:.2f} ms"


def c05_oracle_equivalence():
    ms = full_corpus().matroids
    t0 = time.perf_counter()
    bad = cp.check_exchange(ms) + cp.check_oracle_equivalence(ms, _cache)
    t = time.perf_counter() - t0
    ok, msg = _verdict(bad, f"{len(ms)} matroids {t:.1f} s")
    return ok and len(ms) >= 500 and not full_corpus().invalid and t <= 300, msg


def c06_cardinality_subcomplex():
    ms = full_corpus().matroids
    return _verdict(cp.check_cardinality_subcomplex(ms, _cache), f"{len(ms)} matroids")


def c07_duality():
    ms = full_corpus().matroids
    return _verdict(cp.check_duality(ms, _cache), f"{len(ms)} matroids")


def c08_reflection():
    return _verdict(cp.check_reflection(SEED, ns=range(2, 11), per_n=200), "200 configs per n in 2..10")


def c09_statistic_lambda():
    t0 = time.perf_counter()
    bad = cp.check_statistic_lambda(10, _cache)
    t = time.perf_counter() - t0
    ok, msg = _verdict(bad, f"all boundary pairs n <= 10, {t:.1f} s")
    return ok and t <= 600, msg


def c10_trivial_equivalence():
    return _verdict(cp.check_hooks(12), "all paths n <= 12")


def c11_restriction():
    return _verdict(cp.check_restriction(SEED, 1000, 10, _cache), "1000 chains n <= 10")


def c12_decomposition():
    return _verdict(cp.check_decomposition(9), "all boundary pairs n <= 9")


def c13_lambda_axioms():
    ms = full_corpus().matroids
    return _verdict(cp.check_lambda_axioms(ms, _cache), f"{len(ms)} matroids")


CRITERIA = [
    (1, "running example statistic and marked steps", c01_running_example),
    (2, "general example demarcation and statistic", c02_general_example),
    (3, "hook placement", c03_hooks),
    (4, "paths sharing one statistic", c04_statistic_family),
    (5, "oracle equivalence on the corpus", c05_oracle_equivalence),
    (6, "cardinality and subcomplex", c06_cardinality_subcomplex),
    (7, "duality", c07_duality),
    (8, "reflection invariance", c08_reflection),
    (9, "statistic equals the bijection", c09_statistic_lambda),
    (10, "scan, hooks and marking agree", c10_trivial_equivalence),
    (11, "restriction to smaller upper boundary", c11_restriction),
    (12, "decomposition from statistics", c12_decomposition),
    (13, "bijection axioms", c13_lambda_axioms),
]

RESULTS: dict = {}


def _line(num, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'}  criterion {num:2d}: {title} ({detail})"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn):
    ok, detail = fn()
    RESULTS[num] = _line(num, title, ok, detail)
    assert ok, RESULTS[num]


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(num, title, ok, detail), flush=True)
    raise SystemExit(1 if failed else 0)
