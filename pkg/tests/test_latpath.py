import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from stdcomplexes.latpath import (
    EPS,
    LatticePath,
    PathError,
    all_paths,
    composite_bijection,
    demarcation,
    dual_path,
    hook_placement,
    is_weakly_above_lower,
    lower_path,
    lpm,
    marking_path,
    parse_path,
    path_from_east_set,
    path_from_statistic,
    paths_between,
    raise_path,
    statistic,
    statistic_trivial_scan,
    trivial_lower,
    trivial_marking_path,
    trivial_upper,
    truncate_last,
    weakly_above,
)
from stdcomplexes.matroid import dual, uniform

RUNNING = "e n e n e e n e n e e n e n n e e n"
RUNNING_ST = {3, 5, 8, 10, 13, 16, 17}
HOOKS = "e n n e n e e e n e e n n n n e e"
HARD_C = "n n n e e e n e e n e n n e n n n e e e e"
HARD_L = "e e e n e e e n n e n e e n n n n e e n n"
HARD_DEM = "d d d ε e e d ε ε d ε d d ε n n n e e ε ε".split()
HARD_ST = {4, 5, 6, 8, 11, 14, 18, 19}
FAMILY = {
    7: "nnenennenennenneen",
    8: "enenennenennenneen",
    9: "eneneenenennenneen",
    10: "eneneeneneenenneen",
    11: "eneneeneneenenneee",
}

_STEP = {"0": "e", "1": "n", "2": "d"}


def drawn(code):
    """Decode a figure's 0/1/2 step list (east/north/diagonal)."""
    return "".join(_STEP[c] for c in code.split(","))


# Two replacements of north steps starting on the marking path, with d < d'.
MOD_L = drawn("0,0,0,1,0,0,0,1,1,0,1,0,0,1,1,1,1,0,0,1,1")
MOD_C = drawn("1,1,1,0,0,0,1,0,1,1,0,1,1,0,1,1,1,0,0,1,1")
MOD_C_RAISED = drawn("1,1,1,0,0,0,1,0,0,1,0,1,1,0,1,1,1,0,0,1,1")
MOD2_L = drawn("0,0,1,1,0,1,0,0,0,1,0,0,0,0,1,1")
MOD2_C = drawn("1,1,0,1,1,1,0,1,1,0,0,1,1,1,0,0")
MOD2_C_RAISED = drawn("0,1,0,1,1,1,0,1,1,0,0,1,1,1,0,0")


def fs(*xs):
    return frozenset(xs)


def test_parse_path():
    P = parse_path("en")
    assert P.d == 1 and P.east_set == {1}
    assert len(parse_path("")) == 0
    assert parse_path(" E N ").word == "en"
    with pytest.raises(PathError):
        parse_path("enx")


def test_path_helpers():
    C = parse_path("enne")
    assert C.endpoint == (2, 2)
    assert C.points() == [(0, 0), (1, 0), (1, 1), (1, 2), (2, 2)]
    assert path_from_east_set({1, 4}, 4) == C
    assert trivial_lower(4, 2).word == "eenn"
    assert trivial_upper(4, 2).word == "nnee"
    assert truncate_last("enen", "n") == "ene"


def test_weakly_above():
    assert weakly_above("enen", "eenn")
    assert weakly_above("enen", "enen")
    assert weakly_above("neen", "enen")
    assert weakly_above("nnee", "enen")
    assert not weakly_above("eenn", "enen")


def test_weakly_above_needs_same_shape():
    with pytest.raises(PathError):
        weakly_above("enen", "eeen")


def test_generalised_lower_comparison():
    assert is_weakly_above_lower("nen", "eee")
    assert not is_weakly_above_lower("een", "nee")


def test_lpm_examples():
    assert lpm("enen", "eenn").bases == {fs(1, 2), fs(1, 3)}
    assert lpm("enen", "enen").bases == {fs(1, 3)}
    assert lpm("nnee", "eenn") == uniform(4, 2)


def test_paths_between_matches_bases():
    for U, L in [("nnee", "eenn"), ("nene", "eenn"), ("neene", "eeenn")]:
        words = paths_between(U, L)
        assert {LatticePath(w).east_set for w in words} == lpm(U, L).bases
    assert len(all_paths(6, 3)) == 20


def test_running_example_scan():
    assert statistic_trivial_scan(RUNNING) == RUNNING_ST
    assert statistic_trivial_scan("eeennn") == set()
    assert statistic_trivial_scan("nnee") == {3, 4}


def test_running_example_marking():
    assert trivial_marking_path(RUNNING) == "eddeddeddd"
    mar = marking_path(RUNNING, trivial_lower(18, 10))
    assert mar.marked == {1, 6, 11}
    assert mar.word.startswith("eddeddeddd")
    assert statistic(RUNNING) == RUNNING_ST


def test_hook_placement():
    assert hook_placement(HOOKS) == {4, 6, 7, 10, 16, 17}
    assert hook_placement("eeennn") == set()
    assert hook_placement("nnee") == {3, 4}


def test_hard_demarcation():
    assert list(demarcation(HARD_C, HARD_L).word) == HARD_DEM


def test_hard_marking_and_statistic():
    mar = marking_path(HARD_C, HARD_L)
    assert mar.marked == {9, 20, 21}
    assert statistic(HARD_C, HARD_L) == HARD_ST


def test_squeezed_pair():
    for w in ("enen", "nnee", "eenn", HARD_L):
        dem = demarcation(w, w)
        assert "".join(dem.word) == parse_path(w).word
        assert marking_path(w, w).word == parse_path(w).word
        assert statistic(w, w) == set()


def test_demarcation_at_trivial_lower():
    for n in range(1, 8):
        for d in range(n + 1):
            L = trivial_lower(n, d)
            for c in all_paths(n, d):
                dem = demarcation(c, L).word
                assert set(dem[:d]) <= {"e", "d"}
                assert set(dem[d:]) <= {"n", EPS}


def test_demarcation_needs_order():
    with pytest.raises(PathError):
        demarcation("eenn", "nnee")


def test_raise_first_step_flip():
    assert raise_path(FAMILY[7]).word == FAMILY[8]


def test_raise_and_lower_on_family():
    for d in range(7, 11):
        assert raise_path(FAMILY[d]).word == FAMILY[d + 1]
        assert lower_path(FAMILY[d + 1]).word == FAMILY[d]
    with pytest.raises(PathError):
        raise_path(FAMILY[11])


def test_modification_examples():
    assert raise_path(MOD_C, MOD_L).word == MOD_C_RAISED
    assert lower_path(MOD_C_RAISED, MOD_L).word == MOD_C
    assert statistic(MOD_C, MOD_L) == HARD_ST == statistic(MOD_C_RAISED, MOD_L)
    assert marking_path(MOD_C, MOD_L).word == "dddddddddnndd"
    assert marking_path(MOD_C_RAISED, MOD_L).word == "ddddeddddnndd"
    dem = "".join(s for s in demarcation(MOD_C, MOD_L).word if s != EPS)
    assert dem == drawn("2,2,2,0,0,2,1,2,2,2,1,1,1,0,0,1,1")

    assert raise_path(MOD2_C, MOD2_L).word == MOD2_C_RAISED
    J = statistic(MOD2_C, MOD2_L)
    assert J == {3, 7, 10, 11, 15, 16} == statistic(MOD2_C_RAISED, MOD2_L)
    assert marking_path(MOD2_C, MOD2_L).word == "ddndndddddee"
    # k = 2 here, so the family has three members
    found = [d for d in range(17) if path_from_statistic(J, 16, d, MOD2_L) is not None]
    assert found == [6, 7, 8]


def test_path_from_statistic_family():
    for L in (None, trivial_lower(18, 11)):
        found = {d: path_from_statistic(RUNNING_ST, 18, d, L) for d in range(19)}
        assert {d for d, C in found.items() if C is not None} == set(FAMILY)
        for d, w in FAMILY.items():
            assert found[d].word == w
            assert statistic(w) == RUNNING_ST


def test_path_from_statistic_small_cases():
    assert path_from_statistic({1}, 2, 1) is None
    assert path_from_statistic(set(), 4, 0).word == "nnnn"
    assert path_from_statistic(set(), 4, 1).word == "ennn"
    assert path_from_statistic({9}, 4, 1) is None


def test_necessary_conditions_trivial_lower():
    for n in range(1, 10):
        for d in range(n + 1):
            for c in all_paths(n, d):
                J = sorted(statistic(c))
                assert all(j >= 2 * k for k, j in enumerate(J, 1))
                assert len(J) <= d <= n - len(J)


def test_grouping_by_statistic():
    for n in range(1, 9):
        L = LatticePath("e" * n)
        groups = {}
        for d in range(n + 1):
            for c in all_paths(n, d):
                groups.setdefault(statistic(c, L), []).append(d)
        for J, ds in groups.items():
            assert ds == list(range(len(J), len(J) + len(ds)))


def test_raise_lower_inverse():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 10)
        d = rng.randint(0, n)
        c = rng.choice(all_paths(n, d))
        L = trivial_lower(n, rng.randint(d, n))
        try:
            r = raise_path(c, L)
        except PathError:
            r = None
        if r is not None:
            assert lower_path(r, L).word == c
            assert statistic(r, L) == statistic(c, L)
        if marking_path(c, L).marked:
            lo = lower_path(c, L)
            assert raise_path(lo, L).word == c


def test_dual_path():
    assert dual_path("en").word == "ne"
    assert dual_path(trivial_lower(5, 2)).word == "nneee"
    M = lpm("enen", "eenn")
    assert dual(M).bases == {fs(3, 4), fs(2, 4)}
    assert dual(M) == lpm(dual_path("eenn"), dual_path("enen"))


def test_composite_bijection():
    assert composite_bijection("enen", "enen", "enen") == dual_path("enen")
    for n in range(1, 8):
        for d in range(n + 1):
            ws = all_paths(n, d)
            for U, L in combinations(ws, 2):
                if not weakly_above(U, L):
                    U, L = L, U
                    if not weakly_above(U, L):
                        continue
                for c in paths_between(U, L):
                    out = composite_bijection(U, L, c)
                    assert statistic(out, dual_path(U)) == statistic(c, L)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
def test_trivial_statistics_agree(arg):
    n, east = arg
    C = path_from_east_set(east, n)
    assert statistic_trivial_scan(C) == hook_placement(C) == statistic(C)
