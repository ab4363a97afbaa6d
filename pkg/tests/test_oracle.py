import random

import pytest
from hypothesis import given, settings, strategies as st

from stdcomplexes.core import PointConfig, reflect
from stdcomplexes.corpus import random_config
from stdcomplexes.matroid import basis_configuration, uniform
from stdcomplexes.oracle import (
    MAX_COORDS,
    EvalMatrix,
    OracleError,
    TermOrder,
    compare,
    monomials_ascending,
    standard_complex,
    standard_monomials,
)
from stdcomplexes.stdcomplex import lex_standard_complex_config

E = frozenset()


def fs(*xs):
    return frozenset(xs)


def test_lex_compare():
    lex = TermOrder("lex", (1, 2, 3))
    assert compare(lex, {1}, {2}) == 1
    assert compare(lex, {2, 3}, {2}) == 1
    assert compare(lex, {3}, {3}) == 0
    assert all(compare(lex, E, m) <= 0 for m in monomials_ascending(lex))


def test_grlex_compare():
    gr = TermOrder("grlex", (1, 2, 3))
    assert compare(gr, {2, 3}, {1}) == 1
    assert compare(gr, {1, 3}, {2, 3}) == 1


def test_unknown_order_and_foreign_support():
    with pytest.raises(OracleError):
        TermOrder("revlex", (1,))
    with pytest.raises(OracleError):
        compare(TermOrder("lex", (1, 2)), {3}, {1})


def test_monomials_ascending_lex():
    assert monomials_ascending(TermOrder("lex", (1, 2))) == [E, fs(2), fs(1), fs(1, 2)]


def test_standard_monomials_examples():
    V = PointConfig((1, 2), [(1, 0), (0, 1)])
    assert standard_monomials(V) == [E, fs(2)]
    W = PointConfig((1, 2, 3), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert standard_monomials(W) == [E, fs(3), fs(2)]
    assert standard_monomials(PointConfig((1, 2), [(1, 1)])) == [E]
    assert standard_monomials(PointConfig((1, 2), [])) == []


def test_standard_complex_matroids():
    assert standard_complex(basis_configuration(uniform(2, 1))) == {E, fs(2)}
    assert standard_complex(basis_configuration(uniform(4, 2))) == {
        E, fs(2), fs(3), fs(4), fs(2, 4), fs(3, 4)
    }


def test_coordinate_cap():
    coords = tuple(range(1, MAX_COORDS + 2))
    V = PointConfig(coords, [tuple([0] * len(coords))])
    with pytest.raises(OracleError):
        standard_monomials(V)


def test_eval_matrix_rank():
    m = EvalMatrix(3)
    assert m.insert([1, 1, 1])
    assert m.insert([0, 1, 2])
    assert not m.insert([2, 3, 4])
    assert m.insert([0, 0, 5])
    assert not m.insert([7, -1, 3])
    assert len(m) == 3


def test_grlex_is_live():
    rng = random.Random(0)
    for _ in range(200):
        V = random_config(rng, 4)
        if standard_complex(V, "lex") != standard_complex(V, "grlex"):
            return
    pytest.fail("no configuration separates lex from grlex")


def test_pruning_does_not_change_result():
    rng = random.Random(1)
    for n in range(1, 7):
        for _ in range(20):
            V = random_config(rng, n)
            for order in ("lex", "grlex"):
                assert standard_monomials(V, order, prune=True) == standard_monomials(V, order, prune=False)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(1, 8), st.sampled_from(["lex", "grlex"]))
def test_random_config_properties(seed, n, order):
    V = random_config(random.Random(seed), n)
    monos = standard_monomials(V, order)
    assert len(monos) == len(V)
    accepted = set(monos)
    assert all(m - {x} in accepted for m in monos for x in m)
    S = standard_complex(V, order)
    for i in V.coords:
        assert standard_complex(reflect(V, i), order) == S
    if order == "lex":
        assert S == lex_standard_complex_config(V)
