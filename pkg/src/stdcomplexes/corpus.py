"""Test corpora and the invariant checks run over them.

Each ``check_*`` function returns a list of counterexample strings; an empty
list means the invariant held on every instance it was given.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import PointConfig, format_face, reflect
from .latpath import (
    LatticePath,
    all_paths,
    boundary_pairs,
    hook_placement,
    lpm,
    marking_path,
    paths_between,
    statistic,
    statistic_trivial_scan,
    trivial_lower,
    truncate_last,
    prefix_above,
)
from .matroid import (
    Matroid,
    MatroidError,
    basis_configuration,
    contract,
    delete,
    dual,
    exchange_violation,
    independence_complex,
    is_coloop,
    is_loop,
    matroid_from_descriptor,
    max_element,
    random_transversal,
    uniform,
    verify_vanishing_generators,
)
from .oracle import MAX_COORDS, standard_complex
from .stdcomplex import (
    LexCache,
    lambda_of_basis,
    lambda_table,
    lex_standard_complex_config,
    lex_standard_complex_matroid,
    mapping_cone_decomposition,
)

MAX_LPM_N = 12


class ResourceLimit(RuntimeError):
    pass


@dataclass
class CorpusSpec:
    """Generator families plus closure under duals and single-element minors."""

    families: list = field(
        default_factory=lambda: [
            {"family": "uniform", "max_n": 7},
            {"family": "lattice_path", "max_n": 8},
            {"family": "transversal", "count": 50, "max_n": 8, "seed": 0},
        ]
    )
    duals: bool = True
    minor_depth: int = 1

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusSpec":
        spec = cls()
        if "families" in obj:
            spec.families = list(obj["families"])
        spec.duals = bool(obj.get("duals", spec.duals))
        spec.minor_depth = int(obj.get("minor_depth", spec.minor_depth))
        return spec

    def max_n(self) -> int:
        out = 0
        for fam in self.families:
            if "max_n" in fam:
                out = max(out, int(fam["max_n"]))
        return out


@dataclass
class Corpus:
    matroids: list  # (name, Matroid), deterministic order
    invalid: list  # (name, error message)

    def __len__(self):
        return len(self.matroids)


def _family(fam: dict):
    kind = fam.get("family")
    if kind == "uniform":
        for n in range(int(fam.get("min_n", 0)), int(fam["max_n"]) + 1):
            for r in range(n + 1):
                yield f"U({r},{n})", uniform(n, r)
    elif kind == "lattice_path":
        for n in range(int(fam.get("min_n", 0)), int(fam["max_n"]) + 1):
            for u, l in boundary_pairs(n):
                yield f"M[{u},{l}]", lpm(u, l)
    elif kind == "transversal":
        rng = random.Random(int(fam.get("seed", 0)))
        max_n = int(fam["max_n"])
        for k in range(int(fam["count"])):
            n = rng.randint(1, max_n)
            yield f"T{k}(n={n})", random_transversal(rng, n)
    elif kind == "explicit":
        desc = fam["descriptor"]
        yield fam.get("name", f"explicit:{desc.get('type')}"), matroid_from_descriptor(desc)
    else:
        raise ValueError(f"unknown corpus family {kind!r}")


def build_corpus(spec: CorpusSpec | None = None) -> Corpus:
    """Generate, validate, close under duals/minors and deduplicate."""
    spec = spec or CorpusSpec()
    seen = {}
    invalid = []
    for fam in spec.families:
        gen = _family(fam)
        while True:
            try:
                name, M = next(gen)
            except StopIteration:
                break
            except MatroidError as exc:
                invalid.append((fam.get("name", fam.get("family")), str(exc)))
                break
            seen.setdefault(M.key, (name, M))
    frontier = list(seen.values())
    if spec.duals:
        for name, M in frontier:
            D = dual(M)
            seen.setdefault(D.key, (f"dual({name})", D))
    frontier = list(seen.values())
    for _ in range(spec.minor_depth):
        nxt = []
        for name, M in frontier:
            for e in M.groundset:
                for op, X in (("del", delete(M, e)), ("con", contract(M, e))):
                    if X.key not in seen:
                        seen[X.key] = (f"{op}({name},{e})", X)
                        nxt.append(seen[X.key])
        frontier = nxt
    items = sorted(seen.values(), key=lambda t: (len(t[1].groundset), len(t[1].bases), t[0]))
    return Corpus(items, invalid)


def _fmt(M: Matroid) -> str:
    return f"groundset={list(M.groundset)} bases={[sorted(B) for B in M.sorted_bases()]}"


# -- matroid-level checks ---------------------------------------------------------


def check_oracle_equivalence(matroids, cache=None) -> list:
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        if len(M.groundset) > MAX_COORDS:
            raise ResourceLimit(f"{name} has more than {MAX_COORDS} elements")
        rec = lex_standard_complex_matroid(M, cache)
        orc = standard_complex(basis_configuration(M), "lex")
        if rec != orc:
            bad.append(f"{name}: recursion {rec} != oracle {orc}; {_fmt(M)}")
    return bad


def check_config_agreement(matroids, cache=None) -> list:
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        a = lex_standard_complex_matroid(M, cache)
        b = lex_standard_complex_config(basis_configuration(M))
        if a != b:
            bad.append(f"{name}: matroid recursion {a} != slice recursion {b}")
    return bad


def check_cardinality_subcomplex(matroids, cache=None) -> list:
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        S = lex_standard_complex_matroid(M, cache)
        if len(S) != len(M.bases):
            bad.append(f"{name}: |S_lex|={len(S)} but |bases|={len(M.bases)}")
        elif not S <= independence_complex(M):
            bad.append(f"{name}: S_lex is not inside the independence complex")
    return bad


def check_duality(matroids, cache=None) -> list:
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        if lex_standard_complex_matroid(M, cache) != lex_standard_complex_matroid(dual(M), cache):
            bad.append(f"{name}: S_lex(M) != S_lex(M*)")
    return bad


def check_lambda_axioms(matroids, cache=None) -> list:
    """Λ(B) ⊆ B, bijectivity onto S_lex and both restriction identities."""
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        T = lambda_table(M, cache)
        S = lex_standard_complex_matroid(M, cache)
        if not T.is_injective() or T.image() != S.faces:
            bad.append(f"{name}: Λ is not a bijection onto S_lex")
            continue
        if not M.groundset:
            continue
        m = max_element(M)
        Td = lambda_table(delete(M, m), cache)
        Tc = lambda_table(contract(M, m), cache)
        for B, F in T.items():
            if not F <= B:
                bad.append(f"{name}: Λ({format_face(B)})={format_face(F)} not a subset")
            elif m not in B and F != Td[B]:
                bad.append(f"{name}: deletion identity fails at {format_face(B)}")
            elif m in B and F - {m} != Tc[B - {m}]:
                bad.append(f"{name}: contraction identity fails at {format_face(B)}")
    return bad


def check_pointwise_lambda(matroids, cache=None, limit: int = 8) -> list:
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        T = lambda_table(M, cache)
        for B in M.sorted_bases()[:limit]:
            if lambda_of_basis(M, B, cache) != T[B]:
                bad.append(f"{name}: pointwise Λ differs at {format_face(B)}")
    return bad


def check_mapping_cone(matroids, cache=None) -> list:
    cache = LexCache() if cache is None else cache
    bad = []
    for name, M in matroids:
        if not M.groundset:
            continue
        m = max_element(M)
        if is_loop(M, m) or is_coloop(M, m):
            continue
        if mapping_cone_decomposition(M, cache).assemble() != lex_standard_complex_matroid(M, cache):
            bad.append(f"{name}: mapping cone assembly differs from S_lex")
    return bad


def check_exchange(matroids) -> list:
    """Re-validate the exchange axiom on instances built without it."""
    bad = []
    for name, M in matroids:
        w = exchange_violation(M.bases)
        if w is not None:
            B1, B2, x = w
            bad.append(f"{name}: exchange fails for {format_face(B1)}, {format_face(B2)}, x={x}")
    return bad


def check_vanishing(matroids) -> list:
    return [f"{name}: generators do not vanish" for name, M in matroids if not verify_vanishing_generators(M)]


# -- configuration-level checks ---------------------------------------------------


def random_config(rng: random.Random, n: int, max_points: int = 64) -> PointConfig:
    size = rng.randint(1, min(2 ** n, max_points))
    pts = set()
    while len(pts) < size:
        pts.add(tuple(rng.randint(0, 1) for _ in range(n)))
    return PointConfig(tuple(range(1, n + 1)), pts)


def check_reflection(seed: int, ns=range(2, 11), per_n: int = 200, order: str = "lex") -> list:
    rng = random.Random(seed)
    bad = []
    for n in ns:
        for k in range(per_n):
            V = random_config(rng, n)
            base = standard_complex(V, order)
            for i in V.coords:
                W = reflect(V, i)
                if standard_complex(W, order) != base:
                    bad.append(f"n={n} #{k}: oracle differs after reflecting {i}: {V.to_json()}")
                elif order == "lex" and lex_standard_complex_config(W) != base:
                    bad.append(f"n={n} #{k}: recursion differs after reflecting {i}: {V.to_json()}")
    return bad


def check_random_config_oracle(seed: int, ns=range(1, 11), per_n: int = 200) -> list:
    rng = random.Random(seed)
    bad = []
    for n in ns:
        for k in range(per_n):
            V = random_config(rng, n)
            if standard_complex(V, "lex") != lex_standard_complex_config(V):
                bad.append(f"n={n} #{k}: oracle != recursion on {V.to_json()}")
    return bad


# -- lattice-path checks -------------------------------------------------------------


def _limit(n: int):
    if n > MAX_LPM_N:
        raise ResourceLimit(f"exhaustive lattice path sweeps are capped at n={MAX_LPM_N}")


def check_statistic_lambda(max_n: int, cache=None) -> list:
    """``st_L(C) = Λ(E(C))`` for every boundary pair and every path between."""
    _limit(max_n)
    cache = LexCache() if cache is None else cache
    bad = []
    for n in range(max_n + 1):
        for u, l in boundary_pairs(n):
            T = lambda_table(lpm(u, l), cache)
            for c in paths_between(u, l):
                C = LatticePath(c)
                st = statistic(C, l)
                if st != T[C.east_set]:
                    bad.append(f"U={u} L={l} C={c}: st={format_face(st)} Λ={format_face(T[C.east_set])}")
    return bad


def check_hooks(max_n: int) -> list:
    """Scan, hooks and the general marking path at the trivial boundary agree."""
    _limit(max_n)
    bad = []
    for n in range(max_n + 1):
        for d in range(n + 1):
            L = trivial_lower(n, d)
            for c in all_paths(n, d):
                a = statistic_trivial_scan(c)
                b = hook_placement(c)
                g = statistic(c, L)
                if not a == b == g:
                    bad.append(f"C={c}: scan={format_face(a)} hooks={format_face(b)} marking={format_face(g)}")
    return bad


def random_chain(rng: random.Random, max_n: int):
    """Random ``(U, U', L)`` with ``U`` above ``U'`` above ``L``."""
    n = rng.randint(1, max_n)
    d = rng.randint(0, n)
    paths = all_paths(n, d)
    l = rng.choice(paths)
    mid = rng.choice([p for p in paths if prefix_above(p, l)])
    u = rng.choice([p for p in paths if prefix_above(p, mid)])
    return u, mid, l


def check_restriction(seed: int, count: int, max_n: int, cache=None) -> list:
    _limit(max_n)
    cache = LexCache() if cache is None else cache
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        u, mid, l = random_chain(rng, max_n)
        big = lambda_table(lpm(u, l), cache)
        small = lambda_table(lpm(mid, l), cache)
        if any(big[B] != F for B, F in small.items()):
            bad.append(f"U={u} U'={mid} L={l}: Λ on M[U',L] is not the restriction")
        if not small.image() <= big.image():
            bad.append(f"U={u} U'={mid} L={l}: S_lex[U',L] not inside S_lex[U,L]")
    return bad


def statistic_family(u: str, l: str) -> frozenset:
    return frozenset(statistic(c, l) for c in paths_between(u, l))


def decomposition_pieces(u: str, l: str):
    """``(S, S^e, S^n)`` computed from statistics alone."""
    S = statistic_family(u, l)
    Se = Sn = frozenset()
    if u and u[-1] == "e":
        Se = statistic_family(truncate_last(u, "e"), truncate_last(l, "e"))
    if l and l[-1] == "n":
        Sn = statistic_family(truncate_last(u, "n"), truncate_last(l, "n"))
    return S, Se, Sn


def check_decomposition(max_n: int) -> list:
    _limit(max_n)
    bad = []
    for n in range(1, max_n + 1):
        for u, l in boundary_pairs(n):
            S, Se, Sn = decomposition_pieces(u, l)
            both = Se & Sn
            rhs = Se | Sn | both | frozenset(f | {n} for f in both)
            if S != rhs:
                bad.append(f"U={u} L={l}: statistic decomposition fails")
    return bad


def check_last_step_trivial(max_n: int) -> list:
    """At the trivial boundary, ``n ∈ st(C)`` iff ``C`` ends in ``e`` and the
    truncated path has at least ``2d - n`` marked east steps."""
    _limit(max_n)
    bad = []
    for n in range(1, max_n + 1):
        for d in range(n + 1):
            for c in all_paths(n, d):
                lhs = n in statistic_trivial_scan(c)
                rhs = False
                if c[-1] == "e":
                    trunc = c[:-1]
                    marked = (d - 1) - len(statistic_trivial_scan(trunc))
                    rhs = marked >= 2 * d - n
                if lhs != rhs:
                    bad.append(f"C={c}: n in st is {lhs}, diagonal criterion is {rhs}")
    return bad


def check_marking_conflicts(max_n: int) -> list:
    """Exercise every marking path; a squeeze raises ``MarkingConflict``."""
    _limit(max_n)
    for n in range(max_n + 1):
        for u, l in boundary_pairs(n):
            for c in paths_between(u, l):
                marking_path(c, l)
    return []
