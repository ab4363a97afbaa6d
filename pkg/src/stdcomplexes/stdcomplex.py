"""Lexicographic standard complexes by slicing and deletion-contraction.

Lex order throughout is ``x_1 > x_2 > ...``: the smallest label is the
largest variable, so the recursion always splits on the largest label.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import PointConfig, SimplicialComplex, cone, face_key
from .matroid import (
    Matroid,
    MatroidError,
    contract,
    delete,
    is_coloop,
    is_loop,
    max_element,
)

EMPTY = frozenset()
POINT = frozenset((EMPTY,))


def _lex_faces(points: frozenset, last_labels: tuple) -> frozenset:
    if not points:
        return EMPTY
    if len(points) == 1:
        return POINT
    m = last_labels[-1]
    lower = frozenset(p[:-1] for p in points if not p[-1])
    upper = frozenset(p[:-1] for p in points if p[-1])
    s0 = _lex_faces(lower, last_labels[:-1])
    s1 = _lex_faces(upper, last_labels[:-1])
    apex = frozenset((m,))
    return s0 | s1 | frozenset(f | apex for f in s0 & s1)


def lex_standard_complex_config(V: PointConfig) -> SimplicialComplex:
    """Lex standard complex of a 0/1 configuration via the slice recursion."""
    return SimplicialComplex(_lex_faces(V.points, V.coords), V.coords)


class LexCache:
    """Memo of complexes and bijection tables keyed by ``Matroid.key``.

    Values for equal keys are identical, so sharing a cache between calls
    (or threads, last writer wins) never changes a result.
    """

    def __init__(self):
        self.complexes = {}
        self.tables = {}

    def __len__(self):
        return len(self.complexes) + len(self.tables)


def _minors(M: Matroid):
    m = max_element(M)
    return m, delete(M, m), contract(M, m)


def _lex_matroid_faces(M: Matroid, cache: LexCache) -> frozenset:
    key = M.key
    hit = cache.complexes.get(key)
    if hit is not None:
        return hit
    if not M.groundset:
        faces = POINT
    else:
        m, Md, Mc = _minors(M)
        if is_loop(M, m):
            faces = _lex_matroid_faces(Mc, cache)
        elif is_coloop(M, m):
            faces = _lex_matroid_faces(Md, cache)
        else:
            sd = _lex_matroid_faces(Md, cache)
            sc = _lex_matroid_faces(Mc, cache)
            apex = frozenset((m,))
            faces = sd | sc | frozenset(f | apex for f in sd & sc)
    cache.complexes[key] = faces
    return faces


def lex_standard_complex_matroid(M: Matroid, cache: LexCache | None = None) -> SimplicialComplex:
    """Lex standard complex of ``M`` by deletion-contraction on the largest element."""
    if cache is None:
        cache = LexCache()
    return SimplicialComplex(_lex_matroid_faces(M, cache), M.groundset)


class BijectionTable(dict):
    """Map from each basis to its face of the lex standard complex."""

    def image(self) -> frozenset:
        return frozenset(self.values())

    def is_injective(self) -> bool:
        return len(self.image()) == len(self)

    def sorted_items(self) -> list:
        return sorted(self.items(), key=lambda kv: face_key(kv[0]))

    def to_json(self) -> list:
        return [{"basis": sorted(B), "face": sorted(F)} for B, F in self.sorted_items()]


def _lambda(M: Matroid, cache: LexCache) -> dict:
    key = M.key
    hit = cache.tables.get(key)
    if hit is not None:
        return hit
    if not M.groundset:
        table = {EMPTY: EMPTY}
    else:
        m, Md, Mc = _minors(M)
        if is_loop(M, m):
            table = _lambda(Md, cache)
        elif is_coloop(M, m):
            # S_lex(M) = S_lex(M \ m) never uses m, which forces this choice.
            sub = _lambda(Mc, cache)
            table = {B: sub[B - {m}] for B in M.bases}
        else:
            td = _lambda(Md, cache)
            tc = _lambda(Mc, cache)
            deleted_faces = _lex_matroid_faces(Md, cache)
            table = {}
            for B in M.bases:
                if m not in B:
                    table[B] = td[B]
                else:
                    tau = tc[B - {m}]
                    table[B] = tau | {m} if tau in deleted_faces else tau
    cache.tables[key] = table
    return table


def lambda_table(M: Matroid, cache: LexCache | None = None) -> BijectionTable:
    """The unique bijection ``bases(M) -> S_lex(M)`` with ``Λ(B) ⊆ B``."""
    if cache is None:
        cache = LexCache()
    return BijectionTable(_lambda(M, cache))


def lambda_of_basis(M: Matroid, B, cache: LexCache | None = None) -> frozenset:
    """Evaluate the bijection at one basis without building the full table."""
    B = frozenset(B)
    if B not in M.bases:
        raise MatroidError(f"{sorted(B)} is not a basis")
    if cache is None:
        cache = LexCache()
    pending = []
    while M.groundset:
        m, Md, Mc = _minors(M)
        if m not in B:
            M = Md
            continue
        if is_coloop(M, m):
            M, B = Mc, B - {m}
            continue
        # Whether m is kept depends on the value below, so record the
        # deletion complex and decide after descending.
        pending.append((m, Md))
        M, B = Mc, B - {m}
    tau = EMPTY
    for m, Md in reversed(pending):
        if tau in _lex_matroid_faces(Md, cache):
            tau = tau | {m}
    return tau


class MappingCone(NamedTuple):
    apex: int
    deletion: SimplicialComplex
    contraction: SimplicialComplex
    intersection: SimplicialComplex

    def assemble(self) -> SimplicialComplex:
        return self.deletion | self.contraction | cone(self.apex, self.intersection)


def mapping_cone_decomposition(M: Matroid, cache: LexCache | None = None) -> MappingCone:
    """The pieces ``S(M\\m)``, ``S(M/m)`` and their intersection, ``m = max``."""
    m = max_element(M)
    if is_loop(M, m) or is_coloop(M, m):
        raise MatroidError(f"degenerate split: {m} is a loop or coloop")
    if cache is None:
        cache = LexCache()
    sd = lex_standard_complex_matroid(delete(M, m), cache)
    sc = lex_standard_complex_matroid(contract(M, m), cache)
    return MappingCone(m, sd, sc, sd & sc)
