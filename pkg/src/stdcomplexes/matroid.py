"""Matroids given by an explicit list of bases."""

from __future__ import annotations

import random
from itertools import combinations

from .core import PointConfig, SimplicialComplex, face, face_key


class MatroidError(ValueError):
    pass


def _canonical_bases(bases) -> frozenset:
    return frozenset(frozenset(B) for B in bases)


class Matroid:
    """A matroid on an explicit groundset of positive integer labels.

    ``validate=False`` skips the exchange-axiom check; use it only for
    families that are valid by construction (uniform, lattice path).
    """

    __slots__ = ("groundset", "rank", "bases", "_key", "_hash")

    def __init__(self, groundset, bases, validate: bool = True):
        self.groundset = tuple(sorted(face(groundset)))
        self.bases = _canonical_bases(bases)
        if not self.bases:
            raise MatroidError("a matroid needs at least one basis")
        sizes = {len(B) for B in self.bases}
        if len(sizes) != 1:
            raise MatroidError(f"bases have unequal cardinalities {sorted(sizes)}")
        self.rank = sizes.pop()
        ground = set(self.groundset)
        for B in self.bases:
            if not B <= ground:
                raise MatroidError(f"basis {sorted(B)} is not a subset of the groundset")
        self._key = None
        self._hash = None
        if validate:
            witness = exchange_violation(self.bases)
            if witness is not None:
                B1, B2, x = witness
                raise MatroidError(
                    f"basis exchange fails for B1={sorted(B1)}, B2={sorted(B2)}, x={x}"
                )

    @property
    def key(self) -> tuple:
        """Hashable canonical value; equal matroids have equal keys."""
        if self._key is None:
            self._key = (self.groundset, self.bases)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.groundset == other.groundset and self.bases == other.bases

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __repr__(self):
        return (
            f"Matroid(groundset={list(self.groundset)}, rank={self.rank}, "
            f"bases={len(self.bases)})"
        )

    def sorted_bases(self) -> list:
        return sorted(self.bases, key=face_key)

    def is_independent(self, S) -> bool:
        S = frozenset(S)
        return any(S <= B for B in self.bases)

    def to_json(self) -> dict:
        return {
            "type": "bases",
            "groundset": list(self.groundset),
            "bases": [sorted(B) for B in self.sorted_bases()],
        }


def exchange_violation(bases):
    """A triple ``(B1, B2, x)`` violating basis exchange, or None."""
    bases = _canonical_bases(bases)
    for B1 in bases:
        for B2 in bases:
            if B1 is B2:
                continue
            for x in B1 - B2:
                rest = B1 - {x}
                if not any(rest | {y} in bases for y in B2 - B1):
                    return B1, B2, x
    return None


def from_bases(groundset, bases, validate: bool = True) -> Matroid:
    return Matroid(groundset, bases, validate=validate)


def uniform(n: int, r: int, first_label: int = 1) -> Matroid:
    """``U_{r,n}`` on ``first_label, ..., first_label + n - 1``."""
    if n < 0 or r < 0 or r > n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    if first_label < 1:
        raise MatroidError("labels start at 1 or above")
    ground = range(first_label, first_label + n)
    return Matroid(ground, (frozenset(c) for c in combinations(ground, r)), validate=False)


def _max_matching(elements, set_system) -> int:
    """Size of a maximum matching of ``elements`` into the sets (Kuhn's algorithm)."""
    owner = {}  # set index -> matched element

    def augment(e, seen):
        for j, S in enumerate(set_system):
            if e in S and j not in seen:
                seen.add(j)
                if j not in owner or augment(owner[j], seen):
                    owner[j] = e
                    return True
        return False

    return sum(1 for e in elements if augment(e, set()))


def transversal(set_system, groundset=None) -> Matroid:
    """Transversal matroid: bases are the maximum partial transversals."""
    system = [frozenset(S) for S in set_system]
    ground = face(groundset if groundset is not None else set().union(*system) if system else ())
    for S in system:
        if not S <= ground:
            raise MatroidError(f"set {sorted(S)} is not within the groundset")
    r = _max_matching(sorted(ground), system)
    bases = [
        frozenset(c)
        for c in combinations(sorted(ground), r)
        if _max_matching(c, system) == r
    ]
    return Matroid(ground, bases, validate=False)


def random_transversal(rng: random.Random, n: int, n_sets: int | None = None, p: float = 0.4) -> Matroid:
    """Seeded transversal matroid on ``[n]`` from a random set system."""
    if n_sets is None:
        n_sets = rng.randint(1, max(1, n))
    system = [frozenset(e for e in range(1, n + 1) if rng.random() < p) for _ in range(n_sets)]
    return transversal(system, groundset=range(1, n + 1))


def max_element(M: Matroid) -> int:
    if not M.groundset:
        raise MatroidError("empty groundset has no largest element")
    return M.groundset[-1]


def _check_element(M: Matroid, e: int):
    if e not in M.groundset:
        raise MatroidError(f"{e} is not in the groundset")


def is_loop(M: Matroid, e: int) -> bool:
    _check_element(M, e)
    return all(e not in B for B in M.bases)


def is_coloop(M: Matroid, e: int) -> bool:
    _check_element(M, e)
    return all(e in B for B in M.bases)


def delete(M: Matroid, e: int) -> Matroid:
    """``M \\ e``; deleting a coloop is the same as contracting it."""
    _check_element(M, e)
    ground = [x for x in M.groundset if x != e]
    kept = [B for B in M.bases if e not in B]
    if not kept:
        kept = [B - {e} for B in M.bases]
    return Matroid(ground, kept, validate=False)


def contract(M: Matroid, e: int) -> Matroid:
    """``M / e``; contracting a loop is the same as deleting it."""
    _check_element(M, e)
    ground = [x for x in M.groundset if x != e]
    kept = [B - {e} for B in M.bases if e in B]
    if not kept:
        kept = list(M.bases)
    return Matroid(ground, kept, validate=False)


def dual(M: Matroid) -> Matroid:
    ground = frozenset(M.groundset)
    return Matroid(ground, (ground - B for B in M.bases), validate=False)


def circuits(M: Matroid) -> frozenset:
    """Inclusion-minimal dependent sets, searched by size up to ``rank + 1``."""
    found = []
    for k in range(1, M.rank + 2):
        for c in combinations(M.groundset, k):
            C = frozenset(c)
            if any(D <= C for D in found):
                continue
            if not M.is_independent(C):
                found.append(C)
    return frozenset(found)


def independence_complex(M: Matroid) -> SimplicialComplex:
    faces = set()
    for B in M.bases:
        items = sorted(B)
        for k in range(len(items) + 1):
            faces.update(frozenset(c) for c in combinations(items, k))
    return SimplicialComplex(frozenset(faces), M.groundset)


def basis_configuration(M: Matroid) -> PointConfig:
    """Characteristic vectors of the bases."""
    return PointConfig.from_supports(M.groundset, M.bases)


def generators_vanish(V: PointConfig, rank: int, circuit_list) -> bool:
    """Evaluate ``x_i^2 - x_i``, ``sum(x) - rank`` and ``x^C`` on every point.

    A sanity check that the generators vanish, not an ideal-membership test.
    """
    index = {c: k for k, c in enumerate(V.coords)}
    for p in V.points:
        if any(b * b - b for b in p):
            return False
        if sum(p) != rank:
            return False
        for C in circuit_list:
            if all(p[index[c]] for c in C):
                return False
    return True


def verify_vanishing_generators(M: Matroid) -> bool:
    return generators_vanish(basis_configuration(M), M.rank, circuits(M))


def matroid_from_descriptor(desc: dict, validate: bool = True) -> Matroid:
    """Build a matroid from a JSON descriptor (see README for the formats)."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise MatroidError("descriptor must be an object with a 'type' field")
    kind = desc["type"]
    try:
        if kind == "bases":
            return Matroid(desc["groundset"], desc["bases"], validate=validate)
        if kind == "uniform":
            return uniform(int(desc["n"]), int(desc["r"]), int(desc.get("first_label", 1)))
        if kind == "transversal":
            return transversal(desc["sets"], desc.get("groundset"))
        if kind == "lattice_path":
            from .latpath import lpm, parse_path

            return lpm(parse_path(desc["U"]), parse_path(desc["L"]))
    except KeyError as exc:
        raise MatroidError(f"descriptor of type {kind!r} is missing {exc}") from None
    raise MatroidError(f"unknown descriptor type {kind!r}")
