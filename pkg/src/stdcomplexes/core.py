"""Simplicial complexes on labeled finite sets, plus 0/1 point configurations.

Faces are plain ``frozenset`` objects of positive integer labels.  Labels are
not required to be ``1..n``; every coordinate-indexed structure carries its
own sorted label list so that deletion and contraction keep labels stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Face = frozenset


class ComplexError(ValueError):
    pass


def face(labels: Iterable[int] = ()) -> frozenset:
    """Validated face: a frozenset of positive integer labels."""
    f = frozenset(labels)
    for x in f:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ComplexError(f"labels must be positive integers, got {x!r}")
    return f


def face_key(f) -> tuple:
    """Canonical sort key: cardinality first, then ascending labels."""
    return (len(f), tuple(sorted(f)))


def format_face(f) -> str:
    return "{" + ",".join(str(x) for x in sorted(f)) + "}"


def parse_face(text: str) -> frozenset:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ComplexError(f"malformed face {text!r}")
    body = body[1:-1].strip()
    if not body:
        return frozenset()
    return face(int(tok) for tok in body.split(","))


def _is_closed(faces: frozenset) -> bool:
    for f in faces:
        for x in f:
            if f - {x} not in faces:
                return False
    return True


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of faces.

    The empty family (no faces at all) is distinct from ``{∅}``, the complex
    consisting of the empty face only.
    """

    faces: frozenset
    vertex_labels: tuple = None

    def __post_init__(self):
        faces = frozenset(frozenset(f) for f in self.faces)
        if not _is_closed(faces):
            raise ComplexError("face family is not downward-closed")
        object.__setattr__(self, "faces", faces)
        used = sorted(set().union(*faces)) if faces else []
        if self.vertex_labels is None:
            object.__setattr__(self, "vertex_labels", tuple(used))
        else:
            labels = tuple(sorted(set(self.vertex_labels)))
            if not set(used) <= set(labels):
                raise ComplexError("face uses a label outside vertex_labels")
            object.__setattr__(self, "vertex_labels", labels)

    def __eq__(self, other):
        if isinstance(other, SimplicialComplex):
            return self.faces == other.faces
        if isinstance(other, (set, frozenset)):
            return self.faces == frozenset(frozenset(f) for f in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.faces)

    def __len__(self):
        return len(self.faces)

    def __iter__(self) -> Iterator[frozenset]:
        return iter(self.sorted_faces())

    def __contains__(self, f):
        return frozenset(f) in self.faces

    def __or__(self, other):
        return complex_union(self, other)

    def __and__(self, other):
        return complex_intersection(self, other)

    def __le__(self, other):
        return self.faces <= other.faces

    def __repr__(self):
        return f"SimplicialComplex({format_complex(self)})"

    @property
    def vertices(self) -> frozenset:
        return frozenset(x for f in self.faces if len(f) == 1 for x in f)

    def facets(self) -> list:
        fs = [f for f in self.faces if not any(f < g for g in self.faces)]
        return sorted(fs, key=face_key)

    def sorted_faces(self) -> list:
        return sorted(self.faces, key=face_key)

    def is_closed(self) -> bool:
        return _is_closed(self.faces)


def make_complex(faces: Iterable[Iterable[int]] = (), vertex_labels=None) -> SimplicialComplex:
    """Downward closure of a family of faces."""
    closed = set()
    stack = [face(f) for f in faces]
    while stack:
        f = stack.pop()
        if f in closed:
            continue
        closed.add(f)
        stack.extend(f - {x} for x in f)
    return SimplicialComplex(frozenset(closed), vertex_labels)


def cone(apex: int, K: SimplicialComplex) -> SimplicialComplex:
    """``K ∪ {apex ∪ σ : σ ∈ K}``."""
    if apex in K.vertices:
        raise ComplexError(f"apex collision: {apex} is already a vertex")
    apex_face = frozenset((apex,))
    faces = K.faces | frozenset(f | apex_face for f in K.faces)
    labels = tuple(K.vertex_labels) + ((apex,) if K.faces else ())
    return SimplicialComplex(faces, labels)


def complex_union(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    labels = set(A.vertex_labels) | set(B.vertex_labels)
    return SimplicialComplex(A.faces | B.faces, tuple(labels))


def complex_intersection(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    faces = A.faces & B.faces
    used = set().union(*faces) if faces else set()
    labels = (set(A.vertex_labels) & set(B.vertex_labels)) | used
    return SimplicialComplex(faces, tuple(labels))


def f_vector(K: SimplicialComplex) -> list:
    """Entry ``k`` counts faces with ``k`` elements; ``[]`` for the empty family."""
    if not K.faces:
        return []
    counts = [0] * (max(len(f) for f in K.faces) + 1)
    for f in K.faces:
        counts[len(f)] += 1
    return counts


def format_complex(K: SimplicialComplex) -> str:
    return "{" + ", ".join(format_face(f) for f in K.sorted_faces()) + "}"


def complex_to_json(K: SimplicialComplex) -> list:
    return [sorted(f) for f in K.sorted_faces()]


@dataclass(frozen=True)
class PointConfig:
    """A finite set of 0/1 vectors indexed by an increasing list of labels."""

    coords: tuple
    points: frozenset

    def __post_init__(self):
        coords = tuple(self.coords)
        if any(b <= a for a, b in zip(coords, coords[1:])):
            raise ComplexError("coords must be strictly increasing")
        if any(not isinstance(c, int) or c < 1 for c in coords):
            raise ComplexError("coords must be positive integer labels")
        points = list(self.points)
        pts = frozenset(tuple(int(b) for b in p) for p in points)
        if len(pts) != len(points):
            raise ComplexError("duplicate points")
        for p in pts:
            if len(p) != len(coords):
                raise ComplexError(f"point {p} does not match {len(coords)} coordinates")
            if any(b not in (0, 1) for b in p):
                raise ComplexError(f"point {p} is not a 0/1 vector")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def supports(self) -> set:
        """Each point as the set of coordinate labels where it is 1."""
        return {frozenset(c for c, b in zip(self.coords, p) if b) for p in self.points}

    @classmethod
    def from_supports(cls, coords, supports) -> "PointConfig":
        coords = tuple(sorted(coords))
        pts = []
        for s in supports:
            s = frozenset(s)
            if not s <= set(coords):
                raise ComplexError(f"support {sorted(s)} not within coordinates")
            pts.append(tuple(1 if c in s else 0 for c in coords))
        return cls(coords, pts)

    def to_json(self) -> dict:
        return {"coords": list(self.coords), "points": [list(p) for p in sorted(self.points)]}

    @classmethod
    def from_json(cls, obj: dict) -> "PointConfig":
        return cls(tuple(obj["coords"]), [tuple(p) for p in obj["points"]])


def slice_config(V: PointConfig, a: int) -> PointConfig:
    """Points whose last coordinate (largest label) equals ``a``, with that coordinate dropped."""
    if not V.coords:
        raise ComplexError("cannot slice a configuration without coordinates")
    if a not in (0, 1):
        raise ComplexError("slice value must be 0 or 1")
    return PointConfig(V.coords[:-1], [p[:-1] for p in V.points if p[-1] == a])


def reflect(V: PointConfig, i: int) -> PointConfig:
    """Flip coordinate ``i`` in every point."""
    try:
        k = V.coords.index(i)
    except ValueError:
        raise ComplexError(f"{i} is not a coordinate") from None
    return PointConfig(V.coords, [p[:k] + (1 - p[k],) + p[k + 1:] for p in V.points])
