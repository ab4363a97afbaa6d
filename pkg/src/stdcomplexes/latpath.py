"""Lattice path matroids and the marking-path statistic.

Paths are words over ``e`` (east, ``(1,0)``) and ``n`` (north, ``(0,1)``);
positions are 1-based.  A path ``C`` with ``n`` letters and ``d`` east steps
runs from ``(0,0)`` to ``(d, n-d)`` and is identified with its east set
``E(C)``.  ``U`` weakly above ``L`` means every prefix of ``L`` has at least
as many east steps as the same prefix of ``U``.

The statistic ``st_L(C)`` is the set of east steps of ``C`` that are *not*
shared with the ``L``-marking path.  The marking path starts at the origin
and takes diagonal steps ``d`` whenever it can do so without rising above
``C`` or sinking below the demarcation path; otherwise it steps east (when
``C`` is in the way) or north (when the demarcation path is).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .matroid import Matroid

EPS = "ε"


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class LatticePath:
    word: str

    def __post_init__(self):
        w = "".join(self.word.split()).lower()
        bad = set(w) - {"e", "n"}
        if bad:
            raise PathError(f"illegal step(s) {sorted(bad)} in path {self.word!r}")
        object.__setattr__(self, "word", w)

    def __str__(self):
        return self.word

    def __len__(self):
        return len(self.word)

    @property
    def n_total(self) -> int:
        return len(self.word)

    @cached_property
    def d(self) -> int:
        return self.word.count("e")

    @cached_property
    def east_set(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.word, 1) if s == "e")

    def east_positions(self) -> tuple:
        return tuple(sorted(self.east_set))

    @property
    def endpoint(self) -> tuple:
        return (self.d, len(self.word) - self.d)

    def points(self) -> list:
        return _points(self.word)


def parse_path(word) -> LatticePath:
    if isinstance(word, LatticePath):
        return word
    return LatticePath(word)


def path_from_east_set(east, n: int) -> LatticePath:
    east = set(east)
    if any(not 1 <= j <= n for j in east):
        raise PathError(f"east positions {sorted(east)} not within 1..{n}")
    return LatticePath("".join("e" if i in east else "n" for i in range(1, n + 1)))


def trivial_lower(n: int, d: int) -> LatticePath:
    """``e^d n^(n-d)``, the lowest path in ``L(n, d)``."""
    return LatticePath("e" * d + "n" * (n - d))


def trivial_upper(n: int, d: int) -> LatticePath:
    return LatticePath("n" * (n - d) + "e" * d)


def dual_path(C) -> LatticePath:
    """Swap every east and north step."""
    C = parse_path(C)
    return LatticePath(C.word.translate(str.maketrans("en", "ne")))


def _points(word: str) -> list:
    x = y = 0
    pts = [(0, 0)]
    for s in word:
        if s == "e":
            x += 1
        elif s == "n":
            y += 1
        elif s == "d":
            x += 1
            y += 1
        else:
            continue
        pts.append((x, y))
    return pts


def prefix_above(upper: str, lower: str) -> bool:
    """Every prefix of ``lower`` has at least as many ``e`` as that of ``upper``."""
    eu = el = 0
    for a, b in zip(upper, lower):
        eu += a == "e"
        el += b == "e"
        if eu > el:
            return False
    return True


def weakly_above(U, L) -> bool:
    """``E(L) <= E(U)`` componentwise, for two paths of the same shape."""
    U, L = parse_path(U), parse_path(L)
    if len(U) != len(L) or U.d != L.d:
        raise PathError(f"shape mismatch: ({len(U)},{U.d}) vs ({len(L)},{L.d})")
    return all(l <= u for l, u in zip(L.east_positions(), U.east_positions()))


def is_weakly_above_lower(C, L) -> bool:
    """Generalised comparison: ``C`` may have fewer east steps than ``L``."""
    C, L = parse_path(C), parse_path(L)
    if len(C) != len(L):
        raise PathError("paths have different lengths")
    return C.d <= L.d and prefix_above(C.word, L.word)


def _extend(c: str, l: str):
    k = l.count("e") - c.count("e")
    return c + "e" * k, l + "n" * k


def _checked_pair(C, L):
    C, L = parse_path(C), parse_path(L)
    if not is_weakly_above_lower(C, L):
        raise PathError(f"{C.word} is not weakly above {L.word}")
    return C, L


# -- lattice path matroids ---------------------------------------------------


def paths_between(U, L):
    """All paths weakly between ``U`` (upper) and ``L`` (lower), as words."""
    U, L = parse_path(U), parse_path(L)
    if not weakly_above(U, L):
        raise PathError(f"{U.word} is not weakly above {L.word}")
    n = len(U)
    eu = [0] * (n + 1)
    el = [0] * (n + 1)
    for i in range(n):
        eu[i + 1] = eu[i] + (U.word[i] == "e")
        el[i + 1] = el[i] + (L.word[i] == "e")
    out = []

    def walk(i, e, prefix):
        if i == n:
            out.append("".join(prefix))
            return
        if eu[i + 1] <= e + 1 <= el[i + 1]:
            prefix.append("e")
            walk(i + 1, e + 1, prefix)
            prefix.pop()
        if eu[i + 1] <= e <= el[i + 1]:
            prefix.append("n")
            walk(i + 1, e, prefix)
            prefix.pop()

    walk(0, 0, [])
    return out


def all_paths(n: int, d: int) -> list:
    return [
        "".join("e" if i in c else "n" for i in range(n))
        for c in map(set, combinations(range(n), d))
    ]


def boundary_pairs(n: int):
    """Every ``(U, L)`` of length ``n`` with ``U`` weakly above ``L``, as words."""
    for d in range(n + 1):
        paths = all_paths(n, d)
        for u in paths:
            for l in paths:
                if prefix_above(u, l):
                    yield u, l


def lpm(U, L) -> Matroid:
    """Lattice path matroid ``M[U, L]`` on ``[n]``."""
    U, L = parse_path(U), parse_path(L)
    bases = [frozenset(i for i, s in enumerate(w, 1) if s == "e") for w in paths_between(U, L)]
    return Matroid(range(1, len(U) + 1), bases, validate=False)


# -- the trivial-lower-boundary statistic ---------------------------------------


def statistic_trivial_scan(C) -> frozenset:
    """Left-to-right scan: an east step is marked when the number of norths
    before it equals the number of unmarked easts before it."""
    C = parse_path(C)
    norths = unmarked = 0
    out = []
    for i, s in enumerate(C.word, 1):
        if s == "n":
            norths += 1
        elif norths == unmarked:
            continue
        else:
            unmarked += 1
            out.append(i)
    return frozenset(out)


def hook_placement(C) -> frozenset:
    """Columns receiving a hook corner, reported as east positions.

    Column ``c`` has ``h_c`` boxes below ``C``; its corner goes in the
    highest row not already taken by the east arm of an earlier hook.
    """
    C = parse_path(C)
    used = set()
    norths = 0
    out = []
    for i, s in enumerate(C.word, 1):
        if s == "n":
            norths += 1
            continue
        row = norths
        while row in used:
            row -= 1
        if row >= 1:
            used.add(row)
            out.append(i)
    return frozenset(out)


def trivial_marking_path(C) -> str:
    """Marking path for the trivial lower boundary: ``e``/``d`` steps only,
    one per east step of ``C``."""
    C = parse_path(C)
    heights = _column_heights(C.word)
    y = 0
    word = []
    for h in heights:
        if y + 1 <= h:
            word.append("d")
            y += 1
        else:
            word.append("e")
    return "".join(word)


# -- demarcation and marking paths -------------------------------------------------


@dataclass(frozen=True)
class DemarcationPath:
    """One letter per position of the (extended) pair ``(C, L)``."""

    word: tuple

    def __str__(self):
        return " ".join(self.word)

    def points(self) -> list:
        return _points(self.word)


@dataclass(frozen=True)
class MarkingPath:
    """Marking path of ``C`` relative to a lower boundary.

    ``marked`` holds the positions of ``C`` (within the original length)
    whose east step is also an east step of this path.
    """

    word: str
    marked: frozenset
    endpoint: tuple

    def __str__(self):
        return " ".join(self.word)

    def points(self) -> list:
        return _points(self.word)


_DEM = {("n", "n"): "n", ("e", "e"): "e", ("n", "e"): "d", ("e", "n"): EPS}


def _dem_word(c: str, l: str) -> tuple:
    return tuple(_DEM[a, b] for a, b in zip(c, l))


def demarcation(C, L) -> DemarcationPath:
    """East coordinate from ``L``, north coordinate from ``C``, step by step."""
    C, L = _checked_pair(C, L)
    return DemarcationPath(_dem_word(*_extend(C.word, L.word)))


def _column_heights(word: str) -> list:
    """Height of each horizontal step of the path, in order."""
    out = []
    y = 0
    for s in word:
        if s == "n":
            y += 1
        else:
            out.append(y)
    return out


def _leave_heights(dem: tuple, width: int) -> list:
    """For each abscissa ``x < width``, the height at which ``dem`` leaves it."""
    out = [0] * width
    x = y = 0
    for s in dem:
        if s == "e":
            out[x] = y
            x += 1
        elif s == "d":
            out[x] = y
            x += 1
            y += 1
        elif s == "n":
            y += 1
    return out


class MarkingConflict(AssertionError):
    pass


def _marking(c: str, l: str):
    """Marking path of ``c`` over ``l`` (equal east counts, already extended).

    Returns the word and the 0-based columns where it steps east.
    """
    heights = _column_heights(c)
    width = len(heights)
    top = len(c) - width
    floor = _leave_heights(_dem_word(c, l), width)
    x = y = 0
    word = []
    east_cols = []
    while x < width:
        fits_under = y + 1 <= heights[x]
        fits_over = y >= floor[x]
        if fits_under and fits_over:
            word.append("d")
            x += 1
            y += 1
        elif fits_over:
            word.append("e")
            east_cols.append(x)
            x += 1
        elif fits_under:
            word.append("n")
            y += 1
        else:
            raise MarkingConflict(
                f"marking path of {c} over {l} is squeezed at ({x},{y})"
            )
    word.extend("n" * (top - y))
    return "".join(word), east_cols


def marking_path(C, L) -> MarkingPath:
    """The ``L``-marking path of ``C``; ``C`` may have fewer east steps than ``L``."""
    C, L = _checked_pair(C, L)
    c, l = _extend(C.word, L.word)
    word, east_cols = _marking(c, l)
    east_pos = [i for i, s in enumerate(c, 1) if s == "e"]
    marked = frozenset(p for p in (east_pos[x] for x in east_cols) if p <= len(C))
    return MarkingPath(word, marked, _points(word)[-1])


def statistic(C, L=None) -> frozenset:
    """Unmarked east positions of ``C`` relative to the lower boundary ``L``.

    ``L=None`` means the trivial lower boundary.
    """
    C = parse_path(C)
    if L is None:
        L = trivial_lower(len(C), C.d)
    return C.east_set - marking_path(C, L).marked


# -- replacement bijections ----------------------------------------------------


def _lower_default(C, L):
    C = parse_path(C)
    if L is None:
        L = LatticePath("e" * len(C))
    return _checked_pair(C, L)


def raise_path(C, L=None) -> LatticePath:
    """Turn the last north step of ``C`` that starts on its marking path
    into an east step.  The statistic is unchanged.

    ``L=None`` means the trivial lower boundary with as many east steps as
    letters, which leaves room for every raise.
    """
    C, L = _lower_default(C, L)
    mar = marking_path(C, L)
    on_mar = set(mar.points())
    if C.endpoint in on_mar:
        raise PathError(f"the marking path of {C.word} passes through its endpoint")
    pts = C.points()
    last = None
    for i, s in enumerate(C.word):
        if s == "n" and pts[i] in on_mar:
            last = i
    if last is None:
        raise PathError(f"no north step of {C.word} starts on its marking path")
    out = LatticePath(C.word[:last] + "e" + C.word[last + 1:])
    if not is_weakly_above_lower(out, L):
        raise PathError("raised path dips below the lower boundary")
    return out


def lower_path(C, L=None) -> LatticePath:
    """Turn the last marked east step of ``C`` into a north step."""
    C, L = _lower_default(C, L)
    marked = marking_path(C, L).marked
    if not marked:
        raise PathError(f"every east step of {C.word} is unmarked")
    j = max(marked) - 1
    return LatticePath(C.word[:j] + "n" + C.word[j + 1:])


def path_from_statistic(J, n: int, d: int, L=None):
    """The unique ``C`` in ``L(n, d)`` weakly above ``L`` with ``st_L(C) = J``,
    or None when there is none.

    ``L`` may have more east steps than ``d``; ``L=None`` stands for the
    trivial lower boundary ``e^n``.
    """
    J = frozenset(J)
    if any(not 1 <= j <= n for j in J):
        return None
    L = LatticePath("e" * n) if L is None else parse_path(L)
    if len(L) != n:
        raise PathError(f"lower boundary has length {len(L)}, expected {n}")
    ell = len(J)
    if not ell <= d <= L.d:
        return None
    E = path_from_east_set(J, n)
    if not is_weakly_above_lower(E, L):
        return None
    if statistic(E, L) != J:
        return None
    mar = set(marking_path(E, L).points())
    k = 0
    while (ell + k, n - ell) not in mar:
        k += 1
    if d > ell + k:
        return None
    C = E
    for _ in range(d - ell):
        C = raise_path(C, L)
    return C


def composite_bijection(U, L, C) -> LatticePath:
    """Send ``C`` in ``P[U, L]`` to the path in ``P[L*, U*]`` with the same
    statistic, going through the statistic value itself."""
    U, L, C = parse_path(U), parse_path(L), parse_path(C)
    if not (weakly_above(U, C) and weakly_above(C, L)):
        raise PathError(f"{C.word} is not between {U.word} and {L.word}")
    Us, Ls = dual_path(U), dual_path(L)
    J = statistic(C, L)
    out = path_from_statistic(J, len(C), len(C) - C.d, Us)
    if out is None or not (weakly_above(Ls, out) and weakly_above(out, Us)):
        raise PathError(f"no dual path with statistic {sorted(J)}")
    return out


def truncate_last(word: str, step: str) -> str:
    """Remove the last occurrence of ``step`` from ``word``."""
    j = word.rindex(step)
    return word[:j] + word[j + 1:]
