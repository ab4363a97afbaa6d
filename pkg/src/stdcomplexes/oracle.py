"""Standard monomials of the vanishing ideal of a 0/1 point configuration.

Monomials are scanned in increasing term order and a monomial is kept when
its evaluation vector on the points is linearly independent (over the
rationals) from the vectors already kept.  This is the Buchberger-Moller
view of ``R[x]/I(V) = R^V``; it never constructs a Groebner basis and is
independent of the slicing recursion in :mod:`stdcomplexes.stdcomplex`.

Only squarefree monomials are enumerated: ``x_i^2 - x_i`` vanishes on every
0/1 point, so squares are always leading terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .core import PointConfig, SimplicialComplex

MAX_COORDS = 24

ORDERS = ("lex", "grlex")


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class TermOrder:
    """Lex or graded lex on squarefree monomials over ``coords``.

    The smallest label is the largest variable: ``x_1 > x_2 > ...``.
    """

    kind: str
    coords: tuple

    def __post_init__(self):
        if self.kind not in ORDERS:
            raise OracleError(f"unknown term order {self.kind!r}; expected one of {ORDERS}")
        object.__setattr__(self, "coords", tuple(sorted(self.coords)))

    def key(self, support) -> tuple:
        """Sort key; ascending keys are ascending monomials."""
        bits = tuple(1 if c in support else 0 for c in self.coords)
        if self.kind == "grlex":
            return (sum(bits), bits)
        return bits


def compare(order: TermOrder, a, b) -> int:
    """-1, 0 or 1 as ``x^a`` is smaller than, equal to or larger than ``x^b``."""
    for s in (a, b):
        if not set(s) <= set(order.coords):
            raise OracleError(f"support {sorted(s)} outside {list(order.coords)}")
    ka, kb = order.key(frozenset(a)), order.key(frozenset(b))
    return (ka > kb) - (ka < kb)


def monomials_ascending(order: TermOrder) -> list:
    """All squarefree monomials (as supports) in increasing order."""
    k = len(order.coords)
    if k > MAX_COORDS:
        raise OracleError(f"{k} coordinates exceed the oracle cap of {MAX_COORDS}")
    monos = [
        frozenset(c)
        for size in range(k + 1)
        for c in combinations(order.coords, size)
    ]
    monos.sort(key=order.key)
    return monos


class EvalMatrix:
    """Row-echelon store of linearly independent integer vectors.

    Elimination is fraction-free: a candidate ``v`` is reduced against each
    stored row ``r`` with pivot ``p`` as ``r[p] * v - v[p] * r`` and then
    divided by the gcd of its entries, so all arithmetic stays in exact
    integers.  Each stored row is zero at the pivots of the rows stored
    before it, hence one sequential pass reduces ``v`` to zero exactly when
    it lies in the span.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows = []  # (pivot, row)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> list:
        v = list(v)
        for p, r in self.rows:
            a = v[p]
            if a:
                b = r[p]
                v = [b * x - a * y for x, y in zip(v, r)]
                g = 0
                for x in v:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    v = [x // g for x in v]
        return v

    def insert(self, v) -> bool:
        """Store ``v`` if independent of the stored rows; report whether it was."""
        if len(v) != self.width:
            raise OracleError("vector length does not match the number of points")
        w = self.reduce(v)
        for p, x in enumerate(w):
            if x:
                self.rows.append((p, w))
                return True
        return False


def standard_monomials(V: PointConfig, order="lex", prune: bool = True) -> list:
    """Squarefree standard monomials of ``I(V)`` in increasing order.

    With ``prune`` a monomial is only tested when every divisor obtained by
    dropping one variable was accepted; standard monomials form an order
    ideal, so this never changes the result, it only skips work.
    """
    if isinstance(order, str):
        order = TermOrder(order, V.coords)
    elif order.coords != tuple(V.coords):
        raise OracleError("term order coordinates differ from the configuration's")
    if not V.points:
        return []
    points = sorted(V.points)
    index = {c: k for k, c in enumerate(V.coords)}
    target = len(points)
    basis = EvalMatrix(target)
    accepted = []
    accepted_set = set()
    for mono in monomials_ascending(order):
        if prune and any(mono - {x} not in accepted_set for x in mono):
            continue
        cols = [index[c] for c in mono]
        vec = [1 if all(p[j] for j in cols) else 0 for p in points]
        if basis.insert(vec):
            accepted.append(mono)
            accepted_set.add(mono)
            if len(accepted) == target:
                break
    return accepted


def standard_complex(V: PointConfig, order="lex", prune: bool = True) -> SimplicialComplex:
    monos = standard_monomials(V, order, prune=prune)
    return SimplicialComplex(frozenset(monos), V.coords)
