"""Exact geometry of integral (lattice) polytopes in Z^n.

A polytope is stored by its canonical V-representation: the
lexicographically sorted tuple of its extreme lattice points. Dimension 0
is legal; its only polytope is the empty-coordinate point. All predicates
run on exact integer/rational arithmetic; there is no floating point
anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from . import _hull, _simplex
from .errors import DimensionMismatch, EmptyPolytope

Point = tuple[int, ...]
RationalPoint = tuple[Fraction, ...]


def rational_point(coords: Iterable) -> RationalPoint:
    """Normalize a coordinate sequence to a tuple of Fractions."""
    return tuple(Fraction(c) for c in coords)


class IntegralPolytope:
    """Convex hull of finitely many points of Z^n, in canonical form.

    Instances are immutable values: equality and hashing go by the
    (dimension, vertex tuple) pair, and every operation in the package
    returns fresh objects.
    """

    __slots__ = ("dim", "vertices")

    def __init__(self, dim: int, points: Iterable[Sequence[int]]):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise EmptyPolytope("a polytope needs at least one point")
        for p in pts:
            if len(p) != dim:
                raise DimensionMismatch(
                    f"point {p} has dimension {len(p)}, expected {dim}")
        self.dim = dim
        self.vertices = tuple(_hull.hull_vertices(pts))

    @classmethod
    def _canonical(cls, dim: int, vertices: tuple[Point, ...]) -> "IntegralPolytope":
        # Internal fast path for vertex tuples already known to be canonical.
        obj = object.__new__(cls)
        obj.dim = dim
        obj.vertices = vertices
        return obj

    def __eq__(self, other):
        if not isinstance(other, IntegralPolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        return f"IntegralPolytope(dim={self.dim}, vertices={[list(v) for v in self.vertices]})"


def canonical_hull(points: Iterable[Sequence[int]], dim: Optional[int] = None) -> IntegralPolytope:
    """Canonical minimal vertex representation of conv(points).

    Idempotent: feeding a polytope's vertices back reproduces it exactly.
    """
    pts = list(points)
    if not pts:
        raise EmptyPolytope("cannot take the hull of an empty point set")
    if dim is None:
        dim = len(pts[0])
    return IntegralPolytope(dim, pts)


def origin_polytope(dim: int) -> IntegralPolytope:
    """The identity of the Minkowski monoid: the polytope {0} in Z^dim."""
    return IntegralPolytope._canonical(dim, ((0,) * dim,))


def contains(p: IntegralPolytope, x: Sequence) -> bool:
    """Exact membership of a rational point, decided as feasibility of the
    convex-combination system by simplex pivoting (Bland's rule)."""
    xt = tuple(Fraction(c) for c in x)
    if len(xt) != p.dim:
        raise DimensionMismatch(
            f"point of dimension {len(xt)} against polytope of dimension {p.dim}")
    return _simplex.convex_membership(p.vertices, xt)


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


def lattice_points(p: IntegralPolytope) -> set[Point]:
    """All points of Z^n inside the polytope.

    Scans the integer bounding box fiber by fiber: for each choice of the
    first n-1 coordinates the admissible last coordinates form a contiguous
    interval, whose exact rational endpoints come from the simplex.
    """
    if p.dim == 0:
        return {()}
    lows = [min(v[d] for v in p.vertices) for d in range(p.dim - 1)]
    highs = [max(v[d] for v in p.vertices) for d in range(p.dim - 1)]
    out: set[Point] = set()
    for prefix in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        rng = _simplex.fiber_last_range(p.vertices, prefix)
        if rng is None:
            continue
        lo, hi = rng
        for z in range(_ceil(lo), _floor(hi) + 1):
            out.add(prefix + (z,))
    return out


def equal(p1: IntegralPolytope, p2: IntegralPolytope) -> bool:
    """Exact polytope equality via canonical vertex lists."""
    if p1.dim != p2.dim:
        raise DimensionMismatch(f"dimensions {p1.dim} and {p2.dim} differ")
    return p1.vertices == p2.vertices


def project_drop_last(p: IntegralPolytope) -> IntegralPolytope:
    """Image under the projection forgetting the last coordinate.

    The projection of a hull is the hull of the projections, so projecting
    the vertex set and re-canonicalizing is exact.
    """
    if p.dim == 0:
        raise DimensionMismatch("cannot project a 0-dimensional polytope")
    return IntegralPolytope(p.dim - 1, [v[:-1] for v in p.vertices])


def embed_at_zero(p: IntegralPolytope) -> IntegralPolytope:
    """Embed into one dimension higher, on the hyperplane {last coord = 0}."""
    return IntegralPolytope._canonical(
        p.dim + 1, tuple(v + (0,) for v in p.vertices))
