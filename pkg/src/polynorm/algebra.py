"""The Minkowski-sum monoid of integral polytopes and its symmetry helpers.

Covers the commutative monoid operation itself, the mirror involution
P -> -P, translations, the vertical segment used for stretching, halving
along the last-coordinate hyperplane, and 2-D edge cycles.
"""

from __future__ import annotations

from typing import Optional

from . import _hull
from .errors import DimensionMismatch, InvalidParameter, SliceMismatch
from .geometry import (IntegralPolytope, Point, contains, equal)


def minkowski_sum(p: IntegralPolytope, q: IntegralPolytope) -> IntegralPolytope:
    """Pointwise sum {a + b}; the hull of all pairwise vertex sums."""
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions {p.dim} and {q.dim} differ")
    sums = {tuple(a + b for a, b in zip(u, v))
            for u in p.vertices for v in q.vertices}
    return IntegralPolytope(p.dim, sums)


def mirror(p: IntegralPolytope) -> IntegralPolytope:
    """The reflection {-x : x in P}."""
    # Negation reverses lexicographic order, so the canonical order is the
    # reverse of the input's; extremality is preserved.
    verts = tuple(tuple(-c for c in v) for v in reversed(p.vertices))
    return IntegralPolytope._canonical(p.dim, verts)


def translate(p: IntegralPolytope, t: Point) -> IntegralPolytope:
    """Shift every point by the lattice vector t."""
    if len(t) != p.dim:
        raise DimensionMismatch(
            f"translation vector of dimension {len(t)} against dimension {p.dim}")
    verts = tuple(tuple(a + b for a, b in zip(v, t)) for v in p.vertices)
    return IntegralPolytope._canonical(p.dim, verts)


def is_symmetric(p: IntegralPolytope) -> bool:
    """Central symmetry about the origin: P equals its mirror."""
    return p.vertices == mirror(p).vertices


def symmetric_up_to_translation(p: IntegralPolytope) -> Optional[Point]:
    """Lattice vector t with mirror(P) = P + t, if one exists.

    The candidate is forced: componentwise minima translate along with the
    polytope, so t must be min(mirror(P)) - min(P). It is then verified.
    """
    m = mirror(p)
    t = tuple(min(v[d] for v in m.vertices) - min(v[d] for v in p.vertices)
              for d in range(p.dim))
    return t if translate(p, t).vertices == m.vertices else None


def segment_dz(dim: int, d: int) -> IntegralPolytope:
    """The segment from the origin to (0, ..., 0, d)."""
    if dim < 1:
        raise InvalidParameter("the segment needs dimension at least 1")
    if d < 1:
        raise InvalidParameter(f"segment length must be positive, got {d}")
    zero = (0,) * dim
    top = (0,) * (dim - 1) + (d,)
    return IntegralPolytope._canonical(dim, (zero, top))


def half_nonneg(y: IntegralPolytope, s: IntegralPolytope) -> IntegralPolytope:
    """The half {x in Y : last coordinate >= 0}, given the slice S = Y cap
    {last = 0} as an integral polytope one dimension down.

    The caller guarantees S really is that slice (the stretching
    construction always produces one); the vertices of the half are then
    among Y's upper vertices and the embedded vertices of S. Verified
    cheaply under __debug__, raising SliceMismatch on contradiction.
    """
    if y.dim == 0:
        raise DimensionMismatch("cannot halve a 0-dimensional polytope")
    if s.dim != y.dim - 1:
        raise DimensionMismatch(
            f"slice of dimension {s.dim} against polytope of dimension {y.dim}")
    embedded = [v + (0,) for v in s.vertices]
    if __debug__:
        for v in embedded:
            if not contains(y, v):
                raise SliceMismatch(f"claimed slice vertex {v} lies outside the polytope")
        for v in y.vertices:
            if v[-1] == 0 and not contains(s, v[:-1]):
                raise SliceMismatch(f"vertex {v} on the hyperplane is missing from the slice")
    upper = [v for v in y.vertices if v[-1] >= 0]
    return IntegralPolytope(y.dim, upper + embedded)


Edge = tuple[Point, Point]  # (start vertex, edge vector), counterclockwise


def edges_2d(p: IntegralPolytope) -> list[Edge]:
    """Counterclockwise edge cycle of a polygon, starting at the
    lexicographic minimum vertex.

    A point has no edges; a segment has the two opposite vectors. Edge
    vectors sum to zero and turn strictly left.
    """
    if p.dim != 2:
        raise DimensionMismatch(f"edge cycles are 2-D only, got dimension {p.dim}")
    vs = list(p.vertices)
    if len(vs) == 1:
        return []
    cycle = _hull.convex_polygon_ccw(vs) if len(vs) > 2 else vs
    out = []
    for i, start in enumerate(cycle):
        nxt = cycle[(i + 1) % len(cycle)]
        out.append((start, (nxt[0] - start[0], nxt[1] - start[1])))
    return out
