"""Writing symmetric integral polytopes as differences of norms.

A norm (difference body) is a polytope of the form Q + mirror(Q). Not
every centrally symmetric integral polytope is one, but every one becomes
one after adding a norm: decompose() constructs integral Q, R with

    P + Q + mirror(Q) = R + mirror(R)

by induction on dimension. Each step stretches P vertically until the
slice by the last-coordinate hyperplane is integral, recurses on that
slice, and reassembles from the nonnegative half. The identity is
re-verified exactly at every level before anything is returned.

is_integral_norm() is the complementary brute-force oracle: an exhaustive,
deterministic search for an exact witness Q with Q + mirror(Q) = P.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .algebra import half_nonneg, is_symmetric, minkowski_sum, mirror, segment_dz
from .errors import (DimensionMismatch, IdentityCheckFailed, NotSymmetric,
                     SearchCapExceeded)
from .geometry import (IntegralPolytope, canonical_hull, embed_at_zero, equal,
                       lattice_points, origin_polytope, project_drop_last)


@dataclass(frozen=True)
class StretchData:
    """Vertical stretching of a polytope: d, Y = P + dZ + mirror(dZ), and the
    (integral) slice S = Y cap {last coord = 0}, stored one dimension down."""
    d: int
    y: IntegralPolytope
    s: IntegralPolytope


@dataclass(frozen=True)
class NormDecomposition:
    """Certified witnesses: p + q + mirror(q) = r + mirror(r), exactly."""
    p: IntegralPolytope
    q: IntegralPolytope
    r: IntegralPolytope


def stretch(p: IntegralPolytope) -> StretchData:
    """Stretch until the hyperplane slice is integral.

    d is the smallest integer exceeding every |last coordinate| of the
    vertices; then the slice of Y = P + dZ + mirror(dZ) by {last = 0} is
    exactly the hull of the projected vertices, so S is computed by
    projection.
    """
    if p.dim == 0:
        raise DimensionMismatch("cannot stretch a 0-dimensional polytope")
    d = 1 + max(abs(v[-1]) for v in p.vertices)
    dz = segment_dz(p.dim, d)
    y = minkowski_sum(p, minkowski_sum(dz, mirror(dz)))
    return StretchData(d=d, y=y, s=project_drop_last(p))


def verify_norm_identity(p: IntegralPolytope, q: IntegralPolytope,
                         r: IntegralPolytope) -> bool:
    """Exact check of p + q + mirror(q) = r + mirror(r)."""
    if not (p.dim == q.dim == r.dim):
        raise DimensionMismatch(
            f"dimensions {p.dim}, {q.dim}, {r.dim} differ")
    lhs = minkowski_sum(minkowski_sum(p, q), mirror(q))
    rhs = minkowski_sum(r, mirror(r))
    return equal(lhs, rhs)


def decompose(p: IntegralPolytope) -> NormDecomposition:
    """Witnesses (q, r) with p + q + mirror(q) = r + mirror(r).

    Recursion on dimension: stretch, decompose the slice, then take
    q = dZ + embedded r', r = Y_plus + embedded q'. The output is not
    minimal and is not meant to be; it is always verified exactly, and a
    failed check raises IdentityCheckFailed (an internal defect, not a
    data error).
    """
    if not is_symmetric(p):
        raise NotSymmetric("decompose needs a centrally symmetric polytope")
    return _decompose(p)


def _decompose(p: IntegralPolytope) -> NormDecomposition:
    if p.dim == 0:
        pt = origin_polytope(0)
        return NormDecomposition(p=p, q=pt, r=pt)
    data = stretch(p)
    inner = _decompose(data.s)  # the slice of a symmetric polytope is symmetric
    y_plus = half_nonneg(data.y, data.s)
    q = minkowski_sum(segment_dz(p.dim, data.d), embed_at_zero(inner.r))
    r = minkowski_sum(y_plus, embed_at_zero(inner.q))
    if not verify_norm_identity(p, q, r):
        raise IdentityCheckFailed(
            f"decomposition identity failed at dimension {p.dim}")
    return NormDecomposition(p=p, q=q, r=r)


def is_integral_norm(p: IntegralPolytope, cap: int = 20) -> Optional[IntegralPolytope]:
    """Exhaustive search for an integral Q with Q + mirror(Q) = P.

    Any witness can be translated so that the origin is one of its
    vertices, and then Q sits inside P; so candidate vertex sets are the
    subsets of P's lattice points through the origin. Enumeration is by
    subset size, then lexicographically, so the returned witness is
    deterministic. Returns None when the search space is exhausted.
    """
    if not is_symmetric(p):
        raise NotSymmetric("only symmetric polytopes can be norms")
    pts = sorted(lattice_points(p))
    if len(pts) > cap:
        raise SearchCapExceeded(
            f"{len(pts)} lattice points exceed the cap of {cap}")
    origin = (0,) * p.dim
    others = [z for z in pts if z != origin]
    for size in range(len(others) + 1):
        for combo in combinations(others, size):
            q = canonical_hull([origin, *combo], p.dim)
            if minkowski_sum(q, mirror(q)).vertices == p.vertices:
                return q
    return None
