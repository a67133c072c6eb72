"""Exact convex hulls of integer point sets, any ambient dimension.

The driver first finds the affine rank of the input by fraction-free row
reduction, then picks an injective coordinate projection onto that many
coordinates (an affine isomorphism of the affine hull, so extreme points
correspond one-to-one):

* rank 0/1: trivial (lexicographic extremes of a collinear set are its
  endpoints),
* rank 2: Andrew monotone chain with integer cross products,
* rank 3: incremental triangulated hull with integer orientation tests,
* rank >= 4: LP-based extremality filtering (slow but exact; nothing in
  the package's own algorithms needs it below ambient dimension 4).

Every path rejects non-extreme points, so the result is the exact
minimal vertex set.
"""

from __future__ import annotations

from math import gcd

from ._simplex import convex_membership


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_polygon_ccw(pts):
    """Counterclockwise vertex cycle of a 2-D point set.

    pts must be deduplicated and lexicographically sorted. Collinear points
    are dropped; the cycle starts at the lexicographic minimum. A point or a
    segment comes back as a list of one or two points.
    """
    if len(pts) <= 2:
        return list(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _affine_basis(pts):
    """Pivot columns and affinely independent sample of a point list.

    Returns (pivot_cols, indep) where indep is a list of 1 + rank indices
    into pts whose points are affinely independent, and pivot_cols are
    coordinates on which projection is injective over the affine hull.
    """
    base = pts[0]
    n = len(base)
    echelon = []  # insertion-ordered (pivot_col, reduced_row)
    indep = [0]
    for idx in range(1, len(pts)):
        row = [a - b for a, b in zip(pts[idx], base)]
        for pc, er in echelon:
            if row[pc]:
                m1, m2 = er[pc], row[pc]
                row = [a * m1 - b * m2 for a, b in zip(row, er)]
        pc = next((j for j, a in enumerate(row) if a), None)
        if pc is None:
            continue
        g = 0
        for a in row:
            g = gcd(g, a)
        row = [a // g for a in row]
        echelon.append((pc, row))
        indep.append(idx)
        if len(echelon) == n:
            break
    return sorted(pc for pc, _ in echelon), indep


def _orient(a, b, c, d):
    """Sign of det[b-a, c-a, d-a]: +1 if d is above the oriented plane abc."""
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx, wy, wz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    det = (ux * (vy * wz - vz * wy)
           - uy * (vx * wz - vz * wx)
           + uz * (vx * wy - vy * wx))
    return (det > 0) - (det < 0)


def _orient4(a, b, c, d4):
    # d4 is 4x the true reference point; scale the other corners to match.
    return _orient(tuple(4 * x for x in a), tuple(4 * x for x in b),
                   tuple(4 * x for x in c), d4)


def _hull_3d(pts, indep4):
    """Vertices of a full-dimensional 3-D hull (incremental, exact).

    Maintains an outward-oriented triangulated boundary. A point strictly
    outside sees at least one triangle strictly (its facet's plane strictly
    separates), so treating coplanar as invisible is safe. Corners of the
    final triangulation may still be non-extreme (swallowed into a facet or
    edge interior by later insertions); the link test prunes them: a corner
    is a vertex iff it is not a convex combination of its link.
    """
    a, b, c, d = (pts[i] for i in indep4)
    if _orient(a, b, c, d) < 0:
        c, d = d, c
    faces = [(a, c, b), (a, b, d), (b, c, d), (a, d, c)]
    inner4 = tuple(w + x + y + z for w, x, y, z in zip(a, b, c, d))
    initial = {a, b, c, d}
    for p in pts:
        if p in initial:
            continue
        visible = [f for f in faces if _orient(f[0], f[1], f[2], p) > 0]
        if not visible:
            continue
        visset = set(visible)
        faces = [f for f in faces if f not in visset]
        horizon = set()
        for x, y, z in visible:
            for e in ((x, y), (y, z), (z, x)):
                back = (e[1], e[0])
                if back in horizon:
                    horizon.remove(back)
                else:
                    horizon.add(e)
        for u, v in horizon:
            f = (u, v, p) if _orient4(u, v, p, inner4) < 0 else (v, u, p)
            faces.append(f)
    links = {}
    for f in faces:
        for v in f:
            links.setdefault(v, set()).update(f)
    out = []
    for v, link in links.items():
        link.discard(v)
        if not convex_membership(sorted(link), v):
            out.append(v)
    return out


def _extreme_filter_lp(pts):
    # Non-extreme points can be removed one at a time: the hull of the
    # survivors never shrinks below the true vertex set.
    keep = list(pts)
    i = 0
    while i < len(keep):
        v = keep[i]
        others = keep[:i] + keep[i + 1:]
        if others and convex_membership(others, v):
            keep.pop(i)
        else:
            i += 1
    return keep


def hull_vertices(points):
    """Sorted minimal vertex list of the convex hull of integer points."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) == 1:
        return pts
    piv, indep = _affine_basis(pts)
    rank = len(piv)
    if rank == 1:
        return [pts[0], pts[-1]]
    if rank == len(pts[0]):
        proj = pts
        unproject = None
    else:
        proj = [tuple(p[j] for j in piv) for p in pts]
        unproject = dict(zip(proj, pts))
    if rank == 2:
        kept = convex_polygon_ccw(sorted(set(proj)))
    elif rank == 3:
        kept = _hull_3d(proj, indep)
    else:
        return sorted(_extreme_filter_lp(pts))
    if unproject is not None:
        kept = [unproject[p] for p in kept]
    return sorted(kept)
