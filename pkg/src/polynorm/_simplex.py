"""Exact rational simplex for tiny dense LPs.

The geometry layer needs exactly two queries, both phrased over the
convex-combination system  sum(lam_i * v_i) = x,  sum(lam_i) = 1,
lam_i >= 0:

* feasibility (membership of a rational point in a V-polytope), and
* min/max of a linear functional of lam over that system (used to find
  the last-coordinate range of a polytope above a fixed lattice fiber).

Both run a two-phase simplex with Bland's rule, so the pivot sequence is
deterministic and cycling is impossible. Arithmetic is exact: gmpy2
rationals when installed, stdlib Fraction otherwise; the pivot sequence
is identical either way.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

try:  # pragma: no cover - exercised implicitly on hosts with gmpy2
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_ZERO = _Q(0)
_ONE = _Q(1)


def to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class _Unbounded(Exception):
    pass


def _pivot(rows, obj, basis, r, c):
    prow = rows[r]
    inv = _ONE / prow[c]
    prow = [x * inv for x in prow]
    rows[r] = prow
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                rows[i] = [x - f * y for x, y in zip(row, prow)]
    f = obj[c]
    if f:
        obj[:] = [x - f * y for x, y in zip(obj, prow)]
    basis[r] = c


def _minimize(rows, obj, basis, width):
    """Bland's rule: entering = lowest negative reduced cost, leaving = lowest
    basic index among minimal ratios."""
    while True:
        enter = -1
        for j in range(width):
            if obj[j] < _ZERO:
                enter = j
                break
        if enter < 0:
            return
        leave = -1
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > _ZERO:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise _Unbounded
        _pivot(rows, obj, basis, leave, enter)


def _phase1(a_rows, b):
    """Find a basic feasible point of {A lam = b, lam >= 0}.

    Returns (rows, basis) restricted to the original columns, or None if the
    system is infeasible. Redundant constraint rows are dropped.
    """
    m = len(a_rows)
    k = len(a_rows[0])
    rows = []
    for i in range(m):
        arow, rhs = a_rows[i], b[i]
        if rhs < _ZERO:
            arow = [-x for x in arow]
            rhs = -rhs
        art = [_ZERO] * m
        art[i] = _ONE
        rows.append(list(arow) + art + [rhs])
    basis = [k + i for i in range(m)]
    obj = [_ZERO] * (k + m + 1)
    for j in range(k):
        obj[j] = -sum(row[j] for row in rows)
    obj[-1] = -sum(row[-1] for row in rows)
    _minimize(rows, obj, basis, k + m)
    if obj[-1] != _ZERO:
        return None
    # Drive leftover artificials out of the (degenerate) basis.
    keep = []
    for i, bv in enumerate(basis):
        if bv < k:
            keep.append(i)
            continue
        row = rows[i]
        enter = next((j for j in range(k) if row[j]), None)
        if enter is None:
            continue  # all-zero row: redundant constraint
        _pivot(rows, obj, basis, i, enter)
        keep.append(i)
    rows = [rows[i][:k] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    return rows, basis


def _phase2(rows, basis, c):
    """Minimize c.lam from a basic feasible tableau; returns the optimum."""
    obj = list(c) + [_ZERO]
    for row, bv in zip(rows, basis):
        f = obj[bv]
        if f:
            obj = [x - f * y for x, y in zip(obj, row)]
    _minimize(rows, obj, basis, len(c))
    return -obj[-1]


def _combination_rows(points, target):
    n = len(target)
    a_rows = [[_Q(p[d]) for p in points] for d in range(n)]
    a_rows.append([_ONE] * len(points))
    b = [_Q(t) for t in target] + [_ONE]
    return a_rows, b


def convex_membership(points: Sequence[Sequence[int]], target) -> bool:
    """Exact test: is target a convex combination of the given points?"""
    a_rows, b = _combination_rows(points, target)
    return _phase1(a_rows, b) is not None


def fiber_last_range(points: Sequence[Sequence[int]], prefix: Sequence[int]):
    """Range of the last coordinate over the fiber of `prefix`.

    points span a polytope in R^n; prefix fixes the first n-1 coordinates.
    Returns (lo, hi) as Fractions, or None when the fiber misses the polytope.
    """
    a_rows, b = _combination_rows([p[:-1] for p in points], prefix)
    feas = _phase1(a_rows, b)
    if feas is None:
        return None
    rows, basis = feas
    c = [_Q(p[-1]) for p in points]
    lo = _phase2(rows, basis, c)
    hi = -_phase2(rows, basis, [-x for x in c])
    return to_fraction(lo), to_fraction(hi)
