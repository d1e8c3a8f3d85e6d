"""
app/services/states/borel.py

Constructors and set operations for finite interval unions.

Observables here have finite spectra, so a Borel set only matters through the
eigenvalues it contains; finite unions of intervals lose nothing.
"""

from __future__ import annotations

import math

from ...models import BorelSet, Interval


def real_line() -> BorelSet:
    return BorelSet((Interval(-math.inf, math.inf),))


def at_most(value: float) -> BorelSet:
    """
    (−∞, value]
    """
    return BorelSet((Interval(-math.inf, float(value), closed_upper=True),))


def point(value: float) -> BorelSet:
    value = float(value)
    return BorelSet((Interval(value, value, closed_lower=True, closed_upper=True),))


def open_interval(lower: float, upper: float) -> BorelSet:
    return BorelSet((Interval(float(lower), float(upper)),))


def closed_interval(lower: float, upper: float) -> BorelSet:
    return BorelSet((Interval(float(lower), float(upper), closed_lower=True, closed_upper=True),))


def _touches(left: Interval, right: Interval) -> bool:
    if right.lower < left.upper:
        return True
    return right.lower == left.upper and (left.closed_upper or right.closed_lower)


def _merge(left: Interval, right: Interval) -> Interval:
    if right.upper > left.upper:
        upper, closed_upper = right.upper, right.closed_upper
    elif right.upper < left.upper:
        upper, closed_upper = left.upper, left.closed_upper
    else:
        upper, closed_upper = left.upper, left.closed_upper or right.closed_upper
    closed_lower = left.closed_lower or (right.lower == left.lower and right.closed_lower)
    return Interval(left.lower, upper, closed_lower, closed_upper)


def union(*sets: BorelSet) -> BorelSet:
    """
    Union of Borel sets; overlapping or touching intervals are merged.

    EXAMPLES
    --------
    union(point(1), open_interval(1, 2))   -> [1, 2)
    union(open_interval(0, 1), point(1))   -> (0, 1]
    """
    pieces = sorted(
        (interval for s in sets for interval in s.intervals),
        key=lambda i: (i.lower, not i.closed_lower),
    )
    merged: list[Interval] = []
    for interval in pieces:
        if merged and _touches(merged[-1], interval):
            merged[-1] = _merge(merged[-1], interval)
        else:
            merged.append(interval)
    return BorelSet(tuple(merged))


def complement_set(s: BorelSet) -> BorelSet:
    """
    ℝ minus s.
    """
    gaps: list[Interval] = []
    cursor, cursor_closed = -math.inf, False
    for interval in s.intervals:
        gap = Interval(cursor, interval.lower, cursor_closed, not interval.closed_lower)
        if not gap.empty:
            gaps.append(gap)
        cursor, cursor_closed = interval.upper, not interval.closed_upper
    tail = Interval(cursor, math.inf, cursor_closed, False)
    if not tail.empty:
        gaps.append(tail)
    return BorelSet(tuple(gaps))
