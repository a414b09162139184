"""Fault-tolerant fusion of interval estimates from n sensors, at most f faulty.

Four views of the same question, what range can the true value be in:

* ``m_function``: the smallest closed interval containing every point where
  at least n-f of the intervals agree (an endpoint sweep).
* ``overlap_function``: the full step function x -> number of intervals
  containing x, queryable anywhere and exportable as breakpoints.
* ``n_function``: the same envelope as M but derived from the overlap
  function, giving an independent route to the identical answer.
* ``s_function``: order statistics, the (f+1)-th largest left endpoint and
  (f+1)-th smallest right endpoint; wider than M but 1-Lipschitz in the
  endpoints where M can jump discontinuously.

Intervals are closed; touching at a single point counts as overlap.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; degenerate points (lo == hi) allowed."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"endpoints must be finite, got [{lo!r}, {hi!r}]")
        if lo > hi:
            raise ValueError(f"empty interval: lo {lo!r} > hi {hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class Inconsistent:
    """Order-statistic bounds crossed: more than f faults, or bad inputs.

    Carries the crossed bounds (a > b) so callers can see how badly the
    readings disagree; this is a result, not an exception.
    """

    a: float
    b: float


@dataclass(frozen=True)
class IntervalSet:
    """n sensor intervals of which at most f may be faulty."""

    intervals: tuple
    f: int

    def __post_init__(self):
        ivs = tuple(
            iv if isinstance(iv, Interval) else Interval(iv[0], iv[1])
            for iv in self.intervals
        )
        if not ivs:
            raise ValueError("interval set is empty")
        if not 0 <= self.f < len(ivs):
            raise ValueError(
                f"fault bound {self.f} outside 0..{len(ivs) - 1} for {len(ivs)} intervals"
            )
        object.__setattr__(self, "intervals", ivs)

    @classmethod
    def from_pairs(cls, pairs, f: int) -> "IntervalSet":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs), f)

    @property
    def n(self) -> int:
        return len(self.intervals)

    @property
    def quorum(self) -> int:
        return self.n - self.f


def agreement_regions(s: IntervalSet) -> tuple:
    """Maximal closed intervals where at least n-f inputs overlap.

    Endpoint sweep: starts are applied before ends at equal x, so closed
    intervals touching at a point count as overlapping there. Returns
    disjoint regions in increasing order; empty tuple when no quorum point
    exists.
    """
    k = s.quorum
    events = []  # (x, phase) with starts in phase 0, ends in phase 1
    for iv in s.intervals:
        events.append((iv.lo, 0))
        events.append((iv.hi, 1))
    events.sort(key=lambda e: (e[0], e[1]))

    regions = []
    count = 0
    start = None
    i = 0
    while i < len(events):
        x = events[i][0]
        while i < len(events) and events[i][0] == x and events[i][1] == 0:
            count += 1
            i += 1
        if count >= k and start is None:
            start = x
        while i < len(events) and events[i][0] == x:
            count -= 1
            i += 1
        if start is not None and count < k:
            regions.append(Interval(start, x))
            start = None
    return tuple(regions)


def m_function(s: IntervalSet):
    """Smallest closed interval containing every (n-f)-subset intersection.

    A point belongs to some intersection of n-f inputs exactly when at
    least n-f inputs contain it, so the answer is the envelope of the
    agreement regions. Returns None when no such point exists.
    """
    regions = agreement_regions(s)
    if not regions:
        return None
    return Interval(regions[0].lo, regions[-1].hi)


@dataclass(frozen=True)
class OverlapFunction:
    """The step function x -> number of closed intervals containing x.

    Values at the breakpoints themselves can exceed the neighboring open
    segments (touching endpoints count), so both are stored: ``at_points``
    holds the value at each breakpoint and ``between[i]`` the constant value
    on the open segment (breakpoints[i], breakpoints[i+1]).
    """

    n: int
    breakpoints: tuple
    at_points: tuple
    between: tuple

    def value_at(self, x: float) -> int:
        bp = self.breakpoints
        if not bp or x < bp[0] or x > bp[-1]:
            return 0
        i = bisect.bisect_left(bp, x)
        if i < len(bp) and bp[i] == x:
            return self.at_points[i]
        return self.between[i - 1]

    def total_mass(self) -> float:
        """Integral of the step function (breakpoints have measure zero)."""
        return math.fsum(
            (b - a) * c
            for a, b, c in zip(self.breakpoints, self.breakpoints[1:], self.between)
        )


def overlap_function(s: IntervalSet) -> OverlapFunction:
    """Materialize the overlap count at every breakpoint and gap."""
    xs = sorted({iv.lo for iv in s.intervals} | {iv.hi for iv in s.intervals})
    at_points = tuple(
        sum(1 for iv in s.intervals if iv.lo <= x <= iv.hi) for x in xs
    )
    # an interval covers the open gap (a, b) iff it covers both ends
    between = tuple(
        sum(1 for iv in s.intervals if iv.lo <= a and iv.hi >= b)
        for a, b in zip(xs, xs[1:])
    )
    return OverlapFunction(
        n=s.n, breakpoints=tuple(xs), at_points=at_points, between=between
    )


def n_function(s: IntervalSet):
    """Envelope of {x : overlap(x) >= n-f}, via the overlap step function.

    Same value as :func:`m_function` by construction of the overlap count;
    comes from a different code path so each can audit the other. Returns
    None when the level set is empty.
    """
    omega = overlap_function(s)
    k = s.quorum
    qualifying = [
        x for x, c in zip(omega.breakpoints, omega.at_points) if c >= k
    ]
    # open segments never qualify without their endpoints qualifying too:
    # a segment's count is bounded by the counts at both bounding breakpoints
    if not qualifying:
        return None
    return Interval(qualifying[0], qualifying[-1])


def s_function(s: IntervalSet):
    """Order-statistic fusion: [(f+1)-th largest lo, (f+1)-th smallest hi].

    Returns :class:`Inconsistent` with the crossed bounds when a > b, which
    signals more than f faults. Unlike M, both bounds move by at most eps
    when every input endpoint moves by at most eps.
    """
    los = sorted((iv.lo for iv in s.intervals), reverse=True)
    his = sorted(iv.hi for iv in s.intervals)
    a = los[s.f]
    b = his[s.f]
    if a > b:
        return Inconsistent(a, b)
    return Interval(a, b)


@dataclass(frozen=True)
class FusionComparison:
    """M, N and S on one input, with widths and containment relations."""

    m_result: Interval | None
    n_result: Interval | None
    s_result: Interval | Inconsistent
    m_width: float | None
    n_width: float | None
    s_width: float | None
    m_equals_n: bool
    m_within_s: bool | None  # None when M is empty or S inconsistent


def fusion_compare(s: IntervalSet) -> FusionComparison:
    """Evaluate every fusion function on the same input, side by side."""
    m = m_function(s)
    n = n_function(s)
    sf = s_function(s)
    m_within_s = None
    if m is not None and isinstance(sf, Interval):
        m_within_s = sf.lo <= m.lo and m.hi <= sf.hi
    return FusionComparison(
        m_result=m,
        n_result=n,
        s_result=sf,
        m_width=m.width if m is not None else None,
        n_width=n.width if n is not None else None,
        s_width=sf.width if isinstance(sf, Interval) else None,
        m_equals_n=m == n,
        m_within_s=m_within_s,
    )
