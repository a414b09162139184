# Fusing clock or sensor readings when up to f of them may be wrong.
#
# Three estimators of the same quantity, each reporting an interval it
# swears contains the truth. If at most one lies, where is the truth?

from prefixcast import (
    Inconsistent,
    IntervalSet,
    agreement_regions,
    fusion_compare,
    m_function,
    n_function,
    overlap_function,
    s_function,
)

readings = IntervalSet.from_pairs(((8.0, 12.0), (11.0, 13.0), (14.0, 15.0)), f=1)
print("n =", readings.n, " f =", readings.f, " quorum =", readings.quorum)

# Where do at least n-f reporters agree simultaneously?
print("agreement regions:", [(r.lo, r.hi) for r in agreement_regions(readings)])

# The overlap count as a step function over the line, sampled at endpoints.
omega = overlap_function(readings)
for x, c in zip(omega.breakpoints, omega.at_points):
    print(f"  omega({x:g}) = {c}")

m = m_function(readings)
n = n_function(readings)
s = s_function(readings)
print("M =", (m.lo, m.hi))
print("N =", (n.lo, n.hi))
print("S =", (s.lo, s.hi))

print()

# M is tight but twitchy. Nudge one report by half a millisecond and its
# answer can jump to a different agreement island. S only ever shifts by
# as much as the inputs did, at the price of a wider answer.
jitter = 0.001
before = IntervalSet.from_pairs(
    ((0.0, 10.0), (5.0, 15.0), (9.9995, 20.0), (14.0, 30.0)), f=1
)
after = IntervalSet.from_pairs(
    ((0.0, 10.0), (5.0, 15.0), (9.9995 + jitter, 20.0), (14.0, 30.0)), f=1
)
for tag, inst in (("before", before), ("after ", after)):
    mm, ss = m_function(inst), s_function(inst)
    print(f"{tag} M = ({mm.lo}, {mm.hi})   S = ({ss.lo}, {ss.hi})")

print()

# When nobody overlaps anybody, the order-statistic bounds cross and S
# reports the crossing instead of inventing an interval.
apart = IntervalSet.from_pairs(((0.0, 1.0), (10.0, 11.0), (20.0, 21.0)), f=0)
result = s_function(apart)
print("disjoint readings at f=0:", result)
assert isinstance(result, Inconsistent)

# The one-call comparison used by the command line tool.
cmp = fusion_compare(readings)
print("M width", cmp.m_width, " N width", cmp.n_width, " S width", cmp.s_width)
print("M == N?", cmp.m_equals_n, "  M inside S?", cmp.m_within_s)
