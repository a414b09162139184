"""Independent reference implementations used only by the test suite.

Everything here deliberately avoids the library's own algorithms: optimal
code lengths come from exhaustive enumeration of length multisets, interval
fusion from direct subset counting, and so on. Slow is fine; these run on
small inputs and exist so the fast implementations have something honest to
disagree with.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement


def kraft_holds_exact(lengths, d):
    """Integer-exact Kraft check: sum(D**(L-n_i)) <= D**L with L = max length."""
    cap = max(lengths)
    return sum(d ** (cap - n) for n in lengths) <= d**cap


def optimal_expected_length(probs, d):
    """Brute-force minimum expected length over all D-ary prefix codes.

    Enumerates every sorted multiset of lengths in 1..m for m symbols,
    keeps the Kraft-feasible ones, and pairs largest probability with
    smallest length. Any prefix code's length profile appears among the
    candidates, and the sorted pairing is optimal for a fixed multiset,
    so the minimum over candidates is the true optimum.
    """
    m = len(probs)
    if m == 1:
        return 1.0
    sorted_probs = sorted(probs, reverse=True)
    best = None
    for cand in combinations_with_replacement(range(1, m + 1), m):
        if not kraft_holds_exact(cand, d):
            continue
        cost = sum(p * n for p, n in zip(sorted_probs, cand))
        if best is None or cost < best:
            best = cost
    return best


def is_prefix_free(words):
    """Direct pairwise prefix check over digit tuples."""
    ws = list(words)
    for i, a in enumerate(ws):
        for b in ws[i + 1 :]:
            k = min(len(a), len(b))
            if a[:k] == b[:k]:
                return False
    return True


def fuse_marzullo_reference(intervals, f):
    """Intersections of every (n-f)-subset, unioned by brute force.

    Returns a list of disjoint closed [lo, hi] pairs sorted by lo, or []
    when fewer than n-f intervals ever agree. Used as the oracle for the
    sweep-based implementation.
    """
    n = len(intervals)
    keep = n - f
    if keep <= 0:
        raise ValueError("f must be smaller than the number of intervals")
    pieces = []
    for subset in combinations(range(n), keep):
        lo = max(intervals[i][0] for i in subset)
        hi = min(intervals[i][1] for i in subset)
        if lo <= hi:
            pieces.append((lo, hi))
    if not pieces:
        return []
    pieces.sort()
    merged = [list(pieces[0])]
    for lo, hi in pieces[1:]:
        if lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def overlap_count_at(intervals, x):
    """Number of closed intervals containing the point x."""
    return sum(1 for lo, hi in intervals if lo <= x <= hi)


def spanning_trees_by_subsets(vertices, edges):
    """All spanning trees via edge-subset enumeration of size n-1.

    ``edges`` is a list of (u, v) or (u, v, w) tuples. Returns a list of
    frozensets of (u, v) pairs with endpoints in input order. Connectivity
    is checked by repeated neighbor expansion, no union-find.
    """
    n = len(vertices)
    pairs = [(e[0], e[1]) for e in edges]
    trees = []
    for subset in combinations(range(len(pairs)), n - 1):
        adj = {v: set() for v in vertices}
        for i in subset:
            u, v = pairs[i]
            adj[u].add(v)
            adj[v].add(u)
        seen = {next(iter(vertices))}
        frontier = list(seen)
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        if len(seen) == n:
            trees.append(frozenset(pairs[i] for i in subset))
    return trees


def min_spanning_weight(vertices, edges):
    """Minimum total weight over all spanning trees, by enumeration."""
    weight = {(e[0], e[1]): e[2] for e in edges}
    best = None
    for tree in spanning_trees_by_subsets(vertices, edges):
        w = sum(weight[pair] for pair in tree)
        if best is None or w < best:
            best = w
    return best


def random_weighted_connected(rng, n, extra_edges, weight_range=(1, 9)):
    """Random spanning tree plus extra edges, integer weights; always connected.

    Returns (vertices, edges) with edges as (u, v, w) triples, suitable for
    WeightedGraph construction and for the enumeration oracles above.
    """
    order = list(range(n))
    rng.shuffle(order)
    pairs = set()
    for i in range(1, n):
        j = rng.randrange(i)
        pairs.add(tuple(sorted((order[i], order[j]))))
    rest = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in pairs
    ]
    rng.shuffle(rest)
    pairs.update(rest[:extra_edges])
    lo, hi = weight_range
    edges = tuple(
        (u, v, float(rng.randint(lo, hi))) for u, v in sorted(pairs)
    )
    return tuple(range(n)), edges


def shortest_hops(vertices, edges, source):
    """Hop distances by Bellman-Ford relaxation; no BFS involved."""
    dist = {v: float("inf") for v in vertices}
    dist[source] = 0
    for _ in range(len(vertices)):
        changed = False
        for u, v in edges:
            if dist[u] + 1 < dist[v]:
                dist[v] = dist[u] + 1
                changed = True
            if dist[v] + 1 < dist[u]:
                dist[u] = dist[v] + 1
                changed = True
        if not changed:
            break
    return dist


def best_realizable_depth(available_paths, probs):
    """Minimum expected depth of any prefix-free placement on given paths.

    ``available_paths`` are digit tuples; ``probs`` the leader importances.
    For a fixed prefix-free subset of paths the cheapest pairing puts the
    largest probability on the shortest path, so only subsets need
    enumerating. Returns None when no prefix-free subset is large enough.
    """
    k = len(probs)
    sorted_probs = sorted(probs, reverse=True)
    best = None
    for subset in combinations(available_paths, k):
        ok = True
        for i, a in enumerate(subset):
            for b in subset[i + 1 :]:
                m = min(len(a), len(b))
                if a[:m] == b[:m]:
                    ok = False
        if not ok:
            continue
        depths = sorted(len(p) for p in subset)
        cost = sum(p * n for p, n in zip(sorted_probs, depths))
        if best is None or cost < best:
            best = cost
    return best
