"""Doubly optimal multicast planning over weighted connected graphs.

The pipeline is: extract the minimum spanning tree, root it, keep at most D
children per node (cheapest edges first) to obtain an embedded D-ary tree,
then place leaders at the digit-paths of an optimal prefix code for their
importance distribution. The resulting plan is optimal twice over: the
carrier tree has minimal total weight, and the placement has minimal
expected hop depth among all prefix-free placements.

When a codeword addresses a node the embedded tree does not have, the graph
simply cannot host that placement at the requested arity and planning fails
with :class:`CapacityExceeded`; the relax mode retries with uniformly longer
codewords and is a heuristic, not an optimality claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import WeightedGraph, _vkey, enumerate_spanning_trees, minimum_spanning_tree
from .hierarchy import DaryTree, LeaderAssignment, SecurityReport, verify_secure
from .source_coding import (
    CodeLengthSet,
    ProbabilityMassFunction,
    code_from_lengths,
    huffman_code,
    kraft_sum,
)

AUDIT_EXHAUSTIVE_LIMIT = 8


class CapacityExceeded(ValueError):
    """The embedded tree has no node at a codeword's digit-path."""


@dataclass(frozen=True)
class EmbeddedDaryTree:
    """A rooted, arity-bounded subtree of a spanning tree.

    Child slots are digit-indexed in retention order, so every retained
    vertex has a unique digit-path address from the root. Vertices cut off
    by the arity bound are listed in ``pruned``.
    """

    root: object
    arity: int
    children: dict   # vertex -> tuple of retained children, slot order
    parent: dict     # vertex -> parent vertex (root absent)
    vertex_at: dict  # digit path tuple -> vertex
    pruned: tuple    # vertices unreachable for placement, sorted

    def path_of(self, vertex) -> tuple:
        for path, v in self.vertex_at.items():
            if v == vertex:
                return path
        raise KeyError(vertex)

    def graph_path(self, vertex) -> tuple:
        """Vertex sequence from the root to ``vertex`` along tree edges."""
        walk = [vertex]
        while walk[-1] != self.root:
            walk.append(self.parent[walk[-1]])
        return tuple(reversed(walk))

    def max_depth(self) -> int:
        return max(len(p) for p in self.vertex_at)


@dataclass(frozen=True)
class MulticastPlan:
    """A complete placement: who sits where and how traffic reaches them."""

    root: object
    arity: int
    leader_vertex: dict    # label -> graph vertex
    leader_digits: dict    # label -> digit path in the embedded tree
    leader_route: dict     # label -> vertex sequence from root
    importance: ProbabilityMassFunction
    mst_weight: float
    expected_depth: float
    security: SecurityReport
    relaxed: bool = False

    def kraft_sum(self) -> float:
        return kraft_sum(
            CodeLengthSet(
                tuple(len(p) for p in self.leader_digits.values()), self.arity
            )
        )


@dataclass(frozen=True)
class PlanAudit:
    """Outcome of independently re-checking a plan against its graph.

    ``mst_weight_minimal`` is None when the graph is too large for the
    exhaustive spanning-tree check; the other checks always run.
    """

    mst_weight_minimal: bool | None
    prefix_free: bool
    routes_follow_tree: bool

    @property
    def ok(self) -> bool:
        return (
            self.mst_weight_minimal is not False
            and self.prefix_free
            and self.routes_follow_tree
        )


def _assert_tree(spanning_tree: WeightedGraph) -> None:
    n = len(spanning_tree.vertices)
    if len(spanning_tree.edges) != n - 1:
        raise ValueError(
            f"not a tree: {len(spanning_tree.edges)} edges on {n} vertices"
        )
    # n-1 edges + connectivity = tree; walk it
    adj = spanning_tree.graph().adjacency()
    seen = {spanning_tree.vertices[0]}
    frontier = [spanning_tree.vertices[0]]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    if len(seen) != n:
        raise ValueError("not a tree: graph is disconnected")


def embed_dary_tree(spanning_tree: WeightedGraph, root, d: int) -> EmbeddedDaryTree:
    """Root the tree and retain at most D children per node.

    Children are kept in increasing order of (edge weight, vertex id); the
    digit of a child is its index among the retained siblings. Dropping a
    child discards its entire subtree, and every vertex so discarded is
    reported in ``pruned``.
    """
    if d < 2:
        raise ValueError(f"arity must be >= 2, got {d}")
    if root not in spanning_tree.vertices:
        raise ValueError(f"root {root!r} is not a vertex")
    _assert_tree(spanning_tree)

    adj = spanning_tree.graph().adjacency()
    children: dict = {}
    parent: dict = {}
    vertex_at: dict = {(): root}
    pruned: list = []

    def subtree(v, blocked) -> list:
        out = [v]
        stack = [(v, blocked)]
        while stack:
            u, stop = stack.pop()
            for w in adj[u]:
                if w != stop:
                    out.append(w)
                    stack.append((w, u))
        return out

    frontier = [(root, ())]
    while frontier:
        nxt = []
        for v, path in frontier:
            kids = [w for w in adj[v] if w != parent.get(v)]
            kids.sort(key=lambda w: (spanning_tree.weight_of(v, w), _vkey(w)))
            keep, cut = kids[:d], kids[d:]
            children[v] = tuple(keep)
            for i, w in enumerate(keep):
                parent[w] = v
                vertex_at[path + (i,)] = w
                nxt.append((w, path + (i,)))
            for w in cut:
                pruned.extend(subtree(w, v))
        frontier = nxt

    return EmbeddedDaryTree(
        root=root,
        arity=d,
        children=children,
        parent=parent,
        vertex_at=vertex_at,
        pruned=tuple(sorted(set(pruned), key=_vkey)),
    )


def _place(
    emb: EmbeddedDaryTree, digits_by_label: dict
) -> tuple[dict, dict]:
    leader_vertex = {}
    leader_route = {}
    for label, digits in digits_by_label.items():
        if digits not in emb.vertex_at:
            raise CapacityExceeded(
                f"no tree node at digit-path {''.join(map(str, digits))!r} "
                f"for leader {label!r}; the embedded tree cannot host this "
                f"placement at arity {emb.arity}"
            )
        v = emb.vertex_at[digits]
        leader_vertex[label] = v
        leader_route[label] = emb.graph_path(v)
    return leader_vertex, leader_route


def plan_multicast(
    g: WeightedGraph,
    root,
    importance: ProbabilityMassFunction,
    d: int = 2,
    relax: bool = False,
) -> MulticastPlan:
    """Plan a multicast: MST, embedded D-ary tree, prefix-free placement.

    Raises :class:`CapacityExceeded` when the optimal codeword set does not
    fit the embedded tree. With ``relax=True`` the codeword lengths are
    uniformly extended one level at a time until the placement fits or
    exceeds the embedded tree's depth; a plan produced this way is marked
    ``relaxed`` and forfeits the expected-depth optimality claim.
    """
    mst = minimum_spanning_tree(g)
    emb = embed_dary_tree(mst, root, d)
    code = huffman_code(importance, d)
    labels = importance.labels()
    base_lengths = [code.assignments[label].length for label in labels]

    attempts = [{label: code.assignments[label].digits for label in labels}]
    if relax:
        cap = emb.max_depth()
        bump = 1
        while max(base_lengths) + bump <= cap:
            stretched = code_from_lengths(
                CodeLengthSet(tuple(n + bump for n in base_lengths), d), labels
            )
            attempts.append(
                {label: stretched.assignments[label].digits for label in labels}
            )
            bump += 1

    last_err = None
    for i, digits_by_label in enumerate(attempts):
        try:
            leader_vertex, leader_route = _place(emb, digits_by_label)
        except CapacityExceeded as err:
            last_err = err
            continue
        expected = math.fsum(
            p * len(digits_by_label[label]) for label, p in importance.entries
        )
        assignment = LeaderAssignment(
            DaryTree(d, max(len(w) for w in digits_by_label.values())),
            digits_by_label,
            importance,
        )
        return MulticastPlan(
            root=root,
            arity=d,
            leader_vertex=leader_vertex,
            leader_digits=dict(digits_by_label),
            leader_route=leader_route,
            importance=importance,
            mst_weight=mst.total_weight(),
            expected_depth=expected,
            security=verify_secure(assignment),
            relaxed=i > 0,
        )
    raise last_err


def plan_cost_audit(plan: MulticastPlan, g: WeightedGraph) -> PlanAudit:
    """Re-verify a plan against the graph it was built from.

    Checks that the reported carrier weight is the true minimum over all
    spanning trees (exhaustively, up to ``AUDIT_EXHAUSTIVE_LIMIT`` vertices),
    that leader digit-paths are pairwise prefix-free, and that every route
    walks MST edges from the root to its leader's vertex.
    """
    # exhaustive weight check, skipped above the enumeration budget
    weight_ok: bool | None = None
    if len(g.vertices) <= AUDIT_EXHAUSTIVE_LIMIT:
        best = None
        for tree in enumerate_spanning_trees(g.graph()):
            w = math.fsum(g.weight_of(u, v) for u, v in tree.edges)
            if best is None or w < best:
                best = w
        weight_ok = abs(plan.mst_weight - best) <= 1e-9

    digit_paths = list(plan.leader_digits.values())
    prefix_free = True
    for i, a in enumerate(digit_paths):
        for b in digit_paths[i + 1 :]:
            k = min(len(a), len(b))
            if a[:k] == b[:k]:
                prefix_free = False

    mst = minimum_spanning_tree(g)
    tree_pairs = {(u, v) for u, v, _ in mst.edges}
    routes_ok = True
    for label, route in plan.leader_route.items():
        if route[0] != plan.root or route[-1] != plan.leader_vertex[label]:
            routes_ok = False
            continue
        for u, v in zip(route, route[1:]):
            if (u, v) not in tree_pairs and (v, u) not in tree_pairs:
                routes_ok = False
    return PlanAudit(
        mst_weight_minimal=weight_ok,
        prefix_free=prefix_free,
        routes_follow_tree=routes_ok,
    )
