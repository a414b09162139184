"""Graphs, degree-distribution entropy, spanning trees, and MSTs.

The entropy of a graph here is the Shannon entropy of its degree
distribution: each vertex gets probability deg(v) divided by the total
degree. Conditional entropy, mutual information against a vertex coloring,
Tsallis entropy, and Kullback-Leibler divergence between two graphs all
derive from the same distribution. Spanning-tree enumeration is exhaustive
(guarded by size) and cross-checked against the matrix-tree determinant so
a bug in either route cannot pass silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .source_coding import ProbabilityMassFunction, shannon_entropy

ENUMERATION_GUARD = 9
_WEIGHT_TIE_TOL = 1e-9


class InfiniteDivergence(ValueError):
    """KL divergence is +infinity: the second pmf has a zero where the first does not."""


def _vkey(v):
    """Total order over mixed int/str vertex ids: ints first, then strings."""
    if isinstance(v, int) and not isinstance(v, bool):
        return (0, v, "")
    return (1, 0, str(v))


def _canonical_pair(u, v):
    return (u, v) if _vkey(u) <= _vkey(v) else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected graph: ordered vertex ids, edges without loops or repeats."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex ids")
        vset = set(verts)
        canon = []
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u!r}, {v!r}) references unknown vertex")
            pair = _canonical_pair(u, v)
            if pair in seen:
                raise ValueError(f"repeated edge ({u!r}, {v!r})")
            seen.add(pair)
            canon.append(pair)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(canon))

    def degree(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def has_edge(self, u, v) -> bool:
        return _canonical_pair(u, v) in set(self.edges)


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph whose edges carry finite nonnegative weights."""

    vertices: tuple
    edges: tuple  # (u, v, w) triples

    def __post_init__(self):
        plain = []
        canon = []
        for e in self.edges:
            u, v, w = e
            w = float(w)
            if not (math.isfinite(w) and w >= 0.0):
                raise ValueError(f"edge ({u!r}, {v!r}) has invalid weight {w!r}")
            cu, cv = _canonical_pair(u, v)
            plain.append((cu, cv))
            canon.append((cu, cv, w))
        # Graph construction validates endpoints, loops, repeats
        Graph(tuple(self.vertices), tuple(plain))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(canon))

    def graph(self) -> Graph:
        return Graph(self.vertices, tuple((u, v) for u, v, _ in self.edges))

    def weight_of(self, u, v) -> float:
        pair = _canonical_pair(u, v)
        for a, b, w in self.edges:
            if (a, b) == pair:
                return w
        raise KeyError(f"no edge ({u!r}, {v!r})")

    def total_weight(self) -> float:
        return math.fsum(w for _, _, w in self.edges)


@dataclass(frozen=True)
class DiGraph:
    """Directed graph: ordered vertices, arc set without self-loops."""

    vertices: tuple
    arcs: tuple

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex ids")
        vset = set(verts)
        seen = set()
        for a in self.arcs:
            u, v = a
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise ValueError(f"arc ({u!r}, {v!r}) references unknown vertex")
            if (u, v) in seen:
                raise ValueError(f"repeated arc ({u!r}, {v!r})")
            seen.add((u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))


@dataclass(frozen=True)
class VertexColoring:
    """Assignment of a color label to each vertex it mentions."""

    entries: tuple

    def __post_init__(self):
        verts = [v for v, _ in self.entries]
        if len(set(verts)) != len(verts):
            raise ValueError("vertex colored twice")
        object.__setattr__(self, "entries", tuple(tuple(e) for e in self.entries))

    @classmethod
    def from_dict(cls, mapping) -> "VertexColoring":
        return cls(tuple(mapping.items()))

    def color_of(self, v):
        for vertex, color in self.entries:
            if vertex == v:
                return color
        raise KeyError(v)

    def as_dict(self) -> dict:
        return dict(self.entries)


# ------------------------------------------------------------- degree pmfs


def _degree_distribution(g: Graph) -> list:
    """(vertex, probability) pairs in vertex order; requires an edge."""
    deg = g.degree()
    total = sum(deg.values())
    if total == 0:
        raise ValueError("graph has no edges; degree distribution undefined")
    return [(v, deg[v] / total) for v in g.vertices]


def degree_pmf(g: Graph) -> ProbabilityMassFunction:
    """deg(v) normalized by the total degree, one entry per vertex."""
    return ProbabilityMassFunction.from_pairs(_degree_distribution(g))


def graph_entropy(g: Graph) -> float:
    """Shannon entropy of the degree distribution, in bits."""
    return shannon_entropy(degree_pmf(g), base=2.0)


def tsallis_graph_entropy(g: Graph, q: float) -> float:
    """Tsallis entropy (1 - sum p**q) / (q - 1) of the degree distribution.

    q must differ from 1; as q approaches 1 the value approaches the Shannon
    entropy in nats. Zero-probability vertices contribute nothing.
    """
    if q == 1.0:
        raise ValueError("q=1 is the Shannon case; use graph_entropy")
    s = math.fsum(p**q for _, p in _degree_distribution(g) if p > 0.0)
    return (1.0 - s) / (q - 1.0)


def conditional_graph_entropy(g: Graph, coloring: VertexColoring) -> float:
    """H(V|C) in bits: class entropies weighted by degree-probability mass.

    Weighting each color class by its share of the degree distribution keeps
    the chain rule H(V) = H(C) + H(V|C) exact. The coloring must cover every
    vertex.
    """
    dist = _degree_distribution(g)
    colors = coloring.as_dict()
    missing = [v for v, _ in dist if v not in colors]
    if missing:
        raise ValueError(f"coloring misses vertices: {missing!r}")
    classes: dict = {}
    for v, p in dist:
        classes.setdefault(colors[v], []).append(p)
    total = 0.0
    for probs in classes.values():
        mass = math.fsum(probs)
        if mass <= 0.0:
            continue
        inner = -math.fsum(
            (p / mass) * math.log2(p / mass) for p in probs if p > 0.0
        )
        total += mass * inner
    return total


def graph_mutual_information(g: Graph, coloring: VertexColoring) -> float:
    """I(V;C) = H(V) - H(V|C) in bits; nonnegative."""
    return graph_entropy(g) - conditional_graph_entropy(g, coloring)


def graph_kl_divergence(g1: Graph, g2: Graph, correspondence: dict | None = None) -> float:
    """KL divergence between the degree distributions of two graphs, in bits.

    ``correspondence`` maps each g1 vertex to a distinct g2 vertex; identity
    is assumed when omitted and the vertex id sets coincide. Raises
    :class:`InfiniteDivergence` when g2 gives zero probability to a vertex
    g1 gives positive probability.
    """
    if len(g1.vertices) != len(g2.vertices):
        raise ValueError(
            f"vertex counts differ: {len(g1.vertices)} vs {len(g2.vertices)}"
        )
    if correspondence is None:
        if set(g1.vertices) != set(g2.vertices):
            raise ValueError(
                "vertex id sets differ; an explicit correspondence is required"
            )
        correspondence = {v: v for v in g1.vertices}
    if set(correspondence.keys()) != set(g1.vertices):
        raise ValueError("correspondence does not cover the first graph's vertices")
    images = list(correspondence.values())
    if len(set(images)) != len(images) or set(images) != set(g2.vertices):
        raise ValueError("correspondence is not a bijection onto the second graph")

    p1 = dict(_degree_distribution(g1))
    p2 = dict(_degree_distribution(g2))
    total = 0.0
    for v in g1.vertices:
        p = p1[v]
        if p <= 0.0:
            continue
        qv = p2[correspondence[v]]
        if qv <= 0.0:
            raise InfiniteDivergence(
                f"vertex {correspondence[v]!r} has zero degree in the second graph"
            )
        total += p * math.log2(p / qv)
    return total


def in_out_degree_pmfs(g: DiGraph) -> tuple[ProbabilityMassFunction, ProbabilityMassFunction]:
    """In-degree and out-degree distributions, each normalized by arc count."""
    if not g.arcs:
        raise ValueError("digraph has no arcs; degree distributions undefined")
    n_arcs = len(g.arcs)
    indeg = {v: 0 for v in g.vertices}
    outdeg = {v: 0 for v in g.vertices}
    for u, v in g.arcs:
        outdeg[u] += 1
        indeg[v] += 1
    in_pmf = ProbabilityMassFunction.from_pairs(
        (v, indeg[v] / n_arcs) for v in g.vertices
    )
    out_pmf = ProbabilityMassFunction.from_pairs(
        (v, outdeg[v] / n_arcs) for v in g.vertices
    )
    return in_pmf, out_pmf


def is_regular(g: Graph):
    """The common degree when all vertices share one, else None.

    For a regular graph on n vertices the degree distribution is uniform, so
    graph_entropy equals log2 n, its maximum.
    """
    degrees = set(g.degree().values())
    if len(degrees) == 1:
        return degrees.pop()
    return None


# ---------------------------------------------------------- spanning trees


def is_connected(g: Graph) -> bool:
    if not g.vertices:
        return True
    adj = g.adjacency()
    seen = {g.vertices[0]}
    frontier = [g.vertices[0]]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return len(seen) == len(g.vertices)


def _find(parent: list, x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _int_determinant(m: list) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _matrix_tree_count(g: Graph) -> int:
    """Number of spanning trees from the Laplacian minor determinant."""
    n = len(g.vertices)
    if n <= 1:
        return 1
    idx = {v: i for i, v in enumerate(g.vertices)}
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        iu, iv = idx[u], idx[v]
        lap[iu][iu] += 1
        lap[iv][iv] += 1
        lap[iu][iv] -= 1
        lap[iv][iu] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _int_determinant(minor)


def enumerate_spanning_trees(g: Graph) -> list:
    """Every spanning tree, in a deterministic order.

    Exhaustive include/exclude search over edges in canonical order, pruned
    by reachability, then cross-checked against the matrix-tree determinant.
    Guarded to graphs of at most ``ENUMERATION_GUARD`` vertices.
    """
    n = len(g.vertices)
    if n > ENUMERATION_GUARD:
        raise ValueError(
            f"{n} vertices exceeds the enumeration guard of {ENUMERATION_GUARD}"
        )
    if not is_connected(g):
        raise ValueError("graph is disconnected; it has no spanning tree")
    if n <= 1:
        return [Graph(g.vertices, ())]

    idx = {v: i for i, v in enumerate(g.vertices)}
    edges = sorted(g.edges, key=lambda e: (_vkey(e[0]), _vkey(e[1])))
    trees: list = []

    def feasible(i: int, parent: list, ncomp: int) -> bool:
        # can the remaining edges still join every component?
        test = parent[:]
        c = ncomp
        for u, v in edges[i:]:
            ru, rv = _find(test, idx[u]), _find(test, idx[v])
            if ru != rv:
                test[ru] = rv
                c -= 1
                if c == 1:
                    return True
        return c == 1

    def rec(i: int, parent: list, ncomp: int, chosen: tuple):
        if ncomp == 1:
            trees.append(chosen)
            return
        if i == len(edges) or not feasible(i, parent, ncomp):
            return
        u, v = edges[i]
        ru, rv = _find(parent, idx[u]), _find(parent, idx[v])
        if ru != rv:
            inc = parent[:]
            inc[ru] = rv
            rec(i + 1, inc, ncomp - 1, chosen + (edges[i],))
        rec(i + 1, parent, ncomp, chosen)

    rec(0, list(range(n)), n, ())

    expected = _matrix_tree_count(g)
    if len(trees) != expected:
        raise RuntimeError(
            f"enumeration found {len(trees)} spanning trees but the "
            f"matrix-tree determinant gives {expected}"
        )
    return [Graph(g.vertices, t) for t in trees]


def spanning_tree_entropy_extrema(g: Graph):
    """(min, max, argmin tree, argmax tree) of entropy over all spanning trees.

    Ties resolve to the first tree in enumeration order.
    """
    trees = enumerate_spanning_trees(g)
    if len(g.vertices) <= 1 or not trees[0].edges:
        raise ValueError("spanning trees of a trivial graph have no edges")
    best_lo = best_hi = None
    arg_lo = arg_hi = None
    for t in trees:
        h = graph_entropy(t)
        if best_lo is None or h < best_lo:
            best_lo, arg_lo = h, t
        if best_hi is None or h > best_hi:
            best_hi, arg_hi = h, t
    return best_lo, best_hi, arg_lo, arg_hi


def minimum_spanning_tree(g: WeightedGraph) -> WeightedGraph:
    """Kruskal MST; ties broken by weight then canonical endpoint order."""
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    order = sorted(g.edges, key=lambda e: (e[2], _vkey(e[0]), _vkey(e[1])))
    parent = list(range(n))
    picked = []
    for u, v, w in order:
        ru, rv = _find(parent, idx[u]), _find(parent, idx[v])
        if ru != rv:
            parent[ru] = rv
            picked.append((u, v, w))
            if len(picked) == n - 1:
                break
    if len(picked) != max(n - 1, 0):
        raise ValueError("graph is disconnected; it has no spanning tree")
    return WeightedGraph(g.vertices, tuple(picked))


def mst_entropy_extrema(g: WeightedGraph) -> tuple[float, float]:
    """Entropy extrema over every spanning tree of minimum total weight."""
    bare = g.graph()
    trees = enumerate_spanning_trees(bare)
    if not trees or not trees[0].edges:
        raise ValueError("trivial graph; no tree entropy defined")
    weights = []
    for t in trees:
        weights.append(math.fsum(g.weight_of(u, v) for u, v in t.edges))
    best = min(weights)
    lo = hi = None
    for t, w in zip(trees, weights):
        if w > best + _WEIGHT_TIE_TOL:
            continue
        h = graph_entropy(t)
        if lo is None or h < lo:
            lo = h
        if hi is None or h > hi:
            hi = h
    return lo, hi


# -------------------------------------------------------- common topologies


def ring_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a ring needs at least 3 vertices")
    verts = tuple(range(n))
    return Graph(verts, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("a complete graph needs at least 2 vertices")
    verts = tuple(range(n))
    return Graph(
        verts, tuple((i, j) for i in range(n) for j in range(i + 1, n))
    )


def star_graph(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError("a star needs at least 1 leaf")
    verts = tuple(range(leaves + 1))
    return Graph(verts, tuple((0, i) for i in range(1, leaves + 1)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    verts = tuple(range(n))
    return Graph(verts, tuple((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(tuple(range(10)), tuple(outer + spokes + inner))
