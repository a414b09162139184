"""Level-controlled gossip: BFS leveling, sectoring, and a seeded simulator.

Nodes learn their level (hop count from the base station) and optionally a
sector id (equiangular wedge around the base station). An event message is
rebroadcast toward the base station with a per-level probability, higher
levels gossiping more reluctantly than lower ones, while every link drop is
an independent Bernoulli failure.

Randomness is counter-based: every decision in every trial reads its own
value from a splitmix64 chain keyed by (seed, trial, kind, index), where
kind 0 is a node's forwarding gate (index = node position in vertex order)
and kind 1 is a directed link attempt (index = sender_pos * n + receiver_pos).
Two simulations with the same seed therefore share randomness decision by
decision, which makes per-seed comparisons across parameter values exact
couplings rather than noisy re-rolls, and results reproduce bit-for-bit on
any platform.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, _vkey, is_connected

_MASK64 = (1 << 64) - 1
_GATE = 0
_LINK = 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _draw(seed: int, trial: int, kind: int, index: int) -> float:
    """Uniform value in [0, 1) for one decision; pure function of its key."""
    z = _splitmix64(seed & _MASK64)
    z = _splitmix64((z + trial) & _MASK64)
    z = _splitmix64((z + kind) & _MASK64)
    z = _splitmix64((z + index) & _MASK64)
    return z / 2.0**64


@dataclass(frozen=True)
class LeveledNetwork:
    """A graph whose vertices know their BFS distance from the base station.

    Construction recomputes the BFS distances and rejects any level map
    that disagrees, so holding a LeveledNetwork certifies the invariant
    that adjacent vertices differ by at most one level.
    """

    graph: Graph
    base_station: object
    level: dict
    sector: dict | None = None

    def __post_init__(self):
        truth = _bfs_levels(self.graph, self.base_station)
        if dict(self.level) != truth:
            raise ValueError("level map is not the BFS distance from the base station")
        if self.sector is not None and set(self.sector) != set(self.graph.vertices):
            raise ValueError("sector map does not cover all vertices")

    def max_level(self) -> int:
        return max(self.level.values())


@dataclass(frozen=True)
class GossipConfig:
    """Per-level forwarding probabilities plus channel and run parameters.

    ``level_probabilities[j-1]`` gates forwarding at level j. Levels must be
    strictly decreasing in probability (nearer the base station gossips
    harder) unless ``allow_nonmonotone`` is set, which is recorded so output
    can flag the experiment.
    """

    level_probabilities: tuple
    q: float
    trials: int
    seed: int
    allow_nonmonotone: bool = False

    def __post_init__(self):
        probs = tuple(float(p) for p in self.level_probabilities)
        if not probs:
            raise ValueError("at least one level probability is required")
        for p in probs:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"level probability {p!r} outside [0, 1]")
        if not self.allow_nonmonotone:
            for a, b in zip(probs, probs[1:]):
                if not a > b:
                    raise ValueError(
                        "level probabilities must be strictly decreasing; "
                        "pass allow_nonmonotone to override"
                    )
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"link failure probability {self.q!r} outside [0, 1]")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        object.__setattr__(self, "level_probabilities", probs)
        object.__setattr__(self, "q", float(self.q))
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class SimResult:
    """Aggregates of one simulation run.

    ``mean_hops`` averages the hop count of the first delivery over the
    delivered trials only; it is 0.0 when nothing was delivered (a real
    delivery always takes at least one hop).
    """

    trials: int
    delivered: int
    delivery_ratio: float
    mean_transmissions: float
    mean_hops: float
    seed: int


def _bfs_levels(g: Graph, base_station) -> dict:
    if base_station not in g.vertices:
        raise ValueError(f"base station {base_station!r} is not a vertex")
    if not is_connected(g):
        raise ValueError("graph is disconnected; leveling undefined")
    adj = g.adjacency()
    level = {base_station: 0}
    frontier = [base_station]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in level:
                    level[v] = d
                    nxt.append(v)
        frontier = nxt
    return level


def assign_levels(g: Graph, base_station) -> LeveledNetwork:
    """Label every vertex with its hop distance from the base station."""
    return LeveledNetwork(g, base_station, _bfs_levels(g, base_station))


def assign_sectors(positions: dict, base_station, k: int) -> dict:
    """Equiangular sector ids around the base station.

    sector(v) = floor(theta / (360/K)) with theta the planar angle of v seen
    from the base station, in [0, 360). Angles within 1e-9 degrees of a
    boundary snap onto it, so a vertex at exactly 90 degrees with K=4 lands
    in sector 1. The base station itself gets sector 0.
    """
    if k < 1:
        raise ValueError(f"sector count must be >= 1, got {k}")
    if base_station not in positions:
        raise ValueError(f"no position for base station {base_station!r}")
    bx, by = positions[base_station]
    width = 360.0 / k
    sectors = {}
    for v, (x, y) in positions.items():
        if v == base_station:
            sectors[v] = 0
            continue
        theta = math.degrees(math.atan2(y - by, x - bx)) % 360.0
        t = theta / width
        nearest = round(t)
        sector = nearest if abs(t - nearest) < 1e-9 else math.floor(t)
        sectors[v] = sector % k
    return sectors


def _prepare(net: LeveledNetwork):
    verts = net.graph.vertices
    pos = {v: i for i, v in enumerate(verts)}
    adj = net.graph.adjacency()
    neighbors = {v: sorted(adj[v], key=_vkey) for v in verts}
    downhill = {
        v: [w for w in neighbors[v] if net.level[w] < net.level[v]] for v in verts
    }
    return pos, neighbors, downhill


def _run_trial(net, cfg, source, pos, neighbors, downhill, trial):
    n = len(net.graph.vertices)
    probs = cfg.level_probabilities
    bs = net.base_station
    ok_p = 1.0 - cfg.q

    if source == bs:
        return True, 0, 0

    transmissions = 0
    if _draw(cfg.seed, trial, _GATE, pos[source]) >= probs[net.level[source] - 1]:
        return False, 0, None

    hop_of = {source: 0}
    delivered_hops = None
    queue = deque([source])
    while queue:
        u = queue.popleft()
        # the detecting node broadcasts on every link; relays aim downhill
        targets = neighbors[u] if u == source else downhill[u]
        for v in targets:
            transmissions += 1
            if _draw(cfg.seed, trial, _LINK, pos[u] * n + pos[v]) >= ok_p:
                continue
            if net.level[v] >= net.level[u] or v in hop_of:
                continue
            hop_of[v] = hop_of[u] + 1
            if v == bs:
                if delivered_hops is None:
                    delivered_hops = hop_of[v]
                continue
            if _draw(cfg.seed, trial, _GATE, pos[v]) < probs[net.level[v] - 1]:
                queue.append(v)
    return delivered_hops is not None, transmissions, delivered_hops


def trial_outcomes(net: LeveledNetwork, cfg: GossipConfig, event_source):
    """Yield (delivered, transmissions, hops) for each trial in order.

    ``hops`` is None on undelivered trials. Trials depend only on their own
    keyed draws, so consuming this lazily, partially, or in parallel batches
    cannot change any outcome.
    """
    if event_source not in net.graph.vertices:
        raise ValueError(f"event source {event_source!r} is not a vertex")
    if net.max_level() > len(cfg.level_probabilities):
        raise ValueError(
            f"network has levels up to {net.max_level()} but only "
            f"{len(cfg.level_probabilities)} level probabilities were given"
        )
    pos, neighbors, downhill = _prepare(net)
    for t in range(cfg.trials):
        yield _run_trial(net, cfg, event_source, pos, neighbors, downhill, t)


def simulate_gossip(net: LeveledNetwork, cfg: GossipConfig, event_source) -> SimResult:
    """Monte Carlo of level-controlled gossip from one event source.

    Per trial: the source fires with its level's probability and, if it
    fires, attempts every incident link; each attempt independently survives
    with probability 1-q. A node accepts only messages arriving from a
    strictly higher level and only once per trial; on first acceptance it
    fires its own gate and, if successful, attempts the links to its
    strictly-lower-level neighbors. The base station is a pure sink. A trial
    delivers when the base station accepts.
    """
    delivered = 0
    total_tx = 0
    total_hops = 0
    for ok, tx, hops in trial_outcomes(net, cfg, event_source):
        total_tx += tx
        if ok:
            delivered += 1
            total_hops += hops
    return SimResult(
        trials=cfg.trials,
        delivered=delivered,
        delivery_ratio=delivered / cfg.trials,
        mean_transmissions=total_tx / cfg.trials,
        mean_hops=total_hops / delivered if delivered else 0.0,
        seed=cfg.seed,
    )


def _override(base: GossipConfig, point: dict) -> GossipConfig:
    probs = list(base.level_probabilities)
    q = base.q
    for key, value in point.items():
        if key == "q":
            q = float(value)
        elif key.startswith("P") and key[1:].isdigit():
            j = int(key[1:])
            if not 1 <= j <= len(probs):
                raise ValueError(f"{key} is outside levels 1..{len(probs)}")
            probs[j - 1] = float(value)
        else:
            raise ValueError(f"unknown sweep parameter {key!r}")
    return GossipConfig(
        tuple(probs), q, base.trials, base.seed, base.allow_nonmonotone
    )


def sweep_levels(
    net: LeveledNetwork, base: GossipConfig, event_source, grid
) -> list:
    """Run one simulation per grid point under common random numbers.

    Each grid point is a mapping like {"P2": 0.5} or {"q": 0.1} applied on
    top of the base config. The seed is shared across points and every
    random decision is keyed independently of the parameters, so comparing
    results across the grid compares the same underlying random world.
    Returns [(point, SimResult), ...] in grid order.
    """
    results = []
    for point in grid:
        cfg = _override(base, dict(point))
        results.append((dict(point), simulate_gossip(net, cfg, event_source)))
    return results
