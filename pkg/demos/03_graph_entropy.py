"""
How much structure does a topology hide?
========================================

Normalizing vertex degrees into a distribution gives every graph an entropy.
Uniform-degree graphs score the maximum log2(n); lopsided ones score less.
"""

import math

from prefixcast import (
    VertexColoring,
    complete_graph,
    conditional_graph_entropy,
    graph_entropy,
    graph_kl_divergence,
    graph_mutual_information,
    is_regular,
    path_graph,
    petersen_graph,
    ring_graph,
    star_graph,
    tsallis_graph_entropy,
)

for n in (4, 8, 16):
    ring = ring_graph(n)
    full = complete_graph(n)
    star = star_graph(n - 1)
    print(f"n={n:2d}  ring {graph_entropy(ring):.4f}"
          f"  complete {graph_entropy(full):.4f}"
          f"  star {graph_entropy(star):.4f}"
          f"  ceiling {math.log2(n):.4f}")

# Rings and complete graphs are regular, hence the ceiling. But they are not
# alone up there. Any regular graph lands on it, like this 3-regular one on
# ten vertices that is neither a ring nor complete.
pete = petersen_graph()
print("petersen: regular degree", is_regular(pete),
      "entropy", graph_entropy(pete), "= log2(10)?",
      abs(graph_entropy(pete) - math.log2(10)) < 1e-12)

# A generalized entropy that weighs rare degrees differently. q=1 itself is
# excluded (that is the Shannon case) but the limit from both sides lands on
# the ordinary entropy measured in nats.
p5 = path_graph(5)
for q in (0.5, 0.9999, 1.0001, 2.0):
    print(f"  tsallis q={q}: {tsallis_graph_entropy(p5, q):.6f}")
print("  shannon in nats:", graph_entropy(p5) * math.log(2))

print()

# Conditioning on a vertex partition splits the entropy additively.
coloring = VertexColoring.from_dict(
    {0: "end", 1: "mid", 2: "mid", 3: "mid", 4: "end"}
)
h = graph_entropy(p5)
h_given = conditional_graph_entropy(p5, coloring)
mi = graph_mutual_information(p5, coloring)
print("path on 5 vertices: H", round(h, 6),
      " H|color", round(h_given, 6), " MI", round(mi, 6))
print("chain rule residue", h - (h_given + mi))

# Divergence between two topologies on the same vertex count.
print("KL star(4) vs path(5):",
      graph_kl_divergence(star_graph(4), path_graph(5)), "bits")
