"""
Building the recursive cliques O_n
==================================

O_n joins two smaller cliques through a hub vertex: every vertex of the first
copy points into the hub, and the hub points into every vertex of the second.
"""

from weakdiam2.construct import build_O, optimal_split
from weakdiam2.digraph import is_absolute_clique, is_cut_vertex, to_dot, weak_diameter
from weakdiam2.sequence import x

g = build_O(10)
print(optimal_split(10))
print(g.n, g.num_arcs, x(10), weak_diameter(g))
print(to_dot(g, "O10"))

# The hub (last label) is adjacent to every other vertex and is a cut vertex.
hub = g.n - 1
print("hub degree", g.degree(hub), "cut vertex", is_cut_vertex(g, hub))

# Larger members stay cliques.
for n in (64, 128, 256):
    h = build_O(n)
    print(n, h.num_arcs == x(n), is_absolute_clique(h))
