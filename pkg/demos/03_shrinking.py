"""
Removing a vertex while losing arcs
===================================

Any clique on n + 1 vertices can be turned into a clique on n vertices with
strictly fewer arcs. Push the in-neighbours of a vertex w one by one. If some
push breaks the clique property, merge the pushed vertex with an agreeing
partner. Otherwise w becomes a source and can be deleted.
"""

from weakdiam2.construct import build_O
from weakdiam2.digraph import push, shrink_chain, shrink_step, unseen_pairs

g = build_O(6)

# Pushing can break the clique, but only for pairs through the pushed vertex.
print(unseen_pairs(push(g, 0)))

step = shrink_step(g)
print(step.branch, step.w, step.pushed, step.pair, step.graph.num_arcs)

# Repeating down to a single vertex gives a strictly decreasing arc sequence.
g = build_O(20)
steps = shrink_chain(g)
print([g.num_arcs] + [s.graph.num_arcs for s in steps])
print([s.branch for s in steps])
