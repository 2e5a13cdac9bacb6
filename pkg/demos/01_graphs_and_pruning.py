"""Star graphs with dashed leaf pairs: parsing, components, pruning, isomorphism.

A graph K(n; i-j, ...) is a star with center 0 and leaves 1..n; the listed
leaf pairs carry dashed edges.  Everything downstream (relations, growth)
depends only on the dashed part, up to relabelling of the leaves.
"""

from tlstar import (
    canonical_form,
    contains_subgraph,
    dashed_components,
    enumerate_graphs,
    is_isomorphic,
    parse_graph,
    prune_isolated_leaves,
)

g = parse_graph("K(6; 1-2, 1-3, 1-5, 1-6, 2-6)")
print("graph:", g)

partition, nu = dashed_components(g)
print("dashed components:", [sorted(p) for p in partition], "-> nu =", nu)

# Leaf 4 touches no dashed edge.  Dropping it leaves the growth of the
# associated algebra unchanged, so analyses work on the pruned graph.
pruned, removed = prune_isolated_leaves(g)
print("pruned:", pruned, "  removed leaves:", removed)

# Isomorphism is decided by a canonical form (minimum over leaf relabellings).
a = parse_graph("K(4; 1-2, 1-3, 1-4)")
b = parse_graph("K(4; 2-1, 2-3, 2-4)")
print(f"\n{a} ~ {b}:", is_isomorphic(a, b))
print("certificates equal:", canonical_form(a) == canonical_form(b))

# Subgraph embeddings map dashed pairs to dashed pairs (injective on leaves).
host = parse_graph("K(5; 1-2, 2-3, 4-5)")
pattern = parse_graph("K(4; 1-2, 3-4)")
emb = contains_subgraph(host, pattern)
print(f"\n{pattern} embeds into {host} via", dict(emb.mapping))

# Enumeration gives one representative per isomorphism class.
for n in range(1, 7):
    print(f"classes on {n} leaves:", len(enumerate_graphs(n)))
