"""
Ribbon graphs and their polynomial
==================================

Build a few small ribbon graphs, count boundary components of their spanning
subgraphs, and compute R(X, Y, Z) by the subgraph sum and by
deletion/contraction.
"""

from ribbonpoly import (
    RibbonGraph,
    boundary_components,
    classify_edge,
    parse_graph,
    reduce,
    state_sum,
    stats,
)

##############################################################################
# A ribbon graph is a rotation system: each vertex lists the ends of its
# edges in cyclic order, and each edge is twisted or not.  A single
# untwisted loop is an annulus with two boundary circles; twisting it gives
# a Möbius band with one.

loop = RibbonGraph.build({"v": ["e.a", "e.b"]}, {"e": 0})
mobius = RibbonGraph.build({"v": ["e.a", "e.b"]}, {"e": 1})
print("annulus boundary:", boundary_components(loop))
print("Möbius boundary: ", boundary_components(mobius))

##############################################################################
# Graphs can also be read from the ``ribbon v1`` text format.  This one is a
# triangle with a twisted edge and a loop hanging off one corner.

text = """
ribbon v1
vertex u: ab.a ca.b l.a l.b
vertex v: bc.a ab.b
vertex w: ca.a bc.b
edge ab 0
edge bc 1
edge ca 0
edge l 0
"""
g = parse_graph(text)
for e in g.edge_names:
    print(f"{e}: {classify_edge(g, e).value}")
print(stats(g))

##############################################################################
# The subgraph sum visits all 2^E spanning subgraphs.  It accumulates in the
# shifted variable ``x = X - 1`` and converts on request.

p_sum = state_sum(g)
print("state sum (x basis):", p_sum)
print("state sum (X basis):", p_sum.to_basis("X"))

##############################################################################
# Deletion/contraction reaches the same polynomial through terminal forms.

p_red = reduce(g)
print("reduce:             ", p_red)
assert p_red == p_sum
