"""Power graphs, their dominating vertices, and the proper power graph.

Run: python demos/02_power_graphs.py
"""

from powerline.classify import build_group
from powerline.graphs import components, dominating_vertices, to_edge_list
from powerline.power import predicted_dominating, proper_power_graph

for gid in ["Z6", "Z8", "Z12", "Q16", "D4", "Z2xZ4"]:
    g = build_group(gid)
    b = proper_power_graph(g)
    found = dominating_vertices(b.full)
    # the structural prediction must match what the graph says
    assert found == predicted_dominating(g)
    names = ", ".join(g.labels[v] for v in found)
    sizes = sorted(len(c) for c in components(b.proper))
    print(f"{gid:<6} |E(P)|={b.full.edge_count:<4} Dom = {{{names}}}  P** component sizes {sizes}")

# The proper power graph of Z2 x Z4: two triangles sharing (0,2), two isolated vertices.
b = proper_power_graph(build_group("Z2xZ4"))
print(to_edge_list(b.proper), end="")
print("vertex names:", " ".join(b.proper.labels))
