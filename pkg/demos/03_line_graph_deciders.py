"""Two independent ways to decide whether a graph is a line graph.

The first looks for one of nine small forbidden induced subgraphs; the
second tries to split the edges into cliques with no vertex in more than two.

Run: python demos/03_line_graph_deciders.py
"""

import random

from powerline.classify import build_group
from powerline.graphs import make_graph, pattern
from powerline.linegraphs import beineke_catalog_selftest, is_line_graph_forbidden, krausz_recognize, root_graph
from powerline.power import proper_power_graph

print("catalog self-test violations:", beineke_catalog_selftest().violations)
print("Gamma4 edges:", pattern("Gamma4").edges())

for gid in ["Z6", "Z12", "Z15", "Z18", "Z30", "Z60"]:
    proper = proper_power_graph(build_group(gid)).proper
    forb = is_line_graph_forbidden(proper)
    part = krausz_recognize(proper)
    assert forb.is_line == (part is not None)
    if forb.is_line:
        print(f"P**({gid}) is a line graph; cells {[[proper.label(v) for v in c] for c in part.cells]}")
    else:
        print(f"P**({gid}) is not; induced {forb.pattern} on {forb.witness_json(proper)['vertices']}")

# A root graph exists whenever a partition does.
r = root_graph(proper_power_graph(build_group("Z15")).proper)
print("root of P**(Z15): degrees", sorted(r.root.degrees, reverse=True))

# Agreement on random graphs is the cheap sanity check for both deciders.
rnd = random.Random(7)
agree = 0
for _ in range(300):
    n = rnd.randint(4, 14)
    g = make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.4])
    agree += is_line_graph_forbidden(g).is_line == (krausz_recognize(g) is not None)
print(f"deciders agree on {agree}/300 random graphs")
