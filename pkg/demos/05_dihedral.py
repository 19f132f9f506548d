"""Proper power graphs of dihedral groups.

Only the identity dominates P(D_n), and every reflection is adjacent to it
alone, so P**(D_n) is P*(Z_n) plus n isolated vertices.  Whether it is a line
graph is therefore decided by the rotation subgroup: this happens when n is a
prime power and also for n = 6.  D_n itself is nilpotent only when n is a
power of two.

Run: python demos/05_dihedral.py
"""

from powerline.classify import build_group
from powerline.groups import factorize, is_nilpotent
from powerline.linegraphs import is_line_graph_forbidden, krausz_recognize
from powerline.power import proper_power_graph

for n in range(3, 33):
    g = build_group(f"D{n}")
    proper = proper_power_graph(g).proper
    line = krausz_recognize(proper) is not None
    forb = is_line_graph_forbidden(proper)
    assert forb.is_line == line
    witness = "" if line else f"  witness {forb.pattern}"
    shape = "x".join(f"{p}^{e}" for p, e in sorted(factorize(n).items()))
    print(f"D{n:<3} n={shape:<10} nilpotent={is_nilpotent(g)!s:<5} line={line}{witness}")
