"""Building finite groups from Cayley tables and asking structural questions.

Run: python demos/01_groups.py
"""

from powerline.groups import (
    center,
    direct_product,
    exponent,
    is_nilpotent,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_heisenberg,
    make_modular_maximal_cyclic,
    maximal_cyclic_subgroups,
)

# Every group is a dense Cayley table with the identity at index 0.
d4 = make_dihedral(4)
print(d4, "labels:", " ".join(d4.labels))
print("element orders:", d4.orders)

# Products index the pair (a, b) as a*|h| + b.
g = direct_product(make_cyclic(2), make_cyclic(4))
print(g, "labels:", " ".join(g.labels))

# Nilpotency is decided by checking that each prime's elements form a subgroup.
for grp in [make_dihedral(3), make_dihedral(8), make_generalized_quaternion(4), make_cyclic(12)]:
    print(f"{grp.family:<16} order {grp.order:>3}  nilpotent={is_nilpotent(grp)}")

# Two non-abelian groups of order 27: exponent 3 against exponent 9.
for grp in [make_heisenberg(3), make_modular_maximal_cyclic(3)]:
    sizes = [len(s) for s in maximal_cyclic_subgroups(grp)]
    print(f"{grp.family:<16} exponent {exponent(grp)}  |Z(G)|={len(center(grp))}  maximal cyclic sizes {sizes}")
