"""Power graph P(G), deleted power graph P*(G) and proper power graph P**(G)."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, dominating_vertices, induced
from .groups import FiniteGroup, prime_power_base


def power_graph(g: FiniteGroup) -> SimpleGraph:
    """Elements of ``g``; distinct u, v adjacent iff one lies in the cyclic subgroup of the other."""
    masks = g.cyclic_masks
    n = g.order
    rows = []
    for u in range(n):
        r = 0
        for v in range(n):
            if u == v:
                continue
            member = masks[v] >> u & 1 or masks[u] >> v & 1
            nested = masks[u] & ~masks[v] == 0 or masks[v] & ~masks[u] == 0
            assert bool(member) == nested
            if member:
                r |= 1 << v
        rows.append(r)
    return SimpleGraph(tuple(rows), g.labels)


@dataclass(frozen=True)
class PowerGraphBundle:
    full: SimpleGraph
    deleted: SimpleGraph
    proper: SimpleGraph
    dom: tuple[int, ...]
    deleted_elements: tuple[int, ...]
    proper_elements: tuple[int, ...]

    def graph(self, kind: str) -> SimpleGraph:
        return {"power": self.full, "deleted": self.deleted, "proper": self.proper}[kind]

    def elements(self, kind: str) -> tuple[int, ...]:
        if kind == "power":
            return tuple(range(self.full.n))
        return {"deleted": self.deleted_elements, "proper": self.proper_elements}[kind]


def deleted_power_graph(g: FiniteGroup) -> SimpleGraph:
    return induced(power_graph(g), range(1, g.order))


def proper_power_graph(g: FiniteGroup) -> PowerGraphBundle:
    full = power_graph(g)
    dom = tuple(dominating_vertices(full))
    removed = set(dom)
    keep = tuple(v for v in range(g.order) if v not in removed)
    deleted_elements = tuple(range(1, g.order))
    return PowerGraphBundle(
        full=full,
        deleted=induced(full, deleted_elements),
        proper=induced(full, keep),
        dom=dom,
        deleted_elements=deleted_elements,
        proper_elements=keep,
    )


def is_generalized_quaternion(g: FiniteGroup) -> bool:
    """Non-cyclic 2-group with a single involution."""
    return (
        prime_power_base(g.order) == 2
        and not g.is_cyclic
        and sum(1 for k in g.orders if k == 2) == 1
    )


def predicted_dominating(g: FiniteGroup) -> list[int]:
    """Dominating vertices of P(G) read off the group structure alone."""
    n = g.order
    if g.is_cyclic and (n == 1 or prime_power_base(n) is not None):
        return list(range(n))
    out = {0}
    if g.is_cyclic:
        out.update(x for x in range(n) if g.orders[x] == n)
    if is_generalized_quaternion(g):
        out.add(g.orders.index(2))
    return sorted(out)
