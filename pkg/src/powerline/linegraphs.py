"""Line graphs, two independent line-graph deciders, and root reconstruction.

The forbidden-pattern decider looks for one of the nine Beineke graphs as an
induced subgraph.  The Krausz decider searches for a partition of the edge
set into cliques with every vertex in at most two cells.  They share no code
beyond the graph container, so agreement between them is meaningful.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .graphs import (
    GraphSizeError,
    SimpleGraph,
    beineke_patterns,
    components,
    contains_induced,
    induced,
    make_graph,
)
from .groups import bits

PATTERN_CAP = int(os.environ.get("POWERLINE_PATTERN_CAP", "64"))


def line_graph(g: SimpleGraph) -> SimpleGraph:
    edges = g.edges()
    at: list[int] = [0] * g.n  # bitmask of incident edge ids per vertex
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    rows = tuple((at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    labels = tuple(f"{g.label(u)}-{g.label(v)}" for u, v in edges)
    return SimpleGraph(rows, labels)


# -- forbidden subgraphs -------------------------------------------------


@dataclass(frozen=True)
class ForbiddenVerdict:
    is_line: bool
    pattern: str | None = None
    vertices: tuple[int, ...] | None = None

    def witness_json(self, g: SimpleGraph) -> dict | None:
        if self.is_line:
            return None
        return {"pattern": self.pattern, "vertices": [g.label(v) for v in self.vertices]}


def _search_order():
    # the claw rules out most power graphs, so it goes first
    return sorted(beineke_patterns(), key=lambda p: (p.graph.n, p.name))


def is_line_graph_forbidden(g: SimpleGraph, cap: int | None = None) -> ForbiddenVerdict:
    cap = PATTERN_CAP if cap is None else cap
    if g.n > cap:
        raise GraphSizeError(f"forbidden-pattern search refused: {g.n} vertices > cap {cap}")
    for p in _search_order():
        hit = contains_induced(g, p.graph)
        if hit is not None:
            return ForbiddenVerdict(False, p.name, hit)
    return ForbiddenVerdict(True)


# -- Krausz partitions ---------------------------------------------------


@dataclass(frozen=True)
class KrauszPartition:
    cells: tuple[tuple[int, ...], ...]

    def cells_of(self, n: int) -> list[list[int]]:
        at: list[list[int]] = [[] for _ in range(n)]
        for i, c in enumerate(self.cells):
            for v in c:
                at[v].append(i)
        return at


def _component_partition(g: SimpleGraph, comp: list[int]) -> list[int] | None:
    """Cells (as bitmasks) covering the edges of one component, or None."""
    rows = g.rows
    covered = {v: 0 for v in comp}
    count = {v: 0 for v in comp}
    cells: list[int] = []

    def next_edge() -> tuple[int, int] | None:
        for u in comp:
            rest = rows[u] & ~covered[u]
            if rest:
                return u, (rest & -rest).bit_length() - 1
        return None

    def place(mask: int) -> bool:
        members = bits(mask)
        for x in members:
            if count[x] >= 2 or covered[x] & mask or (rows[x] | 1 << x) & mask != mask:
                return False
        for x in members:
            if count[x] == 1 and (covered[x] | mask & ~(1 << x)) != rows[x]:
                # second cell at x must finish off x's edges
                return False
        return True

    def search() -> bool:
        edge = next_edge()
        if edge is None:
            return True
        u, v = edge
        common = rows[u] & rows[v]
        base = 1 << u | 1 << v
        # every common neighbour but at most one joins the cell of uv
        options = [base | common] + [base | common & ~(1 << w) for w in bits(common)]
        for mask in options:
            if not place(mask):
                continue
            members = bits(mask)
            for x in members:
                covered[x] |= mask & ~(1 << x)
                count[x] += 1
            cells.append(mask)
            if search():
                return True
            cells.pop()
            for x in members:
                covered[x] &= ~(mask & ~(1 << x))
                count[x] -= 1
        return False

    return cells if search() else None


def krausz_recognize(g: SimpleGraph) -> KrauszPartition | None:
    """A Krausz clique partition of ``g`` if it is a line graph, else None."""
    cells: list[tuple[int, ...]] = []
    for comp in components(g):
        if len(comp) == 1:
            continue
        found = _component_partition(g, comp)
        if found is None:
            return None
        cells.extend(tuple(bits(m)) for m in found)
    cells.sort()
    return KrauszPartition(tuple(cells))


def is_valid_partition(g: SimpleGraph, part: KrauszPartition) -> bool:
    seen = [0] * g.n
    for cell in part.cells:
        if len(cell) < 2:
            return False
        mask = sum(1 << v for v in cell)
        for v in cell:
            others = mask & ~(1 << v)
            if g.rows[v] & others != others or seen[v] & others:
                return False
            seen[v] |= others
    return seen == list(g.rows) and all(len(c) <= 2 for c in part.cells_of(g.n))


# -- root graphs ---------------------------------------------------------


@dataclass(frozen=True)
class RootGraphResult:
    root: SimpleGraph
    partition: KrauszPartition
    ambiguous_components: tuple[int, ...] = field(default=())


def root_graph(g: SimpleGraph) -> RootGraphResult | None:
    """A graph H with L(H) isomorphic to ``g``, built from a Krausz partition.

    Triangle components could come from K_3 or K_{1,3}; they are rooted as
    K_3 and their component ids are reported in ``ambiguous_components``.
    """
    part = krausz_recognize(g)
    if part is None:
        return None
    if g.n == 0:
        return RootGraphResult(make_graph(1, []), part)
    comps = components(g)
    ambiguous = []
    cells = list(part.cells)
    for cid, comp in enumerate(comps):
        if len(comp) == 3 and induced(g, comp).edge_count == 3:
            ambiguous.append(cid)
            cells.remove(tuple(comp))
            a, b, c = comp
            cells.extend([(a, b), (a, c), (b, c)])
    cells.sort()
    part = KrauszPartition(tuple(cells))
    at = part.cells_of(g.n)
    next_vertex = len(cells)
    edges = []
    for x in range(g.n):
        ends = list(at[x])
        while len(ends) < 2:
            ends.append(next_vertex)
            next_vertex += 1
        edges.append((ends[0], ends[1]))
    return RootGraphResult(make_graph(next_vertex, edges), part, tuple(ambiguous))


# -- catalog self-test ---------------------------------------------------


@dataclass
class SelfTestReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def beineke_catalog_selftest() -> SelfTestReport:
    """Every pattern must be a minimal non-line graph under the Krausz decider."""
    violations = []
    for p in beineke_patterns():
        if krausz_recognize(p.graph) is not None:
            violations.append(f"{p.name}: recognised as a line graph")
        for v in range(p.graph.n):
            rest = induced(p.graph, [w for w in range(p.graph.n) if w != v])
            if krausz_recognize(rest) is None:
                violations.append(f"{p.name}: deleting vertex {p.graph.label(v)} leaves a non-line graph")
    return SelfTestReport(violations)
