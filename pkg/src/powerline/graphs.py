"""Small undirected simple graphs on bitset adjacency rows.

Vertex ``i`` has neighbourhood ``rows[i]``, a Python int whose bit ``j`` is
set iff ``i ~ j``.  Graphs are immutable; every builder returns a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Iterable, Sequence

from .groups import bits

ISO_CAP = 64
PATTERN_MAX = 6


class GraphError(ValueError):
    pass


class GraphSizeError(GraphError):
    """A size cap of a search routine was exceeded."""


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGraph) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def make_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> SimpleGraph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    if labels is not None and len(labels) != n:
        raise GraphError("label count does not match vertex count")
    return SimpleGraph(tuple(rows), tuple(labels) if labels is not None else None)


def empty(n: int = 0) -> SimpleGraph:
    return make_graph(n, [])


def complete(k: int) -> SimpleGraph:
    return make_graph(k, combinations(range(k), 2))


def star(k: int) -> SimpleGraph:
    """K_{1,k} with the centre at vertex 0."""
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def path(k: int) -> SimpleGraph:
    """Path on k vertices."""
    return make_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> SimpleGraph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


def induced(g: SimpleGraph, s: Iterable[int]) -> SimpleGraph:
    """Subgraph on the vertices ``s``, renumbered in the given order."""
    s = list(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(s)}
    rows = []
    for v in s:
        r = 0
        for w in bits(g.rows[v]):
            if w in pos:
                r |= 1 << pos[w]
        rows.append(r)
    labels = tuple(g.label(v) for v in s) if g.labels else None
    return SimpleGraph(tuple(rows), labels)


def dominating_vertices(g: SimpleGraph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def disjoint_union(parts: Sequence[SimpleGraph]) -> SimpleGraph:
    rows, labels, offset = [], [], 0
    for p in parts:
        rows.extend(r << offset for r in p.rows)
        labels.extend(p.label(v) for v in range(p.n))
        offset += p.n
    keep = any(p.labels for p in parts)
    return SimpleGraph(tuple(rows), tuple(labels) if keep else None)


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = reach = 1 << v
        while reach:
            nxt = 0
            for w in bits(reach):
                nxt |= g.rows[w]
            reach = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(bits(comp))
    return out


# -- isomorphism ---------------------------------------------------------


def _refine(a: SimpleGraph, b: SimpleGraph) -> tuple[list[int], list[int]]:
    """Colour refinement run jointly so colours are comparable across graphs."""
    ca, cb = list(a.degrees), list(b.degrees)
    while True:
        sig_a = [(ca[v], tuple(sorted(ca[w] for w in a.neighbors(v)))) for v in range(a.n)]
        sig_b = [(cb[v], tuple(sorted(cb[w] for w in b.neighbors(v)))) for v in range(b.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        na, nb = [palette[s] for s in sig_a], [palette[s] for s in sig_b]
        if len(set(na) | set(nb)) == len(set(ca) | set(cb)):
            return na, nb
        ca, cb = na, nb


def find_isomorphism(a: SimpleGraph, b: SimpleGraph, cap: int = ISO_CAP) -> list[int] | None:
    """A vertex map ``f`` with ``u ~ v`` iff ``f[u] ~ f[v]``, or None."""
    if max(a.n, b.n) > cap:
        raise GraphSizeError(f"isomorphism test is capped at {cap} vertices")
    if a.n != b.n or a.edge_count != b.edge_count or sorted(a.degrees) != sorted(b.degrees):
        return None
    ca, cb = _refine(a, b)
    if sorted(ca) != sorted(cb):
        return None
    # rarest colour first, then keep the search connected
    freq = {c: ca.count(c) for c in ca}
    order: list[int] = []
    placed = 0
    while len(order) < a.n:
        frontier = [v for v in range(a.n) if not placed >> v & 1 and a.rows[v] & placed]
        pool = frontier or [v for v in range(a.n) if not placed >> v & 1]
        v = min(pool, key=lambda x: (freq[ca[x]], -a.degrees[x], x))
        order.append(v)
        placed |= 1 << v
    by_colour: dict[int, int] = {}
    for w in range(b.n):
        by_colour[cb[w]] = by_colour.get(cb[w], 0) | 1 << w
    image = [-1] * a.n

    def extend(depth: int, used: int) -> bool:
        if depth == a.n:
            return True
        v = order[depth]
        cand = by_colour[ca[v]] & ~used
        for u in order[:depth]:
            cand &= b.rows[image[u]] if a.rows[v] >> u & 1 else ~b.rows[image[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            image[v] = low.bit_length() - 1
            if extend(depth + 1, used | low):
                return True
        image[v] = -1
        return False

    return image if extend(0, 0) else None


def is_isomorphic(a: SimpleGraph, b: SimpleGraph, cap: int = ISO_CAP) -> bool:
    return find_isomorphism(a, b, cap) is not None


# -- induced pattern search ---------------------------------------------


def contains_induced(g: SimpleGraph, pattern: SimpleGraph) -> tuple[int, ...] | None:
    """Vertices of ``g`` inducing a copy of ``pattern``, or None.

    ``hit[i]`` is the image of pattern vertex ``i``.  Pattern vertices are
    placed one at a time; the candidates for the next one are narrowed by
    AND-ing the adjacency rows (or their complements) of the vertices already
    placed, and by the degree lower bound.
    """
    k = pattern.n
    if k > PATTERN_MAX:
        raise GraphSizeError(f"patterns are limited to {PATTERN_MAX} vertices")
    if k == 0:
        return ()
    if k > g.n:
        return None
    order: list[int] = []
    placed = 0
    while len(order) < k:
        frontier = [v for v in range(k) if not placed >> v & 1 and pattern.rows[v] & placed]
        pool = frontier or [v for v in range(k) if not placed >> v & 1]
        v = max(pool, key=lambda x: (pattern.degrees[x], -x))
        order.append(v)
        placed |= 1 << v
    deg_ok = [0] * (max(pattern.degrees) + 1)
    for d in range(len(deg_ok)):
        deg_ok[d] = sum(1 << v for v in range(g.n) if g.degrees[v] >= d)
    full = g.full_mask
    image = [0] * k
    # twins (equal open or closed neighbourhoods) are swapped by an automorphism
    # fixing everything else, so only the first unused one per class is tried
    open_key = g.rows
    closed_key = tuple(r | 1 << v for v, r in enumerate(g.rows))

    def extend(depth: int, used: int) -> bool:
        if depth == k:
            return True
        v = order[depth]
        cand = deg_ok[pattern.degrees[v]] & ~used
        for u in order[:depth]:
            cand &= g.rows[image[u]] if pattern.rows[v] >> u & 1 else full & ~g.rows[image[u]]
            if not cand:
                return False
        tried_open, tried_closed = set(), set()
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if open_key[x] in tried_open or closed_key[x] in tried_closed:
                continue
            tried_open.add(open_key[x])
            tried_closed.add(closed_key[x])
            image[v] = x
            if extend(depth + 1, used | low):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


# -- Beineke catalog -----------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: SimpleGraph


def beineke_patterns() -> list[Pattern]:
    """The nine minimal non-line graphs Gamma1..Gamma9 from the fixture file."""
    return list(_load_patterns())


_PATTERNS: tuple[Pattern, ...] | None = None


def _load_patterns() -> tuple[Pattern, ...]:
    global _PATTERNS
    if _PATTERNS is None:
        raw = json.loads(resources.files("powerline").joinpath("data/beineke.json").read_text())
        out = []
        for entry in raw["patterns"]:
            names = [str(v) for v in entry["vertices"]]
            pos = {v: i for i, v in enumerate(entry["vertices"])}
            edges = [(pos[u], pos[v]) for u, v in entry["edges"]]
            out.append(Pattern(entry["name"], make_graph(len(names), edges, names)))
        _PATTERNS = tuple(out)
    return _PATTERNS


def pattern(name: str) -> SimpleGraph:
    for p in _load_patterns():
        if p.name == name:
            return p.graph
    raise KeyError(name)


# -- text formats --------------------------------------------------------


def to_edge_list(g: SimpleGraph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SimpleGraph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphError("edge list needs an 'n m' header")
    n, m = map(int, lines[0])
    edges = [(int(u), int(v)) for u, v in lines[1:]]
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    return make_graph(n, edges)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {_dot_quote(name)} {{"]
    lines.extend(f"  {v} [label={_dot_quote(g.label(v))}];" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
