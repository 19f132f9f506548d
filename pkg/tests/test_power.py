import pytest

from powerline.classify import build_group, default_catalog
from powerline.graphs import (
    complete,
    components,
    disjoint_union,
    dominating_vertices,
    empty,
    induced,
    is_isomorphic,
)
from powerline.groups import FiniteGroup, prime_power_base
from powerline.power import (
    deleted_power_graph,
    is_generalized_quaternion,
    power_graph,
    predicted_dominating,
    proper_power_graph,
)

CATALOG_IDS = [e.id for e in default_catalog() if e.order <= 64]


def power_graph_by_exponents(g: FiniteGroup):
    """Adjacency straight from the definition: v = u^m for some m, or the reverse."""
    powers = [{g.power(x, m) for m in range(1, g.orders[x] + 1)} for x in range(g.order)]
    return {(u, v) for u in range(g.order) for v in range(u + 1, g.order) if v in powers[u] or u in powers[v]}


def labelled_edges(graph):
    return {frozenset((graph.label(u), graph.label(v))) for u, v in graph.edges()}


def test_power_graph_examples():
    assert power_graph(build_group("Z4")) == complete(4)
    assert power_graph(build_group("Z1")).n == 1
    p = power_graph(build_group("Z6"))
    for v in (0, 1, 5):
        assert p.degree(v) == 5
    assert p.has_edge(2, 4)
    assert p.neighbors(3) == [0, 1, 5]


def test_deleted_examples():
    assert deleted_power_graph(build_group("Z2")).n == 1
    assert deleted_power_graph(build_group("Z4")) == complete(3)
    d3 = deleted_power_graph(build_group("D3"))
    assert is_isomorphic(d3, disjoint_union([complete(2)] + [complete(1)] * 3))


def test_proper_examples():
    b = proper_power_graph(build_group("Z6"))
    assert labelled_edges(b.proper) == {frozenset({"2", "4"})}
    assert sorted(b.proper.labels) == ["2", "3", "4"]

    b = proper_power_graph(build_group("Z2xZ4"))
    assert b.proper.n == 7 and b.proper.edge_count == 6
    tri = [("(0,1)", "(0,2)", "(0,3)"), ("(0,2)", "(1,1)", "(1,3)")]
    expected = {frozenset(p) for t in tri for p in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]}
    assert labelled_edges(b.proper) == expected
    degree = {b.proper.label(v): b.proper.degree(v) for v in range(b.proper.n)}
    assert degree["(0,2)"] == 4 and degree["(0,1)"] == 2
    assert degree["(1,0)"] == degree["(1,2)"] == 0

    b = proper_power_graph(build_group("Q8"))
    assert labelled_edges(b.proper) == {frozenset({"x", "x^3"}), frozenset({"y", "x^2 y"}), frozenset({"x y", "x^3 y"})}


def test_bundle_element_maps():
    b = proper_power_graph(build_group("Q16"))
    assert b.elements("power") == tuple(range(16))
    assert b.elements("deleted") == tuple(range(1, 16))
    assert len(b.elements("proper")) == 14
    for kind in ("power", "deleted", "proper"):
        g = b.graph(kind)
        assert [g.label(i) for i in range(g.n)] == [b.full.label(e) for e in b.elements(kind)]


def test_predicted_dominating_examples():
    assert predicted_dominating(build_group("Z6")) == [0, 1, 5]
    assert predicted_dominating(build_group("Z8")) == list(range(8))
    q = build_group("Q16")
    assert predicted_dominating(q) == [0, q.orders.index(2)]


def test_quaternion_detection_is_structural():
    assert is_generalized_quaternion(build_group("Q8"))
    assert not is_generalized_quaternion(build_group("Z8"))
    assert not is_generalized_quaternion(build_group("D4"))
    assert not is_generalized_quaternion(build_group("Z2xQ8"))
    assert not is_generalized_quaternion(build_group("Z3xQ8"))


@pytest.mark.parametrize("gid", CATALOG_IDS)
def test_catalog_power_graph_laws(gid):
    g = build_group(gid)
    b = proper_power_graph(g)
    p = b.full
    assert set(p.edges()) == power_graph_by_exponents(g)
    assert list(b.dom) == dominating_vertices(p) == predicted_dominating(g)
    cyclic_p = g.is_cyclic and (g.order == 1 or prime_power_base(g.order) is not None)
    assert (p.edge_count == g.order * (g.order - 1) // 2) == cyclic_p
    if cyclic_p:
        assert b.proper == empty(0)
    for u, v in p.edges():
        a, c = g.orders[u], g.orders[v]
        assert a % c == 0 or c % a == 0
    assert b.deleted == induced(p, range(1, g.order))
    if not g.is_cyclic and not is_generalized_quaternion(g):
        assert b.proper == b.deleted


def test_elementary_abelian_components():
    for gid, p, k in [("Z2xZ2", 2, 2), ("Z3xZ3", 3, 2), ("Z2xZ2xZ2", 2, 3), ("Z5xZ5", 5, 2), ("Z3xZ3xZ3", 3, 3)]:
        proper = proper_power_graph(build_group(gid)).proper
        comps = components(proper)
        assert len(comps) == (p**k - 1) // (p - 1)
        assert all(is_isomorphic(induced(proper, c), complete(p - 1)) for c in comps)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_quaternion_proper_shape(n):
    proper = proper_power_graph(build_group(f"Q{2**n}")).proper
    sizes = sorted(len(c) for c in components(proper))
    # one clique from the big cyclic subgroup minus its two dominating elements
    assert sizes == sorted([2] * 2 ** (n - 2) + [2 ** (n - 1) - 2])
    for c in components(proper):
        assert is_isomorphic(induced(proper, c), complete(len(c)))
