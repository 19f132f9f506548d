import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerline.classify import build_group, default_catalog
from powerline.groups import (
    FiniteGroup,
    GroupError,
    OrderCapError,
    center,
    cyclic_subgroup,
    direct_product,
    element_order,
    euler_phi,
    exponent,
    factorize,
    group_from_json,
    is_nilpotent,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_heisenberg,
    make_modular_maximal_cyclic,
    maximal_cyclic_subgroups,
    product_of_cyclics,
    subgroup_orders,
)

CATALOG_IDS = [e.id for e in default_catalog() if e.order <= 64]


def brute_order(g: FiniteGroup, x: int) -> int:
    k, y = 1, x
    while y != 0:
        y = int(g.cayley[y][x])
        k += 1
    return k


def by_label(g: FiniteGroup, label: str) -> int:
    return g.labels.index(label)


# -- constructors --------------------------------------------------------


def test_cyclic_examples():
    assert make_cyclic(1).orders == (1,)
    assert make_cyclic(6).orders == (1, 6, 3, 2, 3, 6)
    assert make_cyclic(4).orders == (1, 4, 2, 4)
    assert make_cyclic(5).labels == ("0", "1", "2", "3", "4")
    with pytest.raises(GroupError):
        make_cyclic(0)


def test_dihedral_examples():
    d3, d4 = make_dihedral(3), make_dihedral(4)
    assert d3.order == 6 and Counter(d3.orders) == Counter([1, 3, 3, 2, 2, 2])
    assert d4.order == 8 and Counter(d4.orders) == Counter([1, 4, 2, 4, 2, 2, 2, 2])
    r, s = by_label(d3, "r"), by_label(d3, "s")
    assert d3.mul(r, s) != d3.mul(s, r)
    assert d3.mul(r, s) == d3.mul(s, d3.inverse(r))
    assert not d3.is_abelian
    for bad in (0, 1, 2):
        with pytest.raises(GroupError):
            make_dihedral(bad)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_quaternion_relations(n):
    q = make_generalized_quaternion(n)
    x, y = by_label(q, "x"), by_label(q, "y")
    assert q.order == 2**n
    assert element_order(q, x) == 2 ** (n - 1) and element_order(q, y) == 4
    assert q.power(x, 2 ** (n - 2)) == q.power(y, 2)
    assert q.mul(q.mul(y, x), q.inverse(y)) == q.inverse(x)
    assert sum(1 for k in q.orders if k == 2) == 1


def test_quaternion_small():
    q = make_generalized_quaternion(3)
    assert Counter(q.orders) == Counter([1, 2, 4, 4, 4, 4, 4, 4])
    assert q.power(by_label(q, "y"), 2) == q.power(by_label(q, "x"), 2)
    with pytest.raises(GroupError):
        make_generalized_quaternion(2)


def test_heisenberg():
    h = make_heisenberg(3)
    assert h.order == 27 and all(k == 3 for k in h.orders[1:])
    a, b = by_label(h, "(1,0,0)"), by_label(h, "(0,1,0)")
    assert h.mul(a, b) != h.mul(b, a)
    h5 = make_heisenberg(5)
    assert h5.order == 125 and exponent(h5) == 5
    for bad in (2, 9, 1):
        with pytest.raises(GroupError):
            make_heisenberg(bad)


def test_modular():
    m = make_modular_maximal_cyclic(3)
    assert m.order == 27 and 9 in m.orders and not m.is_abelian
    assert len(center(m)) == 3
    with pytest.raises(GroupError):
        make_modular_maximal_cyclic(4)


def test_direct_product_examples():
    z2z4 = direct_product(make_cyclic(2), make_cyclic(4))
    assert z2z4.order == 8 and Counter(z2z4.orders) == Counter([1, 2, 2, 2, 4, 4, 4, 4])
    z4z4 = product_of_cyclics([4, 4])
    assert Counter(z4z4.orders) == Counter({4: 12, 2: 3, 1: 1})
    q = make_generalized_quaternion(3)
    trivial = direct_product(make_cyclic(1), q)
    np.testing.assert_array_equal(trivial.cayley, q.cayley)
    with pytest.raises(OrderCapError):
        direct_product(make_cyclic(30), make_cyclic(30))
    with pytest.raises(OrderCapError):
        make_cyclic(40, max_order=32)


def test_direct_product_lcm_orders():
    a, b = make_dihedral(3), make_cyclic(4)
    p = direct_product(a, b)
    for x in range(a.order):
        for y in range(b.order):
            assert p.orders[x * b.order + y] == math.lcm(a.orders[x], b.orders[y])


@pytest.mark.parametrize("ids", [("Z2", "Z3", "Z4"), ("Z2", "D3", "Z2"), ("Q8", "Z2", "Z3")])
def test_direct_product_associative(ids):
    a, b, c = (build_group(i) for i in ids)
    left = direct_product(direct_product(a, b), c)
    right = direct_product(a, direct_product(b, c))
    # both index ((a,b),c) and (a,(b,c)) as a*|B||C| + b*|C| + c
    np.testing.assert_array_equal(left.cayley, right.cayley)


# -- validation and json -------------------------------------------------


def test_rejects_bad_tables():
    t = make_cyclic(3).cayley.copy()
    t[1, 1] = 1
    with pytest.raises(GroupError):
        FiniteGroup(t, ["0", "1", "2"])
    not_assoc = np.array([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    with pytest.raises(GroupError, match="associativity"):
        FiniteGroup(not_assoc, list("abcde"))
    swapped = np.array([[1, 0], [0, 1]])
    with pytest.raises(GroupError, match="identity"):
        FiniteGroup(swapped, ["a", "b"])


@pytest.mark.parametrize("gid", ["Z6", "D4", "Q8", "Z2xZ4", "Heis3"])
def test_json_round_trip(gid):
    g = build_group(gid)
    doc = g.to_json()
    assert set(doc) == {"order", "labels", "cayley", "family"}
    assert len(doc["cayley"]) == g.order**2
    back = group_from_json(doc)
    np.testing.assert_array_equal(back.cayley, g.cayley)
    assert back.labels == g.labels and back.family == g.family


def test_json_nested_cayley():
    doc = make_cyclic(3).to_json()
    doc["cayley"] = [doc["cayley"][i : i + 3] for i in (0, 3, 6)]
    assert group_from_json(doc).orders == (1, 3, 3)


# -- queries -------------------------------------------------------------


def test_element_order_and_cyclic_subgroup():
    z6 = make_cyclic(6)
    assert element_order(z6, 0) == 1 and element_order(z6, 2) == 3
    assert cyclic_subgroup(z6, 2).elements() == [0, 2, 4]
    assert cyclic_subgroup(z6, 0).elements() == [0]
    q = make_generalized_quaternion(3)
    assert element_order(q, by_label(q, "y")) == 4
    hx = cyclic_subgroup(q, by_label(q, "x"))
    assert len(hx) == 4 and q.power(by_label(q, "y"), 2) in hx
    with pytest.raises(IndexError):
        element_order(z6, 6)


def test_nilpotent_examples():
    assert all(is_nilpotent(make_cyclic(n)) for n in range(1, 31))
    assert not is_nilpotent(make_dihedral(3))
    assert is_nilpotent(make_generalized_quaternion(4))


def test_exponent_and_phi():
    assert exponent(make_cyclic(12)) == 12
    assert exponent(make_heisenberg(3)) == 3
    assert exponent(product_of_cyclics([2, 4])) == 4
    assert euler_phi(1) == 1 and euler_phi(12) == 4 and euler_phi(15) == 8
    assert [euler_phi(n) for n in range(1, 200)] == [sum(1 for k in range(1, n + 1) if math.gcd(n, k) == 1) for n in range(1, 200)]
    with pytest.raises(ValueError):
        euler_phi(0)


def test_maximal_cyclic_examples():
    assert [len(s) for s in maximal_cyclic_subgroups(make_cyclic(8))] == [8]
    h = maximal_cyclic_subgroups(make_heisenberg(3))
    assert len(h) == 13 and all(len(s) == 3 for s in h)
    q = maximal_cyclic_subgroups(make_generalized_quaternion(3))
    assert [len(s) for s in q] == [4, 4, 4]


def test_factorize():
    for n in range(1, 600):
        f = factorize(n)
        assert math.prod(p**e for p, e in f.items()) == n


# -- catalog-wide invariants ---------------------------------------------


@pytest.mark.parametrize("gid", CATALOG_IDS)
def test_table_invariants(gid):
    g = build_group(gid)
    t = g.cayley
    ident = np.arange(g.order)
    assert (np.sort(t, axis=0) == ident[:, None]).all() and (np.sort(t, axis=1) == ident).all()
    assert (t[0] == ident).all() and (t[:, 0] == ident).all()
    for x in range(g.order):
        assert g.orders[x] == brute_order(g, x)
        assert g.order % element_order(g, x) == 0
    union = 0
    for s in maximal_cyclic_subgroups(g):
        union |= s.member
    assert union == (1 << g.order) - 1


def sylow_normal_oracle(g: FiniteGroup) -> bool:
    # a unique Sylow p-subgroup holds exactly the |G|_p elements of p-power order
    for p, e in factorize(g.order).items():
        count = sum(1 for k in g.orders if p**e % k == 0)
        if count != p**e:
            return False
    return True


@pytest.mark.parametrize("gid", CATALOG_IDS)
def test_nilpotent_against_sylow_count(gid):
    g = build_group(gid)
    assert is_nilpotent(g) == sylow_normal_oracle(g)


def test_dihedral_nilpotent_iff_power_of_two():
    for n in range(3, 33):
        assert is_nilpotent(make_dihedral(n)) == (n & (n - 1) == 0)


@pytest.mark.parametrize("gid", [i for i in CATALOG_IDS if is_nilpotent(build_group(i))])
def test_nilpotent_has_subgroup_of_every_divisor(gid):
    g = build_group(gid)
    divisors = {d for d in range(1, g.order + 1) if g.order % d == 0}
    assert subgroup_orders(g) == divisors


@settings(max_examples=60, deadline=None)
@given(gid=st.sampled_from(CATALOG_IDS), data=st.data())
def test_associativity_sampled(gid, data):
    g = build_group(gid)
    a, b, c = (data.draw(st.integers(0, g.order - 1)) for _ in range(3))
    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    assert g.mul(a, g.inverse(a)) == 0


@settings(max_examples=40, deadline=None)
@given(sizes=st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_product_of_cyclics_orders(sizes):
    g = product_of_cyclics(sizes)
    assert g.order == math.prod(sizes)
    assert exponent(g) == math.lcm(*sizes)
    assert g.is_abelian
    assert is_nilpotent(g)
