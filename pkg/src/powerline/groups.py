"""Finite groups stored as dense Cayley tables.

Elements are the indices ``0..order-1`` and the identity is always index 0.
Every constructor validates the table (identity law, Latin square, and
associativity up to ``ASSOC_CHECK_CAP`` elements) before returning.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = int(os.environ.get("POWERLINE_MAX_ORDER", "512"))
ASSOC_CHECK_CAP = 512


class GroupError(ValueError):
    """Invalid group parameters or a table that is not a group."""


class OrderCapError(GroupError):
    """The requested group is larger than the construction cap."""


@dataclass(frozen=True)
class SubgroupSet:
    member: int  # bitmask over element indices
    generator: int | None = None

    def __contains__(self, x: int) -> bool:
        return bool(self.member >> x & 1)

    def __len__(self) -> int:
        return self.member.bit_count()

    def elements(self) -> list[int]:
        return bits(self.member)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    cayley: np.ndarray
    labels: tuple[str, ...]
    family: str = "custom"
    orders: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        table = np.ascontiguousarray(self.cayley, dtype=np.int32)
        table.setflags(write=False)
        object.__setattr__(self, "cayley", table)
        object.__setattr__(self, "labels", tuple(self.labels))
        _validate(table, self.labels)
        object.__setattr__(self, "orders", _element_orders(table))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, family={self.family!r})"

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def power(self, x: int, k: int) -> int:
        k %= self.orders[x]
        result, base = 0, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inverse(self, x: int) -> int:
        return self.inverses[x]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.argmin(self.cayley, axis=1))

    @cached_property
    def cyclic_masks(self) -> tuple[int, ...]:
        """Bitmask of <x> for every element x."""
        masks = []
        for x in range(self.order):
            m, y = 1, x
            while y:
                m |= 1 << y
                y = self.mul(y, x)
            masks.append(m)
        return tuple(masks)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    @cached_property
    def is_cyclic(self) -> bool:
        return self.order in self.orders

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "cayley": [int(v) for v in self.cayley.ravel()],
            "family": self.family,
        }


def _validate(table: np.ndarray, labels: Sequence[str]) -> None:
    n = len(labels)
    if n == 0:
        raise GroupError("a group needs at least one element")
    if table.shape != (n, n):
        raise GroupError(f"cayley table shape {table.shape} does not match {n} labels")
    ident = np.arange(n)
    if not (np.array_equal(table[0], ident) and np.array_equal(table[:, 0], ident)):
        raise GroupError("index 0 is not a two-sided identity")
    if table.min() < 0 or table.max() >= n:
        raise GroupError("cayley entries out of range")
    ordered = np.sort(table, axis=1)
    if not (ordered == ident).all() or not (np.sort(table, axis=0) == ident[:, None]).all():
        raise GroupError("cayley table is not a Latin square")
    if n <= ASSOC_CHECK_CAP:
        for a in range(n):
            # (a*b)*c against a*(b*c) for all b, c at once
            if not np.array_equal(table[table[a]], table[a][table]):
                raise GroupError(f"associativity fails for first factor {a}")


def _element_orders(table: np.ndarray) -> tuple[int, ...]:
    n = table.shape[0]
    orders = [1] * n
    for x in range(1, n):
        k, y = 1, x
        while y:
            y = int(table[y, x])
            k += 1
        orders[x] = k
    return tuple(orders)


def _check_cap(order: int, max_order: int | None) -> None:
    cap = MAX_ORDER if max_order is None else max_order
    if order > cap:
        raise OrderCapError(f"group order {order} exceeds construction cap {cap}")


def _from_rule(elements: list, mul, label, family: str, max_order=None) -> FiniteGroup:
    _check_cap(len(elements), max_order)
    index = {e: i for i, e in enumerate(elements)}
    table = np.array([[index[mul(a, b)] for b in elements] for a in elements], dtype=np.int32)
    return FiniteGroup(table, [label(e) for e in elements], family)


# -- number theory -------------------------------------------------------


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power_base(n: int) -> int | None:
    """The prime p when n = p^k with k >= 1, else None."""
    f = factorize(n) if n >= 1 else {}
    return next(iter(f)) if len(f) == 1 else None


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


# -- family constructors -------------------------------------------------


def make_cyclic(n: int, *, max_order: int | None = None) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    _check_cap(n, max_order)
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, [str(i) for i in range(n)], f"cyclic({n})")


def _power_label(sym: str, k: int) -> str:
    return "" if k == 0 else sym if k == 1 else f"{sym}^{k}"


def make_dihedral(n: int, *, max_order: int | None = None) -> FiniteGroup:
    """Symmetries of the regular n-gon (order 2n); element r^i s^b has index i + n*b."""
    if n < 3:
        raise GroupError("dihedral group needs n >= 3")
    elements = [(i, b) for b in range(2) for i in range(n)]

    def mul(x, y):
        (i, b), (j, d) = x, y
        return ((i + (-j if b else j)) % n, (b + d) % 2)

    def label(x):
        i, b = x
        return " ".join(s for s in (_power_label("r", i), "s" if b else "") if s) or "e"

    return _from_rule(elements, mul, label, f"dihedral({n})", max_order)


def make_generalized_quaternion(n: int, *, max_order: int | None = None) -> FiniteGroup:
    """Q_{2^n}: x of order 2^(n-1), y of order 4, y^2 = x^(2^(n-2)), y x y^-1 = x^-1."""
    if n < 3:
        raise GroupError("generalized quaternion group needs n >= 3")
    m = 2 ** (n - 1)
    elements = [(a, b) for b in range(2) for a in range(m)]

    def mul(u, v):
        (a, b), (c, d) = u, v
        if not b:
            return ((a + c) % m, d)
        # x^a y x^c y^d = x^(a-c) y^(1+d), and y^2 = x^(m/2)
        if d:
            return ((a - c + m // 2) % m, 0)
        return ((a - c) % m, 1)

    def label(u):
        a, b = u
        return " ".join(s for s in (_power_label("x", a), "y" if b else "") if s) or "e"

    return _from_rule(elements, mul, label, f"quaternion({n})", max_order)


def make_heisenberg(p: int, *, max_order: int | None = None) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z_p, p odd: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')."""
    if p == 2 or not is_prime(p):
        raise GroupError("Heisenberg group needs an odd prime p")
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mul(u, v):
        return ((u[0] + v[0]) % p, (u[1] + v[1]) % p, (u[2] + v[2] + u[0] * v[1]) % p)

    return _from_rule(elements, mul, lambda u: "(%d,%d,%d)" % u, f"heisenberg({p})", max_order)


def make_modular_maximal_cyclic(p: int, *, max_order: int | None = None) -> FiniteGroup:
    """Z_{p^2} semidirect Z_p with (i,j)(i',j') = (i + i'(1+p)^j mod p^2, j+j')."""
    if p == 2 or not is_prime(p):
        raise GroupError("modular group needs an odd prime p")
    q = p * p
    elements = [(i, j) for i in range(q) for j in range(p)]

    def mul(u, v):
        (i, j), (i2, j2) = u, v
        return ((i + i2 * pow(1 + p, j, q)) % q, (j + j2) % p)

    return _from_rule(elements, mul, lambda u: "(%d,%d)" % u, f"modular({p})", max_order)


def _coords(g: FiniteGroup) -> list[str]:
    if g.family.startswith("product("):
        return [lab[1:-1] for lab in g.labels]
    return list(g.labels)


def direct_product(g: FiniteGroup, h: FiniteGroup, *, max_order: int | None = None) -> FiniteGroup:
    """Componentwise product; element (a, b) has index a*|h| + b."""
    _check_cap(g.order * h.order, max_order)
    m = h.order
    table = (g.cayley[:, None, :, None] * m + h.cayley[None, :, None, :]).reshape(g.order * m, g.order * m)
    labels = [f"({a},{b})" for a in _coords(g) for b in _coords(h)]
    parts = [s[8:-1] if s.startswith("product(") else s for s in (g.family, h.family)]
    return FiniteGroup(table, labels, f"product({','.join(parts)})")


def product_of_cyclics(sizes: Iterable[int], *, max_order: int | None = None) -> FiniteGroup:
    sizes = list(sizes)
    if not sizes:
        raise GroupError("need at least one factor")
    _check_cap(math.prod(sizes), max_order)
    groups = [make_cyclic(s) for s in sizes]
    if len(groups) == 1:
        return groups[0]
    return reduce(lambda a, b: direct_product(a, b, max_order=max_order), groups)


def group_from_json(doc: dict, *, max_order: int | None = None) -> FiniteGroup:
    n = int(doc["order"])
    _check_cap(n, max_order)
    table = np.asarray(doc["cayley"], dtype=np.int32).reshape(n, n)
    return FiniteGroup(table, doc.get("labels") or [str(i) for i in range(n)], doc.get("family", "custom"))


# -- queries -------------------------------------------------------------


def _check_index(g: FiniteGroup, x: int) -> None:
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} out of range for order {g.order}")


def element_order(g: FiniteGroup, x: int) -> int:
    _check_index(g, x)
    k = g.orders[x]
    assert g.order % k == 0, "Lagrange violated"
    return k


def cyclic_subgroup(g: FiniteGroup, x: int) -> SubgroupSet:
    _check_index(g, x)
    return SubgroupSet(g.cyclic_masks[x], x)


def exponent(g: FiniteGroup) -> int:
    return math.lcm(*g.orders)


def is_nilpotent(g: FiniteGroup) -> bool:
    """True iff the p-elements form a subgroup for every prime p dividing |G|."""
    for p in factorize(g.order):
        members = [x for x in range(g.order) if _is_p_power(g.orders[x], p)]
        mask = sum(1 << x for x in members)
        for a in members:
            for b in members:
                if not mask >> g.mul(a, b) & 1:
                    return False
    return True


def _is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def is_p_group(g: FiniteGroup) -> bool:
    return prime_power_base(g.order) is not None


def order_p_subgroups(g: FiniteGroup, p: int) -> list[SubgroupSet]:
    seen: dict[int, SubgroupSet] = {}
    for x in range(g.order):
        if g.orders[x] == p:
            seen.setdefault(g.cyclic_masks[x], SubgroupSet(g.cyclic_masks[x], x))
    return list(seen.values())


def maximal_cyclic_subgroups(g: FiniteGroup) -> list[SubgroupSet]:
    distinct: dict[int, int] = {}
    for x, m in enumerate(g.cyclic_masks):
        distinct.setdefault(m, x)
    masks = list(distinct)
    out = []
    for m in masks:
        if not any(o != m and m & o == m for o in masks):
            out.append(SubgroupSet(m, distinct[m]))
    out.sort(key=lambda s: (-len(s), s.generator))
    return out


def center(g: FiniteGroup) -> SubgroupSet:
    t = g.cayley
    mask = 0
    for x in range(g.order):
        if np.array_equal(t[x], t[:, x]):
            mask |= 1 << x
    return SubgroupSet(mask)


def generated_subgroup(g: FiniteGroup, gens: Iterable[int]) -> SubgroupSet:
    gens = list(gens)
    mask, frontier = 1, [0]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                c = g.mul(a, s)
                if not mask >> c & 1:
                    mask |= 1 << c
                    nxt.append(c)
        frontier = nxt
    return SubgroupSet(mask)


def subgroup_orders(g: FiniteGroup, beam: int = 4) -> set[int]:
    """Orders of subgroups reached by adding one generator at a time.

    Each layer keeps at most ``beam`` subgroups of every order, so every
    returned order is witnessed by an actual subgroup but a missing order is
    not a proof of absence.
    """
    divisors = {d for d in range(1, g.order + 1) if g.order % d == 0}
    found = {1}
    seen = {1}
    layer = [(1, ())]
    while layer and found != divisors:
        buckets: dict[int, list] = {}
        for mask, gens in layer:
            for x in range(1, g.order):
                if mask >> x & 1:
                    continue
                sub = generated_subgroup(g, gens + (x,)).member
                if sub in seen:
                    continue
                seen.add(sub)
                found.add(sub.bit_count())
                bucket = buckets.setdefault(sub.bit_count(), [])
                if len(bucket) < beam:
                    bucket.append((sub, gens + (x,)))
        layer = [item for k in sorted(buckets) for item in buckets[k]]
    return found
