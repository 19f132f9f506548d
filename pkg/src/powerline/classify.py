"""Structural predictions of line-graph membership and the verification sweep.

Each predicate reads only the group (orders, subgroups, abelian type); the
sweep then builds the graphs and asks both line-graph deciders, recording
whether prediction and graph-level verdict agree.
"""

from __future__ import annotations

import json
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .graphs import GraphSizeError, SimpleGraph, contains_induced, pattern, to_edge_list
from .groups import (
    FiniteGroup,
    GroupError,
    direct_product,
    factorize,
    is_nilpotent,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_heisenberg,
    make_modular_maximal_cyclic,
    maximal_cyclic_subgroups,
    order_p_subgroups,
    prime_power_base,
    product_of_cyclics,
)
from .linegraphs import PATTERN_CAP, is_line_graph_forbidden, krausz_recognize
from .power import is_generalized_quaternion, proper_power_graph

POWER = "power/nilpotent"
PROPER = "proper/nilpotent"
QUATERNION = "proper/quaternion"
DIHEDRAL = "proper/dihedral"


@dataclass(frozen=True)
class TheoremPrediction:
    theorem: str
    applicable: bool
    predicted_line: bool | None = None
    matched_case: str | None = None

    @property
    def graph_kind(self) -> str:
        return "power" if self.theorem == POWER else "proper"


# -- structure helpers ---------------------------------------------------


def abelian_invariants(g: FiniteGroup) -> list[int]:
    """Prime-power cyclic factors of an abelian group, e.g. [2, 4] for Z2xZ4."""
    if not g.is_abelian:
        raise GroupError("abelian_invariants needs an abelian group")
    out = []
    for p, e in sorted(factorize(g.order).items()) if g.order > 1 else []:
        # r[k] = log_p #{x : x^(p^k) = e} = sum_i min(k, a_i)
        r = [0]
        for k in range(1, e + 1):
            cnt = sum(1 for o in g.orders if (p**k) % o == 0)
            r.append(round(math.log(cnt, p)))
        # number of factors with exponent >= k is r[k] - r[k-1]
        at_least = [r[k] - r[k - 1] for k in range(1, e + 1)] + [0]
        for k in range(1, e + 1):
            out.extend([p**k] * (at_least[k - 1] - at_least[k]))
    return sorted(out, key=lambda q: (prime_power_base(q), q))


def dihedral_parameter(g: FiniteGroup) -> int | None:
    """n when g is dihedral of order 2n (n >= 3): an element of order n whose
    cyclic subgroup leaves only involutions outside it."""
    if g.order % 2 or g.order < 6:
        return None
    n = g.order // 2
    for r in range(g.order):
        if g.orders[r] == n:
            inside = g.cyclic_masks[r]
            if all(g.orders[x] == 2 for x in range(g.order) if not inside >> x & 1):
                return n
            return None
    return None


def cyclic_partition_check(g: FiniteGroup) -> tuple[bool, list[int]]:
    """Do the maximal cyclic subgroups meet pairwise in {e}, one per subgroup of order p?"""
    p = prime_power_base(g.order)
    if p is None:
        raise GroupError("cyclic_partition_check needs a p-group")
    maximal = maximal_cyclic_subgroups(g)
    orders = [len(s) for s in maximal]
    disjoint = all(a.member & b.member == 1 for i, a in enumerate(maximal) for b in maximal[i + 1 :])
    return disjoint and len(maximal) == len(order_p_subgroups(g, p)), orders


def _shape(n: int) -> list[int]:
    return sorted(factorize(n).values()) if n > 1 else []


def claw_free_cyclic_predicate(n: int) -> bool:
    """n is p^t, pqr, p^2 q^2 or p^t q."""
    s = _shape(n)
    return len(s) <= 1 or s == [1, 1, 1] or s == [2, 2] or (len(s) == 2 and s[0] == 1)


def gamma2_free_cyclic_predicate(n: int) -> bool:
    """n is p^t, pq, 12 or 18."""
    s = _shape(n)
    return len(s) <= 1 or s == [1, 1] or n in (12, 18)


# -- predictions ---------------------------------------------------------


def predict_power_line(g: FiniteGroup) -> TheoremPrediction:
    if not is_nilpotent(g):
        return TheoremPrediction(POWER, False)
    line = g.is_cyclic and (g.order == 1 or prime_power_base(g.order) is not None)
    return TheoremPrediction(POWER, True, line, "cyclic-p-power" if line else None)


def _proper_case(g: FiniteGroup) -> str | None:
    n = g.order
    if g.is_abelian:
        inv = abelian_invariants(g)
        if g.is_cyclic:
            if n == 1 or prime_power_base(n) is not None:
                return "cyclic-p-power"
            if _shape(n) == [1, 1]:
                return "cyclic-pq"
            return None
        if inv == [2, 4]:
            return "Z2xZ4"
        if inv == [4, 4]:
            return "Z4xZ4"
        if len(inv) >= 2 and len(set(inv)) == 1 and prime_power_base(inv[0]) == inv[0]:
            return "elementary-abelian"
        return None
    if prime_power_base(n) is not None and cyclic_partition_check(g)[0]:
        return "cyclic-partition"
    return None


def predict_proper_line(g: FiniteGroup) -> TheoremPrediction:
    if not is_nilpotent(g) or (prime_power_base(g.order) == 2 and not g.is_abelian):
        return TheoremPrediction(PROPER, False)
    case = _proper_case(g)
    return TheoremPrediction(PROPER, True, case is not None, case)


def predict_quaternion_proper(g: FiniteGroup) -> TheoremPrediction:
    if not is_generalized_quaternion(g):
        return TheoremPrediction(QUATERNION, False)
    return TheoremPrediction(QUATERNION, True, True, f"Q{g.order}")


def predict_dihedral_proper(g: FiniteGroup) -> TheoremPrediction:
    n = dihedral_parameter(g)
    if n is None:
        return TheoremPrediction(DIHEDRAL, False)
    k = n.bit_length() - 1
    power_of_two = n == 1 << k
    return TheoremPrediction(DIHEDRAL, True, power_of_two, f"n=2^{k}" if power_of_two else f"n={n}")


def all_predictions(g: FiniteGroup) -> list[TheoremPrediction]:
    return [predict_power_line(g), predict_proper_line(g), predict_quaternion_proper(g), predict_dihedral_proper(g)]


# -- group ids and the default catalog ----------------------------------

_FACTOR = re.compile(r"^(Z|D|Q|Heis|Mod)(\d+)$")


def build_group(gid: str, *, max_order: int | None = None) -> FiniteGroup:
    """Build a group from an id such as ``Z12``, ``Z2xZ4``, ``D8``, ``Q16``, ``Heis3``, ``Z3xQ8``.

    ``D<n>`` is dihedral with n rotations (order 2n); ``Q<m>`` is generalized
    quaternion of order m; ``Heis<p>`` and ``Mod<p>`` have order p^3.
    """
    factors = []
    for part in gid.split("x"):
        m = _FACTOR.match(part)
        if not m:
            raise GroupError(f"cannot parse group factor {part!r} in {gid!r}")
        kind, k = m.group(1), int(m.group(2))
        if kind == "Z":
            factors.append(make_cyclic(k, max_order=max_order))
        elif kind == "D":
            factors.append(make_dihedral(k, max_order=max_order))
        elif kind == "Q":
            if k < 8 or k & (k - 1):
                raise GroupError(f"Q{k}: quaternion order must be a power of two >= 8")
            factors.append(make_generalized_quaternion(k.bit_length() - 1, max_order=max_order))
        elif kind == "Heis":
            factors.append(make_heisenberg(k, max_order=max_order))
        else:
            factors.append(make_modular_maximal_cyclic(k, max_order=max_order))
    g = factors[0]
    for h in factors[1:]:
        g = direct_product(g, h, max_order=max_order)
    return g


def _partitions(e: int, largest: int | None = None):
    largest = e if largest is None else largest
    if e == 0:
        yield []
        return
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            yield [first] + rest


def abelian_ids(order: int) -> list[str]:
    """Ids of all abelian groups of the given order, in invariant-factor form."""
    per_prime = []
    for p, e in sorted(factorize(order).items()) if order > 1 else []:
        per_prime.append([[p**a for a in part] for part in _partitions(e)])
    ids = []

    def combine(i: int, acc: list[list[int]]):
        if i == len(per_prime):
            width = max((len(x) for x in acc), default=1)
            padded = [sorted(x + [1] * (width - len(x))) for x in acc]
            factors = [math.prod(col) for col in zip(*padded)] if acc else [1]
            ids.append("x".join(f"Z{d}" for d in factors if d > 1) or "Z1")
            return
        for choice in per_prime[i]:
            combine(i + 1, acc + [choice])

    combine(0, [])
    return ids


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    family: str
    order: int
    param: int | None = None

    def build(self, max_order: int | None = None) -> FiniteGroup:
        return build_group(self.id, max_order=max_order)


def default_catalog(max_abelian: int = 64, max_dihedral: int = 32) -> list[CatalogEntry]:
    out = []
    for n in range(1, max_abelian + 1):
        for gid in abelian_ids(n):
            out.append(CatalogEntry(gid, "cyclic" if "x" not in gid else "abelian", n, n if "x" not in gid else None))
    out += [CatalogEntry(f"D{n}", "dihedral", 2 * n, n) for n in range(3, max_dihedral + 1)]
    out += [CatalogEntry(f"Q{2**n}", "quaternion", 2**n, n) for n in range(3, 7)]
    out += [CatalogEntry("Heis3", "heisenberg", 27, 3), CatalogEntry("Heis5", "heisenberg", 125, 5)]
    out += [CatalogEntry("Mod3", "modular", 27, 3)]
    out += [CatalogEntry("Z2xQ8", "product", 16), CatalogEntry("Z3xQ8", "product", 24)]
    return sort_catalog(out)


def sort_catalog(entries: list[CatalogEntry]) -> list[CatalogEntry]:
    return sorted(entries, key=lambda e: (e.order, e.family, e.id))


def family_catalog(family: str, max_n: int | None = None) -> list[CatalogEntry]:
    if family == "dihedral":
        return [CatalogEntry(f"D{n}", "dihedral", 2 * n, n) for n in range(3, (max_n or 32) + 1)]
    if family == "quaternion":
        return [CatalogEntry(f"Q{2**n}", "quaternion", 2**n, n) for n in range(3, (max_n or 6) + 1)]
    if family == "cyclic":
        return [CatalogEntry(f"Z{n}", "cyclic", n, n) for n in range(1, (max_n or 100) + 1)]
    if family == "abelian":
        return [e for e in default_catalog(max_n or 64) if e.family in ("cyclic", "abelian")]
    if family == "heisenberg":
        return [CatalogEntry(f"Heis{p}", "heisenberg", p**3, p) for p in (3, 5) if p <= (max_n or 5)]
    known = [e for e in default_catalog() if e.family == family]
    if not known:
        raise GroupError(f"unknown catalog family {family!r}")
    return known


# -- sweep ---------------------------------------------------------------


class OracleSplitError(RuntimeError):
    """The two line-graph deciders disagree; carries both artifacts."""

    def __init__(self, group_id: str, kind: str, graph: SimpleGraph, beineke: dict, krausz: bool):
        super().__init__(f"{group_id}: deciders disagree on the {kind} graph (beineke={beineke}, krausz={krausz})")
        self.group_id = group_id
        self.kind = kind
        self.graph = graph
        self.beineke = beineke
        self.krausz = krausz

    def artifacts(self) -> dict[str, str]:
        stem = f"{self.group_id}-{self.kind}"
        detail = {"group": self.group_id, "kind": self.kind, "beineke": self.beineke, "krausz": self.krausz}
        return {f"{stem}.edges": to_edge_list(self.graph), f"{stem}.json": json.dumps(detail, indent=2, sort_keys=True) + "\n"}


@dataclass(frozen=True)
class SweepOptions:
    pattern_cap: int = PATTERN_CAP
    max_order: int | None = None
    jobs: int = 1


def oracle_verdict(g: SimpleGraph, *, pattern_cap: int, group_id: str = "?", kind: str = "?") -> dict:
    """Both deciders on one graph; raises OracleSplitError if they disagree."""
    krausz = krausz_recognize(g) is not None
    try:
        forb = is_line_graph_forbidden(g, pattern_cap)
    except GraphSizeError:
        return {"n": g.n, "m": g.edge_count, "line": krausz, "beineke": None, "krausz": krausz, "witness": None}
    if forb.is_line != krausz:
        raise OracleSplitError(group_id, kind, g, {"line": forb.is_line, "witness": forb.witness_json(g)}, krausz)
    return {"n": g.n, "m": g.edge_count, "line": krausz, "beineke": forb.is_line, "krausz": krausz, "witness": forb.witness_json(g)}


def group_record(entry: CatalogEntry, options: SweepOptions = SweepOptions(), group: FiniteGroup | None = None) -> dict:
    g = entry.build(options.max_order) if group is None else group
    bundle = proper_power_graph(g)
    graphs = {
        kind: oracle_verdict(bundle.graph(kind), pattern_cap=options.pattern_cap, group_id=entry.id, kind=kind)
        for kind in ("power", "proper")
    }
    predictions = []
    for pred in all_predictions(g):
        row = asdict(pred)
        row["graph"] = pred.graph_kind
        row["oracle"] = graphs[pred.graph_kind]["line"] if pred.applicable else None
        row["agree"] = pred.predicted_line == row["oracle"] if pred.applicable else None
        predictions.append(row)
    record = {
        "id": entry.id,
        "family": g.family,
        "order": g.order,
        "nilpotent": is_nilpotent(g),
        "abelian": g.is_abelian,
        "graphs": graphs,
        "predictions": predictions,
    }
    agree = [p["agree"] for p in predictions if p["applicable"]]
    if g.is_cyclic:
        proper = bundle.proper
        claw = contains_induced(proper, pattern("Gamma9")) is None
        gamma2 = contains_induced(proper, pattern("Gamma2")) is None
        checks = {
            "claw_free_predicted": claw_free_cyclic_predicate(g.order),
            "claw_free_oracle": claw,
            "gamma2_free_predicted": gamma2_free_cyclic_predicate(g.order),
            "gamma2_free_oracle": gamma2,
        }
        checks["agree"] = checks["claw_free_predicted"] == claw and checks["gamma2_free_predicted"] == gamma2
        record["cyclic_checks"] = checks
        agree.append(checks["agree"])
    p = prime_power_base(g.order)
    if p is not None and not g.is_abelian:
        ok, orders = cyclic_partition_check(g)
        record["cyclic_partition"] = {"ok": ok, "orders": orders}
    record["ok"] = all(agree)
    return record


def _record_job(args):
    entry, options = args
    return group_record(entry, options)


@dataclass
class SweepReport:
    records: list[dict] = field(default_factory=list)

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.records if not r["ok"]]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def by_id(self) -> dict[str, dict]:
        return {r["id"]: r for r in self.records}

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records)

    def summary_table(self) -> str:
        rows = [("group", "order", "theorem", "predicted", "oracle", "agree")]
        for r in self.records:
            for p in r["predictions"]:
                if p["applicable"]:
                    rows.append((r["id"], str(r["order"]), p["theorem"], _fmt(p["predicted_line"]), _fmt(p["oracle"]), _fmt(p["agree"])))
            if "cyclic_checks" in r:
                c = r["cyclic_checks"]
                rows.append((r["id"], str(r["order"]), "cyclic/claw-free", _fmt(c["claw_free_predicted"]), _fmt(c["claw_free_oracle"]), _fmt(c["claw_free_predicted"] == c["claw_free_oracle"])))
                rows.append((r["id"], str(r["order"]), "cyclic/gamma2-free", _fmt(c["gamma2_free_predicted"]), _fmt(c["gamma2_free_oracle"]), _fmt(c["gamma2_free_predicted"] == c["gamma2_free_oracle"])))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
        bad = len(self.disagreements)
        lines.append(f"{len(self.records)} groups, {bad} with disagreements")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    return "-" if v is None else "yes" if v is True else "no" if v is False else str(v)


def verify_sweep(catalog: list[CatalogEntry], options: SweepOptions = SweepOptions()) -> SweepReport:
    """Predictions against both deciders for every catalog group, in catalog order."""
    catalog = list(catalog)
    if options.jobs > 1 and len(catalog) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            records = list(pool.map(_record_job, [(e, options) for e in catalog]))
    else:
        records = [group_record(e, options) for e in catalog]
    return SweepReport(records)
