"""Sweep ring families and cross-check formula, construction, and solver.

One VerifyRow per ring records everything the three independent routes
produced; ``all_agree`` asserts that whatever values are present coincide.
Rows are computed in input order and the report assembly never reorders
them, so runs are reproducible (modulo timing fields).
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from math import prod

from . import formulas, metric, pisgraph
from .errors import DisconnectedRing, EmptyGraph, NotCovered
from .rings import RingSpec

DEFAULT_EXACT_CAP = 100

CSV_COLUMNS = [
    "spec", "V", "diam", "formula", "constructed", "resolving",
    "exact", "twin", "info", "agree", "millis",
]


@dataclass
class VerifyRow:
    components: list[int]
    n_vertices: int
    diameter: int | None = None
    formula: int | None = None
    theorem_id: str | None = None
    constructed: int | None = None
    constructed_resolving: bool | None = None
    exact: int | None = None
    exact_status: str | None = None
    twin: int | None = None
    info: int | None = None
    all_agree: bool = True
    millis: float = 0.0
    note: str = ""


def verify_spec(
    spec: RingSpec,
    budget_s: float = metric.DEFAULT_BUDGET_S,
    exact_cap: int = DEFAULT_EXACT_CAP,
) -> VerifyRow:
    """Run every applicable route on one ring and compare the answers."""
    t0 = time.perf_counter()
    row = VerifyRow(components=list(spec.components), n_vertices=spec.vertex_count)
    notes: list[str] = []

    try:
        g = pisgraph.build(spec)
    except (EmptyGraph, DisconnectedRing) as e:
        notes.append(type(e).__name__)
        row.note = "; ".join(notes)
        row.millis = (time.perf_counter() - t0) * 1000.0
        return row

    dist = pisgraph.all_pairs_distances(g)
    row.diameter = pisgraph.diameter(g, dist)
    row.twin = metric.twin_lower_bound(metric.twin_partition(g), g.n)
    row.info = metric.info_lower_bound(g, dist)

    try:
        res = formulas.formula_metric_dim(spec)
        row.formula = res.value
        row.theorem_id = res.theorem_id
        con = formulas.construct_resolving(spec)
        row.constructed = len(con.indices)
        ok, witness = metric.is_resolving(g, dist, con.indices)
        row.constructed_resolving = ok
        if not ok:
            notes.append(f"constructed set fails on pair {witness}")
    except NotCovered:
        notes.append("formula: NotCovered")

    if g.n <= exact_cap:
        rep = metric.metric_dimension_exact(g, budget_s, dist)
        row.exact_status = rep.status
        if rep.status == metric.EXACT:
            row.exact = rep.size
        else:
            notes.append(f"exact incomplete ({rep.status}, best {rep.size})")
    else:
        notes.append(f"exact: skipped (|V| = {g.n} > cap {exact_cap})")

    present = [x for x in (row.formula, row.constructed, row.exact) if x is not None]
    row.all_agree = all(x == present[0] for x in present)
    if row.constructed_resolving is False:
        row.all_agree = False
    row.note = "; ".join(notes)
    row.millis = (time.perf_counter() - t0) * 1000.0
    return row


def family_specs(
    family: str,
    n_min: int | None = None,
    n_max: int | None = None,
    chain_counts: tuple[int, ...] = (4, 5),
    max_product: int = 80,
    specs: list[list[int]] | None = None,
) -> list[RingSpec]:
    """Expand a family name and its parameters into a concrete spec list."""
    if family == "reduced":
        lo, hi = n_min or 3, n_max or 6
        return [RingSpec((2,) * n) for n in range(lo, hi + 1)]
    if family == "three":
        lo, hi = n_min or 1, n_max or 4
        return [RingSpec((3,) * n) for n in range(lo, hi + 1)]
    if family == "chain":
        out = []
        size = 1
        while min(chain_counts) ** size <= max_product:
            for combo in combinations_with_replacement(sorted(chain_counts), size):
                if prod(combo) <= max_product:
                    out.append(RingSpec(combo))
            size += 1
        return out
    if family == "custom":
        if not specs:
            raise ValueError("custom family requires an explicit spec list")
        return [RingSpec(tuple(s)) for s in specs]
    raise ValueError(f"unknown family {family!r}; use reduced, three, chain or custom")


def run_family(
    family: str,
    budget_s: float = metric.DEFAULT_BUDGET_S,
    exact_cap: int = DEFAULT_EXACT_CAP,
    workers: int = 1,
    **params,
) -> list[VerifyRow]:
    """One VerifyRow per ring of the family, in deterministic input order."""
    ring_specs = family_specs(family, **params)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda s: verify_spec(s, budget_s, exact_cap), ring_specs))
    return [verify_spec(s, budget_s, exact_cap) for s in ring_specs]


def run_counterexamples(budget_s: float = metric.DEFAULT_BUDGET_S) -> list[VerifyRow]:
    """The two small mixed products where the mixed formula must not apply.

    Their exact dimensions differ from the naive formula value, which is
    recorded in the note so the gap is visible in reports.
    """
    out = []
    for comps in ([3, 2], [3, 2, 2]):
        spec = RingSpec(tuple(comps))
        row = verify_spec(spec, budget_s)
        naive = formulas.mixed_formula_value(spec)
        suffix = f"naive mixed formula = {naive} (exact {row.exact})"
        row.note = f"{row.note}; {suffix}" if row.note else suffix
        out.append(row)
    return out


def emit_report(rows: list[VerifyRow], fmt: str) -> str:
    """Render rows as csv (fixed column set), json (full rows), or markdown."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(_csv_cells(r))
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2)
    if fmt in ("markdown", "md"):
        lines = [
            "| " + " | ".join(CSV_COLUMNS) + " |",
            "|" + "|".join("---" for _ in CSV_COLUMNS) + "|",
        ]
        for r in rows:
            lines.append("| " + " | ".join(str(c) for c in _csv_cells(r)) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}; use csv, json or markdown")


def rows_from_json(text: str) -> list[VerifyRow]:
    return [VerifyRow(**d) for d in json.loads(text)]


def _csv_cells(r: VerifyRow) -> list:
    def show(x):
        return "" if x is None else x

    return [
        "[" + ",".join(str(c) for c in r.components) + "]",
        r.n_vertices,
        show(r.diameter),
        show(r.formula),
        show(r.constructed),
        show(r.constructed_resolving),
        show(r.exact),
        show(r.twin),
        show(r.info),
        r.all_agree,
        round(r.millis, 1),
    ]


def parse_family_params(text: str | None) -> dict:
    """Parse the CLI ``--params`` mini-grammar into run_family kwargs.

    Semicolon-separated entries: ``n=LO..HI`` (or ``n=N``), ``c=4,5``,
    ``cap=80``, ``specs=[3,2]|[4,4]``.
    """
    out: dict = {}
    if not text:
        return out
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"bad --params entry {part!r}")
        key, val = (x.strip() for x in part.split("=", 1))
        if key == "n":
            if ".." in val:
                lo, hi = val.split("..", 1)
                out["n_min"], out["n_max"] = int(lo), int(hi)
            else:
                out["n_min"] = out["n_max"] = int(val)
        elif key == "c":
            out["chain_counts"] = tuple(int(x) for x in val.split(","))
        elif key == "cap":
            out["max_product"] = int(val)
        elif key == "specs":
            specs = []
            for item in val.split("|"):
                item = item.strip().strip("[]")
                specs.append([int(x) for x in item.split(",")])
            out["specs"] = specs
        else:
            raise ValueError(f"unknown --params key {key!r}")
    return out
