"""Census of all voltage assignments on a base graph at a fixed prime.

Assignments are enumerated in lexicographic order over one orientation of the
edges.  Each row records connectivity (breadth-first search, cross-checked
against the generated-subgroup criterion), Picard invariant factors, the set
of vanishing mod-p L-values, and verdict summaries.  Output is one JSON
object per line; reruns skip keys already present, so runs are resumable.
"""

from __future__ import annotations

import json
from itertools import islice, product
from typing import Iterable

from .herbrand import build_report
from .picard import ENUMERATION_BUDGET
from .serre import SerreGraph
from .voltage import VoltageSpec, connected_by_voltage_criterion, derive


def assignment_key(voltages: Iterable[int]) -> str:
    return ",".join(str(a) for a in voltages)


def census_row(
    base: SerreGraph,
    p: int,
    voltages: tuple[int, ...],
    enumeration_budget: int = ENUMERATION_BUDGET,
) -> dict:
    spec = VoltageSpec(base, p, voltages)
    cover = derive(spec)
    connected = cover.is_connected()
    by_criterion = connected_by_voltage_criterion(spec)
    row = {
        "key": assignment_key(voltages),
        "p": p,
        "voltages": list(voltages),
        "connected": connected,
        "criterion_connected": by_criterion,
    }
    if not connected:
        row["pic0"] = None
        row["vanishing"] = None
        row["verdicts"] = {
            name: "SKIPPED"
            for name in ("main11", "main22", "fitting", "duality", "dim_inequality")
        }
        return row
    report = build_report(cover, enumeration_budget=enumeration_budget)
    row["pic0"] = list(report.pic0)
    row["vanishing"] = [r["i"] for r in report.rows if r["h_mod_p"] == 0]
    row["verdicts"] = {
        name: report.global_verdicts[name].status
        for name in ("main11", "main22", "fitting", "duality", "dim_inequality")
    }
    return row


def run_census(
    base: SerreGraph,
    p: int,
    out_path: str,
    budget: int | None = None,
    enumeration_budget: int = ENUMERATION_BUDGET,
) -> dict:
    """Append census rows to a newline-delimited JSON file; resumable.

    Returns a summary dict; when the assignment count exceeds the budget the
    run is partial and the summary carries the cursor of the next assignment.
    """
    if not base.is_connected():
        raise ValueError("census base graph must be connected")
    num_edges = base.num_undirected_edges
    total = (p - 1) ** num_edges
    done: set[str] = set()
    try:
        with open(out_path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                doc = json.loads(line)
                if "key" in doc:
                    done.add(doc["key"])
    except OSError:
        pass
    processed = 0
    written = 0
    cursor = None
    limit = total if budget is None else min(total, budget)
    with open(out_path, "a", encoding="utf-8") as fh:
        iterator = product(range(1, p), repeat=num_edges)
        for idx, voltages in enumerate(islice(iterator, limit)):
            processed += 1
            key = assignment_key(voltages)
            if key in done:
                continue
            row = census_row(base, p, tuple(voltages), enumeration_budget)
            fh.write(json.dumps(row, sort_keys=True) + "\n")
            written += 1
        if limit < total:
            cursor = limit
            fh.write(json.dumps({"cursor": {"next_index": cursor, "total": total}}) + "\n")
    return {
        "total_assignments": total,
        "processed": processed,
        "written": written,
        "cursor": cursor,
    }


def read_census(path: str) -> list[dict]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                doc = json.loads(line)
                if "key" in doc:
                    rows.append(doc)
    return rows
