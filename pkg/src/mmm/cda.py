"""Cluster the reduced ISM into sub-processes and find interdependent pairs.

Clustering is a strike-through closure: starting from one row, strike
every column marked in struck rows, then every row marked in struck
columns, until nothing new is struck.  The struck rows and columns form
one block (a sub-process); remove the block and repeat.  Blocks turn out
to be exactly the connected components of the activity-interface mark
graph, which is how the tests cross-check them.

Two activities are interdependent when each consumes what the other
produces.  With interfaces p and q this shows up as a four-mark pattern:
one activity holds O at p and I at q while the other holds I at p and
O at q.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from mmm.ism import Ism, IsmMark
from mmm.model import ActivityId, InterfaceId


@dataclass(frozen=True)
class SubProcess:
    """One block: activities and interfaces that operate as a unit."""

    id: str
    activities: frozenset[ActivityId]
    interfaces: frozenset[InterfaceId]


@dataclass(frozen=True)
class InterdependentPair:
    """Two activities feeding each other, with the interfaces that close the loop."""

    first: ActivityId
    second: ActivityId
    via: tuple[InterfaceId, InterfaceId]


def cluster_reduced_ism(ism: Ism) -> list[SubProcess]:
    """Partition a reduced ISM into sub-processes S1, S2, ... in discovery order.

    The seed of each round is the first still-unclustered row, in matrix
    row order.  Rows and columns with no marks belong to no block; use
    :func:`isolated_activities` to list them.  Passing an unreduced matrix
    is an error: control marks do not define working blocks.
    """
    if any(mark is IsmMark.CONTROL for mark in ism.entries.values()):
        raise ValueError("control-column-present: reduce the ISM before clustering")

    row_to_cols: dict[ActivityId, set[InterfaceId]] = {a: set() for a in ism.rows}
    col_to_rows: dict[InterfaceId, set[ActivityId]] = {i: set() for i in ism.cols}
    for (activity, interface) in ism.entries:
        row_to_cols[activity].add(interface)
        col_to_rows[interface].add(activity)

    clustered: set[ActivityId] = set()
    subprocesses: list[SubProcess] = []
    for seed in ism.rows:
        if seed in clustered or not row_to_cols[seed]:
            continue
        rows = {seed}
        cols: set[InterfaceId] = set()
        while True:
            new_cols = set().union(*(row_to_cols[r] for r in rows)) - cols
            cols |= new_cols
            new_rows = set().union(*(col_to_rows[c] for c in new_cols)) - rows if new_cols else set()
            rows |= new_rows
            if not new_cols and not new_rows:
                break
        clustered |= rows
        subprocesses.append(
            SubProcess(f"S{len(subprocesses) + 1}", frozenset(rows), frozenset(cols))
        )
    return subprocesses


def isolated_activities(ism: Ism) -> list[ActivityId]:
    """Rows without a single mark, in row order; they join no sub-process."""
    marked = {activity for (activity, _) in ism.entries}
    return [a for a in ism.rows if a not in marked]


def detect_interdependencies(ism: Ism) -> list[InterdependentPair]:
    """All activity pairs whose marks close a two-way loop.

    Each pair appears once, endpoints sorted, ``via`` ascending, the whole
    list ordered by first activity and then by the lower interface.
    """
    # Columns with exactly one O and one I encode one in-scope flow each.
    flows: dict[tuple[ActivityId, ActivityId], InterfaceId] = {}
    for interface in ism.cols:
        marks = ism.column_marks(interface)
        producers = [a for a, m in marks.items() if m is IsmMark.OUTPUT]
        consumers = [a for a, m in marks.items() if m is IsmMark.INPUT]
        if len(producers) == 1 and len(consumers) == 1:
            flows[(producers[0], consumers[0])] = interface

    pairs = []
    for (source, target), p in flows.items():
        q = flows.get((target, source))
        if q is not None and source < target:
            pairs.append(
                InterdependentPair(source, target, (min(p, q), max(p, q)))
            )
    pairs.sort(key=lambda pair: (pair.first, pair.via[0]))
    return pairs


def clusters_to_json(
    subprocesses: list[SubProcess],
    pairs: list[InterdependentPair],
    isolated: list[ActivityId],
) -> str:
    """Export blocks, interdependent pairs, and isolated activities as JSON."""
    payload = {
        "subprocesses": [
            {
                "id": sp.id,
                "activities": sorted(sp.activities),
                "interfaces": sorted(sp.interfaces),
            }
            for sp in subprocesses
        ],
        "interdependent": [
            {"pair": [p.first, p.second], "via": list(p.via)} for p in pairs
        ],
        "isolated": list(isolated),
    }
    return json.dumps(payload, indent=2) + "\n"
