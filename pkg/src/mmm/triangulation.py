"""Reorder a DSM to block lower-triangular form and level its activities.

The algorithm peels the matrix from both ends: an activity with no
remaining predecessors (an original activity, OA) is shifted to the far
left of the placed sequence, one with no remaining successors (a
destination activity, DA) to the far right, and the peeled row/column is
removed.  When neither exists the remaining graph contains a cycle; the
smallest enclosing strongly connected group is merged into one synthetic
activity (rows and columns combined, internal arrows dropped) and peeling
resumes.  Afterwards every surviving arrow points left to right, so the
condensed matrix is strictly lower-triangular.

Levels then follow from precedence: sources sit at level 1 and every other
node one past its deepest predecessor, with all members of a merged cycle
sharing the cycle's level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from mmm.dsm import Dsm
from mmm.model import ActivityId

Step = tuple[str, str]


@dataclass(frozen=True)
class CycleGroup:
    """A set of mutually dependent activities merged into one node."""

    members: frozenset[ActivityId]
    merged_id: str


@dataclass(frozen=True)
class TriangulationResult:
    """Final ordering, merged cycles, and the audit trail of moves.

    ``ordering`` covers all activities (cycles expanded in place).  Each
    step is an ``(action, node)`` pair with action ``shift-left``,
    ``shift-right`` or ``merge-cycle``.
    """

    ordering: tuple[ActivityId, ...]
    cycles: tuple[CycleGroup, ...]
    steps: tuple[Step, ...]


@dataclass(frozen=True)
class LevelAssignment:
    """Per-activity level, 1-based from the sources."""

    levels: Mapping[ActivityId, int]
    level_count: int


def find_original_activities(dsm: Dsm) -> set[ActivityId]:
    """Activities whose row holds no off-diagonal mark: nothing precedes them."""
    return {
        dsm.ordering[i] for i in range(dsm.size) if not dsm.entries[i, :].any()
    }


def find_destination_activities(dsm: Dsm) -> set[ActivityId]:
    """Activities whose column holds no off-diagonal mark: nothing follows them."""
    return {
        dsm.ordering[j] for j in range(dsm.size) if not dsm.entries[:, j].any()
    }


def _strongly_connected_components(
    order: Iterable[str], succs: Mapping[str, set[str]]
) -> list[set[str]]:
    """Tarjan's algorithm, iterative to keep deep graphs off the call stack."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[set[str]] = []
    counter = 0

    for root in order:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work: list[tuple[str, Iterable[str]]] = [(root, iter(succs[root]))]
        while work:
            node, neighbours = work[-1]
            pushed = False
            for nxt in neighbours:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(succs[nxt])))
                    pushed = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                component: set[str] = set()
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.add(member)
                    if member == node:
                        break
                components.append(component)
    return components


def triangulate(dsm: Dsm) -> TriangulationResult:
    """Run the peel-and-merge loop until every activity is placed.

    Tie-breaking is fixed for determinism: among several candidates the one
    earliest in the current order wins, and a source is preferred over a
    sink when both exist.  Merged cycles keep the position of their
    earliest member and are labelled ``(members, sorted)``.
    """
    working: list[str] = list(dsm.ordering)
    members: dict[str, tuple[ActivityId, ...]] = {a: (a,) for a in dsm.ordering}
    preds: dict[str, set[str]] = {a: set() for a in dsm.ordering}
    succs: dict[str, set[str]] = {a: set() for a in dsm.ordering}
    for source, target in dsm.edges():
        succs[source].add(target)
        preds[target].add(source)

    left: list[str] = []
    right: list[str] = []
    steps: list[Step] = []
    cycles: list[CycleGroup] = []

    def place(node: str) -> None:
        for p in preds[node]:
            succs[p].discard(node)
        for s in succs[node]:
            preds[s].discard(node)
        del preds[node], succs[node]
        working.remove(node)

    while working:
        source = next((n for n in working if not preds[n]), None)
        if source is not None:
            left.append(source)
            steps.append(("shift-left", source))
            place(source)
            continue

        sink = next((n for n in working if not succs[n]), None)
        if sink is not None:
            right.insert(0, sink)
            steps.append(("shift-right", sink))
            place(sink)
            continue

        # Neither a source nor a sink: at least one cycle remains.
        groups = [
            c for c in _strongly_connected_components(working, succs) if len(c) >= 2
        ]
        chosen = next(c for n in working for c in groups if n in c)
        flattened = tuple(
            a for a in dsm.ordering if any(a in members[n] for n in chosen)
        )
        label = "(" + ",".join(sorted(flattened)) + ")"
        cycles.append(CycleGroup(frozenset(flattened), label))
        steps.append(("merge-cycle", label))

        position = min(working.index(n) for n in chosen)
        merged_preds = set().union(*(preds[n] for n in chosen)) - chosen
        merged_succs = set().union(*(succs[n] for n in chosen)) - chosen
        for p in merged_preds:
            succs[p] -= chosen
            succs[p].add(label)
        for s in merged_succs:
            preds[s] -= chosen
            preds[s].add(label)
        for n in chosen:
            del preds[n], succs[n], members[n]
        preds[label] = merged_preds
        succs[label] = merged_succs
        members[label] = flattened
        working = [n for n in working if n not in chosen]
        working.insert(position, label)

    ordering = tuple(a for node in left + right for a in members[node])
    return TriangulationResult(ordering, tuple(cycles), tuple(steps))


def assign_levels(result: TriangulationResult, dsm: Dsm) -> LevelAssignment:
    """Level the condensation by precedence: 1 + the deepest predecessor.

    Members of a merged cycle inherit the cycle node's level.  ``result``
    must come from ``triangulate`` on the same matrix; the left-to-right
    pass relies on its ordering being topological.
    """
    group_of = {m: g.merged_id for g in result.cycles for m in g.members}

    condensed: list[str] = []
    for activity in result.ordering:
        node = group_of.get(activity, activity)
        if node not in condensed:
            condensed.append(node)

    preds: dict[str, set[str]] = {n: set() for n in condensed}
    for source, target in dsm.edges():
        ns = group_of.get(source, source)
        nt = group_of.get(target, target)
        if ns != nt:
            preds[nt].add(ns)

    node_level: dict[str, int] = {}
    for node in condensed:
        if any(p not in node_level for p in preds[node]):
            raise ValueError("result ordering is not topological for this matrix")
        if preds[node]:
            node_level[node] = 1 + max(node_level[p] for p in preds[node])
        else:
            node_level[node] = 1

    levels = {
        a: node_level[group_of.get(a, a)] for a in sorted(result.ordering)
    }
    return LevelAssignment(levels, max(levels.values(), default=0))


def levels_to_json(assignment: LevelAssignment, result: TriangulationResult) -> str:
    """Export levels and cycle groups as JSON with sorted keys."""
    payload = {
        "levels": {a: assignment.levels[a] for a in sorted(assignment.levels)},
        "cycles": [sorted(g.members) for g in result.cycles],
    }
    return json.dumps(payload, indent=2) + "\n"
