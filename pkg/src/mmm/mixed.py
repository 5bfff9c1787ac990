"""Join levels and sub-processes into one mixed matrix model.

Each activity gets its level (from triangulation) and its sub-process
(from clustering) side by side, plus diagnostics for every feedback arrow:
an input/output flow whose source is placed after its target in the
triangulated order.  The level distance of a feedback arrow is a delay
signal: backward dependencies spanning many levels put more downstream
work at risk of rework than tight loops within one level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from mmm.cda import SubProcess
from mmm.dsm import FeedbackClass, build_dsm, classify_feedback
from mmm.model import ActivityId, DependencyKind, ProcessModel
from mmm.triangulation import CycleGroup, LevelAssignment, TriangulationResult


@dataclass(frozen=True)
class ActivityRecord:
    """One activity's place in the joined picture."""

    activity: ActivityId
    level: int
    subprocess: str | None


@dataclass(frozen=True)
class FeedbackLink:
    """A backward input/output flow in the triangulated order."""

    source: ActivityId
    target: ActivityId
    kind: FeedbackClass
    level_distance: int


@dataclass(frozen=True)
class FeedbackSpace:
    """Summary of the region the feedback marks occupy."""

    entry_count: int
    max_level_distance: int
    total_level_distance: int


@dataclass(frozen=True)
class MixedMatrixModel:
    activities: tuple[ActivityRecord, ...]
    cycles: tuple[CycleGroup, ...]
    feedback: tuple[FeedbackLink, ...]
    metrics: FeedbackSpace


def _space(feedback: tuple[FeedbackLink, ...]) -> FeedbackSpace:
    distances = [link.level_distance for link in feedback]
    return FeedbackSpace(len(feedback), max(distances, default=0), sum(distances))


def assemble_mmm(
    model: ProcessModel,
    levels: LevelAssignment,
    subprocesses: list[SubProcess],
    tri: TriangulationResult,
) -> MixedMatrixModel:
    """Join the three analyses of one model into a single view.

    All inputs must cover the same activities; anything missing raises
    ``inconsistent-inputs``.  Activities without any input/output arrow are
    legitimately absent from the sub-process list and get no sub-process.
    """
    placed = set(tri.ordering)
    subprocess_of: dict[ActivityId, str] = {}
    for sp in subprocesses:
        for activity in sp.activities:
            subprocess_of[activity] = sp.id
    touched = {
        endpoint
        for d in model.dependencies
        if d.kind is DependencyKind.IO
        for endpoint in (d.source, d.target)
        if endpoint is not None
    }

    records = []
    for activity in model.activities:
        if activity not in levels.levels or activity not in placed:
            raise ValueError(
                f"inconsistent-inputs: activity {activity!r} missing from the analyses"
            )
        subprocess = subprocess_of.get(activity)
        if subprocess is None and activity in touched:
            raise ValueError(
                f"inconsistent-inputs: activity {activity!r} missing from the sub-processes"
            )
        records.append(ActivityRecord(activity, levels.levels[activity], subprocess))

    triangulated = build_dsm(model, tri.ordering)
    feedback = tuple(
        FeedbackLink(
            entry.source,
            entry.target,
            entry.kind,
            abs(levels.levels[entry.source] - levels.levels[entry.target]),
        )
        for entry in classify_feedback(triangulated)
    )
    return MixedMatrixModel(tuple(records), tri.cycles, feedback, _space(feedback))


def feedback_metrics(mmm: MixedMatrixModel) -> FeedbackSpace:
    """Count the feedback entries and summarise their level distances."""
    return _space(mmm.feedback)


def _grid(mmm: MixedMatrixModel) -> tuple[list[str], list[list[str]]]:
    group_of = {m: g for g in mmm.cycles for m in g.members}
    columns = sorted(
        {r.subprocess for r in mmm.activities if r.subprocess is not None},
        key=lambda s: (len(s), s),
    )
    if any(r.subprocess is None for r in mmm.activities):
        columns.append("(isolated)")

    max_level = max((r.level for r in mmm.activities), default=0)
    cells: list[list[str]] = []
    for level in range(1, max_level + 1):
        row = []
        for column in columns:
            here = [
                r.activity
                for r in mmm.activities
                if r.level == level
                and (r.subprocess or "(isolated)") == column
            ]
            parts: list[str] = []
            for activity in sorted(here):
                group = group_of.get(activity)
                if group is None:
                    parts.append(activity)
                elif group.merged_id not in parts:
                    parts.append(group.merged_id)
            row.append(", ".join(parts))
        cells.append(row)
    return columns, cells


def mmm_to_markdown(mmm: MixedMatrixModel, name: str | None = None) -> str:
    """Report: level-by-subprocess grid, feedback table, feedback-space summary."""
    title = "# Mixed matrix model" + (f": {name}" if name else "")
    lines = [title, "", "## Levels and sub-processes", ""]

    columns, cells = _grid(mmm)
    lines.append("| Level | " + " | ".join(columns) + " |")
    lines.append("|" + "---|" * (len(columns) + 1))
    for level, row in enumerate(cells, start=1):
        lines.append(f"| {level} | " + " | ".join(row) + " |")

    lines += ["", "## Feedback", ""]
    if mmm.feedback:
        lines.append("| Source | Target | Class | Level distance |")
        lines.append("|---|---|---|---|")
        for link in mmm.feedback:
            lines.append(
                f"| {link.source} | {link.target} | {link.kind.value} | {link.level_distance} |"
            )
    else:
        lines.append("No feedback entries: the model is free of backward flows.")

    space = mmm.metrics
    lines += [
        "",
        f"Feedback space: {space.entry_count} entries, "
        f"max level distance {space.max_level_distance}, "
        f"total level distance {space.total_level_distance}.",
        "",
    ]
    return "\n".join(lines)


def mmm_to_json(mmm: MixedMatrixModel) -> str:
    """Full structure as JSON, mirroring the in-memory model."""
    payload = {
        "activities": [
            {"activity": r.activity, "level": r.level, "subprocess": r.subprocess}
            for r in mmm.activities
        ],
        "cycles": [sorted(g.members) for g in mmm.cycles],
        "feedback": [
            {
                "source": link.source,
                "target": link.target,
                "class": link.kind.value,
                "level_distance": link.level_distance,
            }
            for link in mmm.feedback
        ],
        "metrics": {
            "entry_count": mmm.metrics.entry_count,
            "max_level_distance": mmm.metrics.max_level_distance,
            "total_level_distance": mmm.metrics.total_level_distance,
        },
    }
    return json.dumps(payload, indent=2) + "\n"
