"""Activity-based design structure matrix in the IR/FAD convention.

Inputs are indexed in rows and outputs in columns: a mark at (row i,
column j) means the activity at row i consumes the output of the activity
at column j.  Backward flows therefore land above the diagonal, which is
where all feedback diagnostics live.  Only input/output arrows are
encoded; control arrows gate execution on a different time scale and stay
out of the matrix.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from mmm.model import ActivityId, ProcessModel

# A feedback mark at most this far from the diagonal (one empty cell away,
# both longitudinally and latitudinally) is a short rework loop; anything
# farther back spans real process distance.
ITERATION_SPAN = 2


class FeedbackClass(Enum):
    ITERATION = "iteration"
    CYCLE = "cycle"


@dataclass(frozen=True, eq=False)
class Dsm:
    """Square binary matrix over an explicit activity ordering.

    ``entries[i, j]`` is True when ``ordering[i]`` consumes the output of
    ``ordering[j]``.  The diagonal conceptually holds the activity itself
    and is never marked.
    """

    ordering: tuple[ActivityId, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "ordering", tuple(self.ordering))
        self.entries.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.ordering)

    def index_of(self, activity: ActivityId) -> int:
        return self.ordering.index(activity)

    def edges(self) -> list[tuple[ActivityId, ActivityId]]:
        """Recover the (source, target) pairs encoded by the marks."""
        rows, cols = np.nonzero(self.entries)
        return [
            (self.ordering[j], self.ordering[i])
            for i, j in zip(rows.tolist(), cols.tolist())
        ]


@dataclass(frozen=True)
class FeedbackEntry:
    """One mark above the diagonal: a backward information flow.

    ``source`` produces at column ``col``; ``target`` consumes at row
    ``row`` (row < col).  ``kind`` is filled in by :func:`classify_feedback`.
    """

    row: int
    col: int
    source: ActivityId
    target: ActivityId
    kind: FeedbackClass | None = None


def build_dsm(model: ProcessModel, ordering: Sequence[ActivityId] | None = None) -> Dsm:
    """Write the model's input/output arrows into matrix form.

    ``ordering`` must be a permutation of the model's activities and
    defaults to the model's own order.  Control arrows and arrows with a
    boundary endpoint are ignored.
    """
    if ordering is None:
        ordering = model.activities
    ordering = tuple(a.upper() for a in ordering)
    if sorted(ordering) != sorted(model.activities):
        raise ValueError("bad-ordering: not a permutation of the model's activities")

    index = {activity: i for i, activity in enumerate(ordering)}
    entries = np.zeros((len(ordering), len(ordering)), dtype=bool)
    for source, target in model.internal_io_edges():
        entries[index[target], index[source]] = True
    return Dsm(ordering, entries)


def feedback_entries(dsm: Dsm) -> list[FeedbackEntry]:
    """Every mark above the diagonal, in row-major order, class unset."""
    rows, cols = np.nonzero(np.triu(dsm.entries, k=1))
    return [
        FeedbackEntry(i, j, source=dsm.ordering[j], target=dsm.ordering[i])
        for i, j in zip(rows.tolist(), cols.tolist())
    ]


def classify_feedback(dsm: Dsm) -> list[FeedbackEntry]:
    """Split feedback marks into short iterations and long cycles.

    A mark at (i, j) is an iteration when j - i <= 2: adjacent to the
    diagonal or exactly one empty entry away.  The distance is measured in
    whatever ordering the matrix carries, so triangulate first; on an
    unsorted matrix the distances are not meaningful.
    """
    return [
        FeedbackEntry(
            e.row,
            e.col,
            e.source,
            e.target,
            FeedbackClass.ITERATION if e.col - e.row <= ITERATION_SPAN else FeedbackClass.CYCLE,
        )
        for e in feedback_entries(dsm)
    ]


def dsm_to_csv(dsm: Dsm) -> str:
    """Render the grid as CSV: header = ordering, diagonal = label, marks = x."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(dsm.ordering)
    for i, label in enumerate(dsm.ordering):
        row = ["x" if dsm.entries[i, j] else "" for j in range(dsm.size)]
        row[i] = label
        writer.writerow(row)
    return out.getvalue()
