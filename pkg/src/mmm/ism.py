"""Interface structure matrix: activities against numbered interfaces.

Where the DSM relates activities to each other, the ISM relates each
activity to the interfaces it touches, with a mark per cell: I when the
interface feeds the activity, O when the activity produces it, C when it
controls the activity.  Boundary interfaces show a single mark (their
other end lies outside the model).  Dropping the control columns yields
the reduced form used for sub-process clustering.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

from mmm.model import ActivityId, DependencyKind, InterfaceId, ProcessModel


class IsmMark(Enum):
    INPUT = "I"
    OUTPUT = "O"
    CONTROL = "C"


@dataclass(frozen=True)
class Ism:
    """Sparse rectangular matrix: rows are activities, columns interfaces."""

    rows: tuple[ActivityId, ...]
    cols: tuple[InterfaceId, ...]
    entries: dict[tuple[ActivityId, InterfaceId], IsmMark]

    def mark(self, activity: ActivityId, interface: InterfaceId) -> IsmMark | None:
        return self.entries.get((activity, interface))

    def column_marks(self, interface: InterfaceId) -> dict[ActivityId, IsmMark]:
        """Marks of one column, keyed by activity, in row order."""
        return {
            a: self.entries[(a, interface)]
            for a in self.rows
            if (a, interface) in self.entries
        }

    def row_marks(self, activity: ActivityId) -> dict[InterfaceId, IsmMark]:
        """Marks of one row, keyed by interface, in column order."""
        return {
            i: self.entries[(activity, i)]
            for i in self.cols
            if (activity, i) in self.entries
        }


def build_ism(model: ProcessModel) -> Ism:
    """Allocate I/O/C marks for every dependency of the model.

    An in-scope input/output interface gets an O on its source row and an I
    on its target row; a boundary interface only the present half; a
    control interface a single C on its target row.
    """
    entries: dict[tuple[ActivityId, InterfaceId], IsmMark] = {}
    for dep in model.dependencies:
        if dep.source is not None:
            entries[(dep.source, dep.id)] = IsmMark.OUTPUT
        if dep.target is not None:
            if dep.kind is DependencyKind.CONTROL:
                entries[(dep.target, dep.id)] = IsmMark.CONTROL
            else:
                entries[(dep.target, dep.id)] = IsmMark.INPUT
    cols = tuple(sorted(d.id for d in model.dependencies))
    return Ism(model.activities, cols, entries)


def reduce_ism(ism: Ism) -> Ism:
    """Drop every control column; input/output marks stay untouched."""
    control_cols = {
        i for (_, i), mark in ism.entries.items() if mark is IsmMark.CONTROL
    }
    cols = tuple(i for i in ism.cols if i not in control_cols)
    entries = {
        (a, i): mark for (a, i), mark in ism.entries.items() if i not in control_cols
    }
    return Ism(ism.rows, cols, entries)


def ism_to_csv(ism: Ism) -> str:
    """Render as CSV: interface numbers across the top, activity labels down the side."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + [str(i) for i in ism.cols])
    for activity in ism.rows:
        marks = ism.row_marks(activity)
        writer.writerow(
            [activity] + [marks[i].value if i in marks else "" for i in ism.cols]
        )
    return out.getvalue()
