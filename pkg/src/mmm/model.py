"""Domain types for process models.

A process model is a set of activities plus the dependency arrows
(interfaces) between them.  Two dependency kinds exist: input/output flows
(one activity's output feeds another's input) and control flows (an
external constraint gates an activity).  Arrows may also cross the model
boundary, in which case the missing endpoint is simply absent.

Everything here is immutable after construction; models are safe to share
between concurrent analyses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# An activity is identified by a short label, case-insensitive and stored
# uppercase.  Interfaces are identified by explicit positive integers that
# are never renumbered.
ActivityId = str
InterfaceId = int


class DependencyKind(Enum):
    """The two arrow flavours a process model distinguishes."""

    IO = "io"
    CONTROL = "control"


@dataclass(frozen=True)
class Dependency:
    """One numbered arrow between activities (or across the model boundary).

    A missing ``source`` or ``target`` marks an external endpoint: the flow
    enters or leaves the modeled scope.  Control arrows always have a
    target (a control that gates nothing is meaningless).
    """

    id: InterfaceId
    source: ActivityId | None
    target: ActivityId | None
    kind: DependencyKind

    def __post_init__(self) -> None:
        if self.source is not None:
            object.__setattr__(self, "source", self.source.upper())
        if self.target is not None:
            object.__setattr__(self, "target", self.target.upper())

    @property
    def is_internal_io(self) -> bool:
        """True for input/output arrows whose endpoints are both activities."""
        return (
            self.kind is DependencyKind.IO
            and self.source is not None
            and self.target is not None
        )


@dataclass(frozen=True)
class ProcessModel:
    """Activities plus identified dependency arrows; the single source of truth.

    The activity sequence fixes the model's initial ordering.  Dependencies
    are stored sorted by interface id so that two models with the same
    content compare equal regardless of declaration order.
    """

    name: str
    activities: tuple[ActivityId, ...] = ()
    dependencies: tuple[Dependency, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "activities", tuple(a.upper() for a in self.activities)
        )
        object.__setattr__(
            self,
            "dependencies",
            tuple(sorted(self.dependencies, key=lambda d: d.id)),
        )

    def internal_io_edges(self) -> list[tuple[ActivityId, ActivityId]]:
        """(source, target) pairs of every in-scope input/output arrow."""
        return [
            (d.source, d.target) for d in self.dependencies if d.is_internal_io
        ]


@dataclass(frozen=True)
class Violation:
    """One broken model invariant: a machine-readable code plus a message."""

    code: str
    message: str


def validate_model(model: ProcessModel) -> list[Violation]:
    """Check every model invariant and report all violations found.

    Violations are data, not failures: an invalid model is still a value
    you can inspect.  An empty report means the model is valid.

    Codes: ``empty-label``, ``duplicate-activity``, ``bad-interface-id``,
    ``duplicate-interface``, ``missing-endpoints``, ``self-dependency``,
    ``control-missing-target``, ``unknown-endpoint``.
    """
    violations: list[Violation] = []

    seen_labels: set[str] = set()
    dup_labels: list[str] = []
    for label in model.activities:
        if not label:
            violations.append(Violation("empty-label", "activity label is empty"))
        elif label in seen_labels:
            if label not in dup_labels:
                dup_labels.append(label)
        else:
            seen_labels.add(label)
    for label in dup_labels:
        violations.append(
            Violation("duplicate-activity", f"activity {label!r} declared more than once")
        )

    seen_ids: set[int] = set()
    dup_ids: list[int] = []
    for dep in model.dependencies:
        if not isinstance(dep.id, int) or isinstance(dep.id, bool) or dep.id < 1:
            violations.append(
                Violation("bad-interface-id", f"interface id {dep.id!r} is not a positive integer")
            )
        elif dep.id in seen_ids:
            if dep.id not in dup_ids:
                dup_ids.append(dep.id)
        else:
            seen_ids.add(dep.id)
    for num in dup_ids:
        violations.append(
            Violation("duplicate-interface", f"interface id {num} used more than once")
        )

    declared = set(model.activities)
    for dep in model.dependencies:
        if dep.source is None and dep.target is None:
            violations.append(
                Violation("missing-endpoints", f"interface {dep.id} has neither source nor target")
            )
        if dep.source is not None and dep.source == dep.target:
            violations.append(
                Violation(
                    "self-dependency",
                    f"interface {dep.id} loops {dep.source!r} onto itself",
                )
            )
        if dep.kind is DependencyKind.CONTROL and dep.target is None:
            violations.append(
                Violation("control-missing-target", f"control interface {dep.id} has no target")
            )
        for endpoint in (dep.source, dep.target):
            if endpoint is not None and endpoint not in declared:
                violations.append(
                    Violation(
                        "unknown-endpoint",
                        f"interface {dep.id} references undeclared activity {endpoint!r}",
                    )
                )

    return violations


# Canonical 14-activity example used throughout the tests and docs.  The
# interface numbering is part of the contract: downstream examples refer to
# specific ids (e.g. the mutual pair on interfaces 13 and 15).
_FIXTURE_INTERFACES: tuple[tuple[int, str | None, str | None, str], ...] = (
    (1, "A", "B", "io"),
    (2, "B", "C", "io"),
    (3, None, "D", "control"),
    (4, "C", "D", "io"),
    (5, "D", "E", "io"),
    (6, "E", "F", "io"),
    (7, None, "H", "control"),
    (8, "F", "D", "io"),
    (9, "F", "H", "io"),
    (10, "G", "I", "io"),
    (11, "J", "L", "io"),
    (12, "H", None, "io"),
    (13, "I", "K", "io"),
    (14, "L", "N", "io"),
    (15, "K", "I", "io"),
    (16, "M", "N", "io"),
    (17, None, "K", "control"),
    (18, "J", "H", "io"),
)


def case_study_fixture() -> ProcessModel:
    """The canonical 14-activity telecom-workflow model (activities A to N).

    Fourteen in-scope input/output arrows, one boundary output (activity H's
    deliverable, interface 12), and three control arrows (3, 7, 17).  The
    graph contains two mutually dependent groups: D-E-F and I-K.
    """
    return ProcessModel(
        name="case-study",
        activities=tuple("ABCDEFGHIJKLMN"),
        dependencies=tuple(
            Dependency(num, src, dst, DependencyKind(kind))
            for num, src, dst, kind in _FIXTURE_INTERFACES
        ),
    )
