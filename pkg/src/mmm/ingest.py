"""Read and write process models as ``.pmodel`` text documents.

The document format is a small YAML-compatible grammar with three required
top-level keys::

    name: "case-study"
    activities: ["A", "B", "C"]
    dependencies:
    - {id: 1, source: "A", target: "B", kind: io}
    - {id: 2, target: "C", kind: control}

Rules:

* ``activities`` lists the labels in order; that order becomes the model's
  initial ordering.  Labels are case-insensitive and stored uppercase.
* Each dependency record needs ``id`` (unique positive integer) and
  ``kind`` (``io`` or ``control``).  Omitting ``source`` or ``target``
  marks an endpoint outside the model boundary.
* ``#`` comments are allowed anywhere YAML allows them.

Labels are taken verbatim from the document, so quoting is optional even
for words YAML would otherwise coerce (``NO``, ``ON``, ...).  Parsing is
total: any input produces either a model or a located diagnostic.
"""

from __future__ import annotations

import json

import yaml

from mmm.model import Dependency, DependencyKind, ProcessModel, Violation, validate_model

_TOP_KEYS = ("name", "activities", "dependencies")
_DEP_KEYS = ("id", "source", "target", "kind")


class ParseError(Exception):
    """A document that cannot be read at all: bad syntax, shape, or kind.

    ``code`` is ``syntax-error`` or ``bad-kind``; ``line``/``column`` are
    1-based when the position is known.
    """

    def __init__(
        self,
        message: str,
        code: str = "syntax-error",
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.code = code
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{code}: {message}{where}")


class ValidationError(Exception):
    """A well-formed document whose model breaks invariants."""

    def __init__(self, violations: list[Violation]) -> None:
        self.violations = violations
        summary = "; ".join(f"{v.code}: {v.message}" for v in violations)
        super().__init__(summary)


def _mark(node: yaml.Node) -> tuple[int, int]:
    return node.start_mark.line + 1, node.start_mark.column + 1


def _fail(message: str, node: yaml.Node, code: str = "syntax-error") -> ParseError:
    line, column = _mark(node)
    return ParseError(message, code=code, line=line, column=column)


def _scalar(node: yaml.Node, what: str) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise _fail(f"{what} must be a single value", node)
    return node.value


def _mapping_items(node: yaml.Node, what: str) -> list[tuple[str, yaml.Node]]:
    if not isinstance(node, yaml.MappingNode):
        raise _fail(f"{what} must be a mapping", node)
    items: list[tuple[str, yaml.Node]] = []
    seen: set[str] = set()
    for key_node, value_node in node.value:
        key = _scalar(key_node, "key")
        if key in seen:
            raise _fail(f"duplicate key {key!r}", key_node)
        seen.add(key)
        items.append((key, value_node))
    return items


def _parse_dependency(node: yaml.Node, position: int) -> Dependency:
    where = f"dependency #{position}"
    fields = dict(_mapping_items(node, where))
    for key in fields:
        if key not in _DEP_KEYS:
            raise _fail(f"{where} has unexpected key {key!r}", node)
    for key in ("id", "kind"):
        if key not in fields:
            raise _fail(f"{where} is missing {key!r}", node)

    raw_id = _scalar(fields["id"], f"{where} id")
    try:
        number = int(raw_id)
    except ValueError:
        raise _fail(f"{where} id {raw_id!r} is not an integer", fields["id"]) from None

    raw_kind = _scalar(fields["kind"], f"{where} kind")
    try:
        kind = DependencyKind(raw_kind)
    except ValueError:
        raise _fail(
            f"{where} kind must be 'io' or 'control', got {raw_kind!r}",
            fields["kind"],
            code="bad-kind",
        ) from None

    source = _scalar(fields["source"], f"{where} source") if "source" in fields else None
    target = _scalar(fields["target"], f"{where} target") if "target" in fields else None
    return Dependency(number, source, target, kind)


def parse_model(text: str) -> ProcessModel:
    """Parse document text into a validated :class:`ProcessModel`.

    Raises :class:`ParseError` for malformed documents and
    :class:`ValidationError` when the parsed model violates any invariant
    (unknown endpoints, duplicate ids, ...).
    """
    try:
        root = yaml.compose(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise ParseError(
            exc.problem or "malformed document",
            line=mark.line + 1 if mark else None,
            column=mark.column + 1 if mark else None,
        ) from None
    except yaml.YAMLError as exc:
        raise ParseError(str(exc)) from None

    if root is None:
        raise ParseError("document is empty")
    items = _mapping_items(root, "document")
    keys = [key for key, _ in items]
    for key in keys:
        if key not in _TOP_KEYS:
            raise _fail(f"unexpected top-level key {key!r}", root)
    for key in _TOP_KEYS:
        if key not in keys:
            raise _fail(f"missing top-level key {key!r}", root)
    fields = dict(items)

    name = _scalar(fields["name"], "name")

    activities_node = fields["activities"]
    if not isinstance(activities_node, yaml.SequenceNode):
        raise _fail("activities must be a list", activities_node)
    activities = tuple(
        _scalar(item, f"activity #{i + 1}")
        for i, item in enumerate(activities_node.value)
    )

    dependencies_node = fields["dependencies"]
    if not isinstance(dependencies_node, yaml.SequenceNode):
        raise _fail("dependencies must be a list", dependencies_node)
    dependencies = tuple(
        _parse_dependency(item, i + 1)
        for i, item in enumerate(dependencies_node.value)
    )

    model = ProcessModel(name, activities, dependencies)
    violations = validate_model(model)
    if violations:
        raise ValidationError(violations)
    return model


def _quote(value: str) -> str:
    # JSON string escapes are a subset of YAML double-quoted scalars.
    return json.dumps(value, ensure_ascii=True)


def serialize_model(model: ProcessModel) -> str:
    """Render a model as document text.

    Output is deterministic: activities keep model order, dependencies are
    written sorted by interface id, labels are always quoted.  The result
    parses back to an equal model.
    """
    lines = [f"name: {_quote(model.name)}"]
    lines.append(
        "activities: [" + ", ".join(_quote(a) for a in model.activities) + "]"
    )
    if model.dependencies:
        lines.append("dependencies:")
        for dep in model.dependencies:
            parts = [f"id: {dep.id}"]
            if dep.source is not None:
                parts.append(f"source: {_quote(dep.source)}")
            if dep.target is not None:
                parts.append(f"target: {_quote(dep.target)}")
            parts.append(f"kind: {dep.kind.value}")
            lines.append("- {" + ", ".join(parts) + "}")
    else:
        lines.append("dependencies: []")
    return "\n".join(lines) + "\n"
