"""Command-line front end: run the analysis pipeline on a model file.

One verb, ``analyze``.  It parses a ``.pmodel`` file, runs the full
pipeline, prints a short summary, and writes the exports selected by
``--stage`` and ``--format`` into the output directory.  Exit codes are a
stable contract: 0 success, 1 validation failure, 2 I/O or syntax error.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import click

from mmm.cda import (
    SubProcess,
    cluster_reduced_ism,
    clusters_to_json,
    detect_interdependencies,
    isolated_activities,
)
from mmm.dsm import build_dsm, dsm_to_csv
from mmm.ingest import ParseError, ValidationError, parse_model
from mmm.ism import build_ism, ism_to_csv, reduce_ism
from mmm.mixed import assemble_mmm, mmm_to_json, mmm_to_markdown
from mmm.model import ProcessModel
from mmm.triangulation import (
    TriangulationResult,
    assign_levels,
    levels_to_json,
    triangulate,
)

STAGES = ("all", "dsm", "ism", "levels", "clusters", "mmm")
FORMATS = ("csv", "json", "md", "dot")


@dataclass(frozen=True)
class RunConfig:
    input_path: Path
    output_dir: Path = Path(".")
    formats: tuple[str, ...] = FORMATS
    stage: str = "all"


def export_dot(
    model: ProcessModel,
    tri: TriangulationResult,
    subprocesses: list[SubProcess],
) -> str:
    """Render the model as DOT: one cluster per sub-process, feedback dashed.

    Edges carry their interface number; an edge pointing backwards in the
    triangulated order is drawn dashed and red, outside the layout ranks.
    """
    position = {a: i for i, a in enumerate(tri.ordering)}
    subprocess_of = {a: sp.id for sp in subprocesses for a in sp.activities}

    lines = [f'digraph "{model.name}" {{', "  rankdir=LR;", "  node [shape=box];"]
    for sp in subprocesses:
        lines.append(f"  subgraph cluster_{sp.id} {{")
        lines.append(f'    label="{sp.id}";')
        for activity in sorted(sp.activities):
            lines.append(f'    "{activity}";')
        lines.append("  }")
    for activity in model.activities:
        if activity not in subprocess_of:
            lines.append(f'  "{activity}";')
    for dep in model.dependencies:
        if not dep.is_internal_io:
            continue
        attrs = [f'label="{dep.id}"']
        if position[dep.source] > position[dep.target]:
            attrs += ["style=dashed", "color=red", "constraint=false"]
        lines.append(f'  "{dep.source}" -> "{dep.target}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _style(text: str, **kwargs) -> str:
    if os.environ.get("MMM_NO_COLOR") or not sys.stdout.isatty():
        return text
    return click.style(text, **kwargs)


def run(config: RunConfig) -> int:
    """Execute the pipeline and write the selected exports.

    Returns the exit status instead of raising, so callers (and tests) can
    treat the whole run as data.
    """
    try:
        text = config.input_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {config.input_path}: {exc}", file=sys.stderr)
        return 2

    try:
        model = parse_model(text)
    except ParseError as exc:
        print(f"{config.input_path}: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"{config.input_path}: invalid model", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation.code}: {violation.message}", file=sys.stderr)
        return 1

    dsm = build_dsm(model)
    tri = triangulate(dsm)
    levels = assign_levels(tri, dsm)
    ism = build_ism(model)
    reduced = reduce_ism(ism)
    subprocesses = cluster_reduced_ism(reduced)
    pairs = detect_interdependencies(reduced)
    isolated = isolated_activities(reduced)
    mmm = assemble_mmm(model, levels, subprocesses, tri)

    exports: list[tuple[str, str, str]] = []  # (filename, format, content)
    if config.stage in ("all", "dsm"):
        exports.append(("dsm.csv", "csv", dsm_to_csv(dsm)))
    if config.stage in ("all", "ism"):
        exports.append(("ism.csv", "csv", ism_to_csv(ism)))
    if config.stage in ("all", "levels"):
        exports.append(("levels.json", "json", levels_to_json(levels, tri)))
    if config.stage in ("all", "clusters"):
        exports.append(
            ("clusters.json", "json", clusters_to_json(subprocesses, pairs, isolated))
        )
    if config.stage in ("all", "mmm"):
        exports.append(("mmm.md", "md", mmm_to_markdown(mmm, model.name)))
        exports.append(("mmm.json", "json", mmm_to_json(mmm)))
    if config.stage == "all":
        exports.append(("graph.dot", "dot", export_dot(model, tri, subprocesses)))

    try:
        config.output_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for filename, fmt, content in exports:
            if fmt not in config.formats:
                continue
            (config.output_dir / filename).write_text(content, encoding="utf-8")
            written.append(filename)
    except OSError as exc:
        print(f"error: cannot write outputs: {exc}", file=sys.stderr)
        return 2

    cycles = ", ".join(g.merged_id for g in mmm.cycles) or "none"
    print(
        f"{_style(model.name, bold=True)}: {len(model.activities)} activities, "
        f"{len(model.dependencies)} interfaces"
    )
    print(
        f"levels: {levels.level_count} | sub-processes: {len(subprocesses)} | "
        f"cycles: {cycles} | feedback entries: {mmm.metrics.entry_count}"
    )
    if written:
        print("wrote: " + ", ".join(str(config.output_dir / name) for name in written))
    return 0


@click.group()
def main() -> None:
    """Matrix-based analysis of process models."""


@main.command()
@click.argument("model_file", type=click.Path(path_type=Path))
@click.option(
    "--stage",
    type=click.Choice(STAGES),
    default="all",
    show_default=True,
    help="Which part of the pipeline to export.",
)
@click.option(
    "--format",
    "formats",
    default=",".join(FORMATS),
    show_default=True,
    help="Comma-separated subset of csv,json,md,dot.",
)
@click.option(
    "--out",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("."),
    show_default=True,
    help="Directory for the exported files.",
)
def analyze(model_file: Path, stage: str, formats: str, out: Path) -> None:
    """Analyze MODEL_FILE and export matrices, levels, clusters, and reports."""
    selected = tuple(f.strip() for f in formats.split(",") if f.strip())
    unknown = [f for f in selected if f not in FORMATS]
    if unknown or not selected:
        raise click.BadParameter(
            f"unknown format(s): {', '.join(unknown) or '(empty)'}", param_hint="--format"
        )
    config = RunConfig(input_path=model_file, output_dir=out, formats=selected, stage=stage)
    sys.exit(run(config))
