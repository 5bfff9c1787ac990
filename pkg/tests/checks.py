"""The property checks shared by the hypothesis suite and the acceptance run.

Every function takes one valid model, exercises part of the pipeline, and
asserts its contract against an oracle from :mod:`oracles`.
"""

from __future__ import annotations

import oracles
from mmm.cda import cluster_reduced_ism, detect_interdependencies, isolated_activities
from mmm.dsm import build_dsm
from mmm.ingest import parse_model, serialize_model
from mmm.ism import IsmMark, build_ism, reduce_ism
from mmm.model import ProcessModel
from mmm.triangulation import TriangulationResult, assign_levels, triangulate


def _condensed(model: ProcessModel, tri: TriangulationResult):
    """Condensation nodes in triangulated order plus its edge list."""
    group_of = {m: g.merged_id for g in tri.cycles for m in g.members}
    order: list[str] = []
    for activity in tri.ordering:
        node = group_of.get(activity, activity)
        if node not in order:
            order.append(node)
    edges = {
        (group_of.get(s, s), group_of.get(t, t))
        for s, t in model.internal_io_edges()
        if group_of.get(s, s) != group_of.get(t, t)
    }
    return group_of, order, sorted(edges)


def check_triangulation_lower_triangular(model: ProcessModel) -> None:
    tri = triangulate(build_dsm(model))
    assert sorted(tri.ordering) == sorted(model.activities)
    group_of, order, edges = _condensed(model, tri)
    position = {node: i for i, node in enumerate(order)}
    for source, target in edges:
        assert position[source] < position[target], (source, target, order)
    # cycle members sit together in the expanded ordering
    for group in tri.cycles:
        indices = sorted(tri.ordering.index(m) for m in group.members)
        assert indices == list(range(indices[0], indices[0] + len(indices)))


def check_cycles_match_scc_oracle(model: ProcessModel) -> None:
    tri = triangulate(build_dsm(model))
    want = {
        c
        for c in oracles.scc_partition(model.activities, model.internal_io_edges())
        if len(c) >= 2
    }
    assert {g.members for g in tri.cycles} == want


def check_leveling(model: ProcessModel) -> None:
    dsm = build_dsm(model)
    tri = triangulate(dsm)
    assignment = assign_levels(tri, dsm)
    group_of, order, edges = _condensed(model, tri)

    oracle = oracles.relaxation_levels(order, edges)
    assert assignment.levels == {
        a: oracle[group_of.get(a, a)] for a in model.activities
    }
    assert assignment.level_count == max(assignment.levels.values(), default=0)
    # monotone along every non-cycle-internal edge
    for source, target in model.internal_io_edges():
        if group_of.get(source, source) != group_of.get(target, target):
            assert assignment.levels[source] < assignment.levels[target]
    for group in tri.cycles:
        assert len({assignment.levels[m] for m in group.members}) == 1


def check_cda_matches_components(model: ProcessModel) -> None:
    reduced = reduce_ism(build_ism(model))
    subprocesses = cluster_reduced_ism(reduced)
    got = {(sp.activities, sp.interfaces) for sp in subprocesses}
    want = oracles.bipartite_components(reduced.entries.keys())
    assert got == want
    marked = {activity for activity, _ in reduced.entries}
    assert set(isolated_activities(reduced)) == set(reduced.rows) - marked


def check_pairs_match_two_cycles(model: ProcessModel) -> None:
    reduced = reduce_ism(build_ism(model))
    pairs = detect_interdependencies(reduced)
    want = oracles.mutual_io_pairs(model.internal_io_edges())
    assert {(p.first, p.second) for p in pairs} == want
    by_edge = {(d.source, d.target): d.id for d in model.dependencies if d.is_internal_io}
    for pair in pairs:
        forward = by_edge[(pair.first, pair.second)]
        backward = by_edge[(pair.second, pair.first)]
        assert pair.via == (min(forward, backward), max(forward, backward))
    # every mutual pair works inside one sub-process
    subprocess_of = {
        a: sp.id for sp in cluster_reduced_ism(reduced) for a in sp.activities
    }
    for pair in pairs:
        assert subprocess_of[pair.first] == subprocess_of[pair.second]


def check_ingest_roundtrip(model: ProcessModel) -> None:
    text = serialize_model(model)
    assert parse_model(text) == model
    assert serialize_model(model) == text


def check_dsm_ism_agreement(model: ProcessModel) -> None:
    dsm = build_dsm(model)
    ism = build_ism(model)
    producer_of: dict[int, str] = {}
    consumer_of: dict[int, str] = {}
    for (activity, interface), mark in ism.entries.items():
        if mark is IsmMark.OUTPUT:
            producer_of[interface] = activity
        elif mark is IsmMark.INPUT:
            consumer_of[interface] = activity
    flows = {
        (producer_of[i], consumer_of[i])
        for i in ism.cols
        if i in producer_of and i in consumer_of
    }
    index = {a: i for i, a in enumerate(dsm.ordering)}
    for consumer in dsm.ordering:
        for producer in dsm.ordering:
            marked = bool(dsm.entries[index[consumer], index[producer]])
            assert marked == ((producer, consumer) in flows)


ALL_CHECKS = (
    check_triangulation_lower_triangular,
    check_cycles_match_scc_oracle,
    check_leveling,
    check_cda_matches_components,
    check_pairs_match_two_cycles,
    check_ingest_roundtrip,
    check_dsm_ism_agreement,
)
