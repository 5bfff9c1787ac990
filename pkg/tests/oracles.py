"""Brute-force reference implementations the real algorithms are checked against.

Each oracle takes a different algorithmic route than the library code:
mutual reachability instead of Tarjan, edge relaxation to a fixpoint
instead of a topological pass, union-find instead of the strike-through
closure.  Slow is fine; the test models are tiny.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence

Edge = tuple[str, str]


def reachable_sets(nodes: Sequence[str], edges: Iterable[Edge]) -> dict[str, set[str]]:
    """node -> set of nodes reachable via one or more edges."""
    adjacency: dict[str, set[str]] = {n: set() for n in nodes}
    for u, v in edges:
        adjacency[u].add(v)
    reach: dict[str, set[str]] = {}
    for start in nodes:
        seen: set[str] = set()
        stack = [start]
        while stack:
            node = stack.pop()
            for succ in adjacency[node]:
                if succ not in seen:
                    seen.add(succ)
                    stack.append(succ)
        reach[start] = seen
    return reach


def scc_partition(nodes: Sequence[str], edges: Iterable[Edge]) -> set[frozenset[str]]:
    """Strongly connected components by pairwise mutual reachability."""
    reach = reachable_sets(nodes, edges)
    components: set[frozenset[str]] = set()
    for n in nodes:
        members = {
            m for m in nodes if m == n or (m in reach[n] and n in reach[m])
        }
        components.add(frozenset(members))
    return components


def has_cycle(nodes: Sequence[str], edges: Iterable[Edge]) -> bool:
    """Any node that can reach itself closes a cycle."""
    reach = reachable_sets(nodes, edges)
    return any(n in reach[n] for n in nodes)


def relaxation_levels(nodes: Sequence[str], edges: Sequence[Edge]) -> dict[str, int]:
    """Longest-path levels by repeated edge relaxation until a fixpoint.

    Only valid on acyclic graphs; a graph that keeps relaxing past the
    node-count bound is cyclic and a test bug.
    """
    level = {n: 1 for n in nodes}
    for _ in range(len(nodes) + 1):
        changed = False
        for u, v in edges:
            if level[u] + 1 > level[v]:
                level[v] = level[u] + 1
                changed = True
        if not changed:
            return level
    raise AssertionError("relaxation did not converge: graph is cyclic")


def bipartite_components(
    marks: Iterable[tuple[str, int]],
) -> set[tuple[frozenset[str], frozenset[int]]]:
    """Connected components of the row-column mark graph, via union-find."""
    parent: dict[Hashable, Hashable] = {}

    def find(x: Hashable) -> Hashable:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: Hashable, b: Hashable) -> None:
        parent[find(a)] = find(b)

    mark_list = list(marks)
    for activity, interface in mark_list:
        union(("row", activity), ("col", interface))

    rows_of: dict[Hashable, set[str]] = {}
    cols_of: dict[Hashable, set[int]] = {}
    for activity, interface in mark_list:
        root = find(("row", activity))
        rows_of.setdefault(root, set()).add(activity)
        cols_of.setdefault(root, set()).add(interface)
    return {
        (frozenset(rows_of[root]), frozenset(cols_of.get(root, set())))
        for root in rows_of
    }


def mutual_io_pairs(edges: Iterable[Edge]) -> set[tuple[str, str]]:
    """Unordered activity pairs connected by arrows in both directions."""
    edge_set = set(edges)
    return {
        (min(u, v), max(u, v)) for u, v in edge_set if (v, u) in edge_set
    }
