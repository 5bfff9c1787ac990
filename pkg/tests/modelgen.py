"""Seeded random process models for the randomized property runs."""

from __future__ import annotations

import random
import string

from mmm.model import Dependency, DependencyKind, ProcessModel


def random_model(rng: random.Random, max_activities: int = 12) -> ProcessModel:
    """A valid model with random topology: io edges, boundary arrows, controls."""
    n = rng.randint(1, max_activities)
    labels = rng.sample(string.ascii_uppercase, n)

    records: list[tuple[str | None, str | None, DependencyKind]] = []
    density = rng.uniform(0.0, 0.35)
    for source in labels:
        for target in labels:
            if source != target and rng.random() < density:
                records.append((source, target, DependencyKind.IO))
    for activity in labels:
        if rng.random() < 0.1:
            records.append((activity, None, DependencyKind.IO))
        if rng.random() < 0.1:
            records.append((None, activity, DependencyKind.IO))
        if rng.random() < 0.15:
            others = [a for a in labels if a != activity]
            source = rng.choice(others) if others and rng.random() < 0.3 else None
            records.append((source, activity, DependencyKind.CONTROL))

    ids = rng.sample(range(1, 4 * len(records) + 2), len(records))
    dependencies = tuple(
        Dependency(num, source, target, kind)
        for num, (source, target, kind) in zip(ids, records)
    )
    return ProcessModel(f"gen-{rng.randrange(10**6)}", tuple(labels), dependencies)
