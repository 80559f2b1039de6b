"""Shared test fixtures and instance builders."""

from __future__ import annotations

import pytest

from listcolor.errors import ConfigError
from listcolor.graph import build_graph
from listcolor.instance import GenConfig, Instance, gen_instance, instance_from_lists
from listcolor.seeding import mix_seed


def make_instance(n, edges, lists) -> Instance:
    return instance_from_lists(build_graph(n, edges), lists)


def triangle(lists=({1, 2, 3}, {1, 2, 3}, {1, 2, 3})) -> Instance:
    return make_instance(3, [(0, 1), (1, 2), (0, 2)], lists)


def gen_batch(tag, sizes, densities, factors, lengths, per_combo=1):
    """Deterministic stream of generated instances for sweep tests.
    Combos whose palette cannot hold k colors are skipped."""
    for n in sizes:
        for d in densities:
            for c in factors:
                for k in lengths:
                    for idx in range(per_combo):
                        seed = mix_seed(0, tag, n, d, c, k, idx)
                        try:
                            cfg = GenConfig(n=n, d=d, c=c, k=k, seed=seed)
                        except ConfigError:
                            continue
                        yield gen_instance(cfg)


@pytest.fixture
def tri() -> Instance:
    return triangle()
