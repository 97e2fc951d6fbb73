import numpy as np
import pytest

from dilab.wgraph import WeightedGraph


def random_weighted_graph(
    rng: np.random.Generator,
    max_vertices: int = 10,
    edge_prob: float = 0.4,
    min_vertices: int = 2,
) -> WeightedGraph:
    """Random simple graph with weights in [0.5, 3.5]."""
    n = int(rng.integers(min_vertices, max_vertices + 1))
    ids = [f"v{i:02d}" for i in range(n)]
    weights = {v: float(rng.uniform(0.5, 3.5)) for v in ids}
    edges = [
        (ids[i], ids[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return WeightedGraph.build(weights, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
