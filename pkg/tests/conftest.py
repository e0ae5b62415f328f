import numpy as np
import pytest

from graphenergy import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_graph,
)


@pytest.fixture
def base_graphs() -> dict[str, Graph]:
    """The standard small base set used across operator and energy tests."""
    return {
        "K3": complete_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K23": complete_bipartite(2, 3),
        "P4": path_graph(4),
        "R8": random_graph(8, 0.5, seed=20240811),
    }


def random_graphs(count: int, max_order: int, seed: int) -> list[Graph]:
    """Deterministic batch of random graphs with varied orders and densities."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_order + 1))
        p = float(rng.uniform(0.1, 0.9))
        out.append(random_graph(n, p, seed=rng))
    return out
