"""Shared fixtures and independent test oracles."""
from __future__ import annotations

import numpy as np
import pytest

from hcplab import from_edge_list, gen_family
from hcplab.graphs import Graph

# 9-vertex demo graph: vertex 2 is a hub, vertices 7..9 are pendants and
# vertex 3 is isolated, so no Hamiltonian cycle exists.
PENDANT9_EDGES = [(1, 4), (1, 6), (4, 6), (2, 4), (2, 5), (2, 7), (2, 8), (2, 9), (4, 5)]


@pytest.fixture
def pendant9() -> Graph:
    return from_edge_list(9, PENDANT9_EDGES)


@pytest.fixture
def k3() -> Graph:
    return gen_family("complete", 3, 0)


@pytest.fixture
def k4() -> Graph:
    return gen_family("complete", 4, 0)


@pytest.fixture
def c4() -> Graph:
    return gen_family("cycle", 4, 0)


@pytest.fixture
def c5() -> Graph:
    return gen_family("cycle", 5, 0)


@pytest.fixture
def c10() -> Graph:
    return gen_family("cycle", 10, 0)


@pytest.fixture
def path3() -> Graph:
    return from_edge_list(3, [(1, 2), (2, 3)])


def random_gnp(n: int, p: float, seed: int) -> Graph:
    return gen_family("gnp", n, seed, p=p)


def random_graph_suite(count: int, seed: int = 0, n_max: int = 10) -> list[Graph]:
    """Deterministic mixed-density random graphs, 3 <= n <= n_max."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(3, n_max + 1))
        p = float(rng.uniform(0.15, 0.85))
        out.append(random_gnp(n, p, int(rng.integers(0, 2**31))))
    return out


def dp_cycle_count(g: Graph) -> int:
    """Independent recount of directed Hamiltonian cycles anchored at 1,
    via a path-count dynamic program on the adjacency structure (no search
    shared with the enumerator)."""
    n = g.n
    adj0 = [[u - 1 for u in g.adj[v + 1]] for v in range(n)]
    full = (1 << n) - 1
    counts: dict[tuple[int, int], int] = {(1, 0): 1}
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        for last in range(n):
            c = counts.get((mask, last), 0)
            if c == 0 or mask == full:
                continue
            for u in adj0[last]:
                if not mask >> u & 1:
                    key = (mask | (1 << u), u)
                    counts[key] = counts.get(key, 0) + c
    return sum(counts.get((full, v), 0) for v in range(1, n) if 0 in adj0[v])
