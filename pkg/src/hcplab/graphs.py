"""Undirected simple graphs: construction, validation, generators and text I/O.

Vertices are 1-indexed everywhere in the public API. Edges are stored as a
canonical sorted tuple of (u, v) pairs with u < v, so two graphs compare
equal iff they have the same vertex count and edge set.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Base class for graph construction and parsing errors."""


class SelfLoopError(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class VertexOutOfRangeError(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} out of range 1..{n}")
        self.vertex = u
        self.n = n


class ParseError(GraphError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InfeasibleFamilyError(GraphError):
    """Requested generator parameters cannot produce a valid graph."""


class TooLargeError(ValueError):
    """Input exceeds the size cap of an exponential-time routine."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"n={n} exceeds cap {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 1..n."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple per vertex; index 0 is unused padding."""
        nbrs: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def adj_masks(self) -> np.ndarray:
        """Neighbor bitmask per vertex (bit v-1 set), 0-indexed row v-1."""
        masks = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return masks

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree sequence indexed by vertex (entry 0 unused)."""
        return tuple(len(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees of vertices 1..n (no padding entry)."""
        return self.degrees[1:]


def _canonical_edge(u: int, v: int, n: int) -> tuple[int, int]:
    for w in (u, v):
        if not 1 <= w <= n:
            raise VertexOutOfRangeError(w, n)
    if u == v:
        raise SelfLoopError(u)
    return (u, v) if u < v else (v, u)


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated Graph; duplicate and reversed pairs collapse."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    edges = {_canonical_edge(u, v, n) for u, v in pairs}
    return Graph(n=n, edges=tuple(sorted(edges)))


def validate(g: Graph) -> None:
    """Check structural invariants; raises GraphError on violation."""
    seen = set()
    for u, v in g.edges:
        if not (1 <= u < v <= g.n):
            raise GraphError(f"non-canonical edge ({u}, {v})")
        if (u, v) in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
    for v in range(1, g.n + 1):
        for u in g.adj[v]:
            if v not in g.adj_sets[u]:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    if sum(g.degree_sequence()) != 2 * g.m:
        raise GraphError("degree sum does not match twice the edge count")


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

FAMILIES = ("complete", "cycle", "gnp", "planted", "bounded")


def _relabeled_cycle_edges(n: int, rng: np.random.Generator) -> set[tuple[int, int]]:
    # Hidden Hamiltonian cycle under a uniformly random vertex relabeling.
    order = rng.permutation(n) + 1
    edges = set()
    for i in range(n):
        u, v = int(order[i]), int(order[(i + 1) % n])
        edges.add((u, v) if u < v else (v, u))
    return edges


def gen_family(family: str, n: int, seed: int, *, p: float | None = None,
               extra_edges: int | None = None,
               max_degree: int | None = None) -> Graph:
    """Deterministic graph generator for the supported families.

    complete        K_n (seed ignored).
    cycle           C_n (seed ignored).
    gnp             each of the C(n,2) edges present independently with
                    probability ``p``.
    planted         a hidden Hamiltonian cycle plus ``extra_edges`` uniformly
                    random additional edges; always Hamiltonian.
    bounded         a hidden Hamiltonian cycle plus random edges added while
                    every degree stays <= ``max_degree``; always Hamiltonian
                    and max degree is guaranteed.
    """
    if n < 3:
        raise InfeasibleFamilyError(f"need n >= 3, got {n}")
    rng = np.random.default_rng(np.random.SeedSequence([_FAMILY_TAGS[family], seed])
                                if family in _FAMILY_TAGS else seed)

    if family == "complete":
        return from_edge_list(n, [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)])
    if family == "cycle":
        return from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if family == "gnp":
        if p is None or not 0.0 <= p <= 1.0:
            raise InfeasibleFamilyError(f"gnp needs 0 <= p <= 1, got {p}")
        pairs = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]
        keep = rng.random(len(pairs)) < p
        return from_edge_list(n, [e for e, k in zip(pairs, keep) if k])
    if family == "planted":
        if extra_edges is None or extra_edges < 0:
            raise InfeasibleFamilyError(f"planted needs extra_edges >= 0, got {extra_edges}")
        edges = _relabeled_cycle_edges(n, rng)
        free = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)
                if (u, v) not in edges]
        if extra_edges > len(free):
            raise InfeasibleFamilyError(
                f"planted: only {len(free)} non-cycle slots for {extra_edges} extra edges")
        chosen = rng.choice(len(free), size=extra_edges, replace=False)
        edges.update(free[i] for i in chosen)
        return from_edge_list(n, edges)
    if family == "bounded":
        if max_degree is None or not 2 <= max_degree <= n - 1:
            raise InfeasibleFamilyError(
                f"bounded needs 2 <= max_degree <= n-1, got {max_degree}")
        edges = _relabeled_cycle_edges(n, rng)
        deg = {v: 0 for v in range(1, n + 1)}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        # Saturate with random edges under the cap so the realized maximum
        # degree tracks the requested class.
        while True:
            free = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)
                    if (u, v) not in edges and deg[u] < max_degree and deg[v] < max_degree]
            if not free:
                break
            u, v = free[int(rng.integers(len(free)))]
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
        return from_edge_list(n, edges)
    raise InfeasibleFamilyError(f"unknown family {family!r}")


# Distinct per-family stream tags keep (family, n, seed) outputs independent.
_FAMILY_TAGS = {"gnp": 0x67, "planted": 0x70, "bounded": 0x62}


# ---------------------------------------------------------------------------
# Text format: "n m" header, one "u v" line per edge, '#' comments ignored.
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    rows: list[tuple[int, list[str]]] = []
    for i, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((i, s.split()))
    if not rows:
        raise ParseError(1, "empty input")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError(lineno, f"expected 'n m' header, got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(lineno, "header fields must be integers") from None
    if len(rows) - 1 != m:
        raise ParseError(lineno, f"header declares {m} edges, found {len(rows) - 1}")
    pairs = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise ParseError(lineno, f"expected 'u v', got {' '.join(fields)!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(lineno, "edge endpoints must be integers") from None
    return from_edge_list(n, pairs)


def serialize_graph(g: Graph) -> str:
    """Canonical text form: edges sorted by (min, max), one per line."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as f:
        return parse_graph(f.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_graph(g))
