"""Marked random walk solver.

A trial walks from vertex 1, never revisits a vertex, and picks the next
vertex uniformly among the unvisited neighbors of the current one. With
d_t the degree of the step-t vertex and m_t the number of its already
visited neighbors, each realized branch has probability
prod_t 1/(d_t - m_t); a walk that reaches step n with the closing edge
present has found a Hamiltonian cycle, and the long-run frequency of any
particular cycle is exactly that product.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .exact import is_hamiltonian_cycle
from .graphs import Graph, TooLargeError
from .seeding import substream

EXACT_CAP = 12
_CHUNK = 1 << 16
_VECTOR_CAP = 16  # bitmask tables are 2^n * n bytes


class NoUnvisitedNeighborError(RuntimeError):
    """Current vertex has no unvisited neighbor; the trial is stuck."""


class InvalidCycleError(ValueError):
    """Sequence is not a directed Hamiltonian cycle anchored at vertex 1."""


@dataclass
class WalkState:
    """Partial walk: path from vertex 1 plus per-step degree bookkeeping."""

    path: list[int]
    visited: set[int]
    d_hist: list[int] = field(default_factory=list)
    m_hist: list[int] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.path)

    @property
    def current(self) -> int:
        return self.path[-1]


@dataclass(frozen=True)
class TrialOutcome:
    hit: bool
    cycle: tuple[int, ...] | None
    stuck_step: int | None
    probability_weight: float


@dataclass(frozen=True)
class WalkEstimate:
    trials: int
    hits: int
    empirical_p: float
    band_3sigma: float


def choose_random_node(g: Graph, state: WalkState, rng: np.random.Generator) -> int:
    """Uniform pick among unvisited neighbors of the current vertex."""
    candidates = [u for u in g.adj[state.current] if u not in state.visited]
    if not candidates:
        raise NoUnvisitedNeighborError(f"vertex {state.current} has no unvisited neighbor")
    return candidates[int(rng.integers(len(candidates)))]


def run_trial(g: Graph, rng: np.random.Generator) -> TrialOutcome:
    """One marked walk from vertex 1; Hit iff step n closes back to 1."""
    n = g.n
    state = WalkState(path=[1], visited={1})
    weight = 1.0
    for _ in range(1, n):
        v = state.current
        state.d_hist.append(g.degree(v))
        state.m_hist.append(sum(1 for u in g.adj[v] if u in state.visited))
        candidates = [u for u in g.adj[v] if u not in state.visited]
        if not candidates:
            return TrialOutcome(False, None, state.t, weight)
        weight /= len(candidates)
        nxt = candidates[int(rng.integers(len(candidates)))]
        state.path.append(nxt)
        state.visited.add(nxt)
    if g.has_edge(state.current, 1):
        return TrialOutcome(True, tuple(state.path), None, weight)
    return TrialOutcome(False, None, n, weight)


def cycle_frequency(g: Graph, cycle: Sequence[int]) -> float:
    """Long-run frequency of one directed Hamiltonian cycle: the walk is
    replayed along it and the branch probabilities 1/(d_t - m_t) multiply."""
    cyc = tuple(cycle)
    if not is_hamiltonian_cycle(g, cyc):
        raise InvalidCycleError(f"not a directed Hamiltonian cycle from 1: {cyc}")
    visited: set[int] = set()
    prod = 1.0
    for v in cyc[:-1]:
        visited.add(v)
        unmarked = sum(1 for u in g.adj[v] if u not in visited)
        prod /= unmarked
    return prod


def decision_tree_masses(g: Graph, cap: int = EXACT_CAP) -> tuple[float, float]:
    """Exact (hit, stuck) probability masses of the full walk decision tree."""
    n = g.n
    if n > cap:
        raise TooLargeError(n, cap)
    masks = [int(m) for m in g.adj_masks]
    memo: dict[tuple[int, int], tuple[float, float]] = {}

    def masses(mask: int, cur: int) -> tuple[float, float]:
        key = (mask, cur)
        if key in memo:
            return memo[key]
        if mask == (1 << n) - 1:
            res = (1.0, 0.0) if masks[cur] & 1 else (0.0, 1.0)
        else:
            unvis = masks[cur] & ~mask
            if unvis == 0:
                res = (0.0, 1.0)
            else:
                hit = stuck = 0.0
                count = unvis.bit_count()
                while unvis:
                    bit = unvis & -unvis
                    u = bit.bit_length() - 1
                    h, s = masses(mask | bit, u)
                    hit += h
                    stuck += s
                    unvis ^= bit
                res = (hit / count, stuck / count)
        memo[key] = res
        return res

    return masses(1, 0)


def exact_success_probability(g: Graph, cap: int = EXACT_CAP) -> float:
    """P(one trial finds a Hamiltonian cycle); equals the sum of
    cycle_frequency over all anchored directed Hamiltonian cycles."""
    return decision_tree_masses(g, cap=cap)[0]


# ---------------------------------------------------------------------------
# Vectorized Monte-Carlo trials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _bit_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(popcount, k-th set bit) lookup tables over n-bit masks."""
    masks = np.arange(1 << n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(bool)
    cnt = bits.sum(axis=1).astype(np.int8)
    pos = np.cumsum(bits, axis=1) - 1
    kth = np.zeros((1 << n, n), dtype=np.int8)
    rows, cols = np.nonzero(bits)
    kth[rows, pos[rows, cols]] = cols
    return cnt, kth


def _trial_chunk(g: Graph, size: int, rng: np.random.Generator,
                 collect_paths: bool = False):
    """Simulate ``size`` independent trials at once with bitmask tables.

    Returns (hit mask, paths) where paths is the (size, n) array of 0-based
    vertices when requested (rows of non-hits are only valid up to the point
    they got stuck).
    """
    n = g.n
    cnt, kth = _bit_tables(n)
    adjm = g.adj_masks
    u = rng.random((size, n - 1))
    cur = np.zeros(size, dtype=np.int64)
    vis = np.ones(size, dtype=np.int64)
    alive = np.ones(size, dtype=bool)
    paths = np.zeros((size, n), dtype=np.int8) if collect_paths else None
    for t in range(1, n):
        unvis = adjm[cur] & ~vis
        c = cnt[unvis]
        alive &= c > 0
        k = (u[:, t - 1] * c).astype(np.int64)
        nxt = kth[unvis, np.clip(k, 0, n - 1)].astype(np.int64)
        cur = np.where(alive, nxt, cur)
        vis = np.where(alive, vis | (np.int64(1) << cur), vis)
        if collect_paths:
            paths[:, t] = np.where(alive, cur, -1)
    hit = alive & ((adjm[cur] & 1) == 1)
    return hit, paths


def _worker_count() -> int:
    raw = os.environ.get("HCPLAB_THREADS", "1")
    try:
        w = int(raw)
    except ValueError:
        return 1
    if w == 0:
        return os.cpu_count() or 1
    return max(1, w)


def _run_chunks(g: Graph, trials: int, seed: int,
                reduce_chunk: Callable, collect_paths: bool):
    n_chunks = (trials + _CHUNK - 1) // _CHUNK

    def one(i: int):
        size = min(_CHUNK, trials - i * _CHUNK)
        rng = substream(seed, "walk-trials", i)
        return reduce_chunk(_trial_chunk(g, size, rng, collect_paths))

    workers = _worker_count()
    if workers > 1 and n_chunks > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, range(n_chunks)))
    return [one(i) for i in range(n_chunks)]


def estimate_success(g: Graph, trials: int, seed: int = 0) -> WalkEstimate:
    """Seeded Monte-Carlo estimate of the per-trial success probability.

    Trials are simulated in fixed-size chunks, each on its own named
    substream, so the result does not depend on scheduling or the
    HCPLAB_THREADS worker count.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if g.n > _VECTOR_CAP:
        rng_hits = 0
        for i in range(trials):
            rng_hits += run_trial(g, substream(seed, "walk-trials", i)).hit
        hits = rng_hits
    else:
        hits = int(sum(_run_chunks(g, trials, seed, lambda r: int(r[0].sum()), False)))
    p = hits / trials
    band = 3.0 * math.sqrt(p * (1.0 - p) / trials)
    return WalkEstimate(trials=trials, hits=hits, empirical_p=p, band_3sigma=band)


def hit_cycle_counts(g: Graph, trials: int, seed: int = 0) -> dict[tuple[int, ...], int]:
    """Occurrence counts of each directed Hamiltonian cycle over seeded trials."""
    if g.n > _VECTOR_CAP:
        raise TooLargeError(g.n, _VECTOR_CAP)
    counts: dict[tuple[int, ...], int] = {}

    def reduce_chunk(res):
        hit, paths = res
        return paths[hit]

    for block in _run_chunks(g, trials, seed, reduce_chunk, True):
        if block.shape[0] == 0:
            continue
        uniq, cnts = np.unique(block, axis=0, return_counts=True)
        for row, c in zip(uniq, cnts):
            key = tuple(int(v) + 1 for v in row)
            counts[key] = counts.get(key, 0) + int(c)
    return counts


# ---------------------------------------------------------------------------
# Complexity and degree-sequence conditions
# ---------------------------------------------------------------------------

def _degrees_of(g_or_degrees) -> tuple[int, ...]:
    if isinstance(g_or_degrees, Graph):
        return g_or_degrees.degree_sequence()
    return tuple(g_or_degrees)


def log10_degree_product(degrees: Sequence[float]) -> float:
    """log10 of prod d_i; -inf when any degree is zero."""
    if any(d == 0 for d in degrees):
        return float("-inf")
    return sum(math.log10(d) for d in degrees)


def expected_complexity(g_or_degrees, L: int | None = None) -> float:
    """log10 of the expected step count n * prod(d_i), or (n/L) * prod(d_i)
    when a lower bound L on the number of Hamiltonian cycles is known."""
    degrees = _degrees_of(g_or_degrees)
    n = len(degrees)
    val = math.log10(n) + log10_degree_product(degrees)
    if L is not None:
        if L < 1:
            raise ValueError("L must be >= 1")
        val -= math.log10(L)
    return val


@dataclass(frozen=True)
class ConditionReport:
    """Degree-sequence conditions under which the walk undercuts the
    reference algorithms (brute force, Grover-style search, best known
    classical 2^n and best known quantum 1.728^n)."""

    beats_brute_force: bool          # every d_i < n/e
    beats_grover_search: bool        # every d_i < sqrt(n/e)
    beats_best_classical: bool       # prod d_i < 2^n
    beats_best_quantum: bool         # prod d_i < 1.728^n

    def as_dict(self) -> dict[str, bool]:
        return {
            "beats_brute_force": self.beats_brute_force,
            "beats_grover_search": self.beats_grover_search,
            "beats_best_classical": self.beats_best_classical,
            "beats_best_quantum": self.beats_best_quantum,
        }


def check_conditions(g_or_degrees) -> ConditionReport:
    degrees = _degrees_of(g_or_degrees)
    n = len(degrees)
    log_prod = log10_degree_product(degrees)
    return ConditionReport(
        beats_brute_force=all(d < n / math.e for d in degrees),
        beats_grover_search=all(d < math.sqrt(n / math.e) for d in degrees),
        beats_best_classical=log_prod < n * math.log10(2.0),
        beats_best_quantum=log_prod < n * math.log10(1.728),
    )
