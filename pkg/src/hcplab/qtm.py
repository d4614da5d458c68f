"""Amplitude-tracking simulator of a graph-walking quantum Turing machine.

The machine runs for exactly n+1 steps on an n-vertex graph. Step 0 writes
vertex 1 on the tape; steps 1..n-1 extend every superposed path by one
unvisited neighbor of its last vertex, the branch to neighbor j of vertex i
carrying amplitude sqrt(1/(d_i - m_i)); a path with no extension gets the
terminal symbol NH, which then propagates one cell per step. The final step
writes H on tapes holding a full cycle that closes back to vertex 1 and NH
on everything else, so a last-cell measurement reads H with probability
equal to the walk solver's exact per-trial success probability.

Interference mode replaces the final NH transitions' amplitude +1 with a
random sign (H branches keep +1). Two measurement sub-models are provided:

* ``collapse`` - the signed NH amplitudes are summed into one scalar
  accumulator S before squaring, so random cancellation suppresses the NH
  outcome (S behaves like a +-1 Brownian sum over the NH branches);
* ``strict`` - literal machine semantics: distinct tapes never interfere,
  amplitudes are squared per configuration and the signs drop out, which
  reproduces standard mode exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import fsum
from typing import TextIO

import numpy as np

from .graphs import Graph, TooLargeError
from .seeding import derive_seed, substream

H = "H"
NH = "NH"

QTM_CAP = 12
PRUNE_EPS = 1e-15

MODES = ("standard", "interference")
INTERFERENCE_MODELS = ("collapse", "strict")


class MalformedTapeError(ValueError):
    """Tape content is not a simple path from vertex 1 (optionally NH-ended)."""


class NotFinalError(RuntimeError):
    """Measurement requested before the machine reached its final state."""


def _tape_key(tape: tuple) -> tuple:
    # ints sort before H, H before NH; gives a total deterministic order
    rank = {H: 1, NH: 2}
    return tuple((rank.get(s, 0), s if isinstance(s, int) else 0) for s in tape)


def tape_str(tape: tuple) -> str:
    return ",".join(str(s) for s in tape) if tape else "-"


@dataclass
class Superposition:
    """Unit-norm machine state: amplitude per configuration (tape) plus the
    global step counter (all configurations advance in lock step)."""

    n: int
    step: int = 0
    amps: dict[tuple, float] = field(default_factory=lambda: {(): 1.0})
    pruned_mass: float = 0.0
    norm_history: list[float] = field(default_factory=list)

    @property
    def state_label(self) -> str:
        return "qF" if self.step > self.n else f"q{self.step}"

    def norm(self) -> float:
        return fsum(a * a for a in self.amps.values())

    def sorted_items(self) -> list[tuple[tuple, float]]:
        return sorted(self.amps.items(), key=lambda kv: _tape_key(kv[0]))


def initial_superposition(n: int) -> Superposition:
    return Superposition(n=n)


def _check_path(g: Graph, path: tuple) -> None:
    if not path or path[0] != 1:
        raise MalformedTapeError(f"path must start at vertex 1: {path}")
    if len(set(path)) != len(path) or len(path) > g.n:
        raise MalformedTapeError(f"path is not simple: {path}")
    for v in path:
        if not (isinstance(v, int) and 1 <= v <= g.n):
            raise MalformedTapeError(f"bad tape symbol {v!r}")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise MalformedTapeError(f"({a}, {b}) is not an edge")


def oracle_extend(g: Graph, tape_path: tuple) -> list[tuple[object, float]]:
    """Weighted successor symbols for one tape.

    A path of length < n with unvisited neighbors branches to each of them
    with amplitude sqrt(1/(d_i - m_i)); otherwise the verdict symbol is
    written with amplitude 1: H for a full path whose last vertex connects
    back to 1, NH in every other case (including tapes already carrying NH).
    """
    tape = tuple(tape_path)
    if tape and tape[-1] == NH:
        return [(NH, 1.0)]
    _check_path(g, tape)
    last = tape[-1]
    if len(tape) == g.n:
        return [(H, 1.0)] if g.has_edge(last, 1) else [(NH, 1.0)]
    unvisited = [u for u in g.adj[last] if u not in set(tape)]
    if not unvisited:
        return [(NH, 1.0)]
    amp = math.sqrt(1.0 / len(unvisited))
    return [(u, amp) for u in unvisited]


def step(g: Graph, s: Superposition, mode: str = "standard",
         rng: np.random.Generator | None = None) -> Superposition:
    """Advance the whole superposition by one transition (head moves right).

    At the final transition (step n) in interference mode, each NH branch
    amplitude is multiplied by an independent random sign; H branches are
    untouched.
    """
    k = s.step
    n = s.n
    if k > n:
        raise NotFinalError(f"machine already final at step {k}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    flip_signs = mode == "interference" and k == n
    if flip_signs and rng is None:
        raise ValueError("interference mode needs an rng for the final step")

    out: dict[tuple, float] = {}
    for tape, amp in s.sorted_items():
        if k == 0:
            successors = [(1, 1.0)]
        else:
            successors = oracle_extend(g, tape)
        for sym, w in successors:
            if flip_signs and sym == NH:
                w = w if int(rng.integers(2)) == 0 else -w
            key = tape + (sym,)
            out[key] = out.get(key, 0.0) + amp * w

    pruned = s.pruned_mass
    for key in [t for t, a in out.items() if abs(a) < PRUNE_EPS]:
        pruned += out[key] ** 2
        del out[key]

    nxt = Superposition(n=n, step=k + 1, amps=out, pruned_mass=pruned,
                        norm_history=list(s.norm_history))
    nxt.norm_history.append(nxt.norm())
    return nxt


@dataclass(frozen=True)
class MeasurementResult:
    p_H: float
    p_NH: float
    witness: tuple[int, ...] | None


def measure_last_cell(s: Superposition, mode: str = "standard",
                      interference_model: str = "collapse") -> MeasurementResult:
    """Probability of reading H vs NH in the last written cell.

    Standard mode (and the strict interference sub-model) squares amplitudes
    per configuration; the collapse sub-model first sums the signed NH
    amplitudes into a single scalar and squares that.
    """
    if s.step != s.n + 1:
        raise NotFinalError(f"superposition at step {s.step}, expected {s.n + 1}")
    if interference_model not in INTERFERENCE_MODELS:
        raise ValueError(f"unknown interference model {interference_model!r}")
    h_amps: list[float] = []
    nh_amps: list[float] = []
    witness: tuple[int, ...] | None = None
    for tape, amp in s.sorted_items():
        if tape[-1] == H:
            h_amps.append(amp)
            if witness is None:
                witness = tuple(tape[:-1])
        elif tape[-1] == NH:
            nh_amps.append(amp)
        else:  # pragma: no cover - final tapes always end with a verdict
            raise NotFinalError(f"tape without verdict symbol: {tape}")
    a_h = fsum(a * a for a in h_amps)
    if mode == "interference" and interference_model == "collapse":
        s_nh = fsum(nh_amps)
        denom = a_h + s_nh * s_nh
    else:
        denom = a_h + fsum(a * a for a in nh_amps)
    p_h = a_h / denom if denom > 0 else 0.0
    return MeasurementResult(p_H=p_h, p_NH=1.0 - p_h, witness=witness)


def _run_with_rng(g: Graph, mode: str, rng: np.random.Generator | None,
                  interference_model: str, cap: int,
                  trace: TextIO | None) -> tuple[Superposition, MeasurementResult]:
    n = g.n
    if n > cap:
        raise TooLargeError(n, cap)
    s = initial_superposition(n)
    for _ in range(n + 1):
        s = step(g, s, mode=mode, rng=rng)
        if trace is not None:
            for tape, amp in s.sorted_items():
                trace.write(f"{s.step} {s.state_label} {tape_str(tape)} {amp:+.6f}\n")
    return s, measure_last_cell(s, mode=mode, interference_model=interference_model)


def run(g: Graph, mode: str = "standard", seed: int = 0,
        interference_model: str = "collapse", cap: int = QTM_CAP,
        trace: TextIO | None = None) -> tuple[Superposition, MeasurementResult]:
    """Full n+1 step evolution followed by a last-cell measurement."""
    rng = substream(seed, "qtm-signs") if mode == "interference" else None
    return _run_with_rng(g, mode, rng, interference_model, cap, trace)


def trials_to_hit(g: Graph, mode: str = "standard", max_trials: int = 10_000,
                  seed: int = 0, interference_model: str = "collapse",
                  cap: int = QTM_CAP) -> int:
    """Number of full independent runs until a measurement reads H.

    Each trial re-runs the machine from scratch on its own substream and
    samples one last-cell measurement. Returns max_trials as a sentinel if
    no trial hits (in particular on non-Hamiltonian graphs, where p_H = 0).
    """
    for i in range(1, max_trials + 1):
        rng = substream(seed, "qtm-trial", i)
        _, meas = _run_with_rng(g, mode, rng, interference_model, cap, None)
        if rng.random() < meas.p_H:
            return i
    return max_trials


def speedup_report(g: Graph, reps: int = 200, max_trials: int = 10_000,
                   seed: int = 0, cap: int = QTM_CAP) -> dict:
    """Observed mean trials-to-hit in standard vs interference (collapse)
    mode, next to the 1/p_H prediction and its square root."""
    _, meas = run(g, mode="standard", seed=seed, cap=cap)
    p = meas.p_H
    means = {}
    for mode in MODES:
        total = 0
        for r in range(reps):
            total += trials_to_hit(g, mode=mode, max_trials=max_trials,
                                   seed=derive_seed(seed, mode, r), cap=cap)
        means[mode] = total / reps
    return {
        "n": g.n,
        "m": g.m,
        "p_H": p,
        "predicted_mean_trials": (1.0 / p) if p > 0 else float("inf"),
        "predicted_mean_trials_sqrt": math.sqrt(1.0 / p) if p > 0 else float("inf"),
        "observed_mean_standard": means["standard"],
        "observed_mean_interference": means["interference"],
        "reps": reps,
    }


# ---------------------------------------------------------------------------
# Brownian accumulator bound
# ---------------------------------------------------------------------------

def brownian_expectation(t: int) -> float:
    """Asymptotic E|S_t| for S_t a sum of t independent +-1 steps."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return math.sqrt(2.0 * t / math.pi)


def brownian_sample(t: int, samples: int, seed: int = 0) -> float:
    """Seeded Monte-Carlo mean of |sum of t random +-1 steps|."""
    if t < 1 or samples < 1:
        raise ValueError("t and samples must be >= 1")
    rng = substream(seed, "brownian")
    rows = max(1, min(samples, 8_000_000 // t))
    total = 0.0
    done = 0
    while done < samples:
        c = min(rows, samples - done)
        ups = rng.integers(0, 2, size=(c, t), dtype=np.int8).sum(axis=1, dtype=np.int64)
        total += float(np.abs(2 * ups - t).sum())
        done += c
    return total / samples
