"""Command-line entry point.

Subcommands: gen, solve, walk, qtm, models, check. Every command accepts
--seed (default 0) and derives all randomness from it, so a fixed command
line reproduces its output byte for byte. Floats are printed with six
decimal places. Exit codes: 0 success (and "Hamiltonian" for solve),
1 valid run whose answer is "no", 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import exact, graphs, models, qtm, walk
from .seeding import substream

WALK_EXACT_CAP = walk.EXACT_CAP


@dataclass
class RunRecord:
    command: str
    params: dict
    seed: int
    outputs: dict | str
    wall_ms: float
    exit_code: int = 0


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def render_json(obj) -> str:
    """json.dumps with all floats at fixed 6-decimal precision."""
    if isinstance(obj, float):
        return f"{obj:.6f}"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int,)):
        return str(obj)
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {render_json(v)}"
                               for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj)!r}")


def _load(path: str) -> graphs.Graph:
    try:
        return graphs.load_graph(path)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}") from e
    except graphs.GraphError as e:
        raise CliError(f"{path}: {e}") from e


# ---------------------------------------------------------------------------
# Subcommand implementations; each returns (outputs, exit_code).
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> tuple[str, int]:
    try:
        g = graphs.gen_family(args.family, args.n, args.seed, p=args.p,
                              extra_edges=args.extra_edges,
                              max_degree=args.max_degree)
    except graphs.GraphError as e:
        raise CliError(str(e)) from e
    graphs.save_graph(g, args.out)
    summary = f"n={g.n} m={g.m} max_degree={max(g.degree_sequence())}\n"
    return summary, 0


def _cmd_solve(args) -> tuple[dict, int]:
    g = _load(args.graph)
    try:
        if args.method == "brute":
            cert = exact.brute_force_hcp(g)
        else:
            cert = exact.held_karp_hcp(g)
    except graphs.TooLargeError as e:
        raise CliError(str(e)) from e
    out = {
        "hamiltonian": cert.found,
        "cycle": list(cert.cycle) if cert.cycle else None,
        "method": args.method,
        "nodes": g.n,
    }
    return out, 0 if cert.found else 1


def _cmd_walk(args) -> tuple[dict, int]:
    g = _load(args.graph)
    if args.trials < 1:
        raise CliError("--trials must be >= 1")
    exact_p = None
    if args.exact:
        if g.n > WALK_EXACT_CAP:
            raise CliError(f"--exact supports n <= {WALK_EXACT_CAP}, got n={g.n}")
        exact_p = walk.exact_success_probability(g)
    est = walk.estimate_success(g, args.trials, seed=args.seed)
    out = {
        "trials": est.trials,
        "hits": est.hits,
        "empirical_p": est.empirical_p,
        "exact_p": exact_p,
        "band_3sigma": est.band_3sigma,
    }
    return out, 0


def _cmd_qtm(args) -> tuple[dict, int]:
    g = _load(args.graph)
    trace = None
    try:
        if args.trace:
            trace = open(args.trace, "w", encoding="utf-8", newline="\n")
        try:
            _, meas = qtm.run(g, mode=args.mode, seed=args.seed,
                              interference_model=args.interference_model,
                              trace=trace)
        finally:
            if trace is not None:
                trace.close()
    except graphs.TooLargeError as e:
        raise CliError(str(e)) from e
    shots_rng = substream(args.seed, "qtm-shots")
    shots_h = int((shots_rng.random(args.shots) < meas.p_H).sum()) if args.shots else 0
    out = {
        "p_H": meas.p_H,
        "p_NH": meas.p_NH,
        "mode": args.mode,
        "interference_model": args.interference_model if args.mode == "interference" else None,
        "shots_H": shots_h,
        "witness": list(meas.witness) if meas.witness else None,
    }
    return out, 0


def _selected_models(set_name: str) -> list[models.ComplexityModel]:
    names = models.MODEL_SETS[set_name]
    return [models.model_by_name(name) for name in names]


_CROSSOVER_PAIRS = {
    "classical": (("our_dlog10", "b_f_quantum"), ("b_f_quantum", "b_f_classic"),
                  ("best_q", "best_cl")),
    "quantum": (("q_our_dlog10", "best_q"), ("q_our_dlog10", "best_cl")),
    "all": (("our_dlog10", "b_f_quantum"), ("b_f_quantum", "b_f_classic"),
            ("best_q", "best_cl"), ("q_our_dlog10", "best_q"),
            ("q_our_dlog10", "best_cl")),
}


def _cmd_models(args) -> tuple[dict | str, int]:
    if args.n_max < args.n_min:
        raise CliError(f"--n-max {args.n_max} < --n-min {args.n_min}")
    if args.n_min < 3:
        raise CliError("--n-min must be >= 3")
    selected = _selected_models(args.set)
    rows_range = (args.n_min, args.n_max)
    crossovers = []
    if args.crossovers:
        for a_name, b_name in _CROSSOVER_PAIRS[args.set]:
            a = models.model_by_name(a_name)
            b = models.model_by_name(b_name)
            lo = max(args.n_min, a.domain_min, b.domain_min)
            x = models.crossover(a, b, (lo, args.n_max)) if lo <= args.n_max else None
            crossovers.append({"a": a_name, "b": b_name, "n": x})
    if args.format == "csv":
        text = models.emit_curves(selected, rows_range)
        for c in crossovers:
            n = c["n"] if c["n"] is not None else "none"
            text += f"# crossover,{c['a']},{c['b']},{n}\n"
        return text, 0
    out = {"set": args.set, "rows": models.curves_json(selected, rows_range)}
    if args.crossovers:
        out["crossovers"] = crossovers
    return out, 0


def _cmd_check(args) -> tuple[dict, int]:
    g = _load(args.graph)
    degrees = g.degree_sequence()
    report = walk.check_conditions(degrees)
    growth = models.check_growth_conditions(degrees, g.n)
    out: dict = {}
    out.update(report.as_dict())
    out.update(growth.as_dict())
    out["log10_degree_product"] = walk.log10_degree_product(degrees)
    return out, 0


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hcplab",
                                 description="Hamiltonian cycle lab: generators, "
                                             "solvers, walk and machine experiments, "
                                             "complexity models.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_seed(p):
        p.add_argument("--seed", type=int, default=0, help="root seed (default 0)")

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--family", required=True, choices=graphs.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None, help="edge probability (gnp)")
    p.add_argument("--extra-edges", type=int, default=None, help="extra edges (planted)")
    p.add_argument("--max-degree", type=int, default=None, help="degree cap (bounded)")
    p.add_argument("-o", "--out", required=True, help="output graph file")
    add_seed(p)

    p = sub.add_parser("solve", help="decide Hamiltonicity exactly")
    p.add_argument("graph", help="graph file")
    p.add_argument("--method", choices=("brute", "held-karp"), default="brute")
    add_seed(p)

    p = sub.add_parser("walk", help="random-walk trials")
    p.add_argument("graph", help="graph file")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--exact", action="store_true",
                   help=f"also compute the exact probability (n <= {WALK_EXACT_CAP})")
    add_seed(p)

    p = sub.add_parser("qtm", help="machine simulation and measurement")
    p.add_argument("graph", help="graph file")
    p.add_argument("--mode", choices=qtm.MODES, default="standard")
    p.add_argument("--interference-model", choices=qtm.INTERFERENCE_MODELS,
                   default="collapse")
    p.add_argument("--shots", type=int, default=0,
                   help="sample the measurement distribution this many times")
    p.add_argument("--trace", default=None,
                   help="write a per-step configuration trace to this file")
    add_seed(p)

    p = sub.add_parser("models", help="complexity-model curves")
    p.add_argument("--set", choices=tuple(models.MODEL_SETS), default="all")
    p.add_argument("--n-min", type=int, default=11)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--crossovers", action="store_true",
                   help="append the crossover table")
    add_seed(p)

    p = sub.add_parser("check", help="degree-sequence condition report")
    p.add_argument("graph", help="graph file")
    add_seed(p)

    for name, sp in sub.choices.items():
        sp.add_argument("--out-file", dest="out_file", default=None,
                        help="write the result to this file instead of stdout")
    return ap


_HANDLERS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "walk": _cmd_walk,
    "qtm": _cmd_qtm,
    "models": _cmd_models,
    "check": _cmd_check,
}


def run_command(argv: list[str]) -> RunRecord:
    """Parse and execute one command; raises CliError on bad input."""
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    outputs, code = _HANDLERS[args.command](args)
    wall = (time.perf_counter() - t0) * 1000.0
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "seed") and v is not None}
    return RunRecord(command=args.command, params=params, seed=args.seed,
                     outputs=outputs, wall_ms=wall, exit_code=code)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        record = run_command(argv)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    text = record.outputs if isinstance(record.outputs, str) \
        else render_json(record.outputs) + "\n"
    out_file = record.params.get("out_file")
    if out_file:
        with open(out_file, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return record.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
