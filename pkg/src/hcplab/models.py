"""Closed-form step-count models for the compared algorithms.

Each model maps a vertex count n to log10(expected steps) and is evaluated
entirely in log space so curves stay finite well past n = 10^4. The walk
based families come in four degree classes (maximum degree n-1, n/5, ln n
and log10 n); their quantum-interference counterparts halve the exponent of
the degree product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO

from .walk import log10_degree_product

LOG10_E = math.log10(math.e)
BEST_QUANTUM_BASE = 1.728


class DomainMismatchError(ValueError):
    """Requested range falls outside a model's domain."""


@dataclass(frozen=True)
class ComplexityModel:
    name: str
    fn: Callable[[float], float]
    domain_min: int = 3
    degree_class: Callable[[float], float] | None = None
    product_range: str = "n"  # degree-product factor count: "n" or "n-1"

    def in_domain(self, n: int) -> bool:
        return n >= self.domain_min

    def eval(self, n: int) -> float:
        if not self.in_domain(n):
            raise DomainMismatchError(f"{self.name} is defined for n >= {self.domain_min}")
        return self.fn(n)


def _factors(n: float, product_range: str) -> float:
    return n if product_range == "n" else n - 1


def _walk_model(name: str, degree: Callable[[float], float], domain_min: int,
                product_range: str) -> ComplexityModel:
    def fn(n: float) -> float:
        return math.log10(n) + _factors(n, product_range) * math.log10(degree(n))
    return ComplexityModel(name, fn, domain_min, degree, product_range)


def _interference_model(name: str, degree: Callable[[float], float], domain_min: int,
                        product_range: str) -> ComplexityModel:
    def fn(n: float) -> float:
        return math.log10(n) + _factors(n, product_range) / 2.0 * math.log10(degree(n))
    return ComplexityModel(name, fn, domain_min, degree, product_range)


DEGREE_CLASSES: dict[str, tuple[Callable[[float], float], int]] = {
    # class name -> (degree as a function of n, domain minimum)
    "dmax": (lambda n: n - 1.0, 3),
    "d20": (lambda n: n / 5.0, 3),
    "dlog": (lambda n: math.log(n), 3),
    "dlog10": (lambda n: math.log10(n), 11),  # needs log10 n > 1
}


def builtin_models(product_range: str = "n") -> list[ComplexityModel]:
    """The twelve compared models: four brute-force/best-known references,
    four walk-based degree classes, and their interference counterparts.

    ``product_range`` selects how many degree factors the walk families
    multiply (the all-n convention is the default; "n-1" matches the
    per-cycle frequency product, which has one factor fewer).
    """
    if product_range not in ("n", "n-1"):
        raise ValueError("product_range must be 'n' or 'n-1'")
    models = [
        ComplexityModel("b_f_classic",
                        lambda n: 0.5 * math.log10(n) + n * (math.log10(n) - LOG10_E)),
        ComplexityModel("b_f_quantum",
                        lambda n: math.log10(n) + (n - 1) / 2.0 * (math.log10(n) - LOG10_E)),
        ComplexityModel("best_cl", lambda n: n * math.log10(2.0)),
        ComplexityModel("best_q", lambda n: n * math.log10(BEST_QUANTUM_BASE)),
    ]
    for cls, (deg, dmin) in DEGREE_CLASSES.items():
        models.append(_walk_model(f"our_{cls}", deg, dmin, product_range))
    for cls, (deg, dmin) in DEGREE_CLASSES.items():
        models.append(_interference_model(f"q_our_{cls}", deg, dmin, product_range))
    return models


def model_by_name(name: str, product_range: str = "n") -> ComplexityModel:
    for m in builtin_models(product_range):
        if m.name == name:
            return m
    raise KeyError(name)


# Model sets matching the two comparison plots.
SET_CLASSICAL = ("our_dmax", "b_f_classic", "our_d20", "our_dlog",
                 "b_f_quantum", "our_dlog10", "best_cl", "best_q")
SET_QUANTUM = ("q_our_dmax", "q_our_d20", "q_our_dlog", "q_our_dlog10",
               "best_cl", "best_q")
MODEL_SETS: dict[str, tuple[str, ...]] = {
    "classical": SET_CLASSICAL,
    "quantum": SET_QUANTUM,
    "all": tuple(m.name for m in builtin_models()),
}


@dataclass(frozen=True)
class GrowthReport:
    """Degree-product growth conditions for the interference algorithm."""

    within_log10_degree_class: bool       # prod d_i < (log10 n)^n
    interference_beats_best_quantum: bool # prod d_i < 1.728^(2n)
    interference_beats_best_quantum_squared_base: bool  # prod d_i < (1.728^2)^n

    def as_dict(self) -> dict[str, bool]:
        return {
            "within_log10_degree_class": self.within_log10_degree_class,
            "interference_beats_best_quantum": self.interference_beats_best_quantum,
            "interference_beats_best_quantum_squared_base":
                self.interference_beats_best_quantum_squared_base,
        }


def check_growth_conditions(degrees_or_class, n: int | None = None) -> GrowthReport:
    """Evaluate the growth conditions for a degree sequence, or for a degree
    class d(n) at a given n (all degrees equal to d(n))."""
    if callable(degrees_or_class):
        if n is None:
            raise ValueError("n is required with a degree-class function")
        degrees: Sequence[float] = [degrees_or_class(n)] * n
    else:
        degrees = tuple(degrees_or_class)
        n = len(degrees) if n is None else n
    log_prod = log10_degree_product(degrees)
    return GrowthReport(
        within_log10_degree_class=log_prod < n * math.log10(math.log10(n)) if n > 1
        else False,
        interference_beats_best_quantum=log_prod < 2 * n * math.log10(BEST_QUANTUM_BASE),
        interference_beats_best_quantum_squared_base=(
            log_prod < n * math.log10(BEST_QUANTUM_BASE ** 2)),
    )


def crossover(a: ComplexityModel, b: ComplexityModel,
              n_range: tuple[int, int]) -> int | None:
    """Smallest n in [lo, hi] from which a stays strictly below b through hi.

    Requiring dominance to the end of the range filters out transient
    crossings. None when a never permanently undercuts b in the range.
    """
    lo, hi = n_range
    if hi < lo:
        raise DomainMismatchError(f"empty range [{lo}, {hi}]")
    dmin = max(a.domain_min, b.domain_min)
    if lo < dmin:
        raise DomainMismatchError(
            f"range starts at {lo}, models defined from n >= {dmin}")
    first = None
    for n in range(hi, lo - 1, -1):
        if a.eval(n) < b.eval(n):
            first = n
        else:
            break
    return first


def emit_curves(models: Iterable[ComplexityModel], n_range: tuple[int, int],
                output: TextIO | None = None) -> str:
    """CSV of log10 step counts, 6 decimal places, one row per n.

    Cells outside a model's domain are left empty. Output is byte-stable
    for a fixed model list and range.
    """
    models = list(models)
    lo, hi = n_range
    if hi < lo:
        raise DomainMismatchError(f"empty range [{lo}, {hi}]")
    lines = ["n," + ",".join(m.name for m in models)]
    for n in range(lo, hi + 1):
        cells = [f"{m.eval(n):.6f}" if m.in_domain(n) else "" for m in models]
        lines.append(f"{n}," + ",".join(cells))
    text = "\n".join(lines) + "\n"
    if output is not None:
        output.write(text)
    return text


def curves_json(models: Iterable[ComplexityModel],
                n_range: tuple[int, int]) -> list[dict]:
    """JSON-friendly variant: [{"n": n, "values": {model: log10_steps}}]."""
    models = list(models)
    lo, hi = n_range
    if hi < lo:
        raise DomainMismatchError(f"empty range [{lo}, {hi}]")
    rows = []
    for n in range(lo, hi + 1):
        rows.append({"n": n, "values": {m.name: (m.eval(n) if m.in_domain(n) else None)
                                        for m in models}})
    return rows
