"""hcplab: exact, probabilistic and quantum-simulated Hamiltonian cycle
solvers, plus complexity-curve comparisons between them."""

from .graphs import (
    Graph,
    GraphError,
    InfeasibleFamilyError,
    ParseError,
    SelfLoopError,
    TooLargeError,
    VertexOutOfRangeError,
    from_edge_list,
    gen_family,
    load_graph,
    parse_graph,
    save_graph,
    serialize_graph,
    validate,
)
from .exact import (
    HamiltonianCertificate,
    brute_force_hcp,
    enumerate_hamiltonian_cycles,
    held_karp_hcp,
    is_hamiltonian_cycle,
)
from .walk import (
    ConditionReport,
    InvalidCycleError,
    TrialOutcome,
    WalkEstimate,
    WalkState,
    check_conditions,
    choose_random_node,
    cycle_frequency,
    decision_tree_masses,
    estimate_success,
    exact_success_probability,
    expected_complexity,
    hit_cycle_counts,
    log10_degree_product,
    run_trial,
)
from .qtm import (
    MeasurementResult,
    Superposition,
    brownian_expectation,
    brownian_sample,
    initial_superposition,
    measure_last_cell,
    oracle_extend,
    run,
    speedup_report,
    step,
    trials_to_hit,
)
from .models import (
    ComplexityModel,
    DomainMismatchError,
    GrowthReport,
    MODEL_SETS,
    builtin_models,
    check_growth_conditions,
    crossover,
    curves_json,
    emit_curves,
    model_by_name,
)

__version__ = "0.1.0"
