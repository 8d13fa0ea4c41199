"""OSCAR regularization: proximity operators, solvers and recovery benchmarks.

The heavy lifting lives in the compiled ``_core`` module; this package simply
re-exports it.
"""

from ._core import (
    ExperimentSpec,
    Group,
    Instance,
    OscarParams,
    ProxBenchRow,
    ProxStepKind,
    SolverConfig,
    SolverKind,
    SolverRun,
    TrialMetrics,
    apo_condition_holds,
    brute_force_prox_oracle,
    compute_metrics,
    default_prox_bench_params,
    generate_sensing,
    generate_signal,
    group_and_average,
    make_instance,
    objective,
    observe,
    oscar_apo,
    oscar_gpo,
    oscar_value,
    oscar_value_pairwise,
    prox_speed_bench,
    soft_threshold,
    solve,
    spectral_norm_sq,
    weight_vector,
)

__all__ = [
    "ExperimentSpec",
    "Group",
    "Instance",
    "OscarParams",
    "ProxBenchRow",
    "ProxStepKind",
    "SolverConfig",
    "SolverKind",
    "SolverRun",
    "TrialMetrics",
    "apo_condition_holds",
    "brute_force_prox_oracle",
    "compute_metrics",
    "default_prox_bench_params",
    "generate_sensing",
    "generate_signal",
    "group_and_average",
    "make_instance",
    "objective",
    "observe",
    "oscar_apo",
    "oscar_gpo",
    "oscar_value",
    "oscar_value_pairwise",
    "prox_speed_bench",
    "soft_threshold",
    "solve",
    "spectral_norm_sq",
    "weight_vector",
]

__version__ = "0.1.0"
