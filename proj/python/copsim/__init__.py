"""Pairwise comparison numerics and order-preservation Monte Carlo simulation."""

from ._copsim import (
    AggregateRow,
    CopsimError,
    DeltaScheme,
    DisturbanceSpec,
    EigenResult,
    ExperimentConfig,
    KiBinPoint,
    KiSeries,
    MatrixRecord,
    Method,
    PCMatrix,
    PriorityVector,
    aggregate_tables,
    bin_by_ki,
    child_seed,
    consistency_defect,
    ev_weights,
    gamma_level,
    generate_consistent,
    gm_weights,
    koczkodaj_ki,
    make_pcm,
    perturb,
    poip_condition_count,
    poip_evaluate,
    pop_condition_count,
    pop_evaluate,
    run_experiment,
    saaty_ci,
    simulate_cell,
    theorem1_count,
    theorem2_count,
)

__all__ = [
    "AggregateRow",
    "CopsimError",
    "DeltaScheme",
    "DisturbanceSpec",
    "EigenResult",
    "ExperimentConfig",
    "KiBinPoint",
    "KiSeries",
    "MatrixRecord",
    "Method",
    "PCMatrix",
    "PriorityVector",
    "aggregate_tables",
    "bin_by_ki",
    "child_seed",
    "consistency_defect",
    "ev_weights",
    "gamma_level",
    "generate_consistent",
    "gm_weights",
    "koczkodaj_ki",
    "make_pcm",
    "perturb",
    "poip_condition_count",
    "poip_evaluate",
    "pop_condition_count",
    "pop_evaluate",
    "run_experiment",
    "saaty_ci",
    "simulate_cell",
    "theorem1_count",
    "theorem2_count",
]
