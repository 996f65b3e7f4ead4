"""Two-provider cellular-pricing game with regulated roaming charges."""

from ._core import (
    BestResponseResult,
    Congestion,
    DemandPair,
    EquilibriumResult,
    FairnessResult,
    GameParams,
    Mode,
    PricePair,
    SweepTable,
    UtilityPair,
    average_price,
    best_response,
    closed_form_ne,
    closed_form_rstar,
    congestion_factor,
    default_r_grid,
    estimate_crossing,
    fairness_gap,
    find_rstar,
    fonc_residual,
    price_cap,
    solve_demand,
    solve_ne,
    sweep_best_response,
    sweep_utilities_vs_r,
    utilities_full,
    utilities_simplified,
)

__all__ = [
    "BestResponseResult",
    "Congestion",
    "DemandPair",
    "EquilibriumResult",
    "FairnessResult",
    "GameParams",
    "Mode",
    "PricePair",
    "SweepTable",
    "UtilityPair",
    "average_price",
    "best_response",
    "closed_form_ne",
    "closed_form_rstar",
    "congestion_factor",
    "default_r_grid",
    "estimate_crossing",
    "fairness_gap",
    "find_rstar",
    "fonc_residual",
    "price_cap",
    "solve_demand",
    "solve_ne",
    "sweep_best_response",
    "sweep_utilities_vs_r",
    "utilities_full",
    "utilities_simplified",
]
