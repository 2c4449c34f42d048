"""Interval-valued VaR/CVaR estimation and portfolio selection."""

from ._core import (
    EmpiricalIntervalSample,
    GammaThreshold,
    Interval,
    JarqueBeraResult,
    LpProblem,
    LpSolution,
    ModelOneSpec,
    ModelTwoSpec,
    PriceBar,
    ReturnObservation,
    RiskEstimate,
    Sense,
    SolveStatus,
    __version__,
    build_model1,
    build_model2,
    compare,
    expected_interval,
    gamma_index,
    grid_oracle,
    icvar,
    ivar,
    jarque_bera,
    load_prices,
    log_returns,
    solve,
)

__all__ = [
    "EmpiricalIntervalSample",
    "GammaThreshold",
    "Interval",
    "JarqueBeraResult",
    "LpProblem",
    "LpSolution",
    "ModelOneSpec",
    "ModelTwoSpec",
    "PriceBar",
    "ReturnObservation",
    "RiskEstimate",
    "Sense",
    "SolveStatus",
    "__version__",
    "build_model1",
    "build_model2",
    "compare",
    "expected_interval",
    "gamma_index",
    "grid_oracle",
    "icvar",
    "ivar",
    "jarque_bera",
    "load_prices",
    "log_returns",
    "solve",
]
