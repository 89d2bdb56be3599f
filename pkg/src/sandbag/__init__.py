"""Optimal failure scheduling against a Beta-Bernoulli monitor.

An informed player schedules successes and failures; the monitor
updates a Beta posterior on the success rate and quits for good once
its mean strictly exceeds a cutoff. This package builds the frontier
family of candidate-optimal schedules, classifies which member wins at
a given discount factor, and cross-checks the answer with brute-force
game-tree oracles and simulation.
"""

from .belief import Action, BeliefState, Threshold
from .oracle import (
    DP_LIMIT,
    EXHAUSTIVE_LIMIT,
    LimitExceededError,
    OracleResult,
    dp_value,
    exhaustive_best,
    value_iteration,
)
from .payoff import BreakevenRoot, breakeven_discount, frontier_payoff, payoff
from .sim import GuesserConfig, Trajectory, TrajectoryRecord, play_guesser, play_strategy
from .solver import (
    OptimalKind,
    OptimalSet,
    OrderingReport,
    ProblemInstance,
    classify,
    verify_ordering,
)
from .strategy import (
    Decomposition,
    FamilyIndex,
    Strategy,
    StrategyParseError,
    decompose,
    format_strategy,
    frontier_strategy,
    greedy_violations,
    is_feasible,
    parse_strategy,
    second_frontier_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "Action",
    "BeliefState",
    "Threshold",
    "Strategy",
    "StrategyParseError",
    "FamilyIndex",
    "Decomposition",
    "decompose",
    "parse_strategy",
    "format_strategy",
    "is_feasible",
    "greedy_violations",
    "frontier_strategy",
    "second_frontier_closed_form",
    "payoff",
    "frontier_payoff",
    "breakeven_discount",
    "BreakevenRoot",
    "ProblemInstance",
    "OptimalKind",
    "OptimalSet",
    "OrderingReport",
    "classify",
    "verify_ordering",
    "OracleResult",
    "LimitExceededError",
    "exhaustive_best",
    "dp_value",
    "value_iteration",
    "EXHAUSTIVE_LIMIT",
    "DP_LIMIT",
    "GuesserConfig",
    "Trajectory",
    "TrajectoryRecord",
    "play_strategy",
    "play_guesser",
    "__version__",
]
