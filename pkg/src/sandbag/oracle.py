"""Brute-force and dynamic-programming checks on the full game tree.

These routes know nothing about the frontier family. They optimize over
every outcome sequence directly, so agreement with the solver is
evidence, not circularity.

``exhaustive_best`` walks the whole depth-``horizon`` tree recursively.
``dp_value`` computes the same backward recursion bottom-up over belief
states, vectorized per layer; both evaluate the identical floating
point expressions, so their values match exactly, not just closely.
``value_iteration`` works on the infinite horizon directly, iterating
the Bellman operator over the finitely many reachable slack states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .belief import Action, BeliefState, Threshold

EXHAUSTIVE_LIMIT = 25
DP_LIMIT = 500


class LimitExceededError(RuntimeError):
    """Requested horizon is beyond the guard rail for this oracle."""


@dataclass(frozen=True)
class OracleResult:
    value: float
    best_sequence: tuple[Action, ...]
    horizon: int


def _require_within(alpha0: int, beta0: int, c: Threshold) -> None:
    if BeliefState(alpha0, beta0).slack(c) < 0:
        raise ValueError("initial prior already exceeds threshold")


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta < 1.0:
        raise ValueError("delta must lie in [0, 1)")


def exhaustive_best(
    alpha0: int, beta0: int, c: Threshold, delta: float, horizon: int
) -> OracleResult:
    """Best value and sequence over all schedules of at most ``horizon``
    periods, by full tree enumeration (no memoization).

    Ties break toward the success branch, which makes the returned
    sequence the lexicographically smallest maximizer under s < f.
    Guarded at horizon <= 25 since the tree is exponential.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    if horizon > EXHAUSTIVE_LIMIT:
        raise LimitExceededError(
            f"exhaustive search is limited to horizon <= {EXHAUSTIVE_LIMIT}"
        )
    _check_delta(delta)
    _require_within(alpha0, beta0, c)
    short = c.den - c.num

    def best(slack: int, periods_left: int) -> tuple[float, tuple[Action, ...]]:
        if periods_left == 0:
            return 0.0, ()
        s_slack = slack - short
        if s_slack >= 0:
            sub_value, sub_seq = best(s_slack, periods_left - 1)
            s_value = 1.0 + delta * sub_value
            s_seq = (Action.SUCCESS, *sub_seq)
        else:
            s_value = 1.0  # crossing success ends the game
            s_seq = (Action.SUCCESS,)
        f_sub_value, f_sub_seq = best(slack + c.num, periods_left - 1)
        f_value = delta * f_sub_value
        if s_value >= f_value:
            return s_value, s_seq
        return f_value, (Action.FAILURE, *f_sub_seq)

    value, seq = best(BeliefState(alpha0, beta0).slack(c), horizon)
    return OracleResult(value, seq, horizon)


def dp_value(alpha0: int, beta0: int, c: Threshold, delta: float, horizon: int) -> float:
    """Value of the horizon-bounded game by backward induction.

    Layers are indexed by periods used; within a layer the state is the
    success count. Matches exhaustive_best bit for bit on overlapping
    horizons. Guarded at horizon <= 500.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    if horizon > DP_LIMIT:
        raise LimitExceededError(f"dp oracle is limited to horizon <= {DP_LIMIT}")
    _check_delta(delta)
    _require_within(alpha0, beta0, c)
    short = c.den - c.num
    values = np.zeros(horizon + 1)  # layer `horizon`, indexed by successes
    for used in range(horizon - 1, -1, -1):
        ns = np.arange(used + 1)
        nf = used - ns
        # posterior stays within after one more success
        s_within = short * (alpha0 + ns + 1) <= c.num * (beta0 + nf)
        s_value = np.where(s_within, 1.0 + delta * values[1 : used + 2], 1.0)
        f_value = delta * values[0 : used + 1]
        values = np.maximum(s_value, f_value)
    return float(values[0])


def value_iteration(
    alpha0: int, beta0: int, c: Threshold, delta: float, tol: float = 1e-10
) -> float:
    """Infinite-horizon value by iterating the Bellman operator.

    The state is the integer slack to the cutoff. Slacks above the
    failure-padding band never help, so the space is capped just past
    max(initial slack, band top); optimal play never leaves the cap.
    Stops when the sup-norm step is at most tol*(1-delta), which bounds
    the distance to the fixed point by tol times the discounted tail.
    """
    _check_delta(delta)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    slack0 = BeliefState(alpha0, beta0).slack(c)
    if slack0 < 0:
        raise ValueError("initial prior already exceeds threshold")
    short = c.den - c.num
    cap = max(slack0, short + c.num - 1) + c.num
    slacks = np.arange(cap + 1)
    can_continue = slacks >= short
    s_child = np.maximum(slacks - short, 0)
    f_child = np.minimum(slacks + c.num, cap)
    w = np.zeros(cap + 1)
    stop = tol * (1.0 - delta)
    for _ in range(10_000_000):
        s_value = np.where(can_continue, 1.0 + delta * w[s_child], 1.0)
        w_next = np.maximum(s_value, delta * w[f_child])
        if float(np.max(np.abs(w_next - w))) <= stop:
            return float(w_next[slack0])
        w = w_next
    raise RuntimeError("value iteration failed to converge")
