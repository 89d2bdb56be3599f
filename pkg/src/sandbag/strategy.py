"""Outcome schedules and the frontier family of candidate optima.

A strategy is a predetermined outcome sequence: either a finite word
over {s, f} whose last action is the success that finally crosses the
cutoff, or an eventually periodic infinite word (prefix plus repeating
cycle) that never crosses. The text form is ``"ssfss"`` for finite
words and ``"ssfs(fs)*"`` for infinite ones.

The frontier family h^1, h^2, ..., h^inf enumerates the schedules that
hug the suspicion boundary: succeed whenever the posterior stays within
the cutoff afterwards, pad with the fewest failures otherwise, and cash
in the crossing success at the index-th opportunity (never, for the
infinite member).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Union

from .belief import Action, BeliefState, Threshold

FamilyIndex = Union[int, float]  # 1, 2, ... or math.inf


class StrategyParseError(ValueError):
    """Raised on malformed strategy text; carries a 1-based position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


@dataclass(frozen=True)
class Strategy:
    """Finite or eventually periodic outcome schedule.

    ``cycle is None`` marks a finite strategy; otherwise the schedule is
    ``prefix`` followed by ``cycle`` repeated forever.
    """

    prefix: tuple[Action, ...]
    cycle: tuple[Action, ...] | None = None

    def __post_init__(self) -> None:
        if self.cycle is None:
            if not self.prefix:
                raise ValueError("finite strategy must contain at least one action")
        elif not self.cycle:
            raise ValueError("cycle must contain at least one action")

    @property
    def is_finite(self) -> bool:
        return self.cycle is None

    @property
    def length(self) -> int | None:
        """Number of periods for finite strategies, None for infinite ones."""
        return len(self.prefix) if self.cycle is None else None

    def actions(self, limit: int | None = None) -> Iterator[Action]:
        """Yield the schedule in order; ``limit`` bounds infinite ones."""
        if self.cycle is None:
            seq: Iterator[Action] = iter(self.prefix)
        else:
            seq = itertools.chain(self.prefix, itertools.cycle(self.cycle))
        return seq if limit is None else itertools.islice(seq, limit)

    def __str__(self) -> str:
        return format_strategy(self)


def parse_strategy(text: str) -> Strategy:
    """Parse ``"ssfss"`` or ``"ssfs(fs)*"`` into a Strategy.

    Rejects empty input, stray characters, and malformed cycle syntax,
    reporting the 1-based offending position.
    """
    if not text:
        raise StrategyParseError("empty strategy text", 1)
    by_char = {a.value: a for a in Action}
    prefix: list[Action] = []
    i = 0
    while i < len(text) and text[i] in by_char:
        prefix.append(by_char[text[i]])
        i += 1
    if i == len(text):
        return Strategy(tuple(prefix))
    if text[i] != "(":
        raise StrategyParseError(f"unexpected character {text[i]!r}", i + 1)
    i += 1
    cycle: list[Action] = []
    while i < len(text) and text[i] in by_char:
        cycle.append(by_char[text[i]])
        i += 1
    if i == len(text) or text[i] != ")":
        pos = i + 1
        if i < len(text):
            raise StrategyParseError(f"unexpected character {text[i]!r} in cycle", pos)
        raise StrategyParseError("unterminated cycle", pos)
    if not cycle:
        raise StrategyParseError("empty cycle", i + 1)
    i += 1
    if i == len(text) or text[i] != "*":
        raise StrategyParseError("cycle must be followed by '*'", i + 1)
    if i + 1 != len(text):
        raise StrategyParseError("trailing characters after cycle", i + 2)
    return Strategy(tuple(prefix), tuple(cycle))


def format_strategy(x: Strategy) -> str:
    """Inverse of parse_strategy."""
    head = "".join(a.value for a in x.prefix)
    if x.cycle is None:
        return head
    return f"{head}({''.join(a.value for a in x.cycle)})*"


def _slack0(alpha0: int, beta0: int, c: Threshold) -> int:
    return BeliefState(alpha0, beta0).slack(c)


def _step(slack: int, action: Action, c: Threshold) -> int:
    if action is Action.SUCCESS:
        return slack - (c.den - c.num)
    return slack + c.num


def is_feasible(x: Strategy, alpha0: int, beta0: int, c: Threshold) -> bool:
    """Whether the monitor stays through every period the schedule needs.

    Finite schedules may (and for validity must) cross on their final
    action; every earlier point, including the start, has to stay within
    the cutoff. Infinite schedules must stay within forever, which is
    decided exactly from the per-cycle slack drift.
    """
    slack = _slack0(alpha0, beta0, c)
    if slack < 0:
        return False
    if x.cycle is None:
        for action in x.prefix[:-1]:
            slack = _step(slack, action, c)
            if slack < 0:
                return False
        return True
    for action in x.prefix:
        slack = _step(slack, action, c)
        if slack < 0:
            return False
    # one full cycle must stay within, and the net drift per cycle must be
    # nonnegative, else some later repetition dips below zero
    cycle_slack = slack
    for action in x.cycle:
        cycle_slack = _step(cycle_slack, action, c)
        if cycle_slack < 0:
            return False
    return cycle_slack >= slack


def greedy_violations(x: Strategy, alpha0: int, beta0: int, c: Threshold) -> list[int]:
    """1-based failure positions where flipping that failure to a success
    would still leave the posterior within the cutoff.

    An empty list means the schedule is greedy: it only fails when a
    success would cross. The check is mechanical and does not assume the
    schedule is feasible. For infinite schedules the scan covers the
    prefix and first cycle; when the slack drifts upward and that scan
    was clean, the earliest violating position in a later cycle is
    appended, so the result is empty iff no violation exists anywhere.
    """
    bar = c.den  # flip test: slack after the failure >= den
    out: list[int] = []
    slack = _slack0(alpha0, beta0, c)
    pos = 0
    for action in x.prefix:
        pos += 1
        slack = _step(slack, action, c)
        if action is Action.FAILURE and slack >= bar:
            out.append(pos)
    if x.cycle is None:
        return out
    cycle_start = slack
    offsets: list[tuple[int, int]] = []  # (offset within cycle, slack after)
    for off, action in enumerate(x.cycle):
        pos += 1
        slack = _step(slack, action, c)
        if action is Action.FAILURE:
            offsets.append((off, slack))
            if slack >= bar:
                out.append(pos)
    drift = slack - cycle_start
    if not out and drift > 0 and offsets:
        first = None
        for off, s_after in offsets:
            # smallest rep j >= 1 with s_after + j*drift >= bar
            j = max(1, -((s_after - bar) // drift))
            candidate = len(x.prefix) + j * len(x.cycle) + off + 1
            if first is None or candidate < first:
                first = candidate
        if first is not None:
            out.append(first)
    return out


@dataclass(frozen=True)
class Decomposition:
    """Division of the prior failure weight by the cutoff period.

    For c = 1/(m+1), writes beta0 = m*r + k with 0 <= k < m, r >= 1.
    """

    m: int
    r: int
    k: int


def decompose(beta0: int, m: int) -> Decomposition:
    if m < 1:
        raise ValueError("m must be a positive integer")
    if beta0 < 1:
        raise ValueError("beta0 must be a positive integer")
    r, k = divmod(beta0, m)
    if r < 1:
        raise ValueError("beta0 must be at least m")
    return Decomposition(m, r, k)


def second_frontier_closed_form(alpha0: int, beta0: int, m: int) -> Strategy:
    """Closed-form h^2 for cutoff 1/(m+1): (r-alpha0) successes, (m-k)
    failures, then two successes, the last of which crosses."""
    dec = decompose(beta0, m)
    if dec.r < alpha0:
        raise ValueError("initial prior already exceeds threshold")
    word = (
        [Action.SUCCESS] * (dec.r - alpha0)
        + [Action.FAILURE] * (dec.m - dec.k)
        + [Action.SUCCESS, Action.SUCCESS]
    )
    return Strategy(tuple(word))


def frontier_strategy(alpha0: int, beta0: int, c: Threshold, index: FamilyIndex) -> Strategy:
    """Member h^index of the frontier family.

    Succeeds whenever the resulting posterior stays within the cutoff,
    otherwise pads with the fewest failures that make the next success
    affordable. The finite member h^i spends the crossing success at the
    i-th such opportunity; h^inf declines them all and is returned as
    prefix plus cycle.
    """
    if index != math.inf and (not isinstance(index, int) or index < 1):
        raise ValueError("index must be a positive integer or math.inf")
    short = c.den - c.num
    slack = _slack0(alpha0, beta0, c)
    if slack < 0:
        raise ValueError("initial prior already exceeds threshold")

    if index != math.inf:
        word: list[Action] = []
        opportunities = 0
        while True:
            if slack >= short:
                word.append(Action.SUCCESS)
                slack -= short
                continue
            opportunities += 1
            if opportunities == index:
                word.append(Action.SUCCESS)  # the crossing success
                return Strategy(tuple(word))
            need = short - slack
            d = -((-need) // c.num)  # ceil(need / num)
            word.extend([Action.FAILURE] * d)
            slack += d * c.num

    # infinite member: walk until the slack state repeats, then split at
    # the first success that follows the first failure; slack values are
    # bounded so the walk is eventually periodic and that point lies in
    # the recurrent part
    word = []
    seen: dict[int, int] = {}
    period = None
    while True:
        if slack in seen and period is None:
            period = len(word) - seen[slack]
        if slack not in seen:
            seen[slack] = len(word)
        if period is not None:
            first_f = next((i for i, a in enumerate(word) if a is Action.FAILURE), None)
            if first_f is not None:
                split = next(
                    (i for i in range(first_f + 1, len(word)) if word[i] is Action.SUCCESS),
                    None,
                )
                if split is not None and len(word) >= split + 1 + period:
                    head = tuple(word[: split + 1])
                    cycle = tuple(word[split + 1 : split + 1 + period])
                    return Strategy(head, cycle)
        if slack >= short:
            word.append(Action.SUCCESS)
            slack -= short
        else:
            need = short - slack
            d = -((-need) // c.num)
            word.extend([Action.FAILURE] * d)
            slack += d * c.num
