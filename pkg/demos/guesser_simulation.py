"""Contrast a schedule that manages the posterior with blind guessing.

A guesser who answers correctly with probability p per period has no
control over the slack, so she trips the cutoff early and often. The
engineered schedules either cash in at a chosen moment or survive forever.
"""

from sandbag import (
    GuesserConfig,
    Threshold,
    format_strategy,
    frontier_strategy,
    play_guesser,
    play_strategy,
)

ALPHA, BETA, M = 1, 3, 1
c = Threshold.from_m(M)
DELTA = 0.5

print(f"prior Beta({ALPHA}, {BETA}), cutoff c = {c}\n")

print("Engineered schedules:")
for i in [1, 2, 3]:
    h = frontier_strategy(ALPHA, BETA, c, i)
    traj = play_strategy(ALPHA, BETA, c, h, delta=DELTA)
    print(f"  {format_strategy(h):<12} quits the monitor at period "
          f"{traj.termination_period}, payoff {traj.discounted_payoff:.6f}")

h_inf = frontier_strategy(ALPHA, BETA, c, float("inf"))
traj = play_strategy(ALPHA, BETA, c, h_inf, max_periods=1000, delta=DELTA)
print(f"  {format_strategy(h_inf):<12} survives 1000 periods "
      f"(terminated = {traj.terminated}), payoff {traj.discounted_payoff:.6f}\n")

print("Blind guessers (per-period hit probability p, 10 seeds each):")
for p in (0.3, 0.5, 0.8):
    stops = []
    for seed in range(10):
        t = play_guesser(ALPHA, BETA, c, GuesserConfig(p, seed), max_periods=500)
        stops.append(t.termination_period if t.terminated else None)
    shown = ["never" if s is None else str(s) for s in stops]
    survived = sum(1 for s in stops if s is None)
    print(f"  p = {p}: stop periods {shown}  ({survived}/10 survive 500 periods)")

print("\nSame seed, same trajectory (the stream is reproducible):")
a = play_guesser(ALPHA, BETA, c, GuesserConfig(0.5, seed=42), max_periods=50)
b = play_guesser(ALPHA, BETA, c, GuesserConfig(0.5, seed=42), max_periods=50)
word_a = "".join(r.action.value for r in a.records)
word_b = "".join(r.action.value for r in b.records)
print(f"  seed 42 run 1: {word_a}")
print(f"  seed 42 run 2: {word_b}")
print(f"  identical: {word_a == word_b}")
