"""Fast homing: well-chosen placements finish in at most n-1 steps.

Placing the smallest (or largest) not-yet-home value settles it forever,
so n-1 such steps always suffice.  The shortest possible sort is bounded
below by n minus the longest increasing subsequence, and the reversal is
the unique permutation that needs the full n-1 steps.  Random placements
still finish, in about (n(n+1)-2)/4 steps on average or fewer.
"""
from homing import format_perm, lis_length, reverse
from homing.strategies import (
    LARGEST_FIRST,
    RANDOM,
    SMALLEST_FIRST,
    min_placements,
    random_homing_mean,
    run_strategy,
    smallest_first_steps,
    unique_worst_case_check,
)

p = (4, 1, 3, 5, 2)
trace = run_strategy(p, SMALLEST_FIRST)
print(f"smallest-first on {format_perm(p)}:")
for step in trace.steps():
    print(f"  step {step.step}: place {step.value} -> {format_perm(step.result)}")
print(f"LIS lower bound: {len(p)} - {lis_length(p)} = {len(p) - lis_length(p)}; "
      f"optimal is min_placements = {min_placements(p)}")
print()

print("the reversal is the one and only worst case for optimal homing:")
for n in range(2, 8):
    t = run_strategy(reverse(n), LARGEST_FIRST)
    print(f"  n={n}: reverse needs {min_placements(reverse(n))} steps "
          f"(largest-first uses {len(t)}); unique: {unique_worst_case_check(n)}")
print()

print("the hand-sort pass length can exceed the placements actually made:")
p = (1, 3, 2)
print(f"  {format_perm(p)}: pass length {smallest_first_steps(p)}, "
      f"placements {len(run_strategy(p, SMALLEST_FIRST))}")
print()

est = random_homing_mean(8, trials=5000, seed=11)
print(f"random homing, n=8, 5000 trials, seed 11:")
print(f"  mean {float(est.mean):.3f} <= bound {float(est.bound):.3f} "
      f"(margin {float(est.margin):.3f}); worst trial {est.max_steps} steps")
t = run_strategy((5, 4, 3, 2, 1), RANDOM, seed=99)
print(f"  a seeded random run on 5,4,3,2,1 places {list(t.moves)}")
