"""Slow homing: badly chosen placements can take 2^(n-1) - 1 steps.

Homing the rotation 2,3,...,n,1 by always placing the leftmost out-of-place
value walks the tower-of-Hanoi pattern.  Exhaustive height tables (longest
placement distance to the identity, state by state) confirm that
2^(n-1) - 1 is the exact ceiling, and count how many permutations reach it.
"""
from homing import format_perm, rotation, swap_ends
from homing.heights import build_height_table, height, stage1_longest
from homing.strategies import LEFTMOST_NOT_HOME, run_strategy

trace = run_strategy(rotation(4), LEFTMOST_NOT_HOME)
print(f"leftmost-not-home on {format_perm(rotation(4))} ({len(trace)} steps):")
for step in trace.steps():
    print(f"  step {step.step}: place {step.value} -> {format_perm(step.result)}")
print()

print("n, max height, 2^(n-1)-1, #worst cases, height of the gateway state:")
for n in range(2, 9):
    table = build_height_table(n)
    top = (1 << (n - 1)) - 1
    members = table.members_at(top)
    print(f"  {n}: {table.max():4} = {top:4}   {len(members):5}   "
          f"h({format_perm(swap_ends(n))}) = {table.height_of(swap_ends(n))}")
print()

table = build_height_table(6)
print("height histogram for n=6 (height: how many permutations):")
hist = table.histogram()
print(" ", {h: c for h, c in enumerate(hist) if c})
print()

print("every eviction run that never moves the value 1 stops at 2^(n-2)-1:")
for n in range(3, 8):
    print(f"  n={n}: {stage1_longest(n)} evictions")
print()

print(f"point queries agree with the tables: h(rotation(9)) = {height(rotation(9))}")
