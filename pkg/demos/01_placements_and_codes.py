"""A first walk through homing: placements, evictions, and codes.

Think of n billiard balls in a trough.  A ball that is not in its numbered
slot may be *placed*: pulled out and dropped into its slot, with the balls
in between rolling one step to make room.  Repeating this until the trough
reads 1, 2, ..., n is what we call homing.  Running the film backwards --
pulling a ball that *is* home and dropping it elsewhere -- is an eviction.
"""
from homing import (
    code_of,
    displace,
    format_perm,
    place,
    placeable_values,
    placement_successors,
    stage,
    weight,
)

p = (4, 1, 3, 5, 2)
print(f"start               {format_perm(p)}")
print(f"out of place        {placeable_values(p)}")

q = place(p, 1)
print(f"place 1         ->  {format_perm(q)}")
q = place(q, 2)
print(f"place 2         ->  {format_perm(q)}")
q = place(q, 4)
print(f"place 4         ->  {format_perm(q)}   sorted!")
print()

# placements are invertible: evicting undoes them
r = displace(q, 3, 1)
print(f"evict 3 to pos 1 -> {format_perm(r)}")
print(f"place 3 again    -> {format_perm(place(r, 3))}")
print()

# each interior value gets a code symbol: + right of home, - left, 0 home
for state in [(4, 1, 3, 5, 2), (7, 6, 8, 1, 3, 2, 5, 4), (5, 2, 3, 4, 1)]:
    c = code_of(state)
    print(f"code({format_perm(state)}) = {c!r:10}  weight {weight(c)}  stage {stage(state)}")
print()

print("one placement can unlock several others:")
for succ in sorted(placement_successors((2, 3, 1))):
    print(f"  (2,3,1) -> {format_perm(succ)}")
