"""The double-ended binary weight that proves the 2^(n-1) - 1 ceiling.

Each code gets a weight by repeatedly stripping the symbol with the
largest reach (symbols left of a '-', right of a '+') and adding 2^reach.
Codes of 0s and +s read as plain binary; codes of 0s and -s read as
reversed binary.  The point of the weight: once both end values are away
from home, every eviction raises it strictly, and it can never exceed
2^(n-2) - 1, which caps how long evictions can continue.
"""
import itertools

from homing import all_perms, code_of, displacement_successors, strip_trace, weight

print("strip derivation of weight('+-0-'):")
syms = list("+-0-")
for step in strip_trace("+-0-"):
    shown = "".join(syms)
    print(f"  {shown}: strip position {step.position} ('{syms[step.position - 1]}'), "
          f"reach {step.exponent}, add {1 << step.exponent}")
    del syms[step.position - 1]
print(f"  total: {weight('+-0-')}")
print()

print("binary readings:")
for code in ["+0+", "0++", "-0-", "--0"]:
    print(f"  w({code}) = {weight(code)}")
print()

print("extremes over all codes of length 4:")
ws = {code: weight("".join(code)) for code in itertools.product("+-0", repeat=4)}
print(f"  min {min(ws.values())}, max {max(ws.values())} = 2^4 - 1;")
print(f"  maximizers: {sorted(''.join(c) for c, w in ws.items() if w == 15)}")
print()

print("evictions raise the weight strictly once both ends are in play (n=5):")
shown = 0
for p in all_perms(5):
    if p[0] == 1 or p[-1] == 5 or shown >= 3:
        continue
    w = weight(code_of(p))
    ups = [weight(code_of(q)) for _, q in displacement_successors(p)]
    if ups:
        print(f"  {p}: weight {w} -> evictions give {sorted(set(ups))}")
        shown += 1
