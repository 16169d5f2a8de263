#!/usr/bin/env python3
"""Finding numbers with prescribed leading digits in several bases at once.

For independent bases (say 3 and 10) every digit combination occurs; this
demo finds explicit witnesses.  The trick: candidates x_k = j * b**k keep
leading digit j in base b for every k (digit string j000...0), so only the
other coordinates need checking, and the fractional parts of log10(x_k)
walk an irrational rotation that eventually lands anywhere.
"""

from jointdigits import WitnessQuery, find_witness, leading_digit_tuple, verify_witness

print("=== all 18 digit pairs for bases (3, 10) ===")
for j1 in (1, 2):
    for j2 in range(1, 10):
        r = find_witness(WitnessQuery(bases=(3, 10), target=(j1, j2)))
        assert r.found and verify_witness(r.x, (3, 10), (j1, j2))
        print(f"  target ({j1},{j2}): x = {r.x:>9d} = {j1}*3**{r.k}")

print()
print("=== the hardest pair above: (2, 9) ===")
r = find_witness(WitnessQuery(bases=(3, 10), target=(2, 9)))
print(f"x = {r.x} = 2 * 3**14")
print(f"decimal check: 9,000,000 <= {r.x} < 10,000,000 -> leading digit 9")
print(f"ternary check: x / 3**14 = 2 exactly -> leading digit 2")
print(f"recomputed digit tuple: {leading_digit_tuple(r.x, (3, 10))}")

print()
print("=== dependent bases refuse impossible targets with a certificate ===")
r = find_witness(WitnessQuery(bases=(4, 8), target=(2, 3)))
print(f"target (2,3) for bases (4,8): {r.outcome}")
v = r.certificate
print(f"certificate: no integer c in {v.scan_range} puts 2**c inside (2/4, 3/3)")

print()
print("=== three bases ===")
r = find_witness(WitnessQuery(bases=(3, 10, 7), target=(2, 4, 3)))
print(f"target (2,4,3) for bases (3,10,7): x = {r.x} (anchor {r.anchor_index}, k={r.k})")
print(f"digits: {leading_digit_tuple(r.x, (3, 10, 7))}")

r = find_witness(WitnessQuery(bases=(4, 8, 10), target=(2, 3, 1)))
print(f"target (2,3,1) for bases (4,8,10): {r.outcome} "
      f"(the (4,8) projection (2,3) is impossible, so the third base is moot)")

print()
print("=== budget exhaustion is explicit, never silent ===")
r = find_witness(WitnessQuery(bases=(3, 10, 7), target=(2, 9, 5), budget=3))
print(f"budget 3: {r.outcome} at k = {r.k_reached}")
print(f"note: {r.assumption_note}")
r = find_witness(WitnessQuery(bases=(3, 10, 7), target=(2, 9, 5)))
print(f"default budget: {r.outcome}, x = {r.x}")
