#!/usr/bin/env python3
"""The joint digit table for bases 4 and 8, and which pairs never occur.

Since 64 = 4**3 = 8**2, the base-64 leading digit of x determines both its
base-4 and base-8 leading digits.  Tabulating D = 1..63 therefore computes
the whole image of x -> (d4(x), d8(x)) -- and six of the 21 digit pairs
never occur, no matter what x is.
"""

from jointdigits import (
    attainable_by_power_criterion,
    image_exact,
    image_observed,
    image_via_table,
    joint_table,
    pair_dependence,
)

dep = pair_dependence(4, 8)
print(f"4 = {dep.a}**{dep.e1}, 8 = {dep.a}**{dep.e2}, combined base {dep.combined_base}")
print()

table = joint_table(dep)
print("base-64 digit ranges per digit pair (rows: base-8 digit, columns: base-4 digit):")
for j2 in range(1, 8):
    row = []
    for j1 in range(1, 4):
        runs = table.member_runs(j1, j2)
        cell = ",".join(
            str(lo) if hi == lo + 1 else f"{lo}-{hi - 1}" for lo, hi in runs
        ) or "."
        row.append(cell.ljust(6))
    print((f"  j2={j2}:  " + "  ".join(row)).rstrip())

print()
report = image_exact(4, 8)
att, exc = report.counts
print(f"attainable pairs: {att}, excluded pairs: {exc}")
print(f"excluded: {sorted(report.excluded)}")

print()
print("why (2,3) is impossible: it needs an integer power 2**c strictly between")
print("j1/(j2+1) = 2/4 = 1/2 and (j1+1)/j2 = 3/3 = 1 -- and no power of 2 lies in (1/2, 1).")
v = attainable_by_power_criterion(dep, 2, 3)
print(f"criterion scan over c in {v.scan_range}: attainable = {v.attainable}")

print()
print("attainable pairs come with explicit certificates:")
for j1, j2 in [(1, 1), (2, 1), (1, 4), (3, 7)]:
    v = attainable_by_power_criterion(dep, j1, j2)
    print(f"  ({j1},{j2}): c = {v.certificate}  "
          f"({j1}/{j2 + 1} < 2**{v.certificate} < {j1 + 1}/{j2})")

print()
print("cross-checks: two independent routes and a brute-force scan all agree")
print(f"  table route == criterion route: "
      f"{image_via_table(dep) == report.attainable}")
print(f"  integers 1..63 realize the image: "
      f"{image_observed((4, 8), 63) == report.attainable}")
