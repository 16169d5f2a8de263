#!/usr/bin/env python3
"""When do two bases constrain each other's leading digits?

Exactly when they are powers of a common integer: b1 = a**e1, b2 = a**e2.
Equivalently, ln(b1) and ln(b2) are rationally dependent.  Deciding this
numerically is hopeless (no finite computation certifies that a log ratio
is irrational), but as integer arithmetic it is easy: strip each base to
its canonical root**exponent form and compare roots.
"""

from jointdigits import pair_dependence, pairwise_report, primitive_root

print("=== canonical power forms ===")
for b in (8, 12, 64, 81, 125, 144, 216):
    pr = primitive_root(b)
    mark = "" if pr.exponent == 1 else f"  = {pr.root}**{pr.exponent}"
    print(f"{b:4d}: root {pr.root:4d}, exponent {pr.exponent}{mark}")

print()
print("=== dependence certificates ===")
for b1, b2 in [(4, 8), (4, 16), (9, 27), (3, 10), (12, 144), (6, 10)]:
    dep = pair_dependence(b1, b2)
    if dep is None:
        print(f"({b1}, {b2}): independent -- no common power base exists")
    else:
        print(
            f"({b1}, {b2}): dependent, {b1} = {dep.a}**{dep.e1}, "
            f"{b2} = {dep.a}**{dep.e2}, combined base "
            f"{dep.combined_base} = {b1}**{dep.e2} = {b2}**{dep.e1}"
        )

print()
print("=== all dependent pairs among bases 3..130 ===")
found = []
for b1 in range(3, 131):
    for b2 in range(b1 + 1, 131):
        dep = pair_dependence(b1, b2)
        if dep is not None:
            found.append((b1, b2, dep))
for b1, b2, dep in found:
    print(f"  {b1:3d} ~ {b2:3d}   (a={dep.a}, exponents {dep.e1},{dep.e2})")
print(f"{len(found)} dependent pairs out of {128 * 127 // 2} -- rare, but structured")

print()
print("=== a report over a whole base tuple ===")
report = pairwise_report((4, 8, 10, 16))
print(f"bases {report.bases}")
for i, j, dep in report.dependent_pairs:
    print(f"  indices ({i}, {j}): {report.bases[i]} and {report.bases[j]} share root {dep.a}")
print(f"all pairwise independent: {report.all_pairwise_independent}")
print("(only pairwise-independent tuples can have a surjective joint digit map)")
