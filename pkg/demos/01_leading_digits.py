#!/usr/bin/env python3
"""Leading digits of exact rationals, with zero floating-point ambiguity.

The leading digit of x in base b is the j with j * b**k <= x < (j+1) * b**k
for some integer k.  Everything below runs on exact integer comparisons, so
values sitting exactly on a digit boundary come out right every time.
"""

from fractions import Fraction

from jointdigits import (
    digit_set,
    floor_log,
    leading_digit,
    leading_digit_tuple,
    refine_digit,
)

print("=== basics ===")
for x, b in [(56, 4), (7, 7), (9, 4), (9, 8)]:
    print(f"leading digit of {x} in base {b}: {leading_digit(x, b)}")

print()
print("=== the same number through several bases at once ===")
for x in (1, 9, 56, 2024):
    print(f"x = {x:5d}  digits in bases (4, 8, 10): {leading_digit_tuple(x, (4, 8, 10))}")

print()
print("=== rationals, including values exactly on a boundary ===")
third = Fraction(1, 3)
print(f"1/3 in base 10 -> {leading_digit(third, 10)}   (3/10 <= 1/3 < 4/10)")
boundary = Fraction(3, 10)
print(f"3/10 in base 10 -> {leading_digit(boundary, 10)}  (exactly at the digit-3 edge)")
print(f"2/3 in base 7  -> {leading_digit(Fraction(2, 3), 7)}")

print()
print("=== magnitude does not matter: only the significand does ===")
x = Fraction(271828, 100000)
for shift in (-50, 0, 50):
    scaled = x * Fraction(10) ** shift
    print(f"x * 10**{shift:+d}: digit {leading_digit(scaled, 10)}, "
          f"order of magnitude {floor_log(scaled, 10)}")

print()
print("=== huge and tiny inputs cost only log(|exponent|) steps ===")
huge = 7 ** 1000
print(f"7**1000 has leading decimal digit {leading_digit(huge, 10)}")
tiny = Fraction(1, 7 ** 1000)
print(f"7**-1000 has leading decimal digit {leading_digit(tiny, 10)}")

print()
print("=== digits refine through powers of the base ===")
print("the base-64 digit of x pins down its base-4 digit (64 = 4**3):")
s = digit_set(4, 3, 2)
print(f"base-64 digits refining to base-4 digit 2: {s.members}")
for D in (2, 9, 35):
    print(f"  d64 = {D:2d}  ->  d4 = {refine_digit(D, 4, 3)}")
x = 2100
print(f"check with x = {x}: d64(x) = {leading_digit(x, 64)}, "
      f"d4(x) = {leading_digit(x, 4)}")
