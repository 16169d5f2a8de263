"""Exact leading digits of positive rationals in arbitrary integer bases.

The leading digit of x > 0 in base b is the unique j in {1, ..., b-1} such
that j * b**k <= x < (j+1) * b**k for some integer k.  Everything here is
computed with arbitrary-precision integer comparisons (cross-multiplied
inequalities on numerator/denominator), never with floating-point
logarithms, so results at interval boundaries are exact and identical on
every platform.

Bases are restricted to integers >= 3.  Inputs are exact positive
rationals: Python ints or ``fractions.Fraction`` values (floats are
rejected -- binary floats silently misplace values that sit on digit
boundaries).

The digit-set machinery relates digits across powers of a base: the set
``digit_set(b, e, j)`` collects the base-b**e leading digits that refine to
base-b leading digit j, and ``refine_digit`` inverts that map.  For fixed
(b, e) the sets over j = 1..b-1 partition {1, ..., b**e - 1}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import ResourceLimitError

MIN_BASE = 3

# digit_set materializes {1,...,b**e - 1}; refuse universes past this size
DEFAULT_ENUMERATION_CAP = 1 << 24

_RATIONAL_RE = re.compile(r"(\d+)\s*(?:/\s*(\d+))?")

__all__ = [
    "MIN_BASE",
    "DEFAULT_ENUMERATION_CAP",
    "check_base",
    "check_bases",
    "check_digit",
    "as_positive_rational",
    "parse_positive_rational",
    "floor_log",
    "leading_digit",
    "leading_digit_tuple",
    "DigitSet",
    "digit_set",
    "digit_set_ranges",
    "digit_set_contains",
    "refine_digit",
    "iter_digit_tuples",
]


def check_base(b: int) -> int:
    """Validate a positional-notation base (an integer >= 3)."""
    if not isinstance(b, int) or isinstance(b, bool):
        raise TypeError(f"base must be an int, got {type(b).__name__}")
    if b < MIN_BASE:
        raise ValueError(f"base must be >= {MIN_BASE}, got {b}")
    return b


def check_bases(bases: Iterable[int]) -> tuple[int, ...]:
    """Validate a tuple of distinct bases, preserving order."""
    bs = tuple(bases)
    if not bs:
        raise ValueError("need at least one base")
    for b in bs:
        check_base(b)
    if len(set(bs)) != len(bs):
        raise ValueError(f"bases must be distinct, got {bs}")
    return bs


def check_digit(j: int, b: int) -> int:
    """Validate a leading digit for base b (1 <= j <= b-1)."""
    check_base(b)
    if not isinstance(j, int) or isinstance(j, bool):
        raise TypeError(f"digit must be an int, got {type(j).__name__}")
    if not 1 <= j <= b - 1:
        raise ValueError(f"digit must be in 1..{b - 1} for base {b}, got {j}")
    return j


def as_positive_rational(x) -> Fraction:
    """Coerce x to an exact positive rational.

    Accepts ints and Fractions.  Floats are rejected: they carry binary
    rounding and would make boundary cases (x exactly j * b**k) ambiguous.
    """
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(
            f"expected an exact rational (int or Fraction), got {type(x).__name__}"
        )
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"expected a positive rational, got {x}")
    return x


def parse_positive_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' into a positive rational.

    Decimal points and scientific notation are rejected deliberately: the
    accepted grammar guarantees the value is represented exactly.
    """
    m = _RATIONAL_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"not an integer or p/q rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    if num == 0:
        raise ValueError(f"expected a positive value: {text!r}")
    return Fraction(num, den)


def floor_log(x, b: int) -> int:
    """Largest integer k with b**k <= x, for positive rational x.

    Doubling then binary search on the exponent; every comparison is the
    cross-multiplied integer form of b**k <= p/q.  Cost is logarithmic in
    |k|, so inputs like 10**-300 or 7**1000 are fine.

    >>> floor_log(56, 4)
    2
    >>> floor_log(Fraction(1, 3), 10)
    -1
    >>> floor_log(1, 7)
    0
    """
    x = as_positive_rational(x)
    check_base(b)
    p, q = x.numerator, x.denominator
    if p >= q:
        # k >= 0: find hi with b**hi > x by repeated squaring
        lo, hi, pw = 0, 1, b
        while q * pw <= p:
            lo, hi = hi, hi * 2
            pw = pw * pw
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if q * b**mid <= p:
                lo = mid
            else:
                hi = mid
        return lo
    # x < 1: k = -m with m the least positive integer with b**-m <= x
    lo, hi, pw = 0, 1, b
    while p * pw < q:
        lo, hi = hi, hi * 2
        pw = pw * pw
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if p * b**mid >= q:
            hi = mid
        else:
            lo = mid
    return -hi


def leading_digit(x, b: int) -> int:
    """Leading digit of x in base b.

    Returns the j with j * b**k <= x < (j+1) * b**k for some integer k.
    The computation is floor(x / b**floor_log(x, b)) on exact integers.

    >>> leading_digit(56, 4)
    3
    >>> leading_digit(Fraction(1, 3), 10)
    3
    >>> leading_digit(7, 7)
    1
    """
    x = as_positive_rational(x)
    check_base(b)
    k = floor_log(x, b)
    p, q = x.numerator, x.denominator
    if k >= 0:
        return p // (q * b**k)
    return (p * b**-k) // q


def leading_digit_tuple(x, bases: Iterable[int]) -> tuple[int, ...]:
    """Leading digits of x in each base, component-wise.

    Bases must be distinct integers >= 3.

    >>> leading_digit_tuple(9, (4, 8))
    (2, 1)
    >>> leading_digit_tuple(56, (4, 8))
    (3, 7)
    """
    bs = check_bases(bases)
    x = as_positive_rational(x)
    return tuple(leading_digit(x, b) for b in bs)


@dataclass(frozen=True)
class DigitSet:
    """The set of base-(base**exponent) leading digits refining to ``digit``.

    ``members`` is the union over l = 0..exponent-1 of the integer ranges
    [digit * base**l, (digit+1) * base**l), sorted ascending.  For fixed
    (base, exponent) these sets over digit = 1..base-1 partition
    {1, ..., base**exponent - 1}.
    """

    base: int
    exponent: int
    digit: int
    members: tuple[int, ...]

    def __contains__(self, value: object) -> bool:
        return isinstance(value, int) and digit_set_contains(
            value, self.base, self.exponent, self.digit
        )

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    @property
    def ranges(self) -> tuple[tuple[int, int], ...]:
        """The defining half-open ranges [j * b**l, (j+1) * b**l)."""
        return digit_set_ranges(self.base, self.exponent, self.digit)


def _check_exponent(e: int) -> int:
    if not isinstance(e, int) or isinstance(e, bool):
        raise TypeError(f"exponent must be an int, got {type(e).__name__}")
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    return e


def digit_set_ranges(b: int, e: int, j: int) -> tuple[tuple[int, int], ...]:
    """The half-open ranges whose union is digit_set(b, e, j).

    Returned ascending; consecutive ranges never touch (for b >= 3 the gap
    (j+1) * b**l .. j * b**(l+1) is nonempty), so this is also the minimal
    run-length representation of the set.
    """
    check_digit(j, b)
    _check_exponent(e)
    return tuple((j * b**l, (j + 1) * b**l) for l in range(e))


def digit_set_contains(value: int, b: int, e: int, j: int) -> bool:
    """Membership predicate for digit_set(b, e, j), with no enumeration.

    Tests j * b**l <= value < (j+1) * b**l over l = 0..e-1; usable when
    b**e is far beyond any enumeration cap.
    """
    check_digit(j, b)
    _check_exponent(e)
    if not isinstance(value, int) or isinstance(value, bool):
        return False
    pw = 1
    for _ in range(e):
        if j * pw <= value < (j + 1) * pw:
            return True
        pw *= b
    return False


def digit_set(b: int, e: int, j: int, cap: int = DEFAULT_ENUMERATION_CAP) -> DigitSet:
    """Materialize the digit set S of base-b**e digits refining to j.

    Cardinality is (b**e - 1) // (b - 1).  Raises ResourceLimitError when
    the universe b**e exceeds ``cap``; use digit_set_contains or
    digit_set_ranges beyond that.

    >>> digit_set(8, 2, 2).members
    (2, 16, 17, 18, 19, 20, 21, 22, 23)
    >>> len(digit_set(4, 3, 1))
    21
    """
    check_digit(j, b)
    _check_exponent(e)
    if b**e > cap:
        raise ResourceLimitError(
            f"digit_set universe {b}**{e} exceeds enumeration cap {cap}; "
            "use digit_set_contains/digit_set_ranges instead"
        )
    members = []
    for lo, hi in digit_set_ranges(b, e, j):
        members.extend(range(lo, hi))
    return DigitSet(base=b, exponent=e, digit=j, members=tuple(members))


def refine_digit(D: int, b: int, e: int) -> int:
    """The base-b digit j whose digit set contains the base-b**e digit D.

    Total on 1 <= D <= b**e - 1 because the digit sets partition that
    range.  Computed by locating the power b**l <= D < b**(l+1) and taking
    j = D // b**l.

    >>> refine_digit(25, 4, 3)
    1
    >>> refine_digit(63, 8, 2)
    7
    """
    check_base(b)
    _check_exponent(e)
    if not isinstance(D, int) or isinstance(D, bool):
        raise TypeError(f"digit must be an int, got {type(D).__name__}")
    if not 1 <= D <= b**e - 1:
        raise ValueError(f"digit must be in 1..{b**e - 1} for base {b}**{e}, got {D}")
    pw = 1
    while pw * b <= D:
        pw *= b
    return D // pw


def iter_digit_tuples(bases: Iterable[int], x_max: int) -> Iterator[tuple[int, ...]]:
    """Yield leading_digit_tuple(x, bases) for x = 1, 2, ..., x_max.

    Ascending integer scans keep, per base, the bracketing power
    b**m <= x < b**(m+1) and advance it incrementally, so the whole scan
    costs O(x_max) integer divisions instead of x_max order-of-magnitude
    searches.
    """
    bs = check_bases(bases)
    if x_max < 1:
        raise ValueError(f"x_max must be >= 1, got {x_max}")
    # per-base state [b, b**m, b**(m+1)] with b**m <= x < b**(m+1)
    state = [[b, 1, b] for b in bs]
    for x in range(1, x_max + 1):
        out = []
        for s in state:
            if x >= s[2]:
                s[1] = s[2]
                s[2] *= s[0]
            out.append(x // s[1])
        yield tuple(out)
