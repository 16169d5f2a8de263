"""Torus-orbit diagnostics for joint leading digits.

The joint digit tuple of x is determined by where the point
(log_{b_1} x, ..., log_{b_n} x) lands modulo 1: digit j_i corresponds to
the half-open interval [log_{b_i}(j_i), log_{b_i}(j_i + 1)) on coordinate
i, and the products of those intervals partition the n-torus into
rectangles.  As x sweeps the positive reals, the point traces the line
with direction (1/ln b_1, ..., 1/ln b_n); when those frequencies are
rationally independent, the line is dense (Kronecker), which is how
surjectivity of the digit map is established for independent bases.

This module renders that picture empirically: rectangle geometry and
measures at certified precision, plus orbit samplers with hit counts.
Density is the proven statement; the frequency-vs-measure comparison here
is a diagnostic only.  All torus arithmetic uses interval enclosures with
directed rounding (mpmath), and a sample point that cannot be certified on
one side of a rectangle boundary is counted as boundary-ambiguous, never
silently classified.  Sample points that are exact rationals are
classified by the exact integer core instead, so those counts carry no
rounding at all.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping

import mpmath
from mpmath.ctx_iv import MPIntervalContext

from .digits import as_positive_rational, check_bases, check_digit, iter_digit_tuples, leading_digit_tuple
from .errors import ResourceLimitError

__all__ = [
    "DEFAULT_PRECISION",
    "DEFAULT_SAMPLE_CAP",
    "DEFAULT_TUPLE_CAP",
    "SAMPLERS",
    "FrequencyVector",
    "Rectangle",
    "CoverageReport",
    "frequency_vector",
    "rectangle_of",
    "measure_map",
    "total_measure",
    "torus_digit_tuple",
    "classify_parameter",
    "orbit_sample",
]

DEFAULT_PRECISION = 128
DEFAULT_SAMPLE_CAP = 10**8
DEFAULT_TUPLE_CAP = 1 << 16

SAMPLERS = ("integer-scan", "geometric", "low-discrepancy")

_contexts: dict[int, MPIntervalContext] = {}


def _context(precision: int) -> MPIntervalContext:
    """Interval context at the given precision (shared per precision)."""
    if precision < 16:
        raise ValueError(f"precision must be >= 16 bits, got {precision}")
    ctx = _contexts.get(precision)
    if ctx is None:
        ctx = MPIntervalContext()
        ctx.prec = precision
        _contexts[precision] = ctx
    return ctx


def _endpoints(x, precision: int):
    """Exact mpf endpoints of an interval value."""
    with mpmath.mp.workprec(precision + 16):
        return mpmath.mpf(x.a), mpmath.mpf(x.b)


def _unique_floor(x, precision: int) -> int | None:
    """floor(x) when both interval endpoints agree on it, else None."""
    lo, hi = _endpoints(x, precision)
    with mpmath.mp.workprec(precision + 16):
        fl, fh = int(mpmath.floor(lo)), int(mpmath.floor(hi))
    return fl if fl == fh else None


def _rational_iv(x: Fraction, ctx: MPIntervalContext):
    return ctx.mpf(x.numerator) / ctx.mpf(x.denominator)


@dataclass(frozen=True)
class FrequencyVector:
    """Certified enclosures of the orbit frequencies 1/ln(b_i)."""

    bases: tuple[int, ...]
    precision: int
    omega: tuple

    def max_radius(self) -> float:
        """Largest enclosure half-width among the frequencies."""
        rad = 0.0
        for om in self.omega:
            lo, hi = _endpoints(om, self.precision)
            rad = max(rad, float(hi - lo) / 2)
        return rad


def frequency_vector(
    bases: Iterable[int], precision: int = DEFAULT_PRECISION
) -> FrequencyVector:
    """Compute (1/ln b_1, ..., 1/ln b_n) as certified enclosures."""
    bs = check_bases(bases)
    ctx = _context(precision)
    omega = tuple(ctx.one / ctx.log(ctx.mpf(b)) for b in bs)
    return FrequencyVector(bases=bs, precision=precision, omega=omega)


@dataclass(frozen=True)
class Rectangle:
    """The torus rectangle of a digit tuple, with certified endpoints.

    Coordinate i spans [log_{b_i}(j_i), log_{b_i}(j_i + 1)) inside [0, 1);
    its measure is log_{b_i}(1 + 1/j_i).
    """

    bases: tuple[int, ...]
    digits: tuple[int, ...]
    precision: int
    lows: tuple
    highs: tuple

    def measure(self):
        """Enclosure of the product of the coordinate interval lengths."""
        ctx = _context(self.precision)
        m = ctx.one
        for lo, hi in zip(self.lows, self.highs):
            m = m * (hi - lo)
        return m

    def contains(self, point) -> str:
        """Classify an enclosed torus point: 'inside'/'outside'/'boundary'.

        ``point`` is a tuple of interval enclosures of fractional parts in
        [0, 1).  'boundary' means the enclosures cannot certify membership
        either way at this precision.
        """
        if len(point) != len(self.bases):
            raise ValueError("point dimension does not match rectangle")
        certain_in = True
        for t, lo, hi in zip(point, self.lows, self.highs):
            t_lo, t_hi = _endpoints(t, self.precision)
            lo_lo, lo_hi = _endpoints(lo, self.precision)
            hi_lo, hi_hi = _endpoints(hi, self.precision)
            if t_hi < lo_lo or t_lo >= hi_hi:
                return "outside"
            if not (t_lo >= lo_hi and t_hi < hi_lo):
                certain_in = False
        return "inside" if certain_in else "boundary"


def rectangle_of(
    bases: Iterable[int], target: Iterable[int], precision: int = DEFAULT_PRECISION
) -> Rectangle:
    """Rectangle of the given digit tuple, with certified endpoints.

    >>> r = rectangle_of((4, 8), (1, 1))
    >>> 0.1666 < float(r.measure().a) < 0.1667
    True
    """
    bs = check_bases(bases)
    tgt = tuple(target)
    if len(tgt) != len(bs):
        raise ValueError(f"target length {len(tgt)} != number of bases {len(bs)}")
    ctx = _context(precision)
    lows, highs = [], []
    for j, b in zip(tgt, bs):
        check_digit(j, b)
        logb = ctx.log(ctx.mpf(b))
        lows.append(ctx.log(ctx.mpf(j)) / logb)
        highs.append(ctx.log(ctx.mpf(j + 1)) / logb)
    return Rectangle(
        bases=bs, digits=tgt, precision=precision, lows=tuple(lows), highs=tuple(highs)
    )


def _codomain(bases: tuple[int, ...], cap: int):
    size = 1
    for b in bases:
        size *= b - 1
    if size > cap:
        raise ResourceLimitError(
            f"digit-tuple codomain has {size} elements, exceeding cap {cap}"
        )
    return product(*(range(1, b) for b in bases))


def measure_map(
    bases: Iterable[int],
    precision: int = DEFAULT_PRECISION,
    cap: int = DEFAULT_TUPLE_CAP,
) -> dict[tuple[int, ...], object]:
    """Rectangle measure enclosure for every digit tuple of the bases."""
    bs = check_bases(bases)
    ctx = _context(precision)
    # coordinate measures log_b(j+1) - log_b(j), computed once per base
    coord: list[list] = []
    for b in bs:
        logb = ctx.log(ctx.mpf(b))
        logs = [ctx.log(ctx.mpf(j)) / logb for j in range(1, b + 1)]
        coord.append([logs[j] - logs[j - 1] for j in range(1, b)])
    out = {}
    for tup in _codomain(bs, cap):
        m = ctx.one
        for i, j in enumerate(tup):
            m = m * coord[i][j - 1]
        out[tup] = m
    return out


def total_measure(
    bases: Iterable[int],
    precision: int = DEFAULT_PRECISION,
    cap: int = DEFAULT_TUPLE_CAP,
):
    """Enclosure of the sum of all rectangle measures (telescopes to 1)."""
    ctx = _context(precision)
    total = ctx.zero
    for m in measure_map(bases, precision=precision, cap=cap).values():
        total = total + m
    return total


def torus_digit_tuple(
    x, bases: Iterable[int], precision: int = DEFAULT_PRECISION
) -> tuple[int, ...] | None:
    """Digit tuple of a rational x read off the torus, or None if ambiguous.

    Interval route: encloses log_{b_i}(x), splits off the integer part,
    and recovers the digit as floor(x / b_i**k) by exact interval
    division.  Returns None when an enclosure straddles a rectangle
    boundary; when it returns a tuple, it provably equals
    leading_digit_tuple(x, bases).
    """
    xr = as_positive_rational(x)
    bs = check_bases(bases)
    ctx = _context(precision)
    logx = ctx.log(ctx.mpf(xr.numerator)) - ctx.log(ctx.mpf(xr.denominator))
    digits = []
    for b in bs:
        y = logx / ctx.log(ctx.mpf(b))
        k = _unique_floor(y, precision)
        if k is None:
            return None
        if k >= 0:
            q = ctx.mpf(xr.numerator) / ctx.mpf(xr.denominator * b**k)
        else:
            q = ctx.mpf(xr.numerator * b**-k) / ctx.mpf(xr.denominator)
        j = _unique_floor(q, precision)
        if j is None:
            return None
        digits.append(j)
    return tuple(digits)


def classify_parameter(
    t: Fraction, fv: FrequencyVector
) -> tuple[int, ...] | None:
    """Digit tuple of the orbit point at parameter t (so x = e**t).

    Coordinate i of the orbit point is t / ln(b_i) mod 1; the digit is
    floor(b_i ** frac).  Returns None when any enclosure straddles an
    integer (the point cannot be certified off a rectangle boundary).
    """
    ctx = _context(fv.precision)
    t_iv = _rational_iv(Fraction(t), ctx)
    digits = []
    for om, b in zip(fv.omega, fv.bases):
        y = t_iv * om
        k = _unique_floor(y, fv.precision)
        if k is None:
            return None
        d = ctx.exp((y - k) * ctx.log(ctx.mpf(b)))
        j = _unique_floor(d, fv.precision)
        if j is None:
            return None
        digits.append(j)
    return tuple(digits)


def _van_der_corput(m: int) -> Fraction:
    """Base-2 van der Corput value of index m (bit-reversed fraction)."""
    num, den = 0, 1
    while m:
        num = num * 2 + (m & 1)
        den *= 2
        m >>= 1
    return Fraction(num, den)


@dataclass(frozen=True)
class CoverageReport:
    """Hit counts of orbit samples against the rectangle partition.

    ``hit_counts`` maps digit tuples to sample counts;
    ``boundary_ambiguous`` counts samples whose rectangle could not be
    certified (always 0 for exact samplers).  ``measures`` holds the
    rectangle measure enclosure for every tuple of the codomain.
    """

    bases: tuple[int, ...]
    sampler: str
    samples: int
    precision: int
    hit_counts: Mapping[tuple[int, ...], int]
    boundary_ambiguous: int
    measures: Mapping[tuple[int, ...], object]

    @property
    def rectangles_hit(self) -> int:
        return len(self.hit_counts)

    @property
    def rectangles_total(self) -> int:
        return len(self.measures)

    def frequency(self, tup: tuple[int, ...]) -> float:
        classified = self.samples - self.boundary_ambiguous
        if classified == 0:
            return 0.0
        return self.hit_counts.get(tup, 0) / classified

    def deviations(self) -> dict[tuple[int, ...], float]:
        """Per-tuple |empirical frequency - rectangle measure| (midpoint)."""
        out = {}
        for tup, m in self.measures.items():
            lo, hi = _endpoints(m, self.precision)
            mid = (float(lo) + float(hi)) / 2
            out[tup] = abs(self.frequency(tup) - mid)
        return out

    def max_deviation(self) -> float:
        return max(self.deviations().values())

    def _measure_str(self, tup: tuple[int, ...], digits: int = 30) -> str:
        with mpmath.mp.workprec(self.precision + 16):
            lo, hi = _endpoints(self.measures[tup], self.precision)
            return mpmath.nstr((lo + hi) / 2, digits)

    def to_json_dict(self) -> dict:
        cells = []
        for tup in sorted(self.measures):
            cells.append(
                {
                    "tuple": list(tup),
                    "count": self.hit_counts.get(tup, 0),
                    "frequency": self.frequency(tup),
                    "measure": self._measure_str(tup),
                }
            )
        return {
            "bases": list(self.bases),
            "sampler": self.sampler,
            "samples": self.samples,
            "precision": self.precision,
            "boundary_ambiguous": self.boundary_ambiguous,
            "rectangles_hit": self.rectangles_hit,
            "rectangles_total": self.rectangles_total,
            "cells": cells,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "CoverageReport":
        """Rebuild a report; measures are recomputed from bases+precision."""
        bases = tuple(d["bases"])
        precision = d["precision"]
        counts = {
            tuple(c["tuple"]): c["count"] for c in d["cells"] if c["count"] > 0
        }
        return cls(
            bases=bases,
            sampler=d["sampler"],
            samples=d["samples"],
            precision=precision,
            hit_counts=counts,
            boundary_ambiguous=d["boundary_ambiguous"],
            measures=measure_map(bases, precision=precision),
        )

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["tuple", "count", "measure"]]
        for tup in sorted(self.measures):
            rows.append(
                [
                    " ".join(str(j) for j in tup),
                    str(self.hit_counts.get(tup, 0)),
                    self._measure_str(tup),
                ]
            )
        return rows


def orbit_sample(
    bases: Iterable[int],
    n_samples: int,
    sampler: str = "integer-scan",
    *,
    x0: Fraction | int = 1,
    ratio: Fraction = Fraction(3, 2),
    window: int = 64,
    precision: int = DEFAULT_PRECISION,
    sample_cap: int = DEFAULT_SAMPLE_CAP,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> CoverageReport:
    """Sample the log orbit and count rectangle hits.

    Samplers:
      * ``integer-scan``  -- x = 1, 2, ..., N, classified exactly.
      * ``geometric``     -- x = x0 * ratio**m, m = 0..N-1, exact rationals,
                             classified exactly (an orbit walk with step
                             ln(ratio)).
      * ``low-discrepancy`` -- orbit parameters t = window * vdc2(m) (van
                             der Corput), classified by certified interval
                             arithmetic; uncertifiable points count as
                             boundary-ambiguous.

    >>> rep = orbit_sample((4, 8), 63)
    >>> rep.rectangles_hit, rep.rectangles_total
    (15, 21)
    """
    bs = check_bases(bases)
    if n_samples < 1:
        raise ValueError(f"need n_samples >= 1, got {n_samples}")
    if n_samples > sample_cap:
        raise ResourceLimitError(f"n_samples {n_samples} exceeds cap {sample_cap}")
    if sampler not in SAMPLERS:
        raise ValueError(f"unknown sampler {sampler!r}; expected one of {SAMPLERS}")
    measures = measure_map(bs, precision=precision, cap=tuple_cap)
    counts: Counter = Counter()
    ambiguous = 0
    if sampler == "integer-scan":
        counts.update(iter_digit_tuples(bs, n_samples))
    elif sampler == "geometric":
        x = as_positive_rational(x0)
        r = as_positive_rational(ratio)
        if r == 1:
            raise ValueError("geometric sampler needs ratio != 1")
        for _ in range(n_samples):
            counts[leading_digit_tuple(x, bs)] += 1
            x *= r
    else:
        fv = frequency_vector(bs, precision=precision)
        if window <= 0:
            raise ValueError(f"window must be positive, got {window}")
        for m in range(n_samples):
            tup = classify_parameter(window * _van_der_corput(m), fv)
            if tup is None:
                ambiguous += 1
            else:
                counts[tup] += 1
    return CoverageReport(
        bases=bs,
        sampler=sampler,
        samples=n_samples,
        precision=precision,
        hit_counts=dict(sorted(counts.items())),
        boundary_ambiguous=ambiguous,
        measures=measures,
    )
