"""Exact image of the joint leading-digit map for a dependent base pair.

For dependent bases b1 = a**e1, b2 = a**e2 (gcd(e1,e2) = 1) a digit pair
(j1, j2) is attainable by some x > 0 exactly when an integer c exists with

    j1 / (j2 + 1)  <  a**c  <  (j1 + 1) / j2.

The module decides that criterion by an exact scan over a provably
sufficient finite window of c values (no logarithms, only integer
cross-multiplications), and independently tabulates the whole image through
the combined base b = b1**e2 = b2**e1: the joint digit pair of x is a
function of the single base-b leading digit of x.  The two routes must
agree cell for cell; tests hold them to that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dependence import DependencePair, pair_dependence
from .digits import (
    DEFAULT_ENUMERATION_CAP,
    check_base,
    check_digit,
    refine_digit,
)
from .errors import IndependentBasesError, ResourceLimitError

__all__ = [
    "AttainabilityVerdict",
    "JointTable",
    "ImageReport",
    "ceil_log",
    "power_criterion_holds",
    "scan_window",
    "attainable_by_power_criterion",
    "joint_table",
    "image_via_table",
    "image_exact",
]


def ceil_log(a: int, x: int) -> int:
    """Smallest m >= 0 with a**m >= x, for a >= 2, x >= 1."""
    if a < 2:
        raise ValueError(f"need a >= 2, got {a}")
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    m, pw = 0, 1
    while pw < x:
        pw *= a
        m += 1
    return m


def power_criterion_holds(a: int, c: int, j1: int, j2: int) -> bool:
    """Exact test of j1/(j2+1) < a**c < (j1+1)/j2.

    a**c is P/Q with (P, Q) = (a**c, 1) for c >= 0 and (1, a**-c)
    otherwise; both strict inequalities become integer cross
    multiplications.
    """
    if c >= 0:
        P, Q = a**c, 1
    else:
        P, Q = 1, a**-c
    return j1 * Q < P * (j2 + 1) and P * j2 < (j1 + 1) * Q


def scan_window(dep: DependencePair) -> tuple[int, int]:
    """Inclusive c-window outside which the criterion provably fails.

    Any candidate power must satisfy 1/b2 <= j1/(j2+1) < a**c and
    a**c < (j1+1)/j2 <= b1, so c is confined to roughly
    [-log_a(b2), log_a(b1)]; one unit of slack on each side makes the
    endpoints themselves provably failing, which the tests re-verify.
    """
    lo = -(ceil_log(dep.a, dep.base2) + 1)
    hi = ceil_log(dep.a, dep.base1) + 1
    return lo, hi


@dataclass(frozen=True)
class AttainabilityVerdict:
    """Outcome of the power-interval criterion for one digit pair.

    If attainable, ``certificate`` is the smallest integer c in the scan
    window satisfying the criterion; otherwise certificate is None and no
    integer in ``scan_range`` (inclusive) satisfies it, which settles all
    integers because powers of a leave the admissible interval outside the
    window.
    """

    pair: tuple[int, int]
    attainable: bool
    certificate: int | None
    scan_range: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "attainable": self.attainable,
            "certificate_c": self.certificate,
            "scan_range": list(self.scan_range) if self.scan_range else None,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "AttainabilityVerdict":
        sr = d.get("scan_range")
        return cls(
            pair=tuple(d["pair"]),
            attainable=d["attainable"],
            certificate=d["certificate_c"],
            scan_range=tuple(sr) if sr else None,
        )


def attainable_by_power_criterion(
    dep: DependencePair, j1: int, j2: int
) -> AttainabilityVerdict:
    """Decide whether (j1, j2) is attainable for the dependent pair.

    >>> dep = pair_dependence(4, 8)
    >>> attainable_by_power_criterion(dep, 2, 3).attainable
    False
    >>> attainable_by_power_criterion(dep, 2, 1).certificate
    1
    """
    check_digit(j1, dep.base1)
    check_digit(j2, dep.base2)
    lo, hi = scan_window(dep)
    for c in range(lo, hi + 1):
        if power_criterion_holds(dep.a, c, j1, j2):
            return AttainabilityVerdict(
                pair=(j1, j2), attainable=True, certificate=c, scan_range=(lo, hi)
            )
    return AttainabilityVerdict(
        pair=(j1, j2), attainable=False, certificate=None, scan_range=(lo, hi)
    )


def _compress_runs(values: list[int]) -> list[tuple[int, int]]:
    """Sorted ints -> maximal half-open runs [start, stop)."""
    runs: list[tuple[int, int]] = []
    for v in values:
        if runs and runs[-1][1] == v:
            runs[-1] = (runs[-1][0], v + 1)
        else:
            runs.append((v, v + 1))
    return runs


@dataclass(frozen=True)
class JointTable:
    """Joint digit pair as a function of the combined-base leading digit.

    ``cells[D-1]`` is the digit pair (j1, j2) of every x whose leading
    digit in the combined base b = base1**e2 = base2**e1 is D; the map is
    total on D = 1..b-1.  Digit pairs never appearing among the cells are
    exactly the pairs outside the image of the joint digit map.
    """

    dep: DependencePair
    combined_base: int
    cells: tuple[tuple[int, int], ...]

    def cell(self, D: int) -> tuple[int, int]:
        if not 1 <= D <= self.combined_base - 1:
            raise ValueError(
                f"combined-base digit must be in 1..{self.combined_base - 1}, got {D}"
            )
        return self.cells[D - 1]

    def image(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.cells)

    def members(self, j1: int, j2: int) -> tuple[int, ...]:
        """All combined-base digits mapping to (j1, j2), ascending."""
        check_digit(j1, self.dep.base1)
        check_digit(j2, self.dep.base2)
        return tuple(
            D for D, cell in enumerate(self.cells, start=1) if cell == (j1, j2)
        )

    def member_runs(self, j1: int, j2: int) -> list[tuple[int, int]]:
        """members(j1, j2) compressed to half-open runs [start, stop)."""
        return _compress_runs(list(self.members(j1, j2)))

    def to_json_dict(self) -> dict:
        b1, b2 = self.dep.base1, self.dep.base2
        cells = []
        for j2 in range(1, b2):
            for j1 in range(1, b1):
                cells.append(
                    {
                        "j1": j1,
                        "j2": j2,
                        "runs": [list(r) for r in self.member_runs(j1, j2)],
                    }
                )
        return {
            "bases": [b1, b2],
            "dependence": self.dep.to_json_dict(),
            "combined_base": self.combined_base,
            "cells": cells,
            "excluded": sorted(
                [j1, j2]
                for j2 in range(1, b2)
                for j1 in range(1, b1)
                if (j1, j2) not in self.image()
            ),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "JointTable":
        dep = DependencePair.from_json_dict(d["dependence"])
        b = d["combined_base"]
        cells: list[tuple[int, int] | None] = [None] * (b - 1)
        for cell in d["cells"]:
            for start, stop in cell["runs"]:
                for D in range(start, stop):
                    cells[D - 1] = (cell["j1"], cell["j2"])
        if any(c is None for c in cells):
            raise ValueError("cell runs do not cover 1..combined_base-1")
        return cls(dep=dep, combined_base=b, cells=tuple(cells))  # type: ignore[arg-type]


def joint_table(
    dep: DependencePair, cap: int = DEFAULT_ENUMERATION_CAP
) -> JointTable:
    """Tabulate the joint digit pair over all combined-base digits.

    Each D in 1..b-1 refines to its base-b1 digit (through exponent e2)
    and its base-b2 digit (through exponent e1).

    >>> t = joint_table(pair_dependence(4, 8))
    >>> t.cell(9), t.cell(1), t.cell(48)
    ((2, 1), (1, 1), (3, 6))
    """
    b = dep.combined_base
    if b > cap:
        raise ResourceLimitError(
            f"combined base {b} exceeds enumeration cap {cap}"
        )
    cells = tuple(
        (refine_digit(D, dep.base1, dep.e2), refine_digit(D, dep.base2, dep.e1))
        for D in range(1, b)
    )
    return JointTable(dep=dep, combined_base=b, cells=cells)


def image_via_table(
    dep: DependencePair, cap: int = DEFAULT_ENUMERATION_CAP
) -> frozenset[tuple[int, int]]:
    """Attainable digit pairs read off the combined-base table.

    Independent of the power-interval route; used as its cross-check.
    """
    return joint_table(dep, cap=cap).image()


@dataclass(frozen=True)
class ImageReport:
    """Classification of every digit pair of (base1, base2).

    ``dependence`` is None when the bases are independent; in that case
    the joint digit map is surjective (density of the log orbit on the
    torus), every verdict is attainable, and certificates are the string
    "density" rather than an integer c.
    """

    bases: tuple[int, int]
    dependence: DependencePair | None
    verdicts: tuple[AttainabilityVerdict, ...]

    @property
    def attainable(self) -> frozenset[tuple[int, int]]:
        return frozenset(v.pair for v in self.verdicts if v.attainable)

    @property
    def excluded(self) -> frozenset[tuple[int, int]]:
        return frozenset(v.pair for v in self.verdicts if not v.attainable)

    @property
    def counts(self) -> tuple[int, int]:
        att = sum(1 for v in self.verdicts if v.attainable)
        return att, len(self.verdicts) - att

    def certificate_for(self, j1: int, j2: int) -> int | None:
        for v in self.verdicts:
            if v.pair == (j1, j2):
                return v.certificate
        raise ValueError(f"no verdict for pair {(j1, j2)}")

    def to_json_dict(self) -> dict:
        by_density = self.dependence is None
        att, exc = self.counts
        return {
            "bases": list(self.bases),
            "dependence": self.dependence.to_json_dict() if self.dependence else None,
            "attainable_count": att,
            "excluded_count": exc,
            "pairs": [
                {
                    "pair": list(v.pair),
                    "attainable": v.attainable,
                    "certificate_c": "density" if by_density else v.certificate,
                }
                for v in self.verdicts
            ],
            "excluded": sorted(list(p) for p in self.excluded),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ImageReport":
        dep = (
            DependencePair.from_json_dict(d["dependence"])
            if d.get("dependence")
            else None
        )
        verdicts = []
        for p in d["pairs"]:
            cert = p["certificate_c"]
            verdicts.append(
                AttainabilityVerdict(
                    pair=tuple(p["pair"]),
                    attainable=p["attainable"],
                    certificate=None if cert == "density" else cert,
                    scan_range=scan_window(dep) if dep else None,
                )
            )
        return cls(bases=tuple(d["bases"]), dependence=dep, verdicts=tuple(verdicts))


def image_exact(
    b1: int, b2: int, allow_independent: bool = False
) -> ImageReport:
    """Classify every (j1, j2) for the pair (b1, b2) via the power criterion.

    For independent bases the image is the whole codomain; that case is an
    IndependentBasesError unless allow_independent is set, in which case
    the report marks every pair attainable "by density" (no integer
    certificate exists or is needed).

    >>> sorted(image_exact(4, 8).excluded)
    [(2, 3), (2, 6), (2, 7), (3, 2), (3, 4), (3, 5)]
    """
    check_base(b1)
    check_base(b2)
    dep = pair_dependence(b1, b2)
    if dep is None:
        if not allow_independent:
            raise IndependentBasesError(
                f"bases {b1} and {b2} are multiplicatively independent; the joint "
                "digit map is surjective, so the exact image is trivially the whole "
                "codomain (pass allow_independent=True for the explicit report)"
            )
        verdicts = tuple(
            AttainabilityVerdict(
                pair=(j1, j2), attainable=True, certificate=None, scan_range=None
            )
            for j1 in range(1, b1)
            for j2 in range(1, b2)
        )
        return ImageReport(bases=(b1, b2), dependence=None, verdicts=verdicts)
    verdicts = tuple(
        attainable_by_power_criterion(dep, j1, j2)
        for j1 in range(1, b1)
        for j2 in range(1, b2)
    )
    return ImageReport(bases=(b1, b2), dependence=dep, verdicts=verdicts)
