"""Explicit witnesses for joint leading-digit targets.

A witness for (bases, target) is a number x whose leading digit in
bases[i] is target[i] for every i.  The search strategy pins one
coordinate exactly: the candidates x_k = target[i] * bases[i]**k all have
leading digit target[i] in bases[i] (digit string target[i] followed by k
zeros), so only the other coordinates need checking, and each check is an
exact integer comparison.  For two independent bases the fractional parts
of log_{b_j}(x_k) form an irrational rotation, so a hit is guaranteed and
the budget bounds time only; for three or more pairwise-independent bases
termination is conjectural (Schanuel), so running out of budget is an
explicit, labeled outcome rather than a claim of non-attainability.

Targets whose projection to some multiplicatively dependent pair of the
bases fails the power-interval criterion are rejected up front with that
certificate: those are provably not attainable at any budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .dependence import pairwise_report
from .digits import (
    as_positive_rational,
    check_bases,
    check_digit,
    floor_log,
    iter_digit_tuples,
    leading_digit_tuple,
)
from .errors import ResourceLimitError
from .image import AttainabilityVerdict, attainable_by_power_criterion

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_SCAN_CAP",
    "WitnessQuery",
    "WitnessResult",
    "find_witness",
    "verify_witness",
    "image_observed",
]

DEFAULT_BUDGET = 5000
DEFAULT_SCAN_CAP = 10**8

FOUND = "found"
NOT_ATTAINABLE = "not_attainable"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class WitnessQuery:
    """A witness request: distinct bases, a target digit per base, a budget.

    ``anchor`` selects which coordinate the scan pins first; with
    ``retry_other_anchors`` every other coordinate is tried after the
    first anchor exhausts its budget.
    """

    bases: tuple[int, ...]
    target: tuple[int, ...]
    budget: int = DEFAULT_BUDGET
    anchor: int = 0
    retry_other_anchors: bool = True

    def __post_init__(self):
        bs = check_bases(self.bases)
        object.__setattr__(self, "bases", bs)
        object.__setattr__(self, "target", tuple(self.target))
        if len(bs) < 2:
            raise ValueError("need at least two bases")
        if len(self.target) != len(bs):
            raise ValueError(
                f"target length {len(self.target)} != number of bases {len(bs)}"
            )
        for j, b in zip(self.target, bs):
            check_digit(j, b)
        if self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")
        if not 0 <= self.anchor < len(bs):
            raise ValueError(f"anchor index out of range: {self.anchor}")


@dataclass(frozen=True)
class WitnessResult:
    """Found(x, anchor, k) | NotAttainable(certificate) | Exhausted(k, note).

    Found results always re-verify: leading_digit_tuple(x, bases) equals
    the target by exact recomputation before the result is returned.
    """

    outcome: str
    bases: tuple[int, ...] = ()
    target: tuple[int, ...] = ()
    x: int | None = None
    anchor_index: int | None = None
    k: int | None = None
    certificate: AttainabilityVerdict | None = None
    obstruction: tuple[int, int] | None = None
    k_reached: int | None = None
    assumption_note: str | None = field(default=None, compare=False)

    @property
    def found(self) -> bool:
        return self.outcome == FOUND

    def to_json_dict(self) -> dict:
        d: dict = {
            "outcome": self.outcome,
            "bases": list(self.bases),
            "target": list(self.target),
        }
        if self.outcome == FOUND:
            d.update(
                x=str(self.x),
                anchor=self.anchor_index,
                k=self.k,
                verified=verify_witness(self.x, self.bases, self.target),
            )
        elif self.outcome == NOT_ATTAINABLE:
            d.update(
                certificate=self.certificate.to_json_dict(),
                obstruction=list(self.obstruction),
            )
        else:
            d.update(k_reached=self.k_reached, assumption_note=self.assumption_note)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "WitnessResult":
        common = dict(
            outcome=d["outcome"],
            bases=tuple(d["bases"]),
            target=tuple(d["target"]),
        )
        if d["outcome"] == FOUND:
            return cls(**common, x=int(d["x"]), anchor_index=d["anchor"], k=d["k"])
        if d["outcome"] == NOT_ATTAINABLE:
            return cls(
                **common,
                certificate=AttainabilityVerdict.from_json_dict(d["certificate"]),
                obstruction=tuple(d["obstruction"]),
            )
        return cls(
            **common,
            k_reached=d["k_reached"],
            assumption_note=d.get("assumption_note"),
        )


def _exhaustion_note(n_bases: int) -> str:
    if n_bases == 2:
        return (
            "budget exhausted; for two multiplicatively independent bases a "
            "witness is guaranteed to exist (the joint digit map is surjective), "
            "so retry with a larger budget"
        )
    return (
        "budget exhausted; for three or more pairwise-independent bases, "
        "surjectivity of the joint digit map is conditional on the conjectured "
        "rational independence of the reciprocal logarithms 1/ln(b_i), which "
        "follows from Schanuel's conjecture -- exhaustion is inconclusive, not "
        "a certificate of non-attainability"
    )


def _scan_anchor(
    bases: tuple[int, ...], target: tuple[int, ...], anchor: int, budget: int
) -> tuple[int, int] | None:
    """Scan x_k = target[anchor] * bases[anchor]**k for k = 0..budget.

    Returns (x, k) for the first k whose candidate matches every
    non-anchor digit.  Bracketing powers b**m <= x < b**(m+1) for the
    other bases advance incrementally as x grows, so the whole scan costs
    O(budget) big-integer multiplications and divisions.
    """
    ba = bases[anchor]
    x = target[anchor]
    others = [i for i in range(len(bases)) if i != anchor]
    # per-base bracket [b, b**m, b**(m+1)] around the current x
    state = {}
    for i in others:
        b = bases[i]
        m = floor_log(x, b)
        state[i] = [b, b**m, b**m * b]
    for k in range(budget + 1):
        hit = True
        for i in others:
            s = state[i]
            while x >= s[2]:
                s[1] = s[2]
                s[2] *= s[0]
            if x // s[1] != target[i]:
                hit = False
                break
        if hit:
            return x, k
        x *= ba
    return None


def find_witness(query: WitnessQuery) -> WitnessResult:
    """Find x with the requested joint digits, or certify why not / give up.

    Stage 1 rejects targets excluded by any dependent pair of the bases
    (provable, budget-independent).  Stage 2 runs the anchored scan from
    query.anchor; stage 3 retries the remaining anchors.  Among anchors
    tried, the first (anchor order, then k) hit wins, deterministically.

    >>> find_witness(WitnessQuery(bases=(3, 10), target=(2, 9))).x
    9565938
    >>> find_witness(WitnessQuery(bases=(4, 8), target=(2, 3))).outcome
    'not_attainable'
    """
    bases, target = query.bases, query.target
    report = pairwise_report(bases)
    for i, j, dep in report.dependent_pairs:
        verdict = attainable_by_power_criterion(dep, target[i], target[j])
        if not verdict.attainable:
            return WitnessResult(
                outcome=NOT_ATTAINABLE,
                bases=bases,
                target=target,
                certificate=verdict,
                obstruction=(i, j),
            )
    anchors = [query.anchor]
    if query.retry_other_anchors:
        anchors += [i for i in range(len(bases)) if i != query.anchor]
    for anchor in anchors:
        found = _scan_anchor(bases, target, anchor, query.budget)
        if found is not None:
            x, k = found
            assert leading_digit_tuple(x, bases) == target
            return WitnessResult(
                outcome=FOUND,
                bases=bases,
                target=target,
                x=x,
                anchor_index=anchor,
                k=k,
            )
    return WitnessResult(
        outcome=EXHAUSTED,
        bases=bases,
        target=target,
        k_reached=query.budget,
        assumption_note=_exhaustion_note(len(bases)),
    )


def verify_witness(x, bases: Iterable[int], target: Iterable[int]) -> bool:
    """True iff the joint digits of x equal the target; pure recomputation."""
    bs = check_bases(bases)
    tgt = tuple(target)
    if len(tgt) != len(bs):
        return False
    return leading_digit_tuple(as_positive_rational(x), bs) == tgt


def image_observed(
    bases: Iterable[int], x_max: int, cap: int = DEFAULT_SCAN_CAP
) -> frozenset[tuple[int, ...]]:
    """Digit tuples of the integers 1..x_max: a brute-force image lower bound.

    Monotone nondecreasing in x_max and always a subset of the exact
    image; for a dependent pair with combined base b, the scan to b-1
    already realizes every attainable pair.

    >>> len(image_observed((4, 8), 63))
    15
    """
    if x_max > cap:
        raise ResourceLimitError(f"x_max {x_max} exceeds scan cap {cap}")
    return frozenset(iter_digit_tuples(bases, x_max))
