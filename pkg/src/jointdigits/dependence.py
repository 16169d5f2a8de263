"""Multiplicative dependence of integer bases.

Two bases b1, b2 >= 3 have rationally dependent logarithms exactly when
both are powers of a common integer: b1 = a**e1 and b2 = a**e2 with a >= 2
and gcd(e1, e2) = 1.  That makes dependence a finite integer computation
(numerical log-ratio tests can suggest dependence but can never certify
independence): write each base in the canonical form root**exponent with
the root not itself a perfect power, and compare roots.

Everything here is exact; perfect powers are detected with integer k-th
roots, no factorization engine needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable

from .digits import check_base, check_bases

__all__ = [
    "PrimitiveRoot",
    "DependencePair",
    "DependenceReport",
    "integer_nth_root",
    "primitive_root",
    "pair_dependence",
    "pairwise_report",
]


def integer_nth_root(y: int, n: int) -> tuple[int, bool]:
    """Floor n-th root of y >= 1, plus whether y is an exact n-th power.

    Newton iteration seeded from the bit length; exact for arbitrary
    precision.

    >>> integer_nth_root(64, 3)
    (4, True)
    >>> integer_nth_root(65, 3)
    (4, False)
    """
    if n < 1:
        raise ValueError(f"root order must be >= 1, got {n}")
    if y < 1:
        raise ValueError(f"argument must be >= 1, got {y}")
    if n == 1 or y == 1:
        return y, True
    # initial x >= y**(1/n): 2**ceil(bits/n)
    x = 1 << -(-y.bit_length() // n)
    while True:
        t = ((n - 1) * x + y // x ** (n - 1)) // n
        if t >= x:
            break
        x = t
    # Newton lands on floor(y**(1/n)) from above; nudge defensively
    while x**n > y:
        x -= 1
    while (x + 1) ** n <= y:
        x += 1
    return x, x**n == y


@dataclass(frozen=True)
class PrimitiveRoot:
    """Canonical form b = root**exponent with root not a perfect power.

    Unique by unique factorization: the exponent is the gcd of the prime
    exponents of b.  (Unrelated to primitive roots modulo a prime.)
    """

    root: int
    exponent: int

    def __post_init__(self):
        if self.root < 2:
            raise ValueError(f"root must be >= 2, got {self.root}")
        if self.exponent < 1:
            raise ValueError(f"exponent must be >= 1, got {self.exponent}")

    @property
    def value(self) -> int:
        return self.root**self.exponent


def primitive_root(b: int) -> PrimitiveRoot:
    """Decompose b >= 3 as root**exponent with maximal exponent.

    Scans k-th roots from floor(log2 b) down; the first exact power found
    has a root that cannot itself be a perfect power (a root s**m would
    give a larger exponent k*m).

    >>> primitive_root(8)
    PrimitiveRoot(root=2, exponent=3)
    >>> primitive_root(12)
    PrimitiveRoot(root=12, exponent=1)
    """
    check_base(b)
    for k in range(b.bit_length() - 1, 1, -1):
        root, exact = integer_nth_root(b, k)
        if exact:
            return PrimitiveRoot(root=root, exponent=k)
    return PrimitiveRoot(root=b, exponent=1)


@dataclass(frozen=True)
class DependencePair:
    """Certificate that base1 = a**e1 and base2 = a**e2 with gcd(e1,e2)=1.

    The combined base a**(e1*e2) = base1**e2 = base2**e1 is the least
    common power through which joint digit tables are computed.
    """

    a: int
    e1: int
    e2: int

    def __post_init__(self):
        if self.a < 2:
            raise ValueError(f"common root must be >= 2, got {self.a}")
        if self.e1 < 1 or self.e2 < 1:
            raise ValueError(f"exponents must be >= 1, got {self.e1}, {self.e2}")
        if gcd(self.e1, self.e2) != 1:
            raise ValueError(f"exponents must be coprime, got {self.e1}, {self.e2}")

    @property
    def base1(self) -> int:
        return self.a**self.e1

    @property
    def base2(self) -> int:
        return self.a**self.e2

    @property
    def combined_base(self) -> int:
        return self.a ** (self.e1 * self.e2)

    def to_json_dict(self) -> dict:
        return {"a": self.a, "e1": self.e1, "e2": self.e2,
                "combined_base": self.combined_base}

    @classmethod
    def from_json_dict(cls, d: dict) -> "DependencePair":
        return cls(a=d["a"], e1=d["e1"], e2=d["e2"])


def pair_dependence(b1: int, b2: int) -> DependencePair | None:
    """Dependence certificate for (b1, b2), or None if independent.

    None is a proof of independence, not a failed search: the canonical
    root of a base is unique, so distinct roots rule out any common power.

    >>> pair_dependence(4, 8)
    DependencePair(a=2, e1=2, e2=3)
    >>> pair_dependence(3, 10) is None
    True
    """
    check_base(b1)
    check_base(b2)
    if b1 == b2:
        raise ValueError(f"bases must be distinct, got {b1} twice")
    r1 = primitive_root(b1)
    r2 = primitive_root(b2)
    if r1.root != r2.root:
        return None
    g = gcd(r1.exponent, r2.exponent)
    return DependencePair(a=r1.root**g, e1=r1.exponent // g, e2=r2.exponent // g)


@dataclass(frozen=True)
class DependenceReport:
    """All dependent pairs among a tuple of bases.

    ``dependent_pairs`` holds (i, j, certificate) for every i < j whose
    bases are multiplicatively dependent.  An empty list certifies that no
    two of the logarithms ln(b_i) are rationally dependent -- the
    hypothesis under which the joint digit map is expected (for n = 2:
    known) to be surjective.
    """

    bases: tuple[int, ...]
    dependent_pairs: tuple[tuple[int, int, DependencePair], ...]

    @property
    def all_pairwise_independent(self) -> bool:
        return not self.dependent_pairs

    def to_json_dict(self) -> dict:
        return {
            "bases": list(self.bases),
            "dependent_pairs": [
                {"i": i, "j": j, "certificate": dep.to_json_dict()}
                for i, j, dep in self.dependent_pairs
            ],
            "all_pairwise_independent": self.all_pairwise_independent,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "DependenceReport":
        return cls(
            bases=tuple(d["bases"]),
            dependent_pairs=tuple(
                (p["i"], p["j"], DependencePair.from_json_dict(p["certificate"]))
                for p in d["dependent_pairs"]
            ),
        )


def pairwise_report(bases: Iterable[int]) -> DependenceReport:
    """Run pair_dependence over all C(n,2) pairs of distinct bases.

    >>> pairwise_report((4, 8, 10)).dependent_pairs
    ((0, 1, DependencePair(a=2, e1=2, e2=3)),)
    """
    bs = check_bases(bases)
    if len(bs) < 2:
        raise ValueError("need at least two bases")
    found = []
    for i, j in combinations(range(len(bs)), 2):
        dep = pair_dependence(bs[i], bs[j])
        if dep is not None:
            found.append((i, j, dep))
    return DependenceReport(bases=bs, dependent_pairs=tuple(found))
