"""Root lattice of the rank-2 Kac-Moody algebra H(m), Cartan matrix ((2,-m),(-m,2)).

[a, b] is a root iff Q([a, b]) = a^2 + b^2 - mab <= 1; real roots have
Q = 1 and imaginary roots Q <= 0.  A root is reduced when gcd(a, b) = 1 and
ab != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import NamedTuple

from .errors import UsageError


class LatticeVector(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


def as_vector(v) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return v
    a, b = v
    return LatticeVector(int(a), int(b))


def is_primitive_positive(v) -> bool:
    a, b = v
    return a > 0 and b > 0 and gcd(a, b) == 1


@dataclass(frozen=True)
class CartanData:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise UsageError(f"m must be >= 2, got {self.m}")

    @property
    def cartan_matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2, -self.m), (-self.m, 2))


class RootKind(str, Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_ROOT = "not_root"


@dataclass(frozen=True)
class RootClass:
    kind: RootKind
    reduced: bool

    @property
    def is_root(self) -> bool:
        return self.kind is not RootKind.NOT_ROOT

    def __str__(self) -> str:
        if not self.is_root:
            return "not a root"
        return f"{self.kind.value}{', reduced' if self.reduced else ''}"


def q_form(v, m: int) -> int:
    a, b = v
    return a * a + b * b - m * a * b


def classify(v, m: int) -> RootClass:
    a, b = v
    q = q_form(v, m)
    if q > 1:
        return RootClass(RootKind.NOT_ROOT, False)
    if (a, b) == (0, 0):
        # The zero vector satisfies the inequality but is not a root.
        return RootClass(RootKind.NOT_ROOT, False)
    kind = RootKind.REAL if q == 1 else RootKind.IMAGINARY
    return RootClass(kind, gcd(a, b) == 1 and a * b != 0)


def sigma1(v, m: int) -> LatticeVector:
    a, b = v
    return LatticeVector(-a + m * b, b)


def sigma2(v, m: int) -> LatticeVector:
    a, b = v
    return LatticeVector(a, -b + m * a)


def _recurrence(m: int, first: int, second: int, count: int) -> list[int]:
    if count < 2:
        raise UsageError("sequence length must be >= 2")
    out = [first, second]
    while len(out) < count:
        out.append(m * out[-1] - out[-2])
    return out


def f_sequence(m: int, count: int) -> list[int]:
    """F_0 = 0, F_1 = 1, F_n = m F_{n-1} - F_{n-2}."""
    return _recurrence(m, 0, 1, count)


def e_sequence(m: int, count: int) -> list[int]:
    """E_0 = E_1 = 1, E_n = m E_{n-1} - E_{n-2}."""
    return _recurrence(m, 1, 1, count)


def enumerate_reduced_positive(m: int, bound: int) -> list[LatticeVector]:
    """Reduced positive roots with both coordinates in 1..bound, lexicographic."""
    if bound < 1:
        raise UsageError("bound must be >= 1")
    return [
        LatticeVector(a, b)
        for a in range(1, bound + 1)
        for b in range(1, bound + 1)
        if gcd(a, b) == 1 and q_form((a, b), m) <= 1
    ]


def primitive_positive(bound: int) -> list[LatticeVector]:
    """All of P+ inside the box 1..bound, lexicographic."""
    return [
        LatticeVector(a, b)
        for a in range(1, bound + 1)
        for b in range(1, bound + 1)
        if gcd(a, b) == 1
    ]
