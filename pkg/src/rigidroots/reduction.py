"""Reduction of primitive lattice vectors to reduced positive roots of H(m).

For [a, b] in P+ that is not a root and has a > b, let n be the index with
F_{n-1}/F_n < b/a < F_n/F_{n+1}.  One of

    [a, b] - m * kappa  * [F_n, F_{n-1}],      kappa  = -F_{n-1} a + F_n b > 0
    [a, b] + m * kappa' * [F_{n+1}, F_n],      kappa' = -F_n a + F_{n+1} b < 0

lies in P+; it has the same crossing-word reflection in W(m) and a strictly
smaller value of Q.  Iterating ends at a root.  Vectors with a < b are
handled through the diagonal mirror, which swaps labels 1 and 3 on the
torus and is undone after each step, so every step preserves s([a, b])
itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import InvariantViolation, UsageError
from .rank2_roots import (
    LatticeVector,
    RootClass,
    RootKind,
    as_vector,
    classify,
    is_primitive_positive,
    q_form,
)


class Branch(str, Enum):
    SUBTRACT_FN = "subtract_Fn"
    SUBTRACT_FN1 = "subtract_Fn1"


@dataclass(frozen=True)
class ReductionStep:
    """One descent step.

    ``kappa`` is the signed coefficient of the branch actually taken:
    -F_{n-1}a + F_n b for ``subtract_Fn`` and -F_n a + F_{n+1} b for
    ``subtract_Fn1``, so the step subtracts m*|kappa| times [F_k, F_{k-1}]
    with k = ``f_index``.  Coordinates in the formulas are those of the
    a > b orientation; ``input``/``output`` are in the caller's orientation.
    """

    input: LatticeVector
    n: int
    kappa: int
    branch: Branch
    output: LatticeVector
    q_before: int
    q_after: int
    swapped: bool
    both_valid: bool = False

    @property
    def f_index(self) -> int:
        return self.n if self.branch is Branch.SUBTRACT_FN else self.n + 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kappa": self.kappa,
            "branch": self.branch.value,
            "swapped": self.swapped,
            "input": list(self.input),
            "output": list(self.output),
            "q_before": self.q_before,
            "q_after": self.q_after,
            "both_valid": self.both_valid,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReductionStep":
        return cls(
            input=LatticeVector(*d["input"]),
            n=d["n"],
            kappa=d["kappa"],
            branch=Branch(d["branch"]),
            output=LatticeVector(*d["output"]),
            q_before=d["q_before"],
            q_after=d["q_after"],
            swapped=d["swapped"],
            both_valid=d.get("both_valid", False),
        )


@dataclass(frozen=True)
class ReductionTrace:
    m: int
    start: LatticeVector
    steps: tuple[ReductionStep, ...]
    result: LatticeVector
    result_class: RootClass

    @property
    def swap_count(self) -> int:
        return sum(st.swapped for st in self.steps)

    def chain(self) -> list[LatticeVector]:
        return [self.start] + [st.output for st in self.steps]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "start": list(self.start),
            "steps": [st.to_dict() for st in self.steps],
            "result": list(self.result),
            "result_class": {
                "kind": self.result_class.kind.value,
                "reduced": self.result_class.reduced,
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReductionTrace":
        rc = d["result_class"]
        return cls(
            m=d["m"],
            start=LatticeVector(*d["start"]),
            steps=tuple(ReductionStep.from_dict(s) for s in d["steps"]),
            result=LatticeVector(*d["result"]),
            result_class=RootClass(RootKind(rc["kind"]), rc["reduced"]),
        )


class _FCache:
    """Growing prefix of F_n for one m."""

    def __init__(self, m: int):
        self.m = m
        self.values = [0, 1]

    def __getitem__(self, n: int) -> int:
        while len(self.values) <= n:
            self.values.append(self.m * self.values[-1] - self.values[-2])
        return self.values[n]


def _check_p_plus(v) -> LatticeVector:
    v = as_vector(v)
    if not is_primitive_positive(v):
        raise UsageError(f"{v} is not in P+ (positive coordinates, gcd 1)")
    return v


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise UsageError(f"m must be an integer >= 2, got {m!r}")


def locate_interval(v, m: int, _f: _FCache | None = None) -> int:
    """The n >= 1 with F_{n-1}/F_n < b/a < F_n/F_{n+1}, for a > b and v not a root."""
    _check_m(m)
    a, b = _check_p_plus(v)
    if a <= b:
        raise UsageError(f"interval location needs a > b, got [{a},{b}]")
    if classify((a, b), m).is_root:
        raise UsageError(f"[{a},{b}] is already a root of H({m})")
    f = _f or _FCache(m)
    n = 1
    while True:
        lo_num, lo_den, hi_num, hi_den = f[n - 1], f[n], f[n], f[n + 1]
        if b * lo_den == lo_num * a or b * hi_den == hi_num * a:
            # b/a = F_{k-1}/F_k forces Q([a, b]) = 1.
            raise InvariantViolation(f"[{a},{b}] sits on an F-ratio but is not a root")
        if lo_num * a < b * lo_den and b * hi_den < hi_num * a:
            return n
        if b * lo_den < lo_num * a:
            # Ratios increase with n, so b/a fell below the current window.
            raise InvariantViolation(f"no F-interval contains {b}/{a} for m={m}")
        n += 1
        # F_n grows at least linearly, so n <= a suffices whenever b/a is admissible.
        if n > a + 2:
            raise InvariantViolation(f"F-interval scan for [{a},{b}] did not terminate")


TIE_POLICIES = ("min_q", "first", "second")


def _step_oriented(a: int, b: int, m: int, f: _FCache, policy: str = "min_q"):
    """Candidates for a > b; returns (n, kappa, branch, [a', b'], both_valid).

    ``policy`` decides when both candidates are in P+: the smaller Q with
    ties to the first branch, or always the first / second branch.
    """
    n = locate_interval((a, b), m, f)
    u, v, w = f[n - 1], f[n], f[n + 1]
    k1 = -u * a + v * b
    k2 = -v * a + w * b
    c1 = (a - m * k1 * v, b - m * k1 * u)
    c2 = (a + m * k2 * w, b + m * k2 * v)
    ok1 = c1[0] > 0 and c1[1] > 0
    ok2 = c2[0] > 0 and c2[1] > 0
    if ok1 and ok2:
        if policy == "second" or (policy == "min_q" and q_form(c2, m) < q_form(c1, m)):
            return n, k2, Branch.SUBTRACT_FN1, c2, True
        return n, k1, Branch.SUBTRACT_FN, c1, True
    if ok1:
        return n, k1, Branch.SUBTRACT_FN, c1, False
    if ok2:
        return n, k2, Branch.SUBTRACT_FN1, c2, False
    raise InvariantViolation(f"neither reduction candidate for [{a},{b}] lies in P+ (m={m})")


def reduce_step(v, m: int, _f: _FCache | None = None, policy: str = "min_q") -> ReductionStep:
    _check_m(m)
    if policy not in TIE_POLICIES:
        raise UsageError(f"unknown tie policy {policy!r}")
    v = _check_p_plus(v)
    q_before = q_form(v, m)
    if q_before <= 1:
        raise UsageError(f"{v} is already a root of H({m}); nothing to reduce")
    f = _f or _FCache(m)
    swapped = v.a < v.b
    a, b = (v.b, v.a) if swapped else v
    n, kappa, branch, (a2, b2), both = _step_oriented(a, b, m, f, policy)
    out = LatticeVector(b2, a2) if swapped else LatticeVector(a2, b2)
    q_after = q_form(out, m)
    if not q_after < q_before:
        raise InvariantViolation(f"Q did not decrease: {v} -> {out} (m={m})")
    if gcd(out.a, out.b) != 1:
        raise InvariantViolation(f"reduction lost primitivity: {v} -> {out}")
    return ReductionStep(v, n, kappa, branch, out, q_before, q_after, swapped, both)


def reduce(v, m: int, policy: str = "min_q") -> ReductionTrace:
    """Iterate ``reduce_step`` until the vector is a root of H(m)."""
    _check_m(m)
    v = _check_p_plus(v)
    f = _FCache(m)
    steps = []
    cur = v
    while q_form(cur, m) > 1:
        # a == b forces [1, 1], which is always a root for m >= 2.
        st = reduce_step(cur, m, f, policy)
        steps.append(st)
        cur = st.output
    cls = classify(cur, m)
    if not (cls.is_root and cls.reduced):
        raise InvariantViolation(f"reduction of {v} ended at {cur}, not a reduced root")
    return ReductionTrace(m, v, tuple(steps), cur, cls)


def shift_normalize(v, m: int) -> LatticeVector:
    """[a + j m b, b] for the least j >= 0 making the first coordinate positive."""
    _check_m(m)
    a, b = v
    if b <= 0:
        raise UsageError("shift normalization needs b >= 1")
    if gcd(abs(a), b) != 1:
        raise UsageError(f"({a},{b}) is not primitive")
    if a >= 1:
        return LatticeVector(a, b)
    step = m * b
    j = (1 - a + step - 1) // step
    return LatticeVector(a + j * step, b)
