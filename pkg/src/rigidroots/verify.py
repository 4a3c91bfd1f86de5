"""Batch verification: the surjectivity sweep, the injectivity census and the
word-identity suites, all decided by exact matrix equality in W(m)."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd

from .coxeter import GroupMatrix, coxeter_w, eval_word, reflection_root
from .errors import InvariantViolation, UsageError
from .lattice_words import crossing_word, dyck_word, sigma_conjugate_check
from .rank2_roots import (
    LatticeVector,
    e_sequence,
    enumerate_reduced_positive,
    f_sequence,
    primitive_positive,
    q_form,
    sigma1,
    sigma2,
)
from .reduction import reduce


@dataclass
class VerificationReport:
    m: int
    bound: int
    pairs_checked: int = 0
    surjectivity_failures: list[LatticeVector] = field(default_factory=list)
    reduced_roots: int = 0
    image_size: int = 0
    collisions: list[tuple[LatticeVector, LatticeVector]] = field(default_factory=list)
    elapsed: float = 0.0
    steps_checked: int = 0
    descent_violations: list[LatticeVector] = field(default_factory=list)
    both_valid_events: int = 0
    policy_disagreements: list[LatticeVector] = field(default_factory=list)
    family_match: bool | None = None

    @property
    def passed(self) -> bool:
        ok = not self.surjectivity_failures and not self.descent_violations
        if self.m == 2:
            ok = ok and not self.collisions and self.family_match is not False
        return ok

    def to_json(self) -> str:
        d = asdict(self)
        d["surjectivity_failures"] = [list(v) for v in self.surjectivity_failures]
        d["collisions"] = [[list(u), list(v)] for u, v in self.collisions]
        d["descent_violations"] = [list(v) for v in self.descent_violations]
        d["policy_disagreements"] = [list(v) for v in self.policy_disagreements]
        return json.dumps(d, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        vec = lambda xs: [LatticeVector(*x) for x in xs]  # noqa: E731
        d["surjectivity_failures"] = vec(d["surjectivity_failures"])
        d["collisions"] = [(LatticeVector(*u), LatticeVector(*v)) for u, v in d["collisions"]]
        d["descent_violations"] = vec(d["descent_violations"])
        d["policy_disagreements"] = vec(d["policy_disagreements"])
        return cls(**d)


@dataclass(frozen=True)
class _Row:
    """Per-vector sweep outcome, small enough to ship between processes."""

    v: LatticeVector
    result: LatticeVector
    ok: bool
    steps: int
    descent_ok: bool
    both_valid: int
    policies_agree: bool


def _sweep_chunk(m: int, vectors: list[LatticeVector], probe_policies: bool) -> list[_Row]:
    p = coxeter_w(m)
    images: dict[LatticeVector, GroupMatrix] = {}

    def image(v):
        g = images.get(v)
        if g is None:
            g = images[v] = eval_word(p, crossing_word(v))
        return g

    out = []
    for v in vectors:
        trace = reduce(v, m)
        descent_ok = all(
            st.q_after < st.q_before and gcd(*st.output) == 1 and min(st.output) >= 1
            for st in trace.steps
        )
        both = sum(st.both_valid for st in trace.steps)
        agree = True
        if probe_policies and both:
            alt = {reduce(v, m, policy=pol).result for pol in ("first", "second")}
            agree = alt == {trace.result}
        ok = trace.result == v or image(trace.result) == image(v)
        out.append(_Row(v, trace.result, ok, len(trace.steps), descent_ok, both, agree))
    return out


def _chunks(items: list, size: int) -> list[list]:
    return [items[k:k + size] for k in range(0, len(items), size)]


def surjectivity_sweep(
    m: int, bound: int, workers: int = 1, probe_policies: bool = True
) -> list[_Row]:
    """reduce() every vector of P+ in the box and compare crossing-word images."""
    vectors = primitive_positive(bound)
    if workers <= 1 or len(vectors) < 64:
        rows = _sweep_chunk(m, vectors, probe_policies)
    else:
        parts = _chunks(vectors, max(16, len(vectors) // (4 * workers)))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_chunk, m, part, probe_policies) for part in parts]
            rows = [r for fut in futures for r in fut.result()]
    rows.sort(key=lambda r: r.v)
    return rows


def image_census(m: int, bound: int) -> tuple[int, int, list[tuple[LatticeVector, LatticeVector]]]:
    """(reduced root count, distinct images, colliding pairs) inside the box."""
    p = coxeter_w(m)
    roots = enumerate_reduced_positive(m, bound)
    seen: dict[GroupMatrix, list[LatticeVector]] = {}
    for v in roots:
        seen.setdefault(eval_word(p, crossing_word(v)), []).append(v)
    collisions = [
        (vs[i], vs[j])
        for vs in seen.values()
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
    ]
    collisions.sort()
    return len(roots), len(seen), collisions


def m2_family(bound: int) -> set[GroupMatrix]:
    """{s2} together with s1(s3 s1)^(n-1) and s3(s1 s3)^(n-1) for n <= bound."""
    p = coxeter_w(2)
    out = {eval_word(p, (2,))}
    for n in range(1, bound + 1):
        out.add(eval_word(p, (1,) + (3, 1) * (n - 1)))
        out.add(eval_word(p, (3,) + (1, 3) * (n - 1)))
    return out


def m2_family_check(bound: int) -> bool:
    """The image of s() over the box equals the closed-form family, and the
    roots follow n a1 + (n-1) a3 on [n, n+1] and (n-1) a1 + n a3 on [n+1, n]."""
    p = coxeter_w(2)
    image = {eval_word(p, crossing_word(v)) for v in primitive_positive(bound)}
    if image != m2_family(bound - 1):
        return False
    if _root_ints(p, (1, 1)) != (0, 1, 0):
        return False
    for n in range(1, bound):
        if _root_ints(p, (n, n + 1)) != (n, 0, n - 1):
            return False
        if _root_ints(p, (n + 1, n)) != (n - 1, 0, n):
            return False
    return True


def _root_ints(p, v) -> tuple:
    r = reflection_root(p, crossing_word(v))
    if any(len(c.coeffs) > 1 for c in r):
        raise InvariantViolation(f"W(2) root of {v} left the rationals")
    return tuple(c.coeffs[0] if c.coeffs else 0 for c in r)


def run_check(m: int, bound: int, workers: int = 1, census_bound: int | None = None) -> VerificationReport:
    """Sweep, census and (for m = 2) the closed-form family over one box."""
    if m < 2:
        raise UsageError("m must be >= 2")
    if bound < 1:
        raise UsageError("bound must be >= 1")
    t0 = time.perf_counter()
    rows = surjectivity_sweep(m, bound, workers)
    rep = VerificationReport(m=m, bound=bound)
    rep.pairs_checked = len(rows)
    rep.surjectivity_failures = [r.v for r in rows if not r.ok]
    rep.steps_checked = sum(r.steps for r in rows)
    rep.descent_violations = [r.v for r in rows if not r.descent_ok]
    rep.both_valid_events = sum(r.both_valid for r in rows)
    rep.policy_disagreements = [r.v for r in rows if not r.policies_agree]
    cb = bound if census_bound is None else census_bound
    rep.reduced_roots, rep.image_size, rep.collisions = image_census(m, cb)
    if m == 2:
        rep.family_match = m2_family_check(bound)
    rep.elapsed = round(time.perf_counter() - t0, 3)
    return rep


# Word identities on Dyck paths, F/E vectors and shifts.


def dyck_failures(m: int, bound: int) -> dict[str, list[LatticeVector]]:
    """The three Dyck-path identities for bound >= a >= b >= 1, gcd 1."""
    p = coxeter_w(m)
    fails = {"dyck_crossing": [], "dyck_conjugate": [], "sigma_conjugate": []}
    for a in range(1, bound + 1):
        for b in range(1, a + 1):
            if gcd(a, b) != 1:
                continue
            v = LatticeVector(a, b)
            dw = dyck_word(a, b)
            if eval_word(p, crossing_word(v)) != eval_word(p, (3, 2) + dw + (1,)):
                fails["dyck_crossing"].append(v)
            c, d = sigma1(sigma2(v, m), m)
            if eval_word(p, (1, 3, 2) + dw + (2, 3, 1)) != eval_word(p, dyck_word(c, d)):
                fails["dyck_conjugate"].append(v)
            if not sigma_conjugate_check(v, m)[1]:
                fails["sigma_conjugate"].append(v)
    return fails


def closed_form_word(kind: str, n: int) -> tuple[int, ...]:
    """Closed form of s^{F_n x F_{n-1}} (kind "F") or s^{E_n x E_{n-1}} ("E"), n >= 2."""
    if n < 2:
        raise UsageError("closed forms start at n = 2")
    if n == 2:
        return (2, 1) if kind == "F" else (3, 1)
    odd = n % 2 == 1
    k = (n - 3) // 2 if odd else (n - 4) // 2
    core = {
        ("F", True): (2, 3),
        ("F", False): (3, 1, 2, 3),
        ("E", True): (2, 1, 2, 3),
        ("E", False): (3, 2, 3, 1, 2, 3),
    }[(kind, odd)]
    return (1,) + (3, 2, 1) * k + core + (1, 2, 3) * k + (1,)


def fn_failures(m: int, depth: int) -> dict[str, list[int]]:
    """Closed forms (n = 2..depth) and the order-m identities (n = 2..depth)."""
    p = coxeter_w(m)
    fs = f_sequence(m, depth + 2)
    es = e_sequence(m, depth + 2)
    fails = {"closed_F": [], "closed_E": [], "order_m": []}
    for n in range(2, depth + 1):
        if eval_word(p, dyck_word(fs[n], fs[n - 1])) != eval_word(p, closed_form_word("F", n)):
            fails["closed_F"].append(n)
        if eval_word(p, dyck_word(es[n], es[n - 1])) != eval_word(p, closed_form_word("E", n)):
            fails["closed_E"].append(n)
        w = crossing_word((fs[n], fs[n - 1]))
        left = eval_word(p, (3, 2, 1) + w) ** m
        right = eval_word(p, (1, 2, 3) + w) ** m
        if not (left.is_identity() and right.is_identity()):
            fails["order_m"].append(n)
    return fails


def shift_failures(m: int, max_j: int, bound: int = 10) -> list[tuple[LatticeVector, int]]:
    """s([a + j m b, b]) = s([a, b]) for [a, b] in the box and 1 <= j <= max_j."""
    p = coxeter_w(m)
    fails = []
    for v in primitive_positive(bound):
        base = eval_word(p, crossing_word(v))
        for j in range(1, max_j + 1):
            if eval_word(p, crossing_word((v.a + j * m * v.b, v.b))) != base:
                fails.append((v, j))
    return fails


@dataclass
class LemmaReport:
    m: int
    depth: int
    bound: int
    failures: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, default=list)


def run_lemmas(m: int, depth: int, bound: int = 25, shift_bound: int = 10) -> LemmaReport:
    if m < 2:
        raise UsageError("m must be >= 2")
    if depth < 2:
        raise UsageError("depth must be >= 2")
    rep = LemmaReport(m, depth, bound)
    rep.failures.update(dyck_failures(m, bound))
    rep.failures.update(fn_failures(m, depth))
    rep.failures["shift"] = shift_failures(m, depth, shift_bound)
    return rep


def descent_budget_ok(v, m: int) -> bool:
    """The number of steps never exceeds Q(start) - 1."""
    trace = reduce(v, m)
    return len(trace.steps) <= max(0, q_form(v, m) - 1)
