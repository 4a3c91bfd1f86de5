"""Torus geometry for rank 3: crossing words, maximal Dyck paths, spirals.

The torus is the plane modulo Z^2, triangulated by the horizontal lines
y = j (label 1), the anti-diagonals x + y = k (label 2) and the vertical
lines x = i (label 3).  A segment from the origin to a primitive lattice
point reads off the labels of the lines it crosses, in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .coxeter import (
    SWAP_13,
    coxeter_w,
    eval_word,
    format_word,
    parse_word,
    relabel,
)
from .errors import InvariantViolation, UsageError
from .rank2_roots import LatticeVector, as_vector, sigma1, sigma2

HORIZONTAL, DIAGONAL, VERTICAL = 1, 2, 3


def _require_positive_primitive(v: LatticeVector) -> None:
    a, b = v
    if a <= 0 or b <= 0 or gcd(a, b) != 1:
        raise UsageError(f"[{a},{b}] is not a primitive vector with positive coordinates")


def segment_crossings(c: int, d: int) -> list[tuple[int, int, int]]:
    """Crossings of the open segment t -> (tc, td), 0 < t < 1.

    Returns (numerator, denominator, label) triples, ordered by the crossing
    parameter t = numerator/denominator.  Requires gcd(|c|, |d|) = 1 and
    c, d, c + d all nonzero, which makes every parameter distinct.
    """
    if c == 0 or d == 0 or c + d == 0:
        raise UsageError(f"segment to ({c},{d}) runs along a grid line")
    if gcd(c, d) != 1:
        raise UsageError(f"({c},{d}) is not primitive")
    s = c + d
    events = []
    # x = i crossed at t = i/c, y = j at t = j/d, x + y = k at t = k/s.
    for i in range(1, abs(c)):
        events.append((i, abs(c), VERTICAL))
    for j in range(1, abs(d)):
        events.append((j, abs(d), HORIZONTAL))
    for k in range(1, abs(s)):
        events.append((k, abs(s), DIAGONAL))
    # Common denominator keeps the ordering exact.
    big = abs(c) * abs(d) * abs(s)
    keyed = sorted((num * (big // den), num, den, lab) for num, den, lab in events)
    for (k0, *_), (k1, *_) in zip(keyed, keyed[1:]):
        if k0 == k1:
            raise InvariantViolation(f"coincident crossings on segment to ({c},{d})")
    return [(num, den, lab) for _, num, den, lab in keyed]


def segment_word(c: int, d: int) -> tuple[int, ...]:
    """Crossing word of the segment from the origin to (c, d), any direction."""
    return tuple(lab for _, _, lab in segment_crossings(c, d))


def crossing_word(v) -> tuple[int, ...]:
    """The word of s([a, b]) for [a, b] with a, b > 0 and gcd 1."""
    v = as_vector(v)
    _require_positive_primitive(v)
    a, b = v
    w = segment_word(a, b)
    assert len(w) == 2 * (a + b) - 3
    return w


class Step(str, Enum):
    H = "H"
    V = "V"


@dataclass(frozen=True)
class DyckPath:
    width: int
    height: int
    steps: tuple[Step, ...]

    def vertices(self) -> list[tuple[int, int]]:
        x = y = 0
        out = [(0, 0)]
        for st in self.steps:
            if st is Step.H:
                x += 1
            else:
                y += 1
            out.append((x, y))
        return out

    def corners(self) -> list[tuple[int, int]]:
        """Vertices where the direction changes, plus both endpoints."""
        pts = self.vertices()
        out = [pts[0]]
        for k in range(1, len(self.steps)):
            if self.steps[k] != self.steps[k - 1]:
                out.append(pts[k])
        out.append(pts[-1])
        return out

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)


def dyck_path(width: int, height: int) -> DyckPath:
    """Maximal Dyck path: after i horizontal units its height is floor(i*height/width)."""
    if height < 1 or width < height:
        raise UsageError(f"maximal Dyck path needs width >= height >= 1, got {width}x{height}")
    steps = []
    level = 0
    for i in range(1, width + 1):
        steps.append(Step.H)
        target = i * height // width
        steps.extend([Step.V] * (target - level))
        level = target
    return DyckPath(width, height, tuple(steps))


def dyck_word(width: int, height: int) -> tuple[int, ...]:
    """Word of s^{width x height}: s2 s3 per horizontal edge, s2 s1 per vertical edge."""
    out = []
    for st in dyck_path(width, height).steps:
        out.extend((2, 3) if st is Step.H else (2, 1))
    return tuple(out)


def shift(v, j: int, m: int) -> LatticeVector:
    """[a + j m b, b]; the crossing words of input and output agree in W(m)."""
    a, b = as_vector(v)
    if j < 0:
        raise UsageError("shift multiple must be non-negative")
    return LatticeVector(a + j * m * b, b)


class SpiralVariant(str, Enum):
    PLAIN = "plain"
    THREE = "three"
    THREETWO = "threetwo"


_VARIANT_WRAP = {
    SpiralVariant.PLAIN: ((), ()),
    SpiralVariant.THREE: ((3,), (3,)),
    SpiralVariant.THREETWO: ((3, 2), (2, 3)),
}


@dataclass(frozen=True)
class SpiralForm:
    """(s3 s2 s1)^depth . X . (s1 s2 s3)^depth where X is s(nu), s3 s(nu) s3
    or s3 s2 s(nu) s2 s3 and nu is the segment from the origin to (c, d).

    A clockwise spiral is the mirror image in the diagonal: its word is the
    counterclockwise word with labels 1 and 3 exchanged.
    """

    depth: int
    variant: SpiralVariant
    c: int
    d: int
    clockwise: bool = False

    def __post_init__(self):
        object.__setattr__(self, "variant", SpiralVariant(self.variant))
        if self.depth < 0:
            raise UsageError("spiral depth must be non-negative")
        if self.d < 1:
            raise UsageError("spiral endpoint needs d >= 1")
        if gcd(self.c, self.d) != 1:
            raise UsageError(f"spiral endpoint ({self.c},{self.d}) is not primitive")
        c, d = self.c, self.d
        if self.variant is SpiralVariant.PLAIN and c < 1:
            raise UsageError("plain spiral needs an endpoint in the open first quadrant")
        if self.variant is SpiralVariant.THREE and not -d < c < 0:
            raise UsageError("s3-conjugated spiral needs -d < c < 0")
        if self.variant is SpiralVariant.THREETWO and not c < -d:
            raise UsageError("s3 s2-conjugated spiral needs c < -d")

    def word(self) -> tuple[int, ...]:
        left, right = _VARIANT_WRAP[self.variant]
        core = left + segment_word(self.c, self.d) + right
        w = (3, 2, 1) * self.depth + core + (1, 2, 3) * self.depth
        return mirrored_word(w) if self.clockwise else w


def spiral_normalize(form: SpiralForm, m: int) -> LatticeVector:
    """A vector in P+ whose crossing word equals the spiral's group element
    in W(m); a >= b for counterclockwise spirals, a <= b for clockwise ones."""
    if m < 2:
        raise UsageError("m must be >= 2")
    c, d = form.c, form.d
    if form.variant is SpiralVariant.PLAIN:
        a = c
    elif form.variant is SpiralVariant.THREE:
        a = c + m * d
    else:
        # Slide the endpoint by (md, 0) until it clears the vertical axis.
        a = c + m * d
        while a < 1:
            a += m * d
    v = LatticeVector(a, d)
    while v.a < v.b:
        v = shift(v, 1, m)
    for _ in range(form.depth):
        v = sigma1(sigma2(v, m), m)
    return swap_axes(v) if form.clockwise else v


def sigma_conjugate_check(v, m: int) -> tuple[LatticeVector, bool]:
    """[c, d] = sigma1 sigma2 [a, b] and whether
    s3 s2 s1 s([a,b]) s1 s2 s3 = s([c,d]) holds in W(m)."""
    v = as_vector(v)
    _require_positive_primitive(v)
    if v.a < v.b:
        raise UsageError("conjugation identity is stated for a >= b")
    target = sigma1(sigma2(v, m), m)
    p = coxeter_w(m)
    lhs = eval_word(p, (3, 2, 1) + crossing_word(v) + (1, 2, 3))
    rhs = eval_word(p, crossing_word(target))
    return target, lhs == rhs


def swap_axes(v) -> LatticeVector:
    a, b = as_vector(v)
    return LatticeVector(b, a)


def mirrored_word(w) -> tuple[int, ...]:
    """Relabel 1 <-> 3: the word of the segment reflected in the diagonal."""
    return relabel(w, SWAP_13)


def word_text(w) -> str:
    return format_word(parse_word(w))
