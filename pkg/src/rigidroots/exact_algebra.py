"""Exact arithmetic in the real cyclotomic field Q(x), x = 2cos(pi/M).

Elements are polynomials in x with rational coefficients, reduced modulo the
minimal polynomial of x.  Because that polynomial is irreducible, two reduced
coefficient tuples are equal exactly when the real numbers they denote are
equal, so equality is a tuple comparison and never touches floating point.

Signs are decided by interval evaluation at 2cos(pi/M) with doubling
precision; this always terminates because a nonzero reduced element is a
nonzero real number.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from mpmath import iv, mp, nstr

from .errors import UsageError

__all__ = [
    "MinimalPolynomial",
    "RealCyclotomicField",
    "AlgebraicElement",
    "SymbolicPolynomial",
    "cyclotomic_polynomial",
    "chebyshev_2cos",
    "minimal_polynomial",
    "field",
    "sign",
    "specialize",
    "totient",
]

# mpmath interval contexts carry global precision state.
_IV_LOCK = threading.Lock()

START_PREC = 64
MAX_PREC = 1 << 16


def _canon(c):
    """Rationals with denominator 1 are stored as plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(coeffs) -> tuple:
    coeffs = [_canon(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _polymul(p, q) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _polyadd(p, q) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, b in enumerate(q):
        out[i] += b
    return out


def _exact_divide(num, den) -> list:
    """Quotient of integer polynomials when ``den`` is monic and divides ``num``."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        quot[k - dn] = c
        if c:
            for i, d in enumerate(den):
                num[k - dn + i] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return quot


def totient(n: int) -> int:
    result, p, k = n, 2, n
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as ascending integer coefficients, from y^n - 1 by exact division."""
    if n < 1:
        raise UsageError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def chebyshev_2cos(k: int) -> tuple[int, ...]:
    """Integer polynomial C_k with C_k(2cos t) = 2cos(k t)."""
    if k < 0:
        raise UsageError("chebyshev index must be non-negative")
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = _polyadd([0] + cur, [-c for c in prev])
        prev, cur = cur, nxt
    return _trim(cur)


@dataclass(frozen=True)
class MinimalPolynomial:
    """Monic minimal polynomial of 2cos(pi/m), ascending integer coefficients."""

    m: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def interval_value(self, prec: int = 128):
        """Certified enclosure of the polynomial evaluated at 2cos(pi/m)."""
        with _IV_LOCK:
            saved = iv.prec
            iv.prec = prec
            try:
                x = 2 * iv.cos(iv.pi / self.m)
                acc = iv.mpf(0)
                for c in reversed(self.coeffs):
                    acc = acc * x + c
                return acc
            finally:
                iv.prec = saved

    def __str__(self) -> str:
        return poly_text(self.coeffs)


@lru_cache(maxsize=None)
def minimal_polynomial(m: int) -> MinimalPolynomial:
    """Minimal polynomial of 2cos(pi/m) over Q.

    Phi_{2m} is palindromic of even degree 2k, so y^-k Phi_{2m}(y) is a
    polynomial in y + 1/y.  Writing y^j + y^-j = C_j(y + 1/y) folds it.
    """
    if not isinstance(m, int) or m < 2:
        raise UsageError(f"field parameter M must be an integer >= 2, got {m!r}")
    phi = cyclotomic_polynomial(2 * m)
    k = (len(phi) - 1) // 2
    folded = [phi[k]]
    for j in range(1, k + 1):
        term = [phi[k + j] * c for c in chebyshev_2cos(j)]
        folded = _polyadd(folded, term)
    coeffs = _trim(folded)
    assert coeffs[-1] == 1 and len(coeffs) - 1 == totient(2 * m) // 2
    return MinimalPolynomial(m, coeffs)


class RealCyclotomicField:
    """The field Q(2cos(pi/M)) with raw operations on reduced coefficient tuples.

    Raw elements are tuples of exactly ``degree`` rationals; the public
    ``AlgebraicElement`` wraps the trimmed form.
    """

    def __init__(self, m: int):
        self.m = m
        self.minpoly = minimal_polynomial(m)
        self.degree = self.minpoly.degree
        self._approx = None

    def __repr__(self) -> str:
        return f"RealCyclotomicField({self.m})"

    def __reduce__(self):
        return (field, (self.m,))

    def reduce(self, coeffs) -> tuple:
        """Fixed-length remainder of ``coeffs`` modulo the minimal polynomial."""
        d = self.degree
        work = list(coeffs)
        if len(work) < d:
            work.extend([0] * (d - len(work)))
        p = self.minpoly.coeffs
        for k in range(len(work) - 1, d - 1, -1):
            c = work[k]
            if c:
                for i in range(d):
                    work[k - d + i] -= c * p[i]
        return tuple(_canon(c) for c in work[:d])

    def zero(self) -> tuple:
        return (0,) * self.degree

    def one(self) -> tuple:
        return self.reduce([1])

    def gen(self) -> tuple:
        return self.reduce([0, 1])

    def add(self, a, b) -> tuple:
        return tuple(_canon(x + y) for x, y in zip(a, b))

    def sub(self, a, b) -> tuple:
        return tuple(_canon(x - y) for x, y in zip(a, b))

    def neg(self, a) -> tuple:
        return tuple(-x for x in a)

    def mul(self, a, b) -> tuple:
        return self.reduce(_polymul(a, b))

    def multiplication_matrix(self, a) -> tuple:
        """Matrix T with (a * b)[s] = sum_t T[s][t] * b[t]."""
        d = self.degree
        cols = [self.mul(a, self.reduce([0] * t + [1])) for t in range(d)]
        return tuple(tuple(cols[t][s] for t in range(d)) for s in range(d))

    def interval(self, a, prec: int):
        with _IV_LOCK:
            saved = iv.prec
            iv.prec = prec
            try:
                x = 2 * iv.cos(iv.pi / self.m)
                acc = iv.mpf(0)
                for c in reversed(a):
                    c = Fraction(c)
                    term = iv.mpf(c.numerator)
                    if c.denominator != 1:
                        term = term / c.denominator
                    acc = acc * x + term
                return acc
            finally:
                iv.prec = saved

    def sign(self, a) -> int:
        if not any(a):
            return 0
        prec = START_PREC
        while prec <= MAX_PREC:
            val = self.interval(a, prec)
            if val > 0:
                return 1
            if val < 0:
                return -1
            prec *= 2
        raise ArithmeticError("sign undecided at maximum precision")

    def approx(self, a, digits: int = 12) -> str:
        val = self.interval(a, 4 * digits + 64)
        with mp.workdps(digits + 10):
            mid = (mp.mpf(val.a) + mp.mpf(val.b)) / 2
            return nstr(mid, digits)


@lru_cache(maxsize=None)
def field(m: int) -> RealCyclotomicField:
    return RealCyclotomicField(m)


class AlgebraicElement:
    """Immutable element of Q(2cos(pi/M)) in canonical (reduced, trimmed) form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld, coeffs=()):
        if isinstance(fld, int):
            fld = field(fld)
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "coeffs", _trim(fld.reduce(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicElement is immutable")

    @classmethod
    def from_raw(cls, fld, raw):
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", fld)
        object.__setattr__(obj, "coeffs", _trim(raw))
        return obj

    @classmethod
    def gen(cls, m: int) -> "AlgebraicElement":
        return cls(m, (0, 1))

    @property
    def m(self) -> int:
        return self.field.m

    def raw(self) -> tuple:
        d = self.field.degree
        return self.coeffs + (0,) * (d - len(self.coeffs))

    def _coerce(self, other) -> tuple:
        if isinstance(other, AlgebraicElement):
            if other.field.m != self.field.m:
                raise UsageError(
                    f"field mismatch: Q(2cos(pi/{self.field.m})) vs Q(2cos(pi/{other.field.m}))"
                )
            return other.raw()
        if isinstance(other, Rational):
            return self.field.reduce([other])
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return AlgebraicElement.from_raw(self.field, self.field.add(self.raw(), b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return AlgebraicElement.from_raw(self.field, self.field.sub(self.raw(), b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return AlgebraicElement.from_raw(self.field, self.field.mul(self.raw(), b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational) and other != 0:
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __neg__(self):
        return AlgebraicElement.from_raw(self.field, self.field.neg(self.raw()))

    def __pow__(self, k: int):
        if k < 0:
            return NotImplemented
        out = AlgebraicElement(self.field, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraicElement):
            return self.field.m == other.field.m and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.field.m, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def sign(self) -> int:
        return self.field.sign(self.raw())

    def __float__(self):
        return float(self.field.approx(self.raw(), 17))

    def approx(self, digits: int = 12) -> str:
        return self.field.approx(self.raw(), digits)

    def to_text(self) -> str:
        """Ascending coefficient list plus a 12-digit decimal value."""
        body = ", ".join(str(c) for c in self.coeffs) if self.coeffs else "0"
        return f"[{body}] ~ {self.approx(12)}"

    def __repr__(self) -> str:
        return f"AlgebraicElement({self.field.m}, {self.coeffs})"

    def __str__(self) -> str:
        return poly_text(self.coeffs)


def sign(a: AlgebraicElement) -> int:
    return a.sign()


class SymbolicPolynomial:
    """Element of Z[x] with x left unreduced."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = _trim(coeffs)
        if any(not isinstance(c, int) for c in coeffs):
            raise UsageError("symbolic polynomials have integer coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicPolynomial is immutable")

    @classmethod
    def x(cls) -> "SymbolicPolynomial":
        return cls((0, 1))

    @staticmethod
    def _coeffs_of(other):
        if isinstance(other, SymbolicPolynomial):
            return other.coeffs
        if isinstance(other, int):
            return (other,)
        return None

    def __add__(self, other):
        c = self._coeffs_of(other)
        if c is None:
            return NotImplemented
        return SymbolicPolynomial(_polyadd(self.coeffs, c))

    __radd__ = __add__

    def __neg__(self):
        return SymbolicPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        c = self._coeffs_of(other)
        if c is None:
            return NotImplemented
        return SymbolicPolynomial(_polyadd(self.coeffs, [-v for v in c]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coeffs_of(other)
        if c is None:
            return NotImplemented
        return SymbolicPolynomial(_polymul(self.coeffs, c))

    __rmul__ = __mul__

    def __eq__(self, other):
        c = self._coeffs_of(other)
        if c is None:
            return NotImplemented
        return self.coeffs == _trim(c)

    def __hash__(self):
        return hash(("Z[x]", self.coeffs))

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def specialize(self, m: int) -> AlgebraicElement:
        return specialize(self, m)

    def to_text(self) -> str:
        return poly_text(self.coeffs)

    def __repr__(self) -> str:
        return f"SymbolicPolynomial({self.coeffs})"

    __str__ = to_text


def poly_text(coeffs) -> str:
    """Human-readable polynomial in x, highest degree first."""
    coeffs = _trim(coeffs)
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            mono = str(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            if mag != 1:
                mono = f"({mag}){mono}" if isinstance(mag, Fraction) else f"{mag}{mono}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(parts)


def specialize(p: SymbolicPolynomial, m: int) -> AlgebraicElement:
    """Reduce ``p`` modulo the minimal polynomial of 2cos(pi/m)."""
    return AlgebraicElement(field(m), p.coeffs)


def lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
