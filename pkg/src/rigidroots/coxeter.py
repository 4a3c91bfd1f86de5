"""Coxeter presentations and their geometric representation.

Group elements are matrices acting on the span of the simple roots
alpha_1..alpha_n, with s_i(v) = v - 2B(v, alpha_i) alpha_i.  The
representation is faithful, so equality of group elements is exact matrix
equality over Q(2cos(pi/M)).

Words are tuples of 1-based generator indices.  Strings such as "2321232"
are accepted wherever a word is expected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import InvariantViolation, UsageError
from .exact_algebra import (
    AlgebraicElement,
    SymbolicPolynomial,
    chebyshev_2cos,
    field,
    lcm,
)

INF = math.inf

Word = tuple


def parse_word(w) -> tuple[int, ...]:
    """Accept "2321232", "1,2,3" or any iterable of ints."""
    if isinstance(w, str):
        w = w.strip()
        if not w:
            return ()
        if "," in w:
            return tuple(int(t) for t in w.split(","))
        return tuple(int(ch) for ch in w)
    return tuple(int(t) for t in w)


def format_word(w: Sequence[int], n: int = 3) -> str:
    if n <= 9:
        return "".join(str(i) for i in w)
    return ",".join(str(i) for i in w)


def is_reflection_word(w) -> bool:
    w = parse_word(w)
    return len(w) % 2 == 1 and w == w[::-1]


def relabel(w, perm: dict[int, int]) -> tuple[int, ...]:
    return tuple(perm.get(i, i) for i in parse_word(w))


SWAP_13 = {1: 3, 3: 1}


@dataclass(frozen=True)
class CoxeterPresentation:
    """Symmetric Coxeter matrix; ``math.inf`` marks an infinite label."""

    labels: tuple
    m: int = dc_field(init=False, compare=False)

    def __post_init__(self):
        labels = tuple(tuple(row) for row in self.labels)
        n = len(labels)
        if n < 1 or any(len(row) != n for row in labels):
            raise UsageError("Coxeter matrix must be square")
        finite = []
        for i in range(n):
            for j in range(n):
                lab = labels[i][j]
                if lab != labels[j][i]:
                    raise UsageError("Coxeter matrix must be symmetric")
                if i == j:
                    continue
                if lab == INF:
                    continue
                if lab != int(lab) or lab < 2:
                    raise UsageError(f"label m_{i + 1}{j + 1} = {lab} is not in {{2,3,...,inf}}")
                finite.append(int(lab))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "m", max(2, lcm(finite)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def field(self):
        return field(self.m)

    def label(self, i: int, j: int):
        return self.labels[i - 1][j - 1]

    def _two_b_raw(self, i: int, j: int) -> tuple:
        """2B(alpha_i, alpha_j) as a raw coefficient tuple (0-based indices)."""
        fld = self.field
        if i == j:
            return fld.reduce([2])
        lab = self.labels[i][j]
        if lab == INF:
            return fld.reduce([-2])
        return fld.reduce([-c for c in chebyshev_2cos(self.m // int(lab))])

    def _generator_ops(self):
        # Cached per instance: for each generator i, the neighbours j with
        # B(alpha_i, alpha_j) != 0 and the multiplication table of -2B(i, j).
        ops = self.__dict__.get("_ops")
        if ops is not None:
            return ops
        fld = self.field
        ops = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if j == i:
                    continue
                c = fld.neg(self._two_b_raw(i, j))
                if not any(c):
                    continue
                table = fld.multiplication_matrix(c)
                terms = tuple(
                    (s, t, table[s][t])
                    for s in range(fld.degree)
                    for t in range(fld.degree)
                    if table[s][t]
                )
                row.append((j, terms))
            ops.append(tuple(row))
        ops = tuple(ops)
        object.__setattr__(self, "_ops", ops)
        return ops

    def __getstate__(self):
        return {"labels": self.labels}

    def __setstate__(self, state):
        object.__setattr__(self, "labels", state["labels"])
        self.__post_init__()


def coxeter_w(m: int) -> CoxeterPresentation:
    """W(m): (s1 s2)^m = (s2 s3)^m = e, no relation between s1 and s3."""
    if m < 2:
        raise UsageError(f"W(m) needs m >= 2, got {m}")
    return CoxeterPresentation(((1, m, INF), (m, 1, m), (INF, m, 1)))


def universal(n: int) -> CoxeterPresentation:
    """Rank-n presentation with every off-diagonal label infinite."""
    return CoxeterPresentation(
        tuple(tuple(1 if i == j else INF for j in range(n)) for i in range(n))
    )


def bilinear_form(p: CoxeterPresentation) -> list[list[AlgebraicElement]]:
    fld = p.field
    return [
        [AlgebraicElement.from_raw(fld, p._two_b_raw(i, j)) / 2 for j in range(p.n)]
        for i in range(p.n)
    ]


class GroupMatrix:
    """n x n matrix over Q(2cos(pi/M)) in the simple-root basis.

    Each row is stored flat: ``n`` blocks of ``degree`` reduced coefficients.
    The storage is canonical, so ``==`` decides equality in the group.
    """

    __slots__ = ("field", "n", "rows", "_hash")

    def __init__(self, fld, n: int, rows):
        self.field = fld
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = None

    @classmethod
    def identity(cls, fld, n: int) -> "GroupMatrix":
        return cls(fld, n, _identity_rows(fld, n))

    @classmethod
    def from_entries(cls, fld, entries) -> "GroupMatrix":
        n = len(entries)
        rows = []
        for row in entries:
            flat = []
            for e in row:
                if isinstance(e, AlgebraicElement):
                    flat.extend(e.raw())
                else:
                    flat.extend(fld.reduce([e]))
            rows.append(flat)
        return cls(fld, n, rows)

    def entry(self, i: int, j: int) -> AlgebraicElement:
        """Entry (i, j), 0-based."""
        d = self.field.degree
        return AlgebraicElement.from_raw(self.field, self.rows[i][j * d:(j + 1) * d])

    def entries(self) -> list[list[AlgebraicElement]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def column(self, j: int) -> tuple[AlgebraicElement, ...]:
        return tuple(self.entry(i, j) for i in range(self.n))

    def transpose(self) -> "GroupMatrix":
        ent = self.entries()
        return GroupMatrix.from_entries(self.field, [list(c) for c in zip(*ent)])

    def __matmul__(self, other: "GroupMatrix") -> "GroupMatrix":
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        if other.field.m != self.field.m or other.n != self.n:
            raise UsageError("matrices from different presentations")
        fld, d, n = self.field, self.field.degree, self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = [0] * (2 * d)
                for k in range(n):
                    a = self.rows[i][k * d:(k + 1) * d]
                    b = other.rows[k][j * d:(j + 1) * d]
                    for s, x in enumerate(a):
                        if x:
                            for t, y in enumerate(b):
                                acc[s + t] += x * y
                row.extend(fld.reduce(acc))
            out.append(row)
        return GroupMatrix(fld, n, out)

    def __pow__(self, k: int) -> "GroupMatrix":
        out = GroupMatrix.identity(self.field, self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def apply(self, vector: Sequence[AlgebraicElement]) -> tuple[AlgebraicElement, ...]:
        ent = self.entries()
        return tuple(
            sum((ent[i][j] * vector[j] for j in range(self.n)), AlgebraicElement(self.field))
            for i in range(self.n)
        )

    def is_identity(self) -> bool:
        return self.rows == _identity_rows(self.field, self.n)

    def __eq__(self, other):
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        return self.field.m == other.field.m and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.m, self.rows))
        return self._hash

    def to_text(self) -> str:
        lines = []
        for i in range(self.n):
            lines.append("  ".join(self.entry(i, j).to_text() for j in range(self.n)))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"GroupMatrix(M={self.field.m}, rows={self.rows})"


def _identity_rows(fld, n: int) -> tuple:
    d = fld.degree
    one, zero = fld.one(), fld.zero()
    return tuple(
        tuple(c for j in range(n) for c in (one if i == j else zero)) for i in range(n)
    )


def _left_multiply(rows: list, i: int, ops, blocks: int, d: int) -> None:
    """rows <- s_i . rows, in place; only row i changes."""
    new = [-v for v in rows[i]]
    width = blocks * d
    for j, terms in ops[i]:
        rj = rows[j]
        if d == 1:
            c = terms[0][2]
            for k in range(width):
                new[k] += c * rj[k]
        else:
            for base in range(0, width, d):
                for s, t, c in terms:
                    new[base + s] += c * rj[base + t]
    rows[i] = new


def _check_word(p: CoxeterPresentation, w: Iterable[int]) -> tuple[int, ...]:
    w = parse_word(w)
    for i in w:
        if not 1 <= i <= p.n:
            raise UsageError(f"generator index {i} out of range 1..{p.n}")
    return w


def generator_matrix(p: CoxeterPresentation, i: int) -> GroupMatrix:
    if not 1 <= i <= p.n:
        raise UsageError(f"generator index {i} out of range 1..{p.n}")
    return eval_word(p, (i,))


def eval_word(p: CoxeterPresentation, w) -> GroupMatrix:
    """Product s_{w1} s_{w2} ... s_{wk}; the empty word gives the identity."""
    w = _check_word(p, w)
    fld, n = p.field, p.n
    ops = p._generator_ops()
    rows = [list(r) for r in _identity_rows(fld, n)]
    d = fld.degree
    for letter in reversed(w):
        _left_multiply(rows, letter - 1, ops, n, d)
    return GroupMatrix(fld, n, rows)


def apply_word(p: CoxeterPresentation, w, vector) -> tuple[AlgebraicElement, ...]:
    """s(w) applied to a coordinate vector, one generator at a time."""
    w = _check_word(p, w)
    fld, n, d = p.field, p.n, p.field.degree
    ops = p._generator_ops()
    rows = []
    for v in vector:
        if isinstance(v, AlgebraicElement):
            rows.append(list(v.raw()))
        else:
            rows.append(list(fld.reduce([v])))
    if len(rows) != n:
        raise UsageError(f"vector has length {len(rows)}, expected {n}")
    for letter in reversed(w):
        _left_multiply(rows, letter - 1, ops, 1, d)
    return tuple(AlgebraicElement.from_raw(fld, r) for r in rows)


def elements_equal(a: GroupMatrix, b: GroupMatrix) -> bool:
    if a.field.m != b.field.m or a.n != b.n:
        raise UsageError("matrices from different presentations")
    return a == b


def simple_root(p: CoxeterPresentation, i: int) -> tuple[AlgebraicElement, ...]:
    return tuple(AlgebraicElement(p.field, (1 if j == i - 1 else 0,)) for j in range(p.n))


def normalize_root_sign(root):
    """Negate an all-nonpositive root; mixed signs cannot occur for a root."""
    signs = {c.sign() if isinstance(c, AlgebraicElement) else _int_sign(c) for c in root}
    signs.discard(0)
    if signs == {-1}:
        return tuple(-c for c in root)
    if len(signs) > 1:
        raise InvariantViolation(f"root with mixed-sign coordinates: {root!r}")
    return tuple(root)


def _int_sign(c) -> int:
    return (c > 0) - (c < 0)


def _split_reflection(w) -> tuple[tuple[int, ...], int]:
    w = parse_word(w)
    if not is_reflection_word(w):
        raise UsageError(f"{format_word(w)!r} is not an odd-length palindrome")
    half = len(w) // 2
    return w[:half], w[half]


def reflection_root(p: CoxeterPresentation, w) -> tuple[AlgebraicElement, ...]:
    """Positive root r with s(w) = s_r: the prefix of the palindrome applied to
    the simple root of its central letter."""
    prefix, center = _split_reflection(w)
    _check_word(p, w)
    root = apply_word(p, prefix, simple_root(p, center))
    return normalize_root_sign(root)


def reflection_matrix(p: CoxeterPresentation, root) -> GroupMatrix:
    """Matrix of v -> v - 2B(v, r) r."""
    form = bilinear_form(p)
    n = p.n
    fld = p.field
    zero = AlgebraicElement(fld)
    # 2B(e_j, r) for each basis vector e_j
    br = [sum((form[j][k] * root[k] for k in range(n)), zero) * 2 for j in range(n)]
    entries = [
        [(1 if i == j else 0) - br[j] * root[i] for j in range(n)] for i in range(n)
    ]
    return GroupMatrix.from_entries(fld, entries)


def form_value(p: CoxeterPresentation, u, v) -> AlgebraicElement:
    form = bilinear_form(p)
    zero = AlgebraicElement(p.field)
    return sum(
        (form[i][j] * u[i] * v[j] for i in range(p.n) for j in range(p.n)), zero
    )


# Symbolic mode: W(m) shape with generic x = 2cos(pi/m), 2B(1,3) = -2.
_SYMBOLIC_NEIGHBOURS = {
    1: ((2, SymbolicPolynomial.x()), (3, SymbolicPolynomial((2,)))),
    2: ((1, SymbolicPolynomial.x()), (3, SymbolicPolynomial.x())),
    3: ((2, SymbolicPolynomial.x()), (1, SymbolicPolynomial((2,)))),
}


def reflection_root_symbolic(w) -> tuple[SymbolicPolynomial, ...]:
    """Root of a W(m) reflection word with coordinates in Z[x], x unreduced."""
    w = parse_word(w)
    if not w:
        raise UsageError("empty word touches no generator")
    for i in w:
        if i not in (1, 2, 3):
            raise UsageError("symbolic mode is defined for the rank-3 W(m) shape only")
    prefix, center = _split_reflection(w)
    vec = [SymbolicPolynomial((1,) if j == center else ()) for j in (1, 2, 3)]
    for letter in reversed(prefix):
        acc = -vec[letter - 1]
        for j, coef in _SYMBOLIC_NEIGHBOURS[letter]:
            acc = acc + coef * vec[j - 1]
        vec[letter - 1] = acc
    # Generic m means the limit x -> 2 (all labels large); normalize there.
    at_limit = [c(2) for c in vec]
    if any(v < 0 for v in at_limit) and not any(v > 0 for v in at_limit):
        vec = [-c for c in vec]
    return tuple(vec)
