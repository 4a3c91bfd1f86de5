"""Independent floating-point oracles, deliberately sharing no code with the package."""

from math import cos, gcd, pi

import mpmath
import numpy as np


def minpoly_by_roots(M: int) -> list[int]:
    """Expand prod (x - 2cos(k pi / M)) over odd k < M coprime to 2M, then round."""
    with mpmath.workdps(80):
        roots = [2 * mpmath.cos(k * mpmath.pi / M) for k in range(1, M, 2) if gcd(k, 2 * M) == 1]
        poly = [mpmath.mpf(1)]
        for r in roots:
            nxt = [mpmath.mpf(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= r * c
            poly = nxt
        out = [int(mpmath.nint(c)) for c in poly]
        assert all(abs(c - o) < mpmath.mpf(10) ** -40 for c, o in zip(poly, out))
    return out


def numeric_generators(labels: dict) -> list[np.ndarray]:
    """Float matrices of s_i(v) = v - 2B(v, a_i) a_i in the simple-root basis."""
    n = max(max(k) for k in labels)
    B = np.eye(n)
    for (i, j), m in labels.items():
        val = -1.0 if m == float("inf") else -cos(pi / m)
        B[i - 1, j - 1] = B[j - 1, i - 1] = val
    gens = []
    for i in range(n):
        S = np.eye(n)
        # column k is s_i(alpha_k) = alpha_k - 2B(alpha_k, alpha_i) alpha_i
        S[i, :] -= 2 * B[:, i]
        gens.append(S)
    return gens


def numeric_word(labels: dict, word) -> np.ndarray:
    gens = numeric_generators(labels)
    n = gens[0].shape[0]
    M = np.eye(n)
    for c in str(word):
        M = M @ gens[int(c) - 1]
    return M


def w_labels(m: int) -> dict:
    return {(1, 2): m, (2, 3): m, (1, 3): float("inf")}


def interior_points(p, q) -> int:
    """Brute-force count of lattice points strictly inside triangle (0,0), p, q."""
    (x1, y1), (x2, y2) = p, q
    xs = range(min(0, x1, x2), max(0, x1, x2) + 1)
    ys = range(min(0, y1, y2), max(0, y1, y2) + 1)
    orient = x1 * y2 - x2 * y1

    def side(ax, ay, bx, by, px, py):
        return (bx - ax) * (py - ay) - (by - ay) * (px - ax)

    count = 0
    sgn = 1 if orient > 0 else -1
    for x in xs:
        for y in ys:
            s1 = side(0, 0, x1, y1, x, y) * sgn
            s2 = side(x1, y1, x2, y2, x, y) * sgn
            s3 = side(x2, y2, 0, 0, x, y) * sgn
            if s1 > 0 and s2 > 0 and s3 > 0:
                count += 1
    return count
