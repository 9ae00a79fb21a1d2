"""
Exact linear algebra over the rationals.

Matrices are numpy object arrays holding Python ``int`` or ``Fraction``
entries, so shapes such as ``(0, 3)`` behave and no floating point ever
enters.  Ranks use fraction-free elimination over the integers; kernels and
solves go through a rational row echelon form.
"""

from fractions import Fraction
from math import gcd

import numpy as np


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=object)


def identity(size):
    out = zeros(size, size)
    for idx in range(size):
        out[idx, idx] = 1
    return out


def as_matrix(rows, cols=None):
    """Build an object matrix from nested lists (``cols`` fixes empty shapes)."""
    rows = [list(row) for row in rows]
    if not rows:
        return zeros(0, cols or 0)
    out = zeros(len(rows), len(rows[0]))
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            out[r, c] = value
    return out


def block_diag(blocks):
    height = sum(b.shape[0] for b in blocks)
    width = sum(b.shape[1] for b in blocks)
    out = zeros(height, width)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def hstack(blocks, rows):
    if not blocks:
        return zeros(rows, 0)
    return np.concatenate(blocks, axis=1)


def vstack(blocks, cols):
    if not blocks:
        return zeros(0, cols)
    return np.concatenate(blocks, axis=0)


def is_zero(A):
    return all(x == 0 for x in A.flat)


def _integer_rows(A):
    """Sparse integer rows of A, each row scaled by its denominators."""
    out = []
    for r in range(A.shape[0]):
        row = {c: A[r, c] for c in range(A.shape[1]) if A[r, c] != 0}
        if not row:
            continue
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = den * v.denominator // gcd(den, v.denominator)
        if den != 1:
            row = {c: int(v * den) for c, v in row.items()}
        else:
            row = {c: int(v) for c, v in row.items()}
        out.append(row)
    return out


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def rank(A):
    """Rank by fraction-free elimination on sparse integer rows."""
    return rank_rows(_integer_rows(A))


def rank_rows(rows):
    """Rank of a matrix given as sparse integer rows ``{column: value}``."""
    pivots = {}
    for row in rows:
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = _primitive(row)
                break
            a, p = row[lead], prow[lead]
            merged = {}
            for c in row.keys() | prow.keys():
                v = p * row.get(c, 0) - a * prow.get(c, 0)
                if v:
                    merged[c] = v
            row = _primitive(merged)
    return len(pivots)


def rref(A):
    """Reduced row echelon form over Q; returns (R, pivot_columns)."""
    m, n = A.shape
    R = [[Fraction(A[r, c]) for c in range(n)] for r in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        pick = next((r for r in range(row, m) if R[r][col] != 0), None)
        if pick is None:
            continue
        R[row], R[pick] = R[pick], R[row]
        lead = R[row][col]
        if lead != 1:
            R[row] = [v / lead for v in R[row]]
        for r in range(m):
            if r != row and R[r][col] != 0:
                f = R[r][col]
                R[r] = [a - f * b for a, b in zip(R[r], R[row])]
        pivots.append(col)
        row += 1
    out = zeros(m, n)
    for r in range(m):
        for c in range(n):
            out[r, c] = _normalize(R[r][c])
    return out, pivots


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def _clear_denominators(col):
    den = 1
    for v in col:
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in col]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def nullspace(A):
    """Integer matrix whose columns form a basis of ker A."""
    m, n = A.shape
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in pivots]
    out = zeros(n, len(free))
    for idx, f in enumerate(free):
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -Fraction(R[r, f])
        for r, v in enumerate(_clear_denominators(vec)):
            out[r, idx] = v
    return out


def column_basis(A):
    """Indices of a maximal independent set of columns (leftmost first)."""
    _, pivots = rref(A)
    return pivots


def solve(B, V):
    """
    Solve B X = V exactly for X, where B has independent columns.

    Raises ValueError when some column of V is outside the column space of B.
    """
    m, r = B.shape
    if V.shape[0] != m:
        raise ValueError("row mismatch in solve")
    s = V.shape[1]
    if r == 0:
        if not is_zero(V):
            raise ValueError("system is inconsistent")
        return zeros(0, s)
    aug = np.concatenate([B, V], axis=1)
    R, pivots = rref(aug)
    if any(p >= r for p in pivots):
        raise ValueError("system is inconsistent")
    if len(pivots) != r:
        raise ValueError("coefficient matrix is rank deficient")
    X = zeros(r, s)
    for row, p in enumerate(pivots):
        for c in range(s):
            X[p, c] = R[row, r + c]
    return X


def complement_columns(B, dim):
    """
    Standard basis vectors e_t (as indices t) extending the column span of B
    to the whole of Q^dim, chosen greedily from e_0 upwards.
    """
    chosen = []
    current = B
    base = rank(B)
    for t in range(dim):
        e = zeros(dim, 1)
        e[t, 0] = 1
        trial = np.concatenate([current, e], axis=1)
        if rank(trial) > base:
            current = trial
            base += 1
            chosen.append(t)
        if base == dim:
            break
    return chosen


def inverse(A):
    n = A.shape[0]
    R, pivots = rref(np.concatenate([A, identity(n)], axis=1))
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def is_nilpotent(A):
    n = A.shape[0]
    if n == 0:
        return True
    P = A
    for _ in range(n - 1):
        P = P @ A
    return is_zero(P)
