"""Exact integer linear algebra: fraction-free elimination and nullspaces."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def primitive_ints(values) -> list[int]:
    """Scale a rational vector to coprime integers, first nonzero entry > 0."""
    fracs = [Fraction(v) for v in values]
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def _bareiss_echelon(mat: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) forward elimination.

    Returns the echelonized integer matrix together with the pivot column per
    pivot row.  All intermediate entries stay integral.
    """
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    return m[: len(piv_cols)], piv_cols


def nullspace(rows: list[list[int]]) -> list[list[int]]:
    """Kernel basis of an integer matrix (solutions x of M x = 0).

    One primitive integer vector per free column, in column order; computed by
    Bareiss elimination followed by exact back-substitution.
    """
    if not rows:
        return []
    cols = len(rows[0])
    ech, piv_cols = _bareiss_echelon(rows)
    free_cols = [c for c in range(cols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        x: list[Fraction] = [Fraction(0)] * cols
        x[fc] = Fraction(1)
        for r in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[r]
            s = sum((ech[r][j] * x[j] for j in range(pc + 1, cols)), Fraction(0))
            x[pc] = -s / ech[r][pc]
        basis.append(primitive_ints(x))
    return basis


def in_span(vectors: list[list[int]], target: list[int]) -> bool:
    """Whether target lies in the rational span of the given vectors."""
    if not vectors:
        return all(v == 0 for v in target)
    cols = list(zip(*vectors))
    stacked = [list(c) for c in cols]  # matrix with vectors as columns
    aug = [row + [t] for row, t in zip(stacked, target)]
    _, piv_a = _bareiss_echelon(aug)
    _, piv_b = _bareiss_echelon(stacked)
    return len(piv_a) == len(piv_b)
