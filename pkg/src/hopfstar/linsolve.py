"""Exact Gaussian elimination over Q or F_p.

Desk-scale systems only (a few thousand unknowns at most), so plain
fraction/residue row reduction is both simple and fast enough.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldSpec


def solve_exact(field: FieldSpec, a_rows, b_col):
    """Solve A x = b exactly; returns a solution list or None.

    ``a_rows`` is a dense list of rows, ``b_col`` the right-hand side;
    entries are Fractions (Q) or residues (F_p).  When the system is
    underdetermined the free unknowns are set to zero; when it is
    inconsistent the result is None.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    if field.kind == "Q":
        rows = [[Fraction(v) for v in row] + [Fraction(b_col[i])]
                for i, row in enumerate(a_rows)]
    else:
        p = field.p
        rows = [[int(v) % p for v in row] + [int(b_col[i]) % p]
                for i, row in enumerate(a_rows)]

    def inv(v):
        return 1 / v if field.kind == "Q" else pow(v, -1, field.p)

    def norm(v):
        return v if field.kind == "Q" else v % field.p

    pivot_col_of = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = inv(rows[r][c])
        rows[r] = [norm(v * scale) for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [norm(vi - f * vr) for vi, vr in zip(rows[i], rows[r])]
        pivot_col_of.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0) if field.kind == "Q" else 0] * n
    for i, c in enumerate(pivot_col_of):
        x[c] = rows[i][n]
    return x
