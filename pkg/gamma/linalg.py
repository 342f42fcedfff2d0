"""Exact rank and solve over the rationals.

Matrices are numpy object arrays of ``fractions.Fraction`` so every pivot and
every elimination step stays exact.
"""

from fractions import Fraction
import logging

import numpy as np

from gamma.errors import InconsistentSystemError


def fraction_matrix(rows, n_cols=None):
    """Build an object-dtype matrix of Fractions from nested sequences."""
    rows = [list(row) for row in rows]
    if not rows:
        return np.empty((0, n_cols or 0), dtype=object)
    matrix = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = Fraction(value)
    return matrix


def row_echelon(matrix, rhs=None):
    """Forward elimination in place.

    Returns the list of free (pivot-less) columns. ``rhs`` is eliminated
    alongside ``matrix`` when given.
    """
    n_rows, n_cols = matrix.shape
    free_vars = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            free_vars.extend(range(piv_c, n_cols))
            break
        nonzero = [r for r in range(piv_r, n_rows) if matrix[r, piv_c] != 0]
        if not nonzero:
            free_vars.append(piv_c)
            continue
        i_row = nonzero[0]
        if i_row != piv_r:
            matrix[[piv_r, i_row]] = matrix[[i_row, piv_r]]
            if rhs is not None:
                rhs[[piv_r, i_row]] = rhs[[i_row, piv_r]]
        fp = matrix[piv_r, piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = matrix[r, piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            matrix[r, piv_c:] = matrix[r, piv_c:] - matrix[piv_r, piv_c:] * frp
            if rhs is not None:
                rhs[r] -= rhs[piv_r] * frp
        piv_r += 1
    return free_vars


def rank(rows):
    matrix = fraction_matrix(rows)
    if matrix.size == 0:
        return 0
    free_vars = row_echelon(matrix)
    return matrix.shape[1] - len(free_vars)


def solve(rows, rhs):
    """Unique solution x of A x = b with exact arithmetic.

    Raises InconsistentSystemError when the system has no solution or more
    than one.
    """
    matrix = fraction_matrix(rows)
    n_rows, n_cols = matrix.shape
    t = np.array([Fraction(v) for v in rhs], dtype=object)
    if len(t) != n_rows:
        raise InconsistentSystemError(f"Right-hand side has {len(t)} entries for {n_rows} equations")
    free_vars = row_echelon(matrix, t)
    if free_vars:
        raise InconsistentSystemError(f"System is underdetermined: columns {free_vars} have no pivot")
    for r in range(n_cols, n_rows):
        if t[r] != 0:
            raise InconsistentSystemError(f"System is inconsistent: equation {r} reduces to 0 = {t[r]}")
    solution = [Fraction(0)] * n_cols
    for r in range(n_cols - 1, -1, -1):
        s = t[r]
        for c in range(r + 1, n_cols):
            s -= matrix[r, c] * solution[c]
        solution[r] = s / matrix[r, r]
    logging.debug(f"Solved {n_rows}x{n_cols} exact system")
    return solution
