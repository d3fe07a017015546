"""
Exact linear algebra over the rationals
Matrices are numpy object arrays of Fractions; row vectors act on the left
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np


def fraction_matrix(rows: Sequence[Sequence]) -> np.ndarray:
    """Build an object matrix of Fractions from nested sequences."""
    rows = list(rows)
    n_cols = len(rows[0]) if rows else 0
    M = np.empty((len(rows), n_cols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            M[i, j] = Fraction(value)
    return M


def zero_matrix(n_rows: int, n_cols: int) -> np.ndarray:
    M = np.empty((n_rows, n_cols), dtype=object)
    M.fill(Fraction(0))
    return M


def identity_matrix(n: int) -> np.ndarray:
    """Construct an identity matrix I."""
    return np.array([[Fraction(i == j) for j in range(n)] for i in range(n)], dtype=object).reshape(n, n)


def inverse_matrix(X: np.ndarray) -> np.ndarray:
    """Calculate the inverse of matrix X that consists of Fractions.

    If X is non-square, a ValueError will be raised.
    If X is singular (non-invertible), a ZeroDivisionError will be raised.
    """
    ok = (len(X.shape) == 2) and (X.shape[0] == X.shape[1])
    if not ok:
        raise ValueError("matrix is not square (shape = {})".format(X.shape))

    n = X.shape[0]
    if n == 0:
        return zero_matrix(0, 0)

    # Row operations on [X I] turn the left half into I and the right half into X^-1.
    XI = np.hstack((X.astype(object), identity_matrix(n)))

    for i in range(n):
        for j in range(i, n):
            if XI[j, i] != 0:
                if i != j:
                    XI[[i, j]] = XI[[j, i]]
                break
        else:
            raise ZeroDivisionError("matrix is singular")

        pivot = XI[i, i]
        XI[i, :] = [Fraction(v) / pivot for v in XI[i, :]]
        for j in range(n):
            if j != i and XI[j, i] != 0:
                factor = XI[j, i]
                XI[j, :] = XI[j, :] - factor * XI[i, :]

    return XI[:, n:]


def row_echelon(A: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form of A and its pivot columns."""
    R = np.array([[Fraction(v) for v in row] for row in A], dtype=object).reshape(A.shape)
    n_rows, n_cols = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if R[i, c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            R[[r, pivot_row]] = R[[pivot_row, r]]
        pivot = R[r, c]
        R[r, :] = [v / pivot for v in R[r, :]]
        for i in range(n_rows):
            if i != r and R[i, c] != 0:
                R[i, :] = R[i, :] - R[i, c] * R[r, :]
        pivots.append(c)
        r += 1
    return R, pivots


def null_space(A: np.ndarray) -> List[np.ndarray]:
    """Basis of {x : A x = 0} as a list of Fraction vectors."""
    n_cols = A.shape[1]
    R, pivots = row_echelon(A)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = np.array([Fraction(0)] * n_cols, dtype=object)
        x[f] = Fraction(1)
        for row, p in enumerate(pivots):
            x[p] = -R[row, f]
        basis.append(x)
    return basis


def left_null_space(A: np.ndarray) -> List[np.ndarray]:
    """Basis of {v : v A = 0}."""
    return null_space(A.T)


def solve_left(A: np.ndarray, b: Sequence) -> np.ndarray:
    """Solve v A = b for a square invertible A."""
    return np.array(list(b), dtype=object).dot(inverse_matrix(A))


def rank(A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(row_echelon(A)[1])


def is_integral(M: np.ndarray) -> bool:
    return all(Fraction(v).denominator == 1 for v in M.flat)


def is_lower_unitriangular(M: np.ndarray) -> bool:
    n = M.shape[0]
    if M.shape != (n, n):
        return False
    for i in range(n):
        if M[i, i] != 1:
            return False
        for j in range(i + 1, n):
            if M[i, j] != 0:
                return False
    return True


def is_identity(M: np.ndarray) -> bool:
    n = M.shape[0]
    if M.shape != (n, n):
        return False
    return n == 0 or bool(np.all(M == identity_matrix(n)))
