"""Exact integer matrices: Smith and Hermite forms, kernels, integer solving.

Matrices are numpy arrays of dtype=object holding Python ints, so entries
are arbitrary precision and never overflow. Every function accepts matrices
with zero rows or columns.
"""

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from ..models.errors import DimensionMismatch


def int_matrix(rows: Sequence[Sequence[int]], n_rows: Optional[int] = None,
               n_cols: Optional[int] = None) -> np.ndarray:
    """Build an IntMatrix from nested sequences.

    Args:
        rows: Row-major entries
        n_rows: Row count, needed only when rows is empty
        n_cols: Column count, needed only when rows is empty or has empty rows

    Returns:
        Object-dtype array of Python ints
    """
    rows = [list(r) for r in rows]
    if n_rows is None:
        n_rows = len(rows)
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    m = np.zeros((n_rows, n_cols), dtype=object)
    for i, r in enumerate(rows):
        if len(r) != n_cols:
            raise ValueError(f"Row {i} has {len(r)} entries, expected {n_cols}")
        for j, x in enumerate(r):
            m[i, j] = int(x)
    return m


def zeros(n_rows: int, n_cols: int) -> np.ndarray:
    return np.zeros((n_rows, n_cols), dtype=object)


def identity(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def as_int_matrix(a) -> np.ndarray:
    """Copy any 2-d array-like into an IntMatrix."""
    a = np.asarray(a, dtype=object)
    if a.ndim != 2:
        raise ValueError(f"Expected a 2-d matrix, got shape {a.shape}")
    out = zeros(*a.shape)
    for idx, x in np.ndenumerate(a):
        out[idx] = int(x)
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product; an empty inner dimension gives the zero matrix."""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(a.shape, b.shape)
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a.dot(b)


def is_zero(a: np.ndarray) -> bool:
    return a.size == 0 or bool((a == 0).all())


def hstack(blocks: Sequence[np.ndarray], n_rows: int) -> np.ndarray:
    """Concatenate matrices side by side; n_rows fixes the shape when blocks is empty."""
    blocks = [b for b in blocks if b.shape[1] > 0]
    if not blocks:
        return zeros(n_rows, 0)
    return np.concatenate(blocks, axis=1)


def vstack(blocks: Sequence[np.ndarray], n_cols: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[0] > 0]
    if not blocks:
        return zeros(0, n_cols)
    return np.concatenate(blocks, axis=0)


def block_diagonal(blocks: Sequence[np.ndarray]) -> np.ndarray:
    n_rows = sum(b.shape[0] for b in blocks)
    n_cols = sum(b.shape[1] for b in blocks)
    out = zeros(n_rows, n_cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


class SmithForm(NamedTuple):
    """D = U @ A @ V with U, V unimodular and D diagonal."""

    D: np.ndarray
    U: np.ndarray
    V: np.ndarray

    def diagonal(self) -> List[int]:
        return [int(self.D[i, i]) for i in range(min(self.D.shape))]

    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def _min_abs_position(D: np.ndarray, t: int):
    """Position of the smallest nonzero |entry| in D[t:, t:], or None."""
    best = None
    best_val = None
    m, n = D.shape
    for i in range(t, m):
        for j in range(t, n):
            x = D[i, j]
            if x != 0 and (best_val is None or abs(x) < best_val):
                best_val = abs(x)
                best = (i, j)
                if best_val == 1:
                    return best
    return best


def smith_normal_form(a, transforms: bool = True) -> SmithForm:
    """Smith normal form with minimal-absolute-value pivoting.

    Args:
        a: Integer matrix (any shape, including empty)
        transforms: Track U and V; when False they are returned as None

    Returns:
        SmithForm (D, U, V) with D = U @ a @ V, nonnegative diagonal
        d1 | d2 | ... and zeros trailing
    """
    D = as_int_matrix(a)
    m, n = D.shape
    U = identity(m) if transforms else None
    V = identity(n) if transforms else None

    t = 0
    while t < min(m, n):
        pos = _min_abs_position(D, t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            D[[t, i]] = D[[i, t]]
            if transforms:
                U[[t, i]] = U[[i, t]]
        if j != t:
            D[:, [t, j]] = D[:, [j, t]]
            if transforms:
                V[:, [t, j]] = V[:, [j, t]]

        while True:
            pivot = D[t, t]
            clean = True
            for i in range(t + 1, m):
                if D[i, t] != 0:
                    q = D[i, t] // pivot
                    if q:
                        D[i] -= q * D[t]
                        if transforms:
                            U[i] -= q * U[t]
                    if D[i, t] != 0:
                        clean = False
            for j in range(t + 1, n):
                if D[t, j] != 0:
                    q = D[t, j] // pivot
                    if q:
                        D[:, j] -= q * D[:, t]
                        if transforms:
                            V[:, j] -= q * V[:, t]
                    if D[t, j] != 0:
                        clean = False
            if not clean:
                # a remainder smaller than the pivot survived: make it the pivot
                best = None
                for i in range(t + 1, m):
                    if D[i, t] != 0 and (best is None or abs(D[i, t]) < abs(D[best[0], best[1]])):
                        best = (i, t)
                for j in range(t + 1, n):
                    if D[t, j] != 0 and (best is None or abs(D[t, j]) < abs(D[best[0], best[1]])):
                        best = (t, j)
                i, j = best
                if j == t:
                    D[[t, i]] = D[[i, t]]
                    if transforms:
                        U[[t, i]] = U[[i, t]]
                else:
                    D[:, [t, j]] = D[:, [j, t]]
                    if transforms:
                        V[:, [t, j]] = V[:, [j, t]]
                continue
            # row t and column t are clear; enforce divisibility of the rest
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i, j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            D[t] += D[offender]
            if transforms:
                U[t] += U[offender]

        if D[t, t] < 0:
            D[t] = -D[t]
            if transforms:
                U[t] = -U[t]
        t += 1

    return SmithForm(D, U, V)


def smith_diagonal(a) -> List[int]:
    """Diagonal of the Smith form only (no transforms tracked)."""
    return smith_normal_form(a, transforms=False).diagonal()


def hermite_normal_form(a):
    """Row-style Hermite normal form H = W @ a.

    Pivots are positive, rows below the last pivot are zero and entries above
    each pivot are reduced into [0, pivot).

    Returns:
        Tuple (H, W) with W unimodular
    """
    H = as_int_matrix(a)
    m, n = H.shape
    W = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            rows = [i for i in range(r, m) if H[i, c] != 0]
            if not rows:
                break
            p = min(rows, key=lambda i: abs(H[i, c]))
            if p != r:
                H[[r, p]] = H[[p, r]]
                W[[r, p]] = W[[p, r]]
            done = True
            for i in range(r + 1, m):
                if H[i, c] != 0:
                    q = H[i, c] // H[r, c]
                    H[i] -= q * H[r]
                    W[i] -= q * W[r]
                    if H[i, c] != 0:
                        done = False
            if done:
                break
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
            W[r] = -W[r]
        for i in range(r):
            q = H[i, c] // H[r, c]
            if q:
                H[i] -= q * H[r]
                W[i] -= q * W[r]
        r += 1
    return H, W


def kernel_basis(a) -> np.ndarray:
    """Columns form a basis of the integer kernel (a saturated lattice)."""
    a = as_int_matrix(a)
    snf = smith_normal_form(a)
    return snf.V[:, snf.rank():]


def image_basis(a) -> np.ndarray:
    """Columns form a basis of the lattice spanned by the columns of a."""
    a = as_int_matrix(a)
    H, _ = hermite_normal_form(a.T)
    nonzero = [i for i in range(H.shape[0]) if not is_zero(H[i])]
    return H[nonzero].T if nonzero else zeros(a.shape[0], 0)


def solve_integer(a, b) -> Optional[np.ndarray]:
    """Solve a @ X = b over the integers; None when no integral solution exists."""
    a = as_int_matrix(a)
    b = as_int_matrix(b)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(a.shape, b.shape)
    snf = smith_normal_form(a)
    r = snf.rank()
    diag = snf.diagonal()
    rhs = matmul(snf.U, b)
    Y = zeros(a.shape[1], b.shape[1])
    for i in range(rhs.shape[0]):
        for j in range(rhs.shape[1]):
            x = rhs[i, j]
            if i < r:
                if x % diag[i] != 0:
                    return None
                Y[i, j] = x // diag[i]
            elif x != 0:
                return None
    return matmul(snf.V, Y)


def rank(a) -> int:
    """Rank over the rationals, by fraction-exact Gaussian elimination."""
    rows = [[Fraction(int(x)) for x in row] for row in as_int_matrix(a)]
    if not rows:
        return 0
    n = len(rows[0])
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def is_unimodular(a) -> bool:
    """Square and |det| = 1."""
    a = as_int_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return all(d == 1 for d in smith_diagonal(a))
