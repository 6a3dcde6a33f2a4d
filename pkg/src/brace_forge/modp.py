"""Dense linear algebra over a prime field F_q with int64 numpy arrays.

Entries stay in [0, q); q must satisfy q*q < 2**63.
"""

from __future__ import annotations

import numpy as np


def rref(M: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(M, dtype=np.int64) % q
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, q) % q
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if nzr.size:
            A[nzr] = (A[nzr] - col[nzr, None] * A[r][None, :]) % q
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(M: np.ndarray, q: int) -> np.ndarray:
    """Basis of {v : M v = 0} as the columns of the returned matrix."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(M, q)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, p in enumerate(pivots):
            basis[p, j] = (-R[i, f]) % q
    return basis


def column_echelon(B: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Same column space, with the identity on the returned pivot rows."""
    R, pivots = rref(np.asarray(B).T, q)
    return R.T.copy(), pivots


def rank(M: np.ndarray, q: int) -> int:
    return len(rref(M, q)[1])


def matmul(A: np.ndarray, B: np.ndarray, q: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64) % q
    B = np.asarray(B, dtype=np.int64) % q
    if A.shape[1] * q * q < (1 << 62):
        return (A @ B) % q
    # accumulate column by column to keep partial sums inside int64
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = (out + A[:, k:k + 1] * B[k:k + 1, :]) % q
    return out


def charpoly(M: np.ndarray, q: int) -> np.ndarray:
    """Characteristic polynomial det(xI - M), coefficients lowest degree first.

    Reduction to upper Hessenberg form by similarity, then the standard
    three-term style recurrence on leading principal minors.
    """
    H = np.array(M, dtype=np.int64) % q
    n = H.shape[0]
    for c in range(n - 2):
        nz = np.flatnonzero(H[c + 1:, c])
        if nz.size == 0:
            continue
        p = c + 1 + int(nz[0])
        if p != c + 1:
            H[[c + 1, p]] = H[[p, c + 1]]
            H[:, [c + 1, p]] = H[:, [p, c + 1]]
        inv = pow(int(H[c + 1, c]), -1, q)
        for i in range(c + 2, n):
            u = H[i, c] * inv % q
            if u == 0:
                continue
            H[i] = (H[i] - u * H[c + 1]) % q
            H[:, c + 1] = (H[:, c + 1] + u * H[:, i]) % q
    # polys[m] = charpoly of the leading m x m block
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        hmm = H[m - 1, m - 1]
        prev = polys[m - 1]
        cur = np.zeros(m + 1, dtype=np.int64)
        cur[1:] = prev
        cur[:m] = (cur[:m] - hmm * prev) % q
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = prod * H[i, i - 1] % q
            if prod == 0:
                break
            coeff = H[i - 1, m - 1] * prod % q
            if coeff:
                p = polys[i - 1]
                cur[: p.size] = (cur[: p.size] - coeff * p) % q
        polys.append(cur % q)
    return polys[n]


def poly_roots(coeffs: np.ndarray, q: int) -> list[int]:
    """All roots in F_q, ascending, by evaluating at every field element."""
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for c in coeffs[::-1]:
        acc = (acc * xs + int(c)) % q
    return [int(r) for r in np.flatnonzero(acc == 0)]
