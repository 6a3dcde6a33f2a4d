"""Exact arithmetic in Z[zeta_m] = Z[x] / Phi_m(x).

An element is an integer coefficient vector of length deg(Phi_m). Matrices
and families of matrices are arrays whose last axis is that vector, so a
d x d matrix has shape (d, d, deg) and a family indexed by group elements has
shape (N, d, d, deg).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
from sympy import Poly, cyclotomic_poly, primefactors, symbols

from .errors import BadParameters

_x = symbols("x")


@dataclass(frozen=True)
class CycRing:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise BadParameters(f"conductor must be positive, got {self.m}", (self.m,))

    @cached_property
    def phi(self) -> np.ndarray:
        """Coefficients of Phi_m, lowest degree first (monic)."""
        coeffs = Poly(cyclotomic_poly(self.m, _x), _x).all_coeffs()[::-1]
        return np.array([int(c) for c in coeffs], dtype=np.int64)

    @property
    def deg(self) -> int:
        return self.phi.size - 1

    @cached_property
    def _fold(self) -> np.ndarray:
        """fold[s, t] = x^(s+t) mod Phi_m, for s, t < deg."""
        deg = self.deg
        red = np.zeros((2 * deg - 1, deg), dtype=np.int64)
        cur = np.zeros(deg, dtype=np.int64)
        cur[0] = 1
        for e in range(2 * deg - 1):
            red[e] = cur
            # multiply by x and reduce: x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1])) - top * self.phi[:-1]
        s = np.arange(deg)
        return red[s[:, None] + s[None, :]]

    @cached_property
    def zeta_powers(self) -> np.ndarray:
        """zeta_powers[j] = zeta^j for 0 <= j < m."""
        deg = self.deg
        out = np.zeros((self.m, deg), dtype=np.int64)
        cur = np.zeros(deg, dtype=np.int64)
        cur[0] = 1
        for j in range(self.m):
            out[j] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1])) - top * self.phi[:-1]
        return out

    # ------------------------------------------------------------ elements

    def const(self, c: int) -> np.ndarray:
        out = np.zeros(self.deg, dtype=np.int64)
        out[0] = c
        return out

    def zeta(self, j: int) -> np.ndarray:
        return self.zeta_powers[j % self.m].copy()

    def _times(self, Y: np.ndarray) -> np.ndarray:
        """Y[..., t] -> the matrix of z -> z Y: shape (..., s, c)."""
        return np.tensordot(Y, self._fold, axes=([-1], [1]))

    def mul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Elementwise ring product over any broadcastable leading axes."""
        return (X[..., None, :] @ self._times(Y))[..., 0, :]

    # ------------------------------------------------------------ matrices

    def identity(self, d: int) -> np.ndarray:
        out = np.zeros((d, d, self.deg), dtype=np.int64)
        out[np.arange(d), np.arange(d), 0] = 1
        return out

    def prepare(self, Y: np.ndarray) -> np.ndarray:
        """Right factor in the layout used by :meth:`matmul_prepared`."""
        deg = self.deg
        *lead, j, k, _ = Y.shape
        Ym = np.swapaxes(self._times(Y), -3, -2)  # (..., j, s, k, c)
        return Ym.reshape(*lead, j * deg, k * deg)

    def matmul_prepared(self, X: np.ndarray, Yp: np.ndarray) -> np.ndarray:
        *lead, i, j, _ = X.shape
        out = X.reshape(*lead, i, j * self.deg) @ Yp
        return out.reshape(*out.shape[:-1], Yp.shape[-1] // self.deg, self.deg)

    def matmul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Product of matrices (or broadcast stacks of matrices)."""
        return self.matmul_prepared(X, self.prepare(Y))

    def trace(self, X: np.ndarray) -> np.ndarray:
        return np.trace(X, axis1=-3, axis2=-2)

    def monomial(self, d: int, perm, exps) -> np.ndarray:
        """Matrix sending e_j to zeta^exps[j] e_perm[j]."""
        out = np.zeros((d, d, self.deg), dtype=np.int64)
        for j in range(d):
            out[perm[j], j] = self.zeta_powers[exps[j] % self.m]
        return out

    # ------------------------------------------------------------ reduction

    @lru_cache(maxsize=None)
    def root_mod(self, q: int) -> int:
        """Least element of F_q of multiplicative order exactly m (q = 1 mod m)."""
        if (q - 1) % self.m:
            raise BadParameters(f"q={q} is not 1 mod {self.m}", (q, self.m))
        divisors = primefactors(self.m)
        for w in range(1, q):
            if pow(w, self.m, q) == 1 and all(pow(w, self.m // p, q) != 1 for p in divisors):
                return w
        raise BadParameters(f"no primitive {self.m}-th root of unity mod {q}", (q, self.m))

    def reduce_mod(self, X: np.ndarray, q: int) -> np.ndarray:
        """Image under zeta -> root_mod(q) in F_q."""
        w = self.root_mod(q)
        powers = np.array([pow(w, s, q) for s in range(self.deg)], dtype=np.int64)
        return np.tensordot(X % q, powers, axes=([-1], [0])) % q


@dataclass(frozen=True, eq=False)
class CycMatrix:
    ring: CycRing
    data: np.ndarray  # (d, d, deg)

    @property
    def d(self) -> int:
        return self.data.shape[0]

    @property
    def m(self) -> int:
        return self.ring.m

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(self.ring, self.ring.matmul(self.data, other.data))

    def __eq__(self, other) -> bool:
        return isinstance(other, CycMatrix) and self.m == other.m and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.m, self.data.tobytes()))

    def is_identity(self) -> bool:
        return np.array_equal(self.data, self.ring.identity(self.d))

    def inverse_certified(self, candidate: "CycMatrix") -> bool:
        return (self @ candidate).is_identity() and (candidate @ self).is_identity()

    def trace(self) -> np.ndarray:
        return np.trace(self.data, axis1=0, axis2=1)

    def to_json(self) -> list:
        return self.data.tolist()
