"""Noncommutative (1,3)-model (Hamilton) quaternions.

``q = a + bi + cj + dk`` with ``ij = -ji = k``, ``jk = -kj = i``,
``ki = -ik = j`` and ``i^2 = j^2 = k^2 = ijk = -1``. The alternate laws
(``ji = k`` ...) give :func:`mul_ji`, which is the same product with the
factors swapped.

The direct-sum correlation here is the baseline the (2,2)-model is compared
against. The 4-tuple ``(a, b, c, d)`` maps to the (2,2)-model value
``[(a, b), (c, d)]`` so both correlations fill the same container.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .signals import QuatSignal, SizeError

__all__ = [
    "QuatH",
    "mul_ij",
    "mul_ji",
    "to_matrix_ij",
    "conj_h",
    "modulus_h",
    "hamilton_product",
    "correlate_direct_13",
]


@dataclass(frozen=True)
class QuatH:
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            x = float(getattr(self, name))
            if not math.isfinite(x):
                raise ValueError(f"component {name} must be finite, got {x}")
            object.__setattr__(self, name, x)

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __mul__(self, other):
        if isinstance(other, QuatH):
            return mul_ij(self, other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, QuatH):
            return QuatH(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)
        return NotImplemented

    def __neg__(self):
        return QuatH(-self.a, -self.b, -self.c, -self.d)


def hamilton_product(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product of ``(..., 4)`` arrays, broadcasting over leading axes."""
    a1, b1, c1, d1 = np.moveaxis(np.asarray(p, dtype=float), -1, 0)
    a2, b2, c2, d2 = np.moveaxis(np.asarray(q, dtype=float), -1, 0)
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


def mul_ij(q1: QuatH, q2: QuatH) -> QuatH:
    """Product under ``ij = k``: real part ``a1 a2 - v1.v2``, vector ``a1 v2 + a2 v1 + v1 x v2``."""
    return QuatH(*hamilton_product(tuple(q1), tuple(q2)))


def mul_ji(q1: QuatH, q2: QuatH) -> QuatH:
    """Product under the alternate laws ``ji = k``; equals ``mul_ij(q2, q1)``."""
    a1, b1, c1, d1 = q1
    a2, b2, c2, d2 = q2
    return QuatH(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 - c1 * d2 + d1 * c2,
        a1 * c2 + b1 * d2 + c1 * a2 - d1 * b2,
        a1 * d2 - b1 * c2 + c1 * b2 + d1 * a2,
    )


def to_matrix_ij(q: QuatH) -> np.ndarray:
    """``A`` with ``A @ vec(p) == vec(mul_ij(q, p))``; ``A.T @ A == |q|^2 I``."""
    a, b, c, d = q
    return np.array(
        [
            [a, -b, -c, -d],
            [b, a, -d, c],
            [c, d, a, -b],
            [d, -c, b, a],
        ],
        dtype=float,
    )


def conj_h(q: QuatH) -> QuatH:
    return QuatH(q.a, -q.b, -q.c, -q.d)


def modulus_h(q: QuatH) -> float:
    return math.sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d)


def _as_rows(x) -> np.ndarray:
    if isinstance(x, QuatSignal):
        return x.components()
    rows = np.array([tuple(s) for s in x] if not isinstance(x, np.ndarray) else x, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != 4:
        raise ValueError(f"expected a sequence of 4-tuples, got shape {rows.shape}")
    return rows


def correlate_direct_13(v: Sequence[QuatH] | QuatSignal, q: Sequence[QuatH] | QuatSignal) -> QuatSignal:
    """``r_n = sum_k q_k v_{k-n}`` with the Hamilton product, ``q`` on the left.

    Returns lags ``-(L-1) .. (N-1)`` in a :class:`QuatSignal` with
    ``lag_offset = L - 1``, each ``(a, b, c, d)`` stored as ``[(a, b), (c, d)]``.
    """
    vr, qr = _as_rows(v), _as_rows(q)
    L, N = len(vr), len(qr)
    if L == 0 or N == 0:
        raise ValueError("signals must be nonempty")
    if L > N:
        raise SizeError(f"template length {L} exceeds signal length {N}")
    out = np.zeros((N + L - 1, 4))
    for j in range(L):
        # v_j pairs with q_k at lag n = k - j, stored at index k + L - 1 - j
        out[L - 1 - j:L - 1 - j + N] += hamilton_product(qr, vr[j])
    return QuatSignal.from_components(out, L - 1)
