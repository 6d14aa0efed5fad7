"""Commutative (2,2)-model quaternions.

A quaternion is an ordered pair of complex numbers ``q = [a1, a2]`` with
``a1 = a + bi`` and ``a2 = c + di``, i.e. the real 4-vector ``(a, b, c, d)``.
Multiplication is

    [a1, a2][b1, b2] = [a1 b1 - a2 b2, a1 b2 + a2 b1]

which is commutative and associative but has zero divisors, so no division
is offered here.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Number

import numpy as np

__all__ = [
    "Complex2",
    "Quat22",
    "E1",
    "E2",
    "E3",
    "E4",
    "ZERO",
    "add",
    "mul",
    "conj",
    "modulus",
    "square",
    "scale",
    "to_matrix",
    "vec",
    "root_of_unity",
]

# The complex components are held as builtin ``complex`` values.
Complex2 = complex


def _finite_complex(value, name: str) -> complex:
    try:
        z = complex(value)
    except TypeError:
        raise TypeError(f"{name} must be a real or complex number, got {type(value).__name__}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class Quat22:
    """Quaternion ``[c1, c2]`` in the (2,2)-model.

    Parameters
    ----------
    c1, c2 : complex
        First and second complex component. Real numbers are accepted.
    """

    c1: complex = 0j
    c2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "c1", _finite_complex(self.c1, "c1"))
        object.__setattr__(self, "c2", _finite_complex(self.c2, "c2"))

    @classmethod
    def from_components(cls, a, b, c, d) -> "Quat22":
        """Build ``[(a, b), (c, d)]`` from four reals."""
        return cls(complex(a, b), complex(c, d))

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.c1.real, self.c1.imag, self.c2.real, self.c2.imag)

    @property
    def is_real(self) -> bool:
        return self.c2 == 0 and self.c1.imag == 0

    @property
    def is_complex(self) -> bool:
        return self.c2 == 0

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other):
        if isinstance(other, Quat22):
            return add(self, other)
        if isinstance(other, Number):
            return Quat22(self.c1 + other, self.c2)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quat22):
            return Quat22(self.c1 - other.c1, self.c2 - other.c2)
        if isinstance(other, Number):
            return Quat22(self.c1 - other, self.c2)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Number):
            return Quat22(other - self.c1, -self.c2)
        return NotImplemented

    def __neg__(self):
        return Quat22(-self.c1, -self.c2)

    def __mul__(self, other):
        if isinstance(other, Quat22):
            return mul(self, other)
        if isinstance(other, Number):
            return scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __abs__(self):
        return modulus(self)

    def __repr__(self):
        a, b, c, d = self.components
        return f"Quat22[({a!r}, {b!r}), ({c!r}, {d!r})]"


ZERO = Quat22(0, 0)
E1 = Quat22(1, 0)
E2 = Quat22(1j, 0)
E3 = Quat22(0, 1)
E4 = Quat22(0, 1j)


def add(q1: Quat22, q2: Quat22) -> Quat22:
    return Quat22(q1.c1 + q2.c1, q1.c2 + q2.c2)


def mul(q1: Quat22, q2: Quat22) -> Quat22:
    a1, a2 = q1.c1, q1.c2
    b1, b2 = q2.c1, q2.c2
    return Quat22(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1)


def conj(q: Quat22) -> Quat22:
    """Conjugate both complex components, ``[conj(a1), conj(a2)]``.

    Note that ``q * conj(q)`` is in general *not* ``|q|**2``; it equals
    ``[|a1|^2 - |a2|^2, a1 conj(a2) + a2 conj(a1)]``.
    """
    return Quat22(q.c1.conjugate(), q.c2.conjugate())


def modulus(q: Quat22) -> float:
    return math.sqrt(abs(q.c1) ** 2 + abs(q.c2) ** 2)


def square(q: Quat22) -> Quat22:
    a1, a2 = q.c1, q.c2
    return Quat22(a1 * a1 - a2 * a2, a1 * a2 + a2 * a1)


def scale(k, q: Quat22) -> Quat22:
    """Multiply both components of `q` by the real or complex scalar `k`."""
    k = _finite_complex(k, "k")
    return Quat22(k * q.c1, k * q.c2)


def vec(q: Quat22) -> np.ndarray:
    """Real 4-vector ``(a11, a12, a21, a22)`` of `q`."""
    return np.array(q.components, dtype=float)


def to_matrix(q: Quat22) -> np.ndarray:
    """Left-multiplication matrix ``M_q`` with ``M_q @ vec(p) == vec(q * p)``.

    The first column is ``vec(q)``. The matrix is not orthogonal, and it is
    singular exactly when `q` is a zero divisor (or zero).
    """
    a11, a12, a21, a22 = q.components
    return np.array(
        [
            [a11, -a12, -a21, a22],
            [a12, a11, -a22, -a21],
            [a21, -a22, a11, -a12],
            [a22, a21, a12, a11],
        ],
        dtype=float,
    )


def root_of_unity(n: int, power: int = 1) -> Quat22:
    """Power of the transform kernel ``W = [exp(-2 pi i / n), 0]``.

    Returns ``W**power``, a complex-embedded quaternion of unit modulus.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k = power % n
    if k == 0:
        return E1
    if 4 * k == n:
        return Quat22(-1j, 0)
    if 2 * k == n:
        return Quat22(-1, 0)
    if 4 * k == 3 * n:
        return Quat22(1j, 0)
    return Quat22(cmath.exp(-2j * math.pi * k / n), 0)
