"""Complex DFTs of any length and the e2-QDFT of (2,2)-model quaternion data.

Power-of-two lengths use an iterative radix-2 Cooley-Tukey transform. Other
lengths use Bluestein's chirp-z algorithm on top of it. The forward kernel is
``exp(-2 pi i n p / N)`` and the inverse carries the full ``1/N`` factor.

The e2-QDFT kernel is ``W = [exp(-2 pi i / N), 0]``, a complex number
embedded in the (2,2)-model, so the QDFT of ``q_n = [f_n, g_n]`` is simply
the pair ``(DFT(f), DFT(g))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .counting import cmul, stage, suspended
from .signals import QuatImage, QuatSignal

__all__ = [
    "dft",
    "dft2d",
    "QSpectrum",
    "qdft_e2",
    "qdft2d_e2",
    "reverse_spectrum",
    "spectral_product",
    "reflect_periodic",
    "next_pow2",
]

_DIRECTIONS = ("forward", "inverse")


def next_pow2(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@lru_cache(maxsize=None)
def _bitrev(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    rev.setflags(write=False)
    return rev


@lru_cache(maxsize=None)
def _twiddles(m: int, sign: int) -> np.ndarray:
    # exp(sign * 2 pi i k / m) for k < m/2; quarter-turn symmetry keeps them exact where possible
    k = np.arange(m // 2)
    w = np.exp(sign * 2j * np.pi * k / m)
    if m % 4 == 0:
        w[m // 4] = sign * 1j
    w[0] = 1.0
    w.setflags(write=False)
    return w


def _radix2(x: np.ndarray, sign: int) -> np.ndarray:
    """Unscaled radix-2 DIT transform along the last axis."""
    n = x.shape[-1]
    if n == 1:
        return x.copy()
    shape = x.shape
    x = x[..., _bitrev(n)]
    half = 1
    while half < n:
        block = 2 * half
        y = x.reshape(shape[:-1] + (n // block, block))
        u = y[..., :half]
        t = cmul(y[..., half:], _twiddles(block, sign))
        x = np.concatenate([u + t, u - t], axis=-1).reshape(shape)
        half = block
    return x


@lru_cache(maxsize=None)
def _bluestein_tables(n: int, sign: int) -> tuple[np.ndarray, np.ndarray]:
    m = next_pow2(2 * n - 1)
    j = np.arange(n)
    # j^2 mod 2n keeps the chirp phase small for long transforms
    chirp = np.exp(sign * 1j * np.pi * ((j * j) % (2 * n)) / n)
    b = np.zeros(m, dtype=complex)
    b[:n] = chirp.conj()
    b[m - n + 1:] = chirp[1:].conj()[::-1]
    with suspended():
        spectrum = _radix2(b, -1) / m
    chirp.setflags(write=False)
    spectrum.setflags(write=False)
    return chirp, spectrum


def _bluestein(x: np.ndarray, sign: int) -> np.ndarray:
    n = x.shape[-1]
    chirp, filt = _bluestein_tables(n, sign)
    m = filt.shape[0]
    a = np.zeros(x.shape[:-1] + (m,), dtype=complex)
    a[..., :n] = cmul(x, chirp)
    conv = _radix2(cmul(_radix2(a, -1), filt), +1)
    return cmul(conv[..., :n], chirp)


def _transform_last(x: np.ndarray, inverse: bool) -> np.ndarray:
    n = x.shape[-1]
    sign = 1 if inverse else -1
    with stage("dft"):
        if _is_pow2(n):
            out = _radix2(x, sign)
        else:
            out = _bluestein(x, sign)
    if inverse:
        out = out / n
    return out


def _check_direction(direction: str) -> bool:
    if direction not in _DIRECTIONS:
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    return direction == "inverse"


def dft(x, direction: str = "forward", axis: int = -1) -> np.ndarray:
    """Complex DFT of `x` along `axis`.

    Parameters
    ----------
    x : array_like
        Complex samples; other axes are treated as a batch.
    direction : {'forward', 'inverse'}
        The inverse includes the ``1/N`` factor.
    axis : int
        Transform axis.
    """
    inverse = _check_direction(direction)
    x = np.asarray(x, dtype=complex)
    if x.ndim == 0 or x.shape[axis] == 0:
        raise ValueError("cannot transform an empty sequence")
    x = np.moveaxis(x, axis, -1)
    return np.moveaxis(_transform_last(x, inverse), -1, axis)


def dft2d(x, direction: str = "forward") -> np.ndarray:
    """Separable 2-D DFT: every row, then every column."""
    x = np.asarray(x, dtype=complex)
    if x.ndim < 2 or x.shape[-1] == 0 or x.shape[-2] == 0:
        raise ValueError(f"dft2d needs a nonempty grid, got shape {x.shape}")
    return dft(dft(x, direction, axis=-1), direction, axis=-2)


def reflect_periodic(a: np.ndarray, axes=None) -> np.ndarray:
    """Index map ``p -> (-p) mod N`` on each axis; index 0 stays put."""
    a = np.asarray(a)
    axes = range(a.ndim) if axes is None else axes
    for ax in axes:
        a = np.roll(np.flip(a, ax), 1, ax)
    return a


@dataclass(frozen=True, eq=False)
class QSpectrum:
    """e2-QDFT coefficients ``[F_p, G_p]`` stored as two complex arrays.

    Works for 1-D spectra and 2-D spectra alike.
    """

    first: np.ndarray
    second: np.ndarray

    def __post_init__(self):
        first = np.asarray(self.first, dtype=complex)
        second = np.asarray(self.second, dtype=complex)
        if first.shape != second.shape:
            raise ValueError(f"spectrum planes differ in shape: {first.shape} vs {second.shape}")
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.first.shape

    def reversed(self) -> "QSpectrum":
        return QSpectrum(reflect_periodic(self.first), reflect_periodic(self.second))

    def __mul__(self, other: "QSpectrum") -> "QSpectrum":
        if not isinstance(other, QSpectrum):
            return NotImplemented
        return spectral_product(self, other)


QSpectrum2D = QSpectrum


def reverse_spectrum(s: QSpectrum) -> QSpectrum:
    return s.reversed()


def spectral_product(v: QSpectrum, q: QSpectrum) -> QSpectrum:
    """Pointwise (2,2)-model product ``[V1 F - V2 G, V1 G + V2 F]``.

    Four complex multiplications and two complex additions per frequency.
    """
    if v.shape != q.shape:
        raise ValueError(f"spectrum shapes differ: {v.shape} vs {q.shape}")
    with stage("pointwise"):
        first = cmul(v.first, q.first) - cmul(v.second, q.second)
        second = cmul(v.first, q.second) + cmul(v.second, q.first)
    return QSpectrum(first, second)


def qdft_e2(x, direction: str = "forward"):
    """e2-QDFT of a quaternion signal.

    ``forward`` maps a :class:`QuatSignal` to a :class:`QSpectrum`; ``inverse``
    maps a :class:`QSpectrum` back to a :class:`QuatSignal`.
    """
    inverse = _check_direction(direction)
    if inverse:
        if not isinstance(x, QSpectrum) or len(x.shape) != 1:
            raise TypeError("inverse qdft_e2 expects a 1-D QSpectrum")
        if x.shape[0] == 0:
            raise ValueError("cannot transform an empty spectrum")
        planes = dft(np.stack([x.first, x.second]), "inverse")
        return QuatSignal(planes[0], planes[1])
    if not isinstance(x, QuatSignal):
        raise TypeError("forward qdft_e2 expects a QuatSignal")
    planes = dft(np.stack([x.f, x.g]), "forward")
    return QSpectrum(planes[0], planes[1])


def qdft2d_e2(x, direction: str = "forward"):
    """2-D e2-QDFT: componentwise 2-D DFT of the planes of a quaternion image."""
    inverse = _check_direction(direction)
    if inverse:
        if not isinstance(x, QSpectrum) or len(x.shape) != 2:
            raise TypeError("inverse qdft2d_e2 expects a 2-D QSpectrum")
        if 0 in x.shape:
            raise ValueError("cannot transform an empty spectrum")
        planes = dft2d(np.stack([x.first, x.second]), "inverse")
        return QuatImage(planes[0], planes[1])
    if not isinstance(x, QuatImage):
        raise TypeError("forward qdft2d_e2 expects a QuatImage")
    planes = dft2d(np.stack([x.f, x.g]), "forward")
    return QSpectrum(planes[0], planes[1])
