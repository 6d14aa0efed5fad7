"""2-D quaternion correlation of images and template-matching peak search.

    r_{n,m} = sum_k sum_l v_{k-n, l-m} q_{k,l}

for a template ``v`` of ``L1 x L2`` pixels and an image ``q`` of ``N1 x N2``
pixels, with zero outside each image. The output covers row lags
``-(L1-1) .. N1-1`` and column lags ``-(L2-1) .. N2-1``. A template cut
from ``q`` at row ``dy`` and column ``dx`` peaks at lag ``(dy, dx)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .corr1d import energies, normalize_componentwise, normalize_global
from .signals import EnergyPair, QuatImage, SizeError

__all__ = [
    "PeakReport",
    "correlate2d_direct",
    "correlate2d_fft",
    "correlate2d",
    "autocorrelate2d",
    "normalize_surface",
    "find_peak",
    "match_template",
]

NORMALIZATIONS = ("none", "componentwise", "global")


def _check_pair(v: QuatImage, q: QuatImage) -> None:
    if not isinstance(v, QuatImage) or not isinstance(q, QuatImage):
        raise TypeError("expected QuatImage inputs")
    (l1, l2), (n1, n2) = v.shape, q.shape
    if l1 > n1 or l2 > n2:
        raise SizeError(f"template {l1}x{l2} does not fit in image {n1}x{n2}")


def _offsets(v: QuatImage) -> tuple[int, int]:
    return v.shape[0] - 1, v.shape[1] - 1


def correlate2d_direct(v: QuatImage, q: QuatImage) -> QuatImage:
    _check_pair(v, q)
    first, second = _kernels.quat_xcorr_direct(v.f, v.g, q.f, q.g)
    return QuatImage(first, second, _offsets(v))


def correlate2d_fft(v: QuatImage, q: QuatImage) -> QuatImage:
    """Correlation via zero-padded 2-D e2-QDFTs.

    Costs six complex 2-D DFTs and ``16 N' M'`` real multiplications in the
    pointwise product, where ``N' x M'`` is the padded size.
    """
    _check_pair(v, q)
    first, second = _kernels.quat_xcorr_fft(v.f, v.g, q.f, q.g)
    return QuatImage(first, second, _offsets(v))


def correlate2d(v: QuatImage, q: QuatImage, method: str = "fft") -> QuatImage:
    if method == "fft":
        return correlate2d_fft(v, q)
    if method == "direct":
        return correlate2d_direct(v, q)
    raise ValueError(f"unknown method {method!r}")


def autocorrelate2d(q: QuatImage) -> QuatImage:
    """Self-correlation from ``r(f,f)``, ``r(g,g)`` and ``r(f,g)`` only.

    The remaining cross term is a lag reflection: ``r_{n,m}(g,f) = r_{-n,-m}(f,g)``.
    """
    if not isinstance(q, QuatImage):
        raise TypeError("expected a QuatImage")
    first, second = _kernels.quat_autocorr_direct(q.f, q.g)
    return QuatImage(first, second, _offsets(q))


@dataclass(frozen=True)
class PeakReport:
    lag: tuple[int, int]
    component_values: tuple[float, float, float, float]
    peak_modulus: float


def normalize_surface(
    r: QuatImage,
    normalization: str = "none",
    ev: EnergyPair | None = None,
    eq: EnergyPair | None = None,
) -> QuatImage:
    """Apply ``none``, ``componentwise`` (K1/K2) or ``global`` (E[v]E[q]) scaling."""
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}, got {normalization!r}")
    if normalization == "none":
        return r
    if ev is None or eq is None:
        raise ValueError(f"{normalization} normalization needs the energies of both inputs")
    if normalization == "componentwise":
        return normalize_componentwise(r, ev, eq)
    return normalize_global(r, ev, eq)


def find_peak(
    r: QuatImage,
    normalization: str = "none",
    ev: EnergyPair | None = None,
    eq: EnergyPair | None = None,
) -> PeakReport:
    """Lag of maximum quaternion modulus after normalization.

    Ties go to the lexicographically smallest ``(row, col)`` lag.
    """
    surface = normalize_surface(r, normalization, ev, eq)
    mod = surface.modulus()
    i, j = np.unravel_index(int(np.argmax(mod)), mod.shape)
    a = surface.f[i, j]
    b = surface.g[i, j]
    return PeakReport(
        lag=(int(i) - surface.lag_offsets[0], int(j) - surface.lag_offsets[1]),
        component_values=(float(a.real), float(a.imag), float(b.real), float(b.imag)),
        peak_modulus=float(mod[i, j]),
    )


def match_template(template: QuatImage, image: QuatImage, normalization: str = "global", method: str = "fft"):
    """Correlate and locate the best match; returns ``(PeakReport, normalized surface)``."""
    r = correlate2d(template, image, method)
    ev, eq = energies(template), energies(image)
    surface = normalize_surface(r, normalization, ev, eq)
    return find_peak(surface), surface
