"""1-D quaternion cross-correlation in the (2,2)-model.

For ``v = [v1, v2]`` of length ``L`` and ``q = [f, g]`` of length ``N``
(``L <= N``) the correlation is

    r_n = sum_k v_{k-n} q_k,      n = -(L-1) .. (N-1)

with the (2,2)-model product and **no conjugation**. Expanding the product
gives four ordinary complex correlations,

    r_n = [r_n(v1, f) - r_n(v2, g), r_n(v1, g) + r_n(v2, f)]

Outputs are :class:`QuatSignal` objects of length ``N + L - 1`` whose
``lag_offset`` is ``L - 1``.
"""
from __future__ import annotations

import numpy as np

from . import _kernels
from .signals import EnergyPair, NormalizationError, QuatImage, QuatSignal, SizeError, with_planes
from .spectral import reflect_periodic

__all__ = [
    "time_reversal",
    "correlate_direct",
    "correlate_fft",
    "correlate",
    "autocorrelate",
    "energies",
    "normalization_constants",
    "normalize_componentwise",
    "normalize_global",
]


def _check_pair(v: QuatSignal, q: QuatSignal) -> None:
    if not isinstance(v, QuatSignal) or not isinstance(q, QuatSignal):
        raise TypeError("expected QuatSignal inputs")
    if len(v) > len(q):
        raise SizeError(f"template length {len(v)} exceeds signal length {len(q)}")


def time_reversal(v: QuatSignal) -> QuatSignal:
    """Periodic time reversal ``v_n -> v_{(N-n) mod N}``."""
    return with_planes(v, reflect_periodic(v.f), reflect_periodic(v.g))


def correlate_direct(v: QuatSignal, q: QuatSignal) -> QuatSignal:
    """Correlation by direct summation of the four component correlations."""
    _check_pair(v, q)
    first, second = _kernels.quat_xcorr_direct(v.f, v.g, q.f, q.g)
    return QuatSignal(first, second, len(v) - 1)


def correlate_fft(v: QuatSignal, q: QuatSignal) -> QuatSignal:
    """Correlation through zero-padded e2-QDFTs of length ``N + L - 1``.

    Uses six complex DFTs (four forward, two inverse) and ``4 (N + L - 1)``
    complex multiplications for the pointwise spectrum product.
    """
    _check_pair(v, q)
    first, second = _kernels.quat_xcorr_fft(v.f, v.g, q.f, q.g)
    return QuatSignal(first, second, len(v) - 1)


def correlate(v: QuatSignal, q: QuatSignal, method: str = "fft") -> QuatSignal:
    if method == "fft":
        return correlate_fft(v, q)
    if method == "direct":
        return correlate_direct(v, q)
    raise ValueError(f"unknown method {method!r}")


def autocorrelate(q: QuatSignal) -> QuatSignal:
    """``[r(f,f) - r(g,g), r(f,g) + r(g,f)]``, lags ``-(N-1) .. (N-1)``."""
    if not isinstance(q, QuatSignal):
        raise TypeError("expected a QuatSignal")
    first, second = _kernels.quat_autocorr_direct(q.f, q.g)
    return QuatSignal(first, second, len(q) - 1)


def energies(q: QuatSignal | QuatImage) -> EnergyPair:
    """Root energies of the two complex planes.

    For complex planes ``|.|^2`` is summed, so both values are real and
    nonnegative. Works on images as well, summing over all pixels.
    """
    return EnergyPair(
        float(np.sqrt(np.sum(np.abs(q.f) ** 2))),
        float(np.sqrt(np.sum(np.abs(q.g) ** 2))),
    )


def normalization_constants(ev: EnergyPair, eq: EnergyPair) -> tuple[float, float]:
    """``K1 = E[f]E[v1] + E[g]E[v2]`` and ``K2 = E[g]E[v1] + E[f]E[v2]``."""
    k1 = eq.e_f * ev.e_f + eq.e_g * ev.e_g
    k2 = eq.e_g * ev.e_f + eq.e_f * ev.e_g
    return k1, k2


def _divide_plane(plane: np.ndarray, k: float, which: str) -> np.ndarray:
    if k != 0:
        return plane / k
    if np.any(plane != 0):
        raise NormalizationError(f"{which} normalization constant is zero but the {which} component is not")
    return np.zeros_like(plane)


def normalize_componentwise(r, ev: EnergyPair, eq: EnergyPair):
    """Divide the first plane of `r` by ``K1`` and the second by ``K2``.

    `ev` are the energies of the template, `eq` of the signal. A zero
    constant over an identically zero plane gives zero.
    """
    k1, k2 = normalization_constants(ev, eq)
    return with_planes(r, _divide_plane(r.f, k1, "first"), _divide_plane(r.g, k2, "second"))


def _total(e) -> float:
    return e.total if isinstance(e, EnergyPair) else float(e)


def normalize_global(r, e_v, e_q):
    """Divide all of `r` by ``E[v] E[q]``.

    `e_v` and `e_q` are either total energies or :class:`EnergyPair` values.
    """
    denom = _total(e_v) * _total(e_q)
    if not denom > 0:
        raise NormalizationError("global normalization needs inputs with nonzero energy")
    return with_planes(r, r.f / denom, r.g / denom)
