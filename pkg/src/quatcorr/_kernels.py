"""Dimension-agnostic correlation kernels shared by the 1-D and 2-D modules.

Correlation here is the unconjugated sum ``r_n = sum_k x_{k-n} y_k`` over
the full lag range ``-(L-1) .. (N-1)`` per axis. Output index ``i`` holds lag
``i - (L-1)``.
"""
from __future__ import annotations

import numpy as np

from .counting import cmul
from .spectral import QSpectrum, dft, spectral_product


def full_shape(template_shape, data_shape) -> tuple[int, ...]:
    return tuple(n + l - 1 for l, n in zip(template_shape, data_shape))


def xcorr_direct(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Aperiodic complex cross-correlation by direct summation."""
    out = np.zeros(full_shape(x.shape, y.shape), dtype=complex)
    for j in np.ndindex(*x.shape):
        window = tuple(slice(l - 1 - jj, l - 1 - jj + n) for l, jj, n in zip(x.shape, j, y.shape))
        out[window] += cmul(x[j], y)
    return out


def quat_xcorr_direct(v1, v2, f, g) -> tuple[np.ndarray, np.ndarray]:
    """Four component correlations combined as ``[r(v1,f) - r(v2,g), r(v1,g) + r(v2,f)]``."""
    first = xcorr_direct(v1, f) - xcorr_direct(v2, g)
    second = xcorr_direct(v1, g) + xcorr_direct(v2, f)
    return first, second


def reflect_lags(r: np.ndarray) -> np.ndarray:
    """``r_n -> r_{-n}`` on a full-range output of a self-correlation."""
    return r[tuple(slice(None, None, -1) for _ in range(r.ndim))]


def quat_autocorr_direct(f, g) -> tuple[np.ndarray, np.ndarray]:
    """Self-correlation using ``r_n(g, f) = r_{-n}(f, g)``: three distinct correlations."""
    rff = xcorr_direct(f, f)
    rgg = xcorr_direct(g, g)
    rfg = xcorr_direct(f, g)
    return rff - rgg, rfg + reflect_lags(rfg)


def _pad(a: np.ndarray, shape) -> np.ndarray:
    out = np.zeros(shape, dtype=complex)
    out[tuple(slice(0, s) for s in a.shape)] = a
    return out


def _dftn(x: np.ndarray, direction: str, ndim: int) -> np.ndarray:
    # x carries a leading plane axis; transform the trailing ndim axes
    for ax in range(x.ndim - 1, x.ndim - 1 - ndim, -1):
        x = dft(x, direction, axis=ax)
    return x


def quat_xcorr_fft(v1, v2, f, g) -> tuple[np.ndarray, np.ndarray]:
    """Same result as :func:`quat_xcorr_direct` via zero-padded e2-QDFTs.

    The spectrum of the correlation is ``V_{(-p) mod N'} Q_p`` with the
    (2,2)-model product taken pointwise.
    """
    ndim = f.ndim
    shape = full_shape(v1.shape, f.shape)
    vs = _dftn(np.stack([_pad(v1, shape), _pad(v2, shape)]), "forward", ndim)
    qs = _dftn(np.stack([_pad(f, shape), _pad(g, shape)]), "forward", ndim)
    prod = spectral_product(QSpectrum(vs[0], vs[1]).reversed(), QSpectrum(qs[0], qs[1]))
    r = _dftn(np.stack([prod.first, prod.second]), "inverse", ndim)
    shifts = tuple(l - 1 for l in v1.shape)
    r = np.roll(r, shifts, axis=tuple(range(1, ndim + 1)))
    return r[0], r[1]
