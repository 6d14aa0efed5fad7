"""Quaternion cross-correlation of signals and color images in the
commutative (2,2)-model, with direct and FFT evaluation paths, a (1,3)-model
baseline, and multiplication counting."""
from .corr1d import (
    autocorrelate,
    correlate,
    correlate_direct,
    correlate_fft,
    energies,
    normalize_componentwise,
    normalize_global,
    time_reversal,
)
from .corr2d import PeakReport, autocorrelate2d, correlate2d, correlate2d_direct, correlate2d_fft, find_peak
from .counting import OpCounter, counting, counting_scope
from .hamilton import QuatH, correlate_direct_13, mul_ij, mul_ji
from .quat22 import E1, E2, E3, E4, Quat22, conj, modulus, mul, square, to_matrix
from .signals import EnergyPair, NormalizationError, QuatImage, QuatSignal, SizeError
from .spectral import QSpectrum, dft, dft2d, qdft2d_e2, qdft_e2, reverse_spectrum

__version__ = "0.1.0"
