"""Reproduction of the four-column grayscale experiment.

Two quaternion signals are packed from columns ``80..83`` and ``90..93`` of
a 512x512 grayscale image (raw 0..255 values), correlated, and normalized
with the componentwise K1/K2 constants. The image itself is not shipped.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corr1d import correlate_fft, energies, normalization_constants, normalize_componentwise
from .imageio import columns_as_quat_signal

# reference values for the "jetplane" image
JETPLANE_PEAK = 0.9696
JETPLANE_K1 = 5.7722e7
JETPLANE_GLOBAL = 5.7577e7
JETPLANE_PEAK_TOL = 5e-4
JETPLANE_K1_RTOL = 1e-3
JETPLANE_SIDE_BOUND = 0.011


@dataclass(frozen=True)
class ColumnExperiment:
    k1: float
    k2: float
    global_constant: float
    peak_value: float
    peak_lag: int
    side_max: float  # largest |value| of the first three components

    def checks(self) -> list[tuple[str, bool, str]]:
        return [
            (
                "jetplane peak of fourth component",
                abs(self.peak_value - JETPLANE_PEAK) <= JETPLANE_PEAK_TOL and self.peak_lag == 0,
                f"{self.peak_value:.12g} at lag {self.peak_lag}",
            ),
            (
                "jetplane K1",
                abs(self.k1 - JETPLANE_K1) <= JETPLANE_K1_RTOL * JETPLANE_K1,
                f"{self.k1:.12g}",
            ),
            (
                "jetplane first three components bounded",
                self.side_max <= JETPLANE_SIDE_BOUND,
                f"max |.| = {self.side_max:.12g}",
            ),
        ]


def column_experiment(gray, q_start: int = 80, v_start: int = 90) -> ColumnExperiment:
    q = columns_as_quat_signal(gray, q_start)
    v = columns_as_quat_signal(gray, v_start)
    ev, eq = energies(v), energies(q)
    k1, k2 = normalization_constants(ev, eq)
    r = normalize_componentwise(correlate_fft(v, q), ev, eq)
    comps = r.components()
    i = int(np.argmax(comps[:, 3]))
    return ColumnExperiment(
        k1=k1,
        k2=k2,
        global_constant=ev.total * eq.total,
        peak_value=float(comps[i, 3]),
        peak_lag=int(r.lags[i]),
        side_max=float(np.max(np.abs(comps[:, :3]))),
    )
