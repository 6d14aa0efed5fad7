"""Containers for quaternion signals and images.

Both store the two complex planes ``f`` and ``g`` of ``q = [f, g]`` as numpy
arrays, plus the array index that holds lag zero (used by correlation
outputs; raw data has offset zero).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .quat22 import Quat22

__all__ = [
    "QuatSignal",
    "QuatImage",
    "EnergyPair",
    "SizeError",
    "NormalizationError",
    "as_plane",
    "with_planes",
]


def as_plane(x, ndim: int, name: str) -> np.ndarray:
    arr = np.array(x, dtype=complex, copy=True)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class QuatSignal:
    """1-D sequence of (2,2)-model quaternions ``q_n = [f_n, g_n]``.

    ``lag_offset`` is the index of lag 0, so sample ``i`` sits at lag
    ``i - lag_offset``.
    """

    f: np.ndarray
    g: np.ndarray
    lag_offset: int = 0

    def __post_init__(self):
        f = as_plane(self.f, 1, "f")
        g = as_plane(self.g, 1, "g")
        if f.shape != g.shape:
            raise ValueError(f"component shapes differ: {f.shape} vs {g.shape}")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "lag_offset", int(self.lag_offset))

    @classmethod
    def from_quats(cls, samples: Iterable[Quat22], lag_offset: int = 0) -> "QuatSignal":
        samples = list(samples)
        return cls([s.c1 for s in samples], [s.c2 for s in samples], lag_offset)

    @classmethod
    def from_components(cls, comps, lag_offset: int = 0) -> "QuatSignal":
        """Build from an ``(n, 4)`` array of real ``(a, b, c, d)`` rows."""
        comps = np.asarray(comps, dtype=float)
        if comps.ndim != 2 or comps.shape[1] != 4:
            raise ValueError(f"expected shape (n, 4), got {comps.shape}")
        return cls(comps[:, 0] + 1j * comps[:, 1], comps[:, 2] + 1j * comps[:, 3], lag_offset)

    @classmethod
    def real(cls, x, lag_offset: int = 0) -> "QuatSignal":
        """Embed a real (or complex) sequence as ``[x, 0]``."""
        x = np.asarray(x, dtype=complex)
        return cls(x, np.zeros_like(x), lag_offset)

    def __len__(self) -> int:
        return self.f.shape[0]

    def __getitem__(self, i: int) -> Quat22:
        return Quat22(self.f[i], self.g[i])

    def __iter__(self):
        return (Quat22(a, b) for a, b in zip(self.f, self.g))

    @property
    def samples(self) -> list[Quat22]:
        return list(self)

    @property
    def lags(self) -> np.ndarray:
        return np.arange(len(self)) - self.lag_offset

    def at_lag(self, n: int) -> Quat22:
        i = n + self.lag_offset
        if not 0 <= i < len(self):
            raise IndexError(f"lag {n} outside [{-self.lag_offset}, {len(self) - 1 - self.lag_offset}]")
        return self[i]

    def components(self) -> np.ndarray:
        """``(n, 4)`` real array of ``(a, b, c, d)`` per sample."""
        return np.stack([self.f.real, self.f.imag, self.g.real, self.g.imag], axis=-1)

    def modulus(self) -> np.ndarray:
        return np.sqrt(np.abs(self.f) ** 2 + np.abs(self.g) ** 2)


@dataclass(frozen=True, eq=False)
class QuatImage:
    """2-D grid of (2,2)-model quaternions ``q_{n,m} = [f_{n,m}, g_{n,m}]``.

    ``lag_offsets`` is ``(row, col)`` index of lag ``(0, 0)``.
    """

    f: np.ndarray
    g: np.ndarray
    lag_offsets: tuple[int, int] = field(default=(0, 0))

    def __post_init__(self):
        f = as_plane(self.f, 2, "f")
        g = as_plane(self.g, 2, "g")
        if f.shape != g.shape:
            raise ValueError(f"component shapes differ: {f.shape} vs {g.shape}")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "g", g)
        r, c = self.lag_offsets
        object.__setattr__(self, "lag_offsets", (int(r), int(c)))

    @classmethod
    def from_components(cls, comps, lag_offsets=(0, 0)) -> "QuatImage":
        """Build from a ``(rows, cols, 4)`` real array."""
        comps = np.asarray(comps, dtype=float)
        if comps.ndim != 3 or comps.shape[2] != 4:
            raise ValueError(f"expected shape (rows, cols, 4), got {comps.shape}")
        return cls(comps[..., 0] + 1j * comps[..., 1], comps[..., 2] + 1j * comps[..., 3], lag_offsets)

    @classmethod
    def real(cls, x, lag_offsets=(0, 0)) -> "QuatImage":
        x = np.asarray(x, dtype=complex)
        return cls(x, np.zeros_like(x), lag_offsets)

    @property
    def shape(self) -> tuple[int, int]:
        return self.f.shape

    def __getitem__(self, idx: tuple[int, int]) -> Quat22:
        return Quat22(self.f[idx], self.g[idx])

    def at_lag(self, n: int, m: int) -> Quat22:
        i, j = n + self.lag_offsets[0], m + self.lag_offsets[1]
        rows, cols = self.shape
        if not (0 <= i < rows and 0 <= j < cols):
            raise IndexError(f"lag ({n}, {m}) out of range")
        return self[i, j]

    def row_lags(self) -> np.ndarray:
        return np.arange(self.shape[0]) - self.lag_offsets[0]

    def col_lags(self) -> np.ndarray:
        return np.arange(self.shape[1]) - self.lag_offsets[1]

    def components(self) -> np.ndarray:
        return np.stack([self.f.real, self.f.imag, self.g.real, self.g.imag], axis=-1)

    def modulus(self) -> np.ndarray:
        return np.sqrt(np.abs(self.f) ** 2 + np.abs(self.g) ** 2)


@dataclass(frozen=True)
class EnergyPair:
    """Energies ``E[f] = sqrt(sum |f|^2)`` and ``E[g]`` of the two planes."""

    e_f: float
    e_g: float

    @property
    def total(self) -> float:
        """``E[q] = sqrt(E[f]^2 + E[g]^2)``."""
        return float(np.hypot(self.e_f, self.e_g))



class SizeError(ValueError):
    """Template longer (or larger) than the signal it is matched against."""


class NormalizationError(ValueError):
    """A normalization constant is zero while the quantity it divides is not."""


def with_planes(like, f, g, offsets=None):
    """New signal/image of the same kind as `like` with planes `f`, `g`."""
    if isinstance(like, QuatSignal):
        return QuatSignal(f, g, like.lag_offset if offsets is None else offsets)
    return QuatImage(f, g, like.lag_offsets if offsets is None else offsets)
