"""Netpbm (PGM/PPM, maxval 255) and CSV readers/writers, plus the RGB
quaternion encoding.

Color pixels map to ``q = [(rho, R), (G, B)]`` with channels scaled to
``[0, 1]``; ``rho`` is zero by default or the luminance
``0.299 R + 0.587 G + 0.114 B``.
"""
from __future__ import annotations

import csv
import re
from dataclasses import dataclass

import numpy as np

from .signals import QuatImage, QuatSignal

__all__ = [
    "NetpbmError",
    "SignalFileError",
    "RgbImage",
    "load_image",
    "load_gray",
    "save_ppm",
    "save_pgm",
    "rgb_to_quat",
    "quat_to_rgb",
    "columns_as_quat_signal",
    "load_signal_csv",
    "save_signal_csv",
    "save_surface_csv",
    "load_surface_csv",
    "heatmap",
    "LUMA_WEIGHTS",
]

LUMA_WEIGHTS = (0.299, 0.587, 0.114)
MAXVAL = 255
_FLOAT_FMT = "%.17g"


class NetpbmError(ValueError):
    """Malformed, truncated or unsupported PGM/PPM data."""


class SignalFileError(ValueError):
    """Malformed signal or surface CSV."""


@dataclass(frozen=True, eq=False)
class RgbImage:
    pixels: np.ndarray  # (height, width, 3) uint8

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3 or px.shape[0] == 0 or px.shape[1] == 0:
            raise ValueError(f"RGB pixels must have shape (h, w, 3) with h, w > 0, got {px.shape}")
        if px.dtype != np.uint8:
            if np.any(px < 0) or np.any(px > MAXVAL) or np.any(px != np.round(px)):
                raise ValueError("RGB samples must be integers in [0, 255]")
            px = px.astype(np.uint8)
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    def __eq__(self, other):
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)

    def gray(self) -> np.ndarray:
        return self.pixels.astype(float) @ np.array(LUMA_WEIGHTS)


_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def _read_header(data: bytes):
    """Return (magic, width, height, payload_start) of a netpbm buffer."""
    pos = 0
    fields = []
    for _ in range(4):
        m = _TOKEN.match(data, pos)
        if m is None:
            raise NetpbmError("truncated header")
        fields.append(m.group(1))
        pos = m.end()
    magic = fields[0].decode("ascii", "replace")
    if magic not in ("P2", "P3", "P5", "P6"):
        raise NetpbmError(f"unsupported netpbm magic {magic!r}")
    try:
        width, height, maxval = (int(f) for f in fields[1:])
    except ValueError:
        raise NetpbmError("non-integer header field") from None
    if width <= 0 or height <= 0:
        raise NetpbmError(f"invalid dimensions {width}x{height}")
    if maxval != MAXVAL:
        raise NetpbmError(f"unsupported maxval {maxval} (only 255)")
    if magic in ("P5", "P6"):
        if pos >= len(data) or not data[pos:pos + 1].isspace():
            raise NetpbmError("missing whitespace after header")
        pos += 1
    return magic, width, height, pos


def _read_netpbm(path) -> tuple[str, np.ndarray]:
    with open(path, "rb") as fh:
        data = fh.read()
    magic, width, height, pos = _read_header(data)
    channels = 3 if magic in ("P3", "P6") else 1
    count = width * height * channels
    if magic in ("P5", "P6"):
        payload = data[pos:pos + count]
        if len(payload) < count:
            raise NetpbmError(f"truncated payload: expected {count} bytes, got {len(payload)}")
        values = np.frombuffer(payload, dtype=np.uint8)
    else:
        body = re.sub(rb"#[^\n]*", b" ", data[pos:]).split()
        if len(body) < count:
            raise NetpbmError(f"truncated payload: expected {count} samples, got {len(body)}")
        try:
            values = np.array([int(t) for t in body[:count]])
        except ValueError:
            raise NetpbmError("non-integer sample in ASCII payload") from None
        if values.min() < 0 or values.max() > MAXVAL:
            raise NetpbmError("sample outside [0, 255]")
        values = values.astype(np.uint8)
    shape = (height, width, 3) if channels == 3 else (height, width)
    return magic, values.reshape(shape).copy()


def load_image(path) -> RgbImage:
    """Read a PPM (or PGM, replicated to three channels) as :class:`RgbImage`."""
    magic, px = _read_netpbm(path)
    if px.ndim == 2:
        px = np.repeat(px[..., None], 3, axis=2)
    return RgbImage(px)


def load_gray(path) -> np.ndarray:
    """Read a PGM as a ``(height, width)`` float grid of 0..255 values.

    PPM input is converted with the luminance weights.
    """
    magic, px = _read_netpbm(path)
    if px.ndim == 3:
        return px.astype(float) @ np.array(LUMA_WEIGHTS)
    return px.astype(float)


def _write_netpbm(path, px: np.ndarray, magic: str) -> None:
    height, width = px.shape[:2]
    header = f"{magic}\n{width} {height}\n{MAXVAL}\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        if magic in ("P5", "P6"):
            fh.write(np.ascontiguousarray(px, dtype=np.uint8).tobytes())
        else:
            per_row = px.reshape(height, -1)
            for row in per_row:
                fh.write((" ".join(str(int(x)) for x in row) + "\n").encode("ascii"))


def save_ppm(path, img: RgbImage, binary: bool = True) -> None:
    _write_netpbm(path, img.pixels, "P6" if binary else "P3")


def save_pgm(path, gray, binary: bool = True) -> None:
    gray = np.asarray(gray)
    if gray.ndim != 2:
        raise ValueError("grayscale image must be 2-D")
    if np.any(gray < 0) or np.any(gray > MAXVAL):
        raise ValueError("gray samples must lie in [0, 255]")
    _write_netpbm(path, np.round(gray).astype(np.uint8), "P5" if binary else "P2")


def rgb_to_quat(img: RgbImage, real_part: str = "zero") -> QuatImage:
    """Encode pixels as ``[(rho, R), (G, B)]`` with channels in ``[0, 1]``."""
    rgb = img.pixels.astype(float) / MAXVAL
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    if real_part == "zero":
        rho = np.zeros_like(r)
    elif real_part in ("luminance", "luma"):
        rho = rgb @ np.array(LUMA_WEIGHTS)
    else:
        raise ValueError(f"real_part must be 'zero' or 'luminance', got {real_part!r}")
    return QuatImage(rho + 1j * r, g + 1j * b)


def quat_to_rgb(q: QuatImage) -> RgbImage:
    """Decode the three imaginary units back to 8-bit RGB, clamping to [0, 1]."""
    chans = np.stack([q.f.imag, q.g.real, q.g.imag], axis=-1)
    chans = np.clip(chans, 0.0, 1.0)
    return RgbImage(np.round(chans * MAXVAL).astype(np.uint8))


def columns_as_quat_signal(gray, start_col: int, count: int = 4) -> QuatSignal:
    """Pack four adjacent columns into ``q_n = [(c0[n], c1[n]), (c2[n], c3[n])]``."""
    gray = np.asarray(gray, dtype=float)
    if count != 4:
        raise ValueError("exactly four columns make one quaternion signal")
    if gray.ndim != 2:
        raise ValueError("expected a 2-D grayscale grid")
    if start_col < 0 or start_col + count > gray.shape[1]:
        raise IndexError(f"columns {start_col}..{start_col + count - 1} outside width {gray.shape[1]}")
    cols = gray[:, start_col:start_col + 4]
    return QuatSignal(cols[:, 0] + 1j * cols[:, 1], cols[:, 2] + 1j * cols[:, 3])


# -- CSV -------------------------------------------------------------------


def _parse_row(row, lineno: int, width: int, path) -> list[float]:
    if len(row) != width:
        raise SignalFileError(f"{path}:{lineno}: expected {width} fields, got {len(row)}")
    try:
        return [float(x) for x in row]
    except ValueError:
        raise SignalFileError(f"{path}:{lineno}: non-numeric field in {row!r}") from None


def _data_rows(path):
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if row[0].lstrip().startswith("#"):
                continue
            yield lineno, [x.strip() for x in row]


def load_signal_csv(path) -> QuatSignal:
    """Read rows ``a,b,c,d``.

    A file written with lags (header ``lag,a,b,c,d``) is also accepted; the
    lag column then fixes ``lag_offset``.
    """
    rows = []
    lags = None
    width = 4
    for lineno, row in _data_rows(path):
        if not rows and lags is None and row and row[0].lower() == "lag":
            lags, width = [], 5
            continue
        values = _parse_row(row, lineno, width, path)
        if lags is not None:
            lags.append(values[0])
            values = values[1:]
        rows.append(values)
    if not rows:
        raise SignalFileError(f"{path}: no samples")
    offset = 0
    if lags is not None:
        offset = -int(lags[0])
        expected = np.arange(len(rows)) - offset
        if not np.array_equal(np.asarray(lags), expected):
            raise SignalFileError(f"{path}: lag column is not consecutive")
    return QuatSignal.from_components(np.array(rows), offset)


def save_signal_csv(path, s: QuatSignal, with_lags: bool = False) -> None:
    comps = s.components()
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if with_lags:
            w.writerow(["lag", "a", "b", "c", "d"])
            for lag, row in zip(s.lags, comps):
                w.writerow([int(lag)] + [_FLOAT_FMT % x for x in row])
        else:
            for row in comps:
                w.writerow([_FLOAT_FMT % x for x in row])


def save_surface_csv(path, r: QuatImage) -> None:
    """Header ``surface,rows,cols,row_offset,col_offset`` then one ``a,b,c,d`` row per pixel, row-major."""
    rows, cols = r.shape
    comps = r.components().reshape(-1, 4)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["surface", rows, cols, *r.lag_offsets])
        for row in comps:
            w.writerow([_FLOAT_FMT % x for x in row])


def load_surface_csv(path) -> QuatImage:
    it = _data_rows(path)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise SignalFileError(f"{path}: empty file") from None
    if len(header) != 5 or header[0] != "surface":
        raise SignalFileError(f"{path}:{lineno}: expected header 'surface,rows,cols,row_offset,col_offset'")
    try:
        rows, cols, ro, co = (int(x) for x in header[1:])
    except ValueError:
        raise SignalFileError(f"{path}:{lineno}: non-integer header field") from None
    values = [_parse_row(row, n, 4, path) for n, row in it]
    if len(values) != rows * cols:
        raise SignalFileError(f"{path}: expected {rows * cols} pixels, got {len(values)}")
    return QuatImage.from_components(np.array(values).reshape(rows, cols, 4), (ro, co))


def heatmap(r: QuatImage) -> np.ndarray:
    """Min-max scaled modulus of a surface as 0..255 gray levels."""
    mod = r.modulus()
    lo, hi = float(mod.min()), float(mod.max())
    if hi == lo:
        return np.zeros(mod.shape)
    return (mod - lo) / (hi - lo) * MAXVAL

