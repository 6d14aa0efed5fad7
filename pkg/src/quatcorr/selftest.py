"""Built-in checks: a worked multiplication, the unit table, and
small-size oracle comparisons. Used by ``quatcorr selftest``."""
from __future__ import annotations

import numpy as np

from . import corr1d, corr2d, spectral
from .counting import counting_scope
from .hamilton import QuatH, correlate_direct_13, mul_ij
from .quat22 import E1, E2, E3, E4, ZERO, Quat22, mul, to_matrix
from .signals import QuatImage, QuatSignal

SEED = 20240917

# row unit times column unit, over (e2, e3, e4)
UNIT_TABLE = {
    ("e2", "e2"): -E1, ("e2", "e3"): E4, ("e2", "e4"): -E3,
    ("e3", "e2"): E4, ("e3", "e3"): -E1, ("e3", "e4"): -E2,
    ("e4", "e2"): -E3, ("e4", "e3"): -E2, ("e4", "e4"): E1,
}
UNITS = {"e2": E2, "e3": E3, "e4": E4}


def _max_rel(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), np.finfo(float).tiny)
    return float(np.max(np.abs(a - b)) / scale)


def random_signal(rng, n: int) -> QuatSignal:
    return QuatSignal.from_components(rng.uniform(-1, 1, size=(n, 4)))


def random_image(rng, rows: int, cols: int) -> QuatImage:
    return QuatImage.from_components(rng.uniform(-1, 1, size=(rows, cols, 4)))


def _check_product():
    p = mul(Quat22.from_components(1, 4, -1, 2), Quat22.from_components(2, 5, 3, -1))
    return p == Quat22.from_components(-17, 6, -5, 10), repr(p)


def _check_det():
    det = float(np.linalg.det(to_matrix(Quat22.from_components(1, 4, -1, 2))))
    return abs(det - 340) <= 1e-9, f"det M = {det:.12g}"


def _check_table():
    bad = [f"{a}*{b}" for (a, b), want in UNIT_TABLE.items() if mul(UNITS[a], UNITS[b]) != want]
    return not bad, f"{len(UNIT_TABLE) - len(bad)}/9 entries" + (f", wrong: {bad}" if bad else "")


def _check_zero_divisor():
    p = mul(E1 + E4, E1 - E4)
    return p == ZERO, repr(p)


def _check_hamilton():
    i, j, k = QuatH(0, 1, 0, 0), QuatH(0, 0, 1, 0), QuatH(0, 0, 0, 1)
    ok = mul_ij(i, j) == k and mul_ij(j, i) == -k
    return ok, "ij = k, ji = -k"


def _check_dft(rng):
    worst = 0.0
    for n in (1, 2, 3, 5, 7, 8, 12, 13, 16):
        x = rng.normal(size=n) + 1j * rng.normal(size=n)
        k = np.arange(n)
        naive = np.exp(-2j * np.pi * np.outer(k, k) / n) @ x
        worst = max(worst, float(np.max(np.abs(spectral.dft(x) - naive))))
    return worst <= 1e-10, f"max abs error {worst:.3g}"


def _check_corr1d(rng):
    worst = 0.0
    for L, N in ((1, 1), (1, 5), (3, 7), (4, 4), (5, 16)):
        v, q = random_signal(rng, L), random_signal(rng, N)
        a, b = corr1d.correlate_direct(v, q), corr1d.correlate_fft(v, q)
        worst = max(worst, _max_rel(a.components(), b.components()))
    return worst <= 1e-9, f"max rel deviation {worst:.3g}"


def _check_corr2d(rng):
    worst = 0.0
    for (l1, l2), (n1, n2) in (((1, 1), (1, 1)), ((2, 3), (4, 5)), ((3, 3), (6, 7))):
        v, q = random_image(rng, l1, l2), random_image(rng, n1, n2)
        a, b = corr2d.correlate2d_direct(v, q), corr2d.correlate2d_fft(v, q)
        worst = max(worst, _max_rel(a.components(), b.components()))
    return worst <= 1e-9, f"max rel deviation {worst:.3g}"


def _check_time_reversal(rng):
    worst = 0.0
    for n in (1, 2, 5, 8, 16):
        v = random_signal(rng, n)
        lhs = spectral.qdft_e2(corr1d.time_reversal(v))
        rhs = spectral.reverse_spectrum(spectral.qdft_e2(v))
        worst = max(worst, _max_rel(np.stack([lhs.first, lhs.second]), np.stack([rhs.first, rhs.second])))
    return worst <= 1e-9, f"max rel deviation {worst:.3g}"


def _check_counts(rng):
    v, q = random_signal(rng, 8), random_signal(rng, 9)
    n = 16
    _, one = counting_scope(spectral.dft, np.ones(n, dtype=complex))
    _, total = counting_scope(corr1d.correlate_fft, v, q)
    point = total.stage_real("pointwise")
    ok = point == 16 * n and total.real_multiplications == 6 * one.real_multiplications + 16 * n
    return ok, f"pointwise {point}, total {total.real_multiplications}, 6*m_DFT+16N' = {6 * one.real_multiplications + 16 * n}"


def _check_models_differ(rng):
    v, q = random_signal(rng, 4), random_signal(rng, 9)
    a = corr1d.correlate_direct(v, q).components()
    b = correlate_direct_13(v, q).components()
    diff = float(np.max(np.abs(a - b)))
    return diff > 1e-3, f"max difference {diff:.3g}"


def run_checks(jetplane=None) -> list[tuple[str, bool, str]]:
    """Run every check; `jetplane` is an optional grayscale grid for the column experiment."""
    rng = np.random.default_rng(SEED)
    checks = [
        ("product [(1,4),(-1,2)]*[(2,5),(3,-1)]", _check_product),
        ("det of multiplication matrix = 340", _check_det),
        ("unit product table", _check_table),
        ("zero divisor (1+e4)(1-e4) = 0", _check_zero_divisor),
        ("(1,3)-model ij = -ji = k", _check_hamilton),
        ("dft vs naive dft", lambda: _check_dft(rng)),
        ("corr1d fft vs direct", lambda: _check_corr1d(rng)),
        ("corr2d fft vs direct", lambda: _check_corr2d(rng)),
        ("time-reversal spectrum", lambda: _check_time_reversal(rng)),
        ("operation counts", lambda: _check_counts(rng)),
        ("(1,3) and (2,2) correlations differ", lambda: _check_models_differ(rng)),
    ]
    results = []
    for name, fn in checks:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    if jetplane is not None:
        from .experiments import column_experiment

        results.extend(column_experiment(jetplane).checks())
    return results
