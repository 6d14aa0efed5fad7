import threading

import numpy as np
import pytest

from quatcorr import corr1d, corr2d, spectral
from quatcorr.counting import CountingError, cmul, counting, counting_scope, is_counting, stage, suspended
from quatcorr.signals import QuatImage, QuatSignal


def test_one_complex_multiply_is_four_real():
    out, c = counting_scope(cmul, 1 + 2j, 3 - 1j)
    assert out == (1 + 2j) * (3 - 1j)
    assert c.complex_multiplications == 1
    assert c.real_multiplications == 4


def test_empty_computation():
    _, c = counting_scope(lambda: None)
    assert c.real_multiplications == 0 and c.complex_multiplications == 0


def test_array_multiply_counts_elements():
    _, c = counting_scope(cmul, np.ones(7), np.ones(7))
    assert c.complex_multiplications == 7


def test_no_scope_no_counting():
    assert not is_counting()
    cmul(1j, 1j)


def test_nested_scope_rejected():
    with counting():
        with pytest.raises(CountingError):
            with counting():
                pass
    # outer scope cleaned up
    assert not is_counting()


def test_cross_thread_tally_rejected():
    errors = []

    def worker():
        try:
            cmul(np.ones(3), np.ones(3))
        except CountingError as exc:
            errors.append(exc)

    with counting() as c:
        t = threading.Thread(target=worker)
        t.start()
        t.join()
    assert len(errors) == 1
    assert c.complex_multiplications == 0


def test_stages_and_suspension():
    with counting() as c:
        with stage("outer"):
            cmul(1, 1)
            with stage("inner"):
                cmul(np.ones(2), 1)
        with suspended():
            cmul(np.ones(5), 1)
    assert c.by_stage["outer"] == 1
    assert c.by_stage["inner"] == 2
    assert c.complex_multiplications == 3


def test_monotone_within_scope():
    seen = []
    with counting() as c:
        for n in (1, 4, 2):
            cmul(np.ones(n), 1)
            seen.append(c.real_multiplications)
    assert seen == sorted(seen)


def test_pointwise_stage_1d():
    rng = np.random.default_rng(3)
    v = QuatSignal.from_components(rng.uniform(-1, 1, (8, 4)))
    q = QuatSignal.from_components(rng.uniform(-1, 1, (9, 4)))
    _, c = counting_scope(corr1d.correlate_fft, v, q)
    assert c.by_stage["pointwise"] == 64
    assert c.stage_real("pointwise") == 256
    _, one = counting_scope(spectral.dft, np.zeros(16, dtype=complex))
    assert c.real_multiplications == 6 * one.real_multiplications + 16 * 16


@pytest.mark.parametrize("L, N", [(1, 1), (2, 3), (5, 13), (16, 64)])
def test_total_formula_1d(L, N):
    rng = np.random.default_rng(L * 100 + N)
    v = QuatSignal.from_components(rng.uniform(-1, 1, (L, 4)))
    q = QuatSignal.from_components(rng.uniform(-1, 1, (N, 4)))
    n = L + N - 1
    _, c = counting_scope(corr1d.correlate_fft, v, q)
    _, one = counting_scope(spectral.dft, np.zeros(n, dtype=complex))
    assert c.stage_real("pointwise") == 16 * n
    assert c.real_multiplications == 6 * one.real_multiplications + 16 * n


def test_total_formula_2d():
    rng = np.random.default_rng(5)
    v = QuatImage.from_components(rng.uniform(-1, 1, (3, 4, 4)))
    q = QuatImage.from_components(rng.uniform(-1, 1, (6, 7, 4)))
    shape = (8, 10)
    _, c = counting_scope(corr2d.correlate2d_fft, v, q)
    _, one = counting_scope(spectral.dft2d, np.zeros(shape, dtype=complex))
    assert c.stage_real("pointwise") == 16 * 80
    assert c.real_multiplications == 6 * one.real_multiplications + 16 * 80


def test_counts_are_data_independent():
    rng = np.random.default_rng(0)
    q = QuatSignal.from_components(rng.uniform(-1, 1, (10, 4)))
    zero = QuatSignal.from_components(np.zeros((10, 4)))
    _, a = counting_scope(corr1d.correlate_direct, q, q)
    _, b = counting_scope(corr1d.correlate_direct, zero, zero)
    assert a.real_multiplications == b.real_multiplications > 0
