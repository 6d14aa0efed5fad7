"""Independent brute-force oracles. Nothing here calls the correlation or
transform code under test."""
import numpy as np

from quatcorr.quat22 import Quat22, mul


def rand_quat(rng, scale=1.0):
    return Quat22.from_components(*rng.uniform(-scale, scale, 4))


def brute_corr1d(v, q):
    """r_n = sum_k v_{k-n} q_k with the quaternion product, lags -(L-1)..(N-1)."""
    L, N = len(v), len(q)
    out = []
    for n in range(-(L - 1), N):
        acc = Quat22()
        for k in range(N):
            if 0 <= k - n < L:
                acc = acc + mul(v[k - n], q[k])
        out.append(acc.components)
    return np.array(out)


def brute_corr2d(v, q):
    """Quadruple loop over (n, m, k, l)."""
    (L1, L2), (N1, N2) = v.shape, q.shape
    out = np.zeros((N1 + L1 - 1, N2 + L2 - 1, 4))
    for n in range(-(L1 - 1), N1):
        for m in range(-(L2 - 1), N2):
            acc = Quat22()
            for k in range(N1):
                for l in range(N2):
                    if 0 <= k - n < L1 and 0 <= l - m < L2:
                        acc = acc + mul(v[k - n, l - m], q[k, l])
            out[n + L1 - 1, m + L2 - 1] = acc.components
    return out


def hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    v1, v2 = np.array([b1, c1, d1]), np.array([b2, c2, d2])
    real = a1 * a2 - v1 @ v2
    vec = a1 * v2 + a2 * v1 + np.cross(v1, v2)
    return np.array([real, *vec])


def brute_corr13(v, q):
    """r_n = sum_k q_k v_{k-n} with the Hamilton product, q on the left."""
    L, N = len(v), len(q)
    out = []
    for n in range(-(L - 1), N):
        acc = np.zeros(4)
        for k in range(N):
            if 0 <= k - n < L:
                acc = acc + hamilton(q[k], v[k - n])
        out.append(acc)
    return np.array(out)


def naive_dft(x, inverse=False):
    x = np.asarray(x, dtype=complex)
    n = len(x)
    k = np.arange(n)
    sign = 1 if inverse else -1
    out = np.exp(sign * 2j * np.pi * np.outer(k, k) / n) @ x
    return out / n if inverse else out


def cyclic_corr(v_planes, q_planes):
    """Periodic r_n = sum_k v_{(k-n) mod N} q_k via numpy rolls, planes (f, g)."""
    v1, v2 = v_planes
    f, g = q_planes
    n = len(f)
    first = np.empty(n, dtype=complex)
    second = np.empty(n, dtype=complex)
    for s in range(n):
        a, b = np.roll(v1, s), np.roll(v2, s)  # a[k] = v1[(k - s) mod n]
        first[s] = np.sum(a * f - b * g)
        second[s] = np.sum(a * g + b * f)
    return first, second


def max_rel(a, b):
    a, b = np.asarray(a), np.asarray(b)
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300)
    return float(np.max(np.abs(a - b)) / scale)


def isolated_patch_image(rng, shape=(40, 48), patch=(10, 12), offset=(7, 19)):
    """Black canvas with one random multi-colored patch at `offset` (row, col)."""
    px = np.zeros(shape + (3,), dtype=np.uint8)
    dy, dx = offset
    px[dy:dy + patch[0], dx:dx + patch[1]] = rng.integers(0, 256, patch + (3,))
    return px
