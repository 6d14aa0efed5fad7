import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatcorr.quat22 import (
    E1,
    E2,
    E3,
    E4,
    ZERO,
    Quat22,
    add,
    conj,
    modulus,
    mul,
    root_of_unity,
    scale,
    square,
    to_matrix,
    vec,
)

Q1 = Quat22.from_components(1, 4, -1, 2)
Q2 = Quat22.from_components(2, 5, 3, -1)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
small_ints = st.integers(min_value=-50, max_value=50)
quats = st.builds(Quat22.from_components, finite, finite, finite, finite)
int_quats = st.builds(Quat22.from_components, small_ints, small_ints, small_ints, small_ints)


def close(p, q, rel=1e-12):
    scale_ = max(1.0, modulus(p), modulus(q))
    return all(abs(x - y) <= rel * scale_ for x, y in zip(p.components, q.components))


def test_add_worked_operands():
    assert add(Q1, Q2) == Quat22.from_components(3, 9, 2, 1)
    assert Q1 + ZERO == Q1
    assert Q1 + (-1) * Q1 == ZERO


def test_worked_product():
    assert mul(Q1, Q2) == Quat22.from_components(-17, 6, -5, 10)


def test_worked_matrix_and_det():
    expected = np.array([[1, -4, 1, 2], [4, 1, -2, 1], [-1, -2, 1, -4], [2, -1, 4, 1]])
    np.testing.assert_array_equal(to_matrix(Q1), expected)
    assert np.linalg.det(to_matrix(Q1)) == pytest.approx(340, abs=1e-9)
    np.testing.assert_array_equal(to_matrix(Q1) @ vec(Q2), [-17, 6, -5, 10])


def test_worked_inverse_matrix():
    expected = np.array([[-1, 38, 13, 16], [-38, -1, -16, 13], [-13, -16, -1, 38], [16, -13, -38, -1]]) / 170
    np.testing.assert_allclose(np.linalg.inv(to_matrix(Q1)), expected, atol=1e-12)


def test_identity_matrix():
    np.testing.assert_array_equal(to_matrix(E1), np.eye(4))


def test_matrix_first_column_is_quaternion(rng):
    for _ in range(20):
        q = Quat22.from_components(*rng.normal(size=4))
        np.testing.assert_array_equal(to_matrix(q)[:, 0], vec(q))


def test_matrix_matches_mul_on_random_pairs(rng):
    for _ in range(1000):
        p = Quat22.from_components(*rng.normal(size=4))
        q = Quat22.from_components(*rng.normal(size=4))
        np.testing.assert_allclose(to_matrix(p) @ vec(q), vec(mul(p, q)), rtol=0, atol=1e-14)


@pytest.mark.parametrize(
    "a, b, want",
    [
        (E2, E2, -E1), (E2, E3, E4), (E2, E4, -E3),
        (E3, E2, E4), (E3, E3, -E1), (E3, E4, -E2),
        (E4, E2, -E3), (E4, E3, -E2), (E4, E4, E1),
    ],
)
def test_unit_table(a, b, want):
    assert mul(a, b) == want


def test_zero_divisors():
    assert E1 + E4 != ZERO and E1 - E4 != ZERO
    assert mul(E1 + E4, E1 - E4) == ZERO
    assert abs(np.linalg.det(to_matrix(E1 + E4))) < 1e-12


def test_conj_units():
    assert conj(E2) == -E2
    assert conj(E3) == E3
    assert conj(E4) == -E4


def test_conj_product_form(rng):
    for _ in range(100):
        q = Quat22.from_components(*rng.normal(size=4))
        a1, a2 = q.c1, q.c2
        want = Quat22(abs(a1) ** 2 - abs(a2) ** 2, a1 * a2.conjugate() + a2 * a1.conjugate())
        assert close(mul(q, conj(q)), want)


def test_conj_product_is_real_for_complex_quaternion():
    q = Quat22(3 + 4j, 0)
    assert mul(q, conj(q)) == Quat22(25, 0)


def test_modulus():
    assert modulus(Quat22.from_components(3, 0, 4, 0)) == 5
    for e in (E1, E2, E3, E4):
        assert modulus(e) == 1
    assert modulus(Q1) == pytest.approx(math.sqrt(22), rel=1e-15)


def test_square_units():
    assert square(E4) == E1
    assert square(E2) == -E1


def test_scale():
    assert scale(2, Quat22.from_components(1, 0, 0, 3)) == Quat22.from_components(2, 0, 0, 6)
    assert scale(1, Q1) == Q1
    assert scale(1j, E1) == E2


def test_root_of_unity():
    assert root_of_unity(7, 0) == E1
    assert root_of_unity(4, 1) == Quat22.from_components(0, -1, 0, 0)
    assert root_of_unity(4, 1) == -E2
    assert root_of_unity(9, 9) == E1
    w = root_of_unity(12, 5)
    assert modulus(w) == pytest.approx(1.0, rel=1e-15)
    assert w.c2 == 0
    with pytest.raises(ValueError):
        root_of_unity(0, 1)


def test_complex_embedding_behaves_as_complex():
    a = Quat22(1.5 - 2j, 0)
    b = Quat22(-0.25 + 3j, 0)
    assert mul(a, b) == Quat22((1.5 - 2j) * (-0.25 + 3j), 0)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), complex(0, float("-inf"))])
def test_nonfinite_rejected(bad):
    with pytest.raises(ValueError):
        Quat22(bad, 0)
    with pytest.raises(ValueError):
        Quat22(0, bad)


def test_immutable():
    with pytest.raises(AttributeError):
        Q1.c1 = 0


@given(quats, quats)
def test_commutative_exact(p, q):
    assert mul(p, q) == mul(q, p)


@given(int_quats, int_quats, int_quats)
def test_associative_exact_on_integers(p, q, r):
    assert mul(mul(p, q), r) == mul(p, mul(q, r))


@given(int_quats, int_quats, int_quats)
def test_distributive_exact_on_integers(p, q, r):
    assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))


@given(quats, quats, quats)
def test_associative_float(p, q, r):
    lhs, rhs = mul(mul(p, q), r), mul(p, mul(q, r))
    bound = 1e-12 * max(1.0, 4 * modulus(p) * modulus(q) * modulus(r))
    assert all(abs(x - y) <= bound for x, y in zip(lhs.components, rhs.components))


@given(quats)
def test_square_is_self_product(q):
    assert square(q) == mul(q, q)


@given(quats)
def test_conj_involution(q):
    assert conj(conj(q)) == q


@given(int_quats, int_quats)
def test_matrix_consistency_exact_on_integers(p, q):
    np.testing.assert_array_equal(to_matrix(p) @ vec(q), vec(mul(p, q)))


@given(quats, quats)
def test_matrix_consistency_float(p, q):
    bound = 1e-12 * max(1.0, 2 * modulus(p) * modulus(q))
    np.testing.assert_allclose(to_matrix(p) @ vec(q), vec(mul(p, q)), rtol=0, atol=bound)


@given(quats)
def test_modulus_squared(q):
    assert modulus(q) ** 2 == pytest.approx(abs(q.c1) ** 2 + abs(q.c2) ** 2, rel=1e-14, abs=1e-300)
