import cmath
import math

import numpy as np
import pytest

from alphasectors import (
    Q_STAR,
    Q_TILDE,
    QSeriesSpec,
    SeriesFunction,
    alpha_points,
    disturbed_exp_coeffs,
    partial_theta_coeffs,
    rotate_half_i,
    sokal_poly_coeffs,
    split_even_odd,
    theta_split_check,
    truncate_series,
)


def test_disturbed_exp_examples():
    q = 0.37 + 0.2j
    c = disturbed_exp_coeffs(q, 3)
    assert c == [1, 1, q / 2, q**3 / 6]
    assert disturbed_exp_coeffs(1.0, 5) == [1 / math.factorial(n) for n in range(6)]


def test_disturbed_exp_cauchy_identity():
    # F'(z) = F(qz): (n+1) c_{n+1} = q^n c_n
    for q in (0.5, 0.9j, 0.3 - 0.7j):
        c = disturbed_exp_coeffs(q, 40)
        for n in range(40):
            lhs = (n + 1) * c[n + 1]
            rhs = q**n * c[n]
            # the two sides take different pow paths; rounding grows with the exponent
            assert abs(lhs - rhs) <= 1e-12 * max(abs(rhs), 1e-300)


def test_sokal_poly_examples():
    q = 0.4 + 0.1j
    assert sokal_poly_coeffs(q, 2) == [1, 2, q]
    assert sokal_poly_coeffs(1.0, 6) == [math.comb(6, n) for n in range(7)]


def test_sokal_poly_approximates_disturbed_exp():
    q = 0.6
    target = disturbed_exp_coeffs(q, 6)
    for N in (50, 200, 800):
        c = sokal_poly_coeffs(q, N)
        scaled = [c[n] / N**n for n in range(7)]
        err = max(abs(s - t) for s, t in zip(scaled, target))
        assert err < 3.0 / N


def test_partial_theta_examples():
    q = 0.8j
    assert partial_theta_coeffs(q, 4) == [1, 1, q, q**3, q**6]
    assert partial_theta_coeffs(0.0, 4) == [1, 1, 0, 0, 0]


def test_partial_theta_recurrence():
    for q in (0.5, 0.7j, -0.4 + 0.3j):
        c = partial_theta_coeffs(q, 50)
        for n in range(50):
            assert abs(c[n + 1] - q**n * c[n]) <= 1e-12 * max(abs(c[n + 1]), 1e-300)


def test_split_even_odd_basic():
    f, g = split_even_odd([1, 2, 3, 4])
    assert f == [1, 3] and g == [2, 4]
    f, g = split_even_odd([1, 2, 3, 4, 5], odd_sign=-1)
    assert f == [1, 3, 5] and g == [2, -4]
    with pytest.raises(ValueError):
        split_even_odd([0, 1, 2])


def test_split_even_odd_partial_theta_identity():
    qc = complex(0.6)
    c = partial_theta_coeffs(qc, 41)
    f, g = split_even_odd(c)
    for n in range(len(f)):
        assert f[n] == qc ** (2 * n * n - n)
    for n in range(len(g)):
        assert g[n] == qc ** (2 * n * n + n)


def test_rotate_half_i_structure():
    f = [1.0, 2.0, 3.0, 4.0]
    out = rotate_half_i(f, +1)
    mubar = cmath.exp(-1j * math.pi / 4)
    assert out[0] == 1 and out[2] == 3
    assert abs(out[1] - 2 * mubar) < 1e-15
    assert abs(out[3] + 4 * mubar) < 1e-15


@pytest.mark.parametrize("sign", [+1, -1])
def test_rotate_half_i_identity(sign):
    # h(conj(mu) z) evaluated two ways agrees to 1e-12 at random points
    rng = np.random.default_rng(99)
    f = list(rng.uniform(0, 1, 24))
    out = rotate_half_i(f, sign)
    mu = cmath.exp(sign * 1j * math.pi / 4)
    i_s = 1j if sign > 0 else -1j
    for _ in range(200):
        z = complex(rng.normal(), rng.normal()) * 0.9
        direct = sum(i_s ** ((n * (n - 1) // 2) % 4) * f[n] * (z / mu) ** n for n in range(len(f)))
        via = sum(c * z**n for n, c in enumerate(out))
        assert abs(direct - via) <= 1e-12 * (1 + abs(direct))


def test_theta_split_check_values():
    for q in (0.3, 0.5, 0.7, 0.9):
        assert theta_split_check(q, 20)
    assert theta_split_check(0.35 + 0.2j, 12)


def test_theta_split_check_rejects_perturbation():
    q = 0.5
    coeffs = partial_theta_coeffs(q, 41)
    coeffs[7] *= 1 + 1e-9
    assert theta_split_check(q, 20, coeffs=coeffs) is False


def test_qseries_spec_validation():
    with pytest.raises(ValueError):
        QSeriesSpec("partial-theta", 1.5, 10)
    with pytest.raises(ValueError):
        QSeriesSpec("sokal-poly", 1.0, 10)
    with pytest.raises(ValueError):
        QSeriesSpec("unknown", 0.5, 10)
    spec = QSeriesSpec("partial-theta", 0.5j, 6)
    assert spec.coefficients() == partial_theta_coeffs(0.5j, 6)


def test_split_halves_have_negative_zeros_below_threshold():
    # for 0 < q <= Q_TILDE^(1/4) both split halves keep all certified roots
    # on the negative real axis
    assert abs(Q_STAR - Q_TILDE**0.25) < 1e-9
    for q in (0.4, 0.7, Q_STAR):
        c = partial_theta_coeffs(q, 61)
        f, g = split_even_odd(c)
        for half in (f, g):
            series = truncate_series(SeriesFunction(tuple(half)), 20, 1e-9)
            assert series.trust_radius > 0
            pts = alpha_points(series, 0.0, series.trust_radius, k=2)
            for pt in pts:
                assert pt.value.real < 0
                assert abs(pt.value.imag) <= 1e-9 * abs(pt.value)
