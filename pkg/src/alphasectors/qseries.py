"""Coefficient constructors and identities for the q-series targets.

Families: the disturbed exponential sum q^(n(n-1)/2) z^n / n!, the binomial
polynomials sum C(N,n) q^(n(n-1)/2) z^n, and the partial theta function
sum q^(n(n-1)/2) z^n.  All q-power exponents n(n-1)/2 are computed in exact
integer arithmetic before exponentiation.

Two named thresholds are carried as constants for choosing test parameters:
Q_TILDE, below which the partial theta function has only negative zeros, and
Q_STAR = Q_TILDE^(1/4), the corresponding bound for the purely imaginary
parameter i*q.  Neither is re-derived here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

Q_TILDE = 0.3092493386
Q_STAR = 0.7457224107

_FAMILIES = ("disturbed-exp", "sokal-poly", "partial-theta")


@dataclass(frozen=True)
class QSeriesSpec:
    """A named q-series target with truncation (or exact) degree N."""

    family: str
    q: complex
    N: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {_FAMILIES}")
        object.__setattr__(self, "q", complex(self.q))
        mag = abs(self.q)
        if not 0 < mag <= 1:
            raise ValueError(f"|q| must lie in (0, 1], got {mag}")
        if self.family == "sokal-poly" and mag >= 1:
            raise ValueError("the polynomial family requires |q| < 1")
        if self.N < 1:
            raise ValueError("N must be >= 1")

    def coefficients(self) -> list[complex]:
        if self.family == "disturbed-exp":
            return disturbed_exp_coeffs(self.q, self.N)
        if self.family == "sokal-poly":
            return sokal_poly_coeffs(self.q, self.N)
        return partial_theta_coeffs(self.q, self.N)


def _qpow(q: complex, e: int) -> complex:
    return q**e


def disturbed_exp_coeffs(q: complex, N: int) -> list[complex]:
    """c_n = q^(n(n-1)/2) / n! for n = 0..N; solves F'(z) = F(qz), F(0) = 1."""
    if N < 0:
        raise ValueError("N must be >= 0")
    q = complex(q)
    return [_qpow(q, n * (n - 1) // 2) / math.factorial(n) for n in range(N + 1)]


def sokal_poly_coeffs(q: complex, N: int) -> list[complex]:
    """c_n = C(N, n) q^(n(n-1)/2) for n = 0..N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    q = complex(q)
    return [math.comb(N, n) * _qpow(q, n * (n - 1) // 2) for n in range(N + 1)]


def partial_theta_coeffs(q: complex, N: int) -> list[complex]:
    """c_n = q^(n(n-1)/2) for n = 0..N; satisfies c_{n+1} = q^n c_n."""
    if N < 0:
        raise ValueError("N must be >= 0")
    q = complex(q)
    return [_qpow(q, n * (n - 1) // 2) for n in range(N + 1)]


def split_even_odd(coeffs, odd_sign: int = +1) -> tuple[list[complex], list[complex]]:
    """Even/odd split H(z) = f(z^2) + z g(z^2), with a sign-convention flag.

    odd_sign = +1 returns g_n = c_{2n+1} (plain split); odd_sign = -1 returns
    g_n = (-1)^n c_{2n+1}, matching the convention H(z) = f(z^2) + z g(-z^2).
    Requires c_0 != 0.
    """
    coeffs = [complex(c) for c in coeffs]
    if not coeffs or coeffs[0] == 0:
        raise ValueError("the split requires a nonzero constant term")
    if odd_sign not in (+1, -1):
        raise ValueError("odd_sign must be +1 or -1")
    f = coeffs[0::2]
    g = [odd_sign**n * c for n, c in enumerate(coeffs[1::2])]
    return f, g


def rotate_half_i(coeffs, sign: int = +1) -> list[complex]:
    """Coefficients of h(conj(mu) z) where h(z) = sum (sign*i)^(n(n-1)/2) f_n z^n.

    Here mu = exp(sign * i pi/4), a primitive eighth root of -1.  The output
    is real on even slots and conj(mu)-rotated with alternating sign on odd
    slots: c_{2n} = f_{2n}, c_{2l+1} = conj(mu) (-1)^l f_{2l+1}.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    mubar = cmath.exp(-sign * 1j * math.pi / 4)
    out: list[complex] = []
    for n, f in enumerate(coeffs):
        if n % 2 == 0:
            out.append(complex(f))
        else:
            l = (n - 1) // 2
            out.append(mubar * (-1) ** l * complex(f))
    return out


def theta_split_check(q: complex, N: int, coeffs=None) -> bool:
    """Whether the even/odd split of the partial theta matches its self-similar form.

    The even part must equal the degree-N truncation of Theta0(qz; q^4) and
    the odd part that of Theta0(q^3 z; q^4), exactly at coefficient level
    (the exponent identity 2n^2 - n = n + 4 n(n-1)/2 is an integer identity).
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    q = complex(q)
    if coeffs is None:
        coeffs = partial_theta_coeffs(q, 2 * N + 1)
    f, g = split_even_odd(coeffs)
    for n in range(N + 1):
        e_even = n + 4 * (n * (n - 1) // 2)  # Theta0(qz; q^4) exponent
        e_odd = 3 * n + 4 * (n * (n - 1) // 2)  # Theta0(q^3 z; q^4) exponent
        if e_even != (2 * n) * (2 * n - 1) // 2:
            return False
        if e_odd != (2 * n + 1) * (2 * n) // 2:
            return False
        if f[n] != _qpow(q, e_even) or g[n] != _qpow(q, e_odd):
            return False
    return True
