"""Function models: k-fold symmetric rational/exponential targets and truncated series.

A StructuredFunction evaluates as

    G(z) = z^p * exp(A z^k + A0 z^-k)
         * prod (z^k + a_nu) / prod (z^k - b_mu)
         * prod (z^-k + c_nu) / prod (z^-k - d_mu)

with monic factors, matching the polynomial fixtures this package reproduces
(zeros of the z^k factor at -a_nu, poles at b_mu).  The product form with unit
constant factors, (1 + z^k/a_nu) etc., differs from this by the positive-or-
negative real constant returned by normalization_constant(); the theorem
predictors divide alpha by that constant before any sector arithmetic.

SeriesFunction holds a Maclaurin truncation of an entire target together with
a certified trust radius; roots inside the trust radius are accepted as roots
of the full function at the configured tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .sectors import SectorIndex, phase

DEFAULT_POLE_TOL = 1e-9


class PoleProximity(Exception):
    """Evaluation requested inside the pole band; the value is not a number."""

    def __init__(self, z: complex, pole: complex, message: str = ""):
        self.z = z
        self.pole = pole
        super().__init__(message or f"evaluation at {z} is within the pole band of {pole}")


@dataclass(frozen=True)
class StructuredFunction:
    """Finite-parameter instance of the k-fold symmetric target family."""

    p: int
    k: int
    a: tuple[float, ...] = ()
    b: tuple[float, ...] = ()
    c: tuple[float, ...] = ()
    d: tuple[float, ...] = ()
    A: float = 0.0
    A0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(x) for x in self.a))
        object.__setattr__(self, "b", tuple(float(x) for x in self.b))
        object.__setattr__(self, "c", tuple(float(x) for x in self.c))
        object.__setattr__(self, "d", tuple(float(x) for x in self.d))
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.p == 0 or math.gcd(abs(self.p), self.k) != 1:
            raise ValueError(f"|p|={abs(self.p)} and k={self.k} must be coprime (p nonzero)")
        for name in ("a", "b", "c", "d"):
            vals = getattr(self, name)
            if any(not (v > 0) or not math.isfinite(v) for v in vals):
                raise ValueError(f"all entries of {name} must be positive finite reals")
        if self.A < 0 or self.A0 < 0:
            raise ValueError("growth constants A, A0 must be nonnegative")
        if self.A == 0 and self.A0 == 0 and not (self.a or self.b or self.c or self.d):
            raise ValueError("degenerate model: identically z^p")

    @property
    def is_rational(self) -> bool:
        return self.A == 0.0 and self.A0 == 0.0

    @property
    def is_meromorphic_form(self) -> bool:
        """True for the subfamily z^p exp(A z^k) prod(z^k+a)/prod(z^k-b)."""
        return self.A0 == 0.0 and not self.c and not self.d


@dataclass(frozen=True)
class SeriesFunction:
    """Truncated power series sum c_n z^n with a certified trust radius."""

    coeffs: tuple[complex, ...]
    trust_radius: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(x) for x in self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("coefficient list must be nonempty")
        if self.trust_radius < 0:
            raise ValueError("trust_radius must be nonnegative")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class AlphaPoint:
    """One solution of F(z) = alpha."""

    value: complex
    modulus: float
    sector: SectorIndex
    boundary: bool
    multiplicity: int
    residual: float

    @property
    def argument(self) -> float:
        return phase(self.value)


def normalization_constant(spec: StructuredFunction) -> float:
    """Real constant relating the monic-factor model to the unit-constant form.

    G(z) = kappa * G_unit(z) where G_unit uses (1 + z^k/a_nu) style factors and
    is positive on the positive semi-axis.  kappa = prod(a) prod(c) * (-1)^(|b|+|d|)
    / (prod(b) prod(d)); it is negative exactly when |b|+|d| is odd.
    """
    kappa = 1.0
    for x in spec.a:
        kappa *= x
    for x in spec.c:
        kappa *= x
    for x in spec.b:
        kappa /= -x
    for x in spec.d:
        kappa /= -x
    return kappa


def evaluate_G(spec: StructuredFunction, z: complex, pole_tol: float = DEFAULT_POLE_TOL) -> complex:
    """Evaluate the structured function at a nonzero point.

    Raises PoleProximity when z^k (or z^-k) falls within pole_tol relative
    distance of a pole parameter, instead of returning a large number.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    zk = z**spec.k
    val = z**spec.p
    if spec.A or spec.A0:
        expo = spec.A * zk
        if spec.A0:
            expo += spec.A0 / zk
        val *= cmath.exp(expo)
    for a in spec.a:
        val *= zk + a
    for b in spec.b:
        den = zk - b
        if abs(den) <= pole_tol * b:
            raise PoleProximity(z, b ** (1.0 / spec.k))
        val /= den
    if spec.c or spec.d:
        zmk = 1.0 / zk
        for c in spec.c:
            val *= zmk + c
        for d in spec.d:
            den = zmk - d
            if abs(den) <= pole_tol * d:
                raise PoleProximity(z, d ** (-1.0 / spec.k))
            val /= den
    return val


def evaluate_R(spec: StructuredFunction, w: complex, pole_tol: float = DEFAULT_POLE_TOL) -> complex:
    """Single-valued branch function on the closed upper half-plane.

    R(w) = root^p * exp(A w + A0/w) * prod(w + a)/prod(w - b) * prod(1/w + c)/prod(1/w - d)
    with root = |w|^(1/k) exp(i Arg w / k), Arg w in [0, pi].  Holomorphic off
    the poles, positive on the positive semi-axis, and R(z^k) = G(z) whenever
    z is the branch root of w.
    """
    w = complex(w)
    if w == 0:
        raise ValueError("w must be nonzero")
    if w.imag < 0:
        raise ValueError("R is defined on the closed upper half-plane only")
    theta = math.atan2(w.imag, w.real)
    if theta < 0:  # only reachable via imag == -0.0 on the negative axis
        theta = -theta
    root = abs(w) ** (1.0 / spec.k) * cmath.exp(1j * theta / spec.k)
    val = root**spec.p
    if spec.A or spec.A0:
        expo = spec.A * w
        if spec.A0:
            expo += spec.A0 / w
        val *= cmath.exp(expo)
    for a in spec.a:
        val *= w + a
    for b in spec.b:
        den = w - b
        if abs(den) <= pole_tol * b:
            raise PoleProximity(w, complex(b))
        val /= den
    if spec.c or spec.d:
        wi = 1.0 / w
        for c in spec.c:
            val *= wi + c
        for d in spec.d:
            den = wi - d
            if abs(den) <= pole_tol * d:
                raise PoleProximity(w, 1.0 / d)
            val /= den
    return val


def _poly_from_shifts(shifts: tuple[float, ...], sign: float) -> np.ndarray:
    """Ascending coefficients of prod_j (sign*shift_j + w)."""
    out = np.array([1.0 + 0j])
    for s in shifts:
        out = np.convolve(out, np.array([sign * s, 1.0], complex))
    return out


def _inflate(coeffs_w: np.ndarray, k: int, shift: int, size: int) -> np.ndarray:
    """Map sum c_j w^j to sum c_j z^(jk + shift) in an ascending array of length size."""
    out = np.zeros(size, complex)
    for j, cj in enumerate(coeffs_w):
        out[j * k + shift] = cj
    return out


def to_polynomial(spec: StructuredFunction, alpha: complex) -> np.ndarray:
    """Ascending coefficients of P(z) = z^max(p,0) prod(z^k + a) - alpha z^max(-p,0) prod(z^k - b).

    The root set of P equals the alpha-set of the (pure rational) spec; there
    is never a root at the origin since gcd(|p|, k) = 1 forces p != 0.
    """
    if not spec.is_rational or spec.c or spec.d:
        raise ValueError("to_polynomial requires A = A0 = 0 and empty c, d lists")
    alpha = complex(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    num = _poly_from_shifts(spec.a, +1.0)
    den = _poly_from_shifts(spec.b, -1.0)
    k = spec.k
    size = max(max(spec.p, 0) + k * len(spec.a), max(-spec.p, 0) + k * len(spec.b)) + 1
    P = _inflate(num, k, max(spec.p, 0), size)
    P -= alpha * _inflate(den, k, max(-spec.p, 0), size)
    return P


def alpha_polynomial(spec: StructuredFunction, alpha: complex) -> np.ndarray:
    """Polynomial whose nonzero roots are the alpha-set; supports c, d factors.

    Clearing z^-k factors multiplies both sides of G(z) = alpha by powers of z,
    which can only introduce spurious roots at the origin; those are stripped
    here.  Requires A = A0 = 0.
    """
    if not spec.is_rational:
        raise ValueError("polynomial conversion requires a rational spec (A = A0 = 0)")
    if not spec.c and not spec.d:
        return to_polynomial(spec, alpha)
    alpha = complex(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    k = spec.k
    num = np.convolve(_poly_from_shifts(spec.a, +1.0), _scaled_unit(spec.c, +1.0))
    den = np.convolve(_poly_from_shifts(spec.b, -1.0), _scaled_unit(spec.d, -1.0))
    s1 = max(spec.p, 0) + k * len(spec.d)
    s2 = max(-spec.p, 0) + k * len(spec.c)
    size = max(s1 + k * (len(num) - 1), s2 + k * (len(den) - 1)) + 1
    P = _inflate(num, k, s1, size) - alpha * _inflate(den, k, s2, size)
    lead = 0
    while lead < len(P) - 1 and P[lead] == 0:
        lead += 1
    return P[lead:]


def _scaled_unit(shifts: tuple[float, ...], sign: float) -> np.ndarray:
    """Ascending coefficients of prod_j (1 + sign*shift_j*w)."""
    out = np.array([1.0 + 0j])
    for s in shifts:
        out = np.convolve(out, np.array([1.0, sign * s], complex))
    return out


def exponential_alpha_series(spec: StructuredFunction, alpha: complex, N: int) -> SeriesFunction:
    """Series route for specs with a growth factor exp(A z^k).

    Returns the degree-N Maclaurin truncation of the entire function

        H(z) = z^max(p,0) prod(z^k + a) exp(A z^k) - alpha z^max(-p,0) prod(z^k - b)

    whose zero set is exactly the alpha-set of the spec.  Certify with
    truncate_series and find the zeros with alpha_points(series, 0, ...);
    the polynomial conversion stays exact for the rational subfamily.
    """
    if not spec.is_meromorphic_form:
        raise ValueError("the series route requires A0 = 0 and empty c, d lists")
    alpha = complex(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    k = spec.k
    num = _poly_from_shifts(spec.a, +1.0)
    if spec.A:
        terms = (N - max(spec.p, 0)) // k
        expo = np.zeros(terms + 1, complex)
        term = 1.0
        for j in range(terms + 1):
            expo[j] = term
            term *= spec.A / (j + 1)
        num = np.convolve(num, expo)
    den = _poly_from_shifts(spec.b, -1.0)
    out = np.zeros(N + 1, complex)
    for j, cj in enumerate(num):
        idx = max(spec.p, 0) + k * j
        if idx <= N:
            out[idx] += cj
    for j, cj in enumerate(den):
        idx = max(-spec.p, 0) + k * j
        if idx <= N:
            out[idx] -= alpha * cj
    return SeriesFunction(tuple(out))


# ---------------------------------------------------------------------------
# vectorized raw evaluation, used by the winding oracle (no pole banding)
# ---------------------------------------------------------------------------


def eval_many(spec: StructuredFunction, z: np.ndarray) -> np.ndarray:
    """G at an array of nonzero points; no pole-band checks."""
    z = np.asarray(z, complex)
    zk = z**spec.k
    val = z ** float(spec.p) if spec.p >= 0 else 1.0 / z ** float(-spec.p)
    if spec.A or spec.A0:
        expo = spec.A * zk
        if spec.A0:
            expo = expo + spec.A0 / zk
        val = val * np.exp(expo)
    for a in spec.a:
        val = val * (zk + a)
    for b in spec.b:
        val = val / (zk - b)
    if spec.c or spec.d:
        zmk = 1.0 / zk
        for c in spec.c:
            val = val * (zmk + c)
        for d in spec.d:
            val = val / (zmk - d)
    return val


def log_derivative_many(spec: StructuredFunction, z: np.ndarray) -> np.ndarray:
    """G'/G at an array of nonzero points (closed form, no pole banding)."""
    z = np.asarray(z, complex)
    k = spec.k
    zk = z**k
    zk1 = z ** (k - 1)
    out = spec.p / z
    if spec.A:
        out = out + spec.A * k * zk1
    if spec.A0:
        out = out - spec.A0 * k / (zk * z)
    for a in spec.a:
        out = out + k * zk1 / (zk + a)
    for b in spec.b:
        out = out - k * zk1 / (zk - b)
    if spec.c or spec.d:
        zmk = 1.0 / zk
        dz = -k * zmk / z  # d/dz z^-k
        for c in spec.c:
            out = out + dz / (zmk + c)
        for d in spec.d:
            out = out - dz / (zmk - d)
    return out


# ---------------------------------------------------------------------------
# series truncation with certified trust radius
# ---------------------------------------------------------------------------

_TAIL_EXTRA = 10  # degree headroom required of the source series


def truncate_series(series: SeriesFunction, N: int, tail_tol: float) -> SeriesFunction:
    """Degree-N truncation with a certified trust radius.

    The trust radius is the largest rho (on a geometric grid) such that

      * the dropped tail is bounded: sum_{n>N} |c_n| rho^n <= tail_tol *
        max(1, min_{|z|=rho} |P_N(z)|), with the unknown tail beyond the
        source estimated by the observed geometric decay, and
      * roots of the degree-N and degree-(N+10) truncations inside rho agree
        to 10*tail_tol relative.

    Non-decaying tails give trust_radius 0.
    """
    if N < 1:
        raise ValueError("truncation degree must be >= 1")
    if tail_tol <= 0:
        raise ValueError("tail_tol must be positive")
    src = np.asarray(series.coeffs, complex)
    if len(src) < N + _TAIL_EXTRA + 1:
        raise ValueError(
            f"source coefficients up to degree >= {N + _TAIL_EXTRA} required, got {len(src) - 1}"
        )
    head = src[: N + 1]
    wide = src[: N + _TAIL_EXTRA + 1]

    # a non-decaying coefficient tail certifies nothing
    tail_mags = np.abs(src[N + 1 :])
    if tail_mags[-1] > 0 and tail_mags[-1] >= tail_mags[0] > 0:
        return SeriesFunction(tuple(head), 0.0)

    from .solver import find_roots  # deferred: solver depends on this module

    roots_n = [cl.center for cl in find_roots(head)]
    roots_w = [cl.center for cl in find_roots(wide)]

    grid = np.geomspace(1e-3, 1e9, 241)
    best = 0.0
    for rho in grid:
        if not _tail_ok(src, N, rho, tail_tol, head):
            continue
        if not _roots_agree(roots_n, roots_w, rho, 10 * tail_tol):
            continue
        best = float(rho)
    return SeriesFunction(tuple(head), best)


def _tail_ok(src: np.ndarray, N: int, rho: float, tail_tol: float, head: np.ndarray) -> bool:
    mags = np.abs(src[N + 1 :])
    n_idx = np.arange(N + 1, len(src), dtype=float)
    with np.errstate(over="ignore", divide="ignore"):
        logs = np.where(mags > 0, np.log(np.where(mags > 0, mags, 1.0)), -np.inf)
        logs = logs + n_idx * math.log(rho)
    if not len(logs):
        return False
    peak = logs.max()
    if peak > 600.0:  # term overflow; rho is far outside the certifiable range
        return False
    terms = np.exp(logs - peak) if math.isfinite(peak) else np.zeros_like(logs)
    partial = float(terms.sum())
    # geometric extrapolation of the unseen remainder from the last two terms
    if terms[-1] > 0 and len(terms) >= 2 and terms[-2] > 0:
        g = terms[-1] / terms[-2]
        if g >= 0.9:
            return False
        partial += terms[-1] * g / (1 - g)
    elif terms[-1] > 0:
        return False
    tail = partial * math.exp(peak) if math.isfinite(peak) else 0.0
    floor = max(1.0, _min_on_circle(head, rho))
    return tail <= tail_tol * floor


def _min_on_circle(coeffs: np.ndarray, rho: float, samples: int = 256) -> float:
    theta = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    z = rho * np.exp(1j * theta)
    n = len(coeffs) - 1
    logs = np.where(np.abs(coeffs) > 0, np.log(np.where(np.abs(coeffs) > 0, np.abs(coeffs), 1.0)), -np.inf)
    shift = float(np.max(logs + np.arange(n + 1) * math.log(rho)))
    if shift > 600.0 or not math.isfinite(shift):
        return 0.0
    vals = np.polyval(coeffs[::-1], z)
    m = float(np.min(np.abs(vals)))
    return m if math.isfinite(m) else 0.0


def _roots_agree(roots_n, roots_w, rho: float, tol: float) -> bool:
    inside_n = [r for r in roots_n if abs(r) <= rho]
    inside_w = [r for r in roots_w if abs(r) <= rho]
    if len(inside_n) != len(inside_w):
        return False
    for r in inside_n:
        if not inside_w:
            return False
        d = min(abs(r - s) for s in inside_w)
        if d > tol * (1 + abs(r)):
            return False
    return True
