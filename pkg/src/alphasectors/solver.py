"""Simultaneous polynomial root iteration and alpha-point extraction.

find_roots runs an Aberth-Ehrlich iteration from a deterministic ring of
initial guesses (fixed irrational angular offset, no randomness), polishes by
Newton on the original polynomial plus one extended-precision pass, and
clusters near-coincident roots into multiplicities.  alpha_points converts a
spec to its alpha-polynomial, solves, classifies sectors, and returns
modulus-sorted points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .functions import (
    AlphaPoint,
    DEFAULT_POLE_TOL,
    PoleProximity,
    SeriesFunction,
    StructuredFunction,
    alpha_polynomial,
    evaluate_G,
)
from .sectors import DEFAULT_ANGLE_TOL, classify_sector, phase

DEFAULT_TOL = 1e-9
DEFAULT_CLUSTER_TOL = 1e-7
MAX_ITERS = 200
DEGREE_CAP = 512

_ANGLE_OFFSET = 2.399963229728653  # golden angle, fixed irrational offset
_POLISH_DPS = 50


class SolverError(RuntimeError):
    """Root iteration failed; carries the unconverged residuals when relevant."""

    def __init__(self, message: str, residuals=None):
        super().__init__(message)
        self.residuals = tuple(residuals) if residuals is not None else ()


@dataclass(frozen=True)
class RootCluster:
    """A group of iterates identified as one root of some multiplicity."""

    center: complex
    members: tuple[complex, ...]
    multiplicity: int
    cluster_radius: float


def _strip_and_scale(coeffs) -> tuple[np.ndarray, float, int]:
    """Strip zero leading/trailing coefficients; rescale z = lam*u in log space.

    Returns (scaled ascending coefficients with unit max modulus, lam,
    origin_multiplicity).  The scaled polynomial has |c_0/c_n| = 1, so the
    canonical initial-guess circle has radius 1.
    """
    c = np.asarray(coeffs, complex)
    n = len(c) - 1
    while n > 0 and c[n] == 0:
        n -= 1
    c = c[: n + 1]
    if n == 0:
        raise ValueError("polynomial degree must be >= 1 after trailing-zero strip")
    m0 = 0
    while c[m0] == 0:
        m0 += 1
    c = c[m0:]
    n = len(c) - 1
    if n == 0:
        return np.array([1.0 + 0j]), 1.0, m0
    mags = np.abs(c)
    nz = mags > 0
    logs = np.full(n + 1, -np.inf)
    logs[nz] = np.log(mags[nz])
    loglam = (logs[0] - logs[n]) / n
    slog = logs + loglam * np.arange(n + 1)
    slog -= slog[np.isfinite(slog)].max()
    sc = np.zeros(n + 1, complex)
    sc[nz] = np.exp(1j * np.angle(c[nz])) * np.exp(slog[nz])
    return sc, math.exp(loglam), m0


def _newton_corrections(sc: np.ndarray, dsc: np.ndarray, u: np.ndarray) -> np.ndarray:
    """P(u)/P'(u) for the scaled polynomial, via reversed Horner when |u| > 1."""
    n = len(sc) - 1
    out = np.empty_like(u)
    small = np.abs(u) <= 1.0
    if small.any():
        us = u[small]
        pv = np.polyval(sc[::-1], us)
        dv = np.polyval(dsc[::-1], us)
        dv = np.where(dv == 0, 1e-300, dv)
        out[small] = pv / dv
    big = ~small
    if big.any():
        ub = u[big]
        v = 1.0 / ub
        # P(u) = u^n Q(v) with Q ascending = reversed(sc)
        qv = np.polyval(sc, v)
        dq = np.arange(1, n + 1) * sc[::-1][1:]
        dqv = np.polyval(dq[::-1], v)
        den = n * qv - v * dqv
        den = np.where(den == 0, 1e-300, den)
        out[big] = ub * qv / den
    return out


def _aberth(sc: np.ndarray, tol: float, max_iters: int) -> np.ndarray:
    n = len(sc) - 1
    dsc = np.arange(1, n + 1) * sc[1:]
    u = np.exp(1j * (2 * np.pi * np.arange(n) / n + _ANGLE_OFFSET))
    last = np.inf
    stall = 0
    with np.errstate(all="ignore"):
        for _ in range(max_iters):
            nv = _newton_corrections(sc, dsc, u)
            diff = u[:, None] - u[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1.0 / diff).sum(axis=1)
            w = nv / (1.0 - nv * s)
            bad = ~np.isfinite(w)
            if bad.any():
                w[bad] = nv[bad]
                w[~np.isfinite(w)] = 0.0
            u = u - w
            step = float(np.max(np.abs(w) / (1.0 + np.abs(u))))
            if step <= tol:
                return u
            # stagnation on a multiple-root limit cycle also counts as converged
            if step >= 0.5 * last:
                stall += 1
                if stall >= 10 and step <= 1e-5:
                    return u
            else:
                stall = 0
            last = step
    res = np.abs(_newton_corrections(sc, dsc, u))
    if np.max(res / (1.0 + np.abs(u))) > 1e-4:
        raise SolverError(
            f"simultaneous iteration did not converge in {max_iters} iterations",
            residuals=res.tolist(),
        )
    return u


def _newton_polish(sc: np.ndarray, dsc: np.ndarray, u: np.ndarray, steps: int = 3) -> np.ndarray:
    with np.errstate(all="ignore"):
        for _ in range(steps):
            w = _newton_corrections(sc, dsc, u)
            w[~np.isfinite(w)] = 0.0
            u = u - w
    return u


def _cluster(roots: np.ndarray, cluster_tol: float) -> list[list[int]]:
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    thresh = math.sqrt(cluster_tol)
    for i in range(n):
        for j in range(i + 1, n):
            scale = 1.0 + abs(roots[i] + roots[j]) / 2
            if abs(roots[i] - roots[j]) < thresh * scale:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


_EPS = float(np.finfo(float).eps)


def _accuracy_radius(sc: np.ndarray, dsc: np.ndarray, u: complex) -> float:
    """Newton uncertainty radius (|P| + rounding noise) / |P'| at u.

    Below this distance two iterates cannot be told apart: a converged member
    of a multiple root sits within it of the center, while genuinely distinct
    simple roots separate by much more than their radii.
    """
    n = len(sc) - 1
    au = abs(u)
    if au <= 1.0:
        pv = complex(np.polyval(sc[::-1], u))
        dv = complex(np.polyval(dsc[::-1], u))
        noise = _EPS * n * float(np.polyval(np.abs(sc)[::-1], au))
        return (abs(pv) + noise) / max(abs(dv), 1e-300)
    v = 1.0 / u
    qv = complex(np.polyval(sc, v))
    dq = np.arange(1, n + 1) * sc[::-1][1:]
    dqv = complex(np.polyval(dq[::-1], v))
    den = n * qv - v * dqv
    noise = _EPS * n * float(np.polyval(np.abs(sc), abs(v)))
    return au * (abs(qv) + noise) / max(abs(den), 1e-300)


def _subsplit(sc: np.ndarray, dsc: np.ndarray, members_scaled: list[complex]) -> list[list[int]]:
    """Partition a distance-cluster by indistinguishability of its members."""
    n = len(members_scaled)
    acc = [_accuracy_radius(sc, dsc, u) for u in members_scaled]
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(members_scaled[i] - members_scaled[j]) <= 4.0 * (acc[i] + acc[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _extended_polish(coeffs: np.ndarray, center: complex, nu: int) -> complex:
    """One fixed extended-precision pass: a few modified-Newton steps in mpmath."""
    with mp.workdps(_POLISH_DPS):
        cs = [mp.mpc(c) for c in coeffs]
        ds = [i * cs[i] for i in range(1, len(cs))]

        def ev(poly, x):
            acc = mp.mpc(0)
            for cf in reversed(poly):
                acc = acc * x + cf
            return acc

        x = mp.mpc(center)
        for _ in range(4):
            pv = ev(cs, x)
            dv = ev(ds, x)
            if dv == 0:
                break
            step = nu * pv / dv
            x = x - step
            if abs(step) <= mp.mpf(10) ** (-_POLISH_DPS + 6) * (1 + abs(x)):
                break
        return complex(x)


def find_roots(
    coeffs,
    tol: float = 1e-10,
    max_iters: int = MAX_ITERS,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_multiplicity: int | None = None,
) -> list[RootCluster]:
    """All complex roots of an ascending coefficient list, with multiplicities.

    Deterministic: fixed initial ring, fixed iteration schedule.  Clusters
    whose multiplicity exceeds max_multiplicity (when given) raise SolverError.
    Sum of multiplicities equals the (stripped) degree.
    """
    sc, lam, m0 = _strip_and_scale(coeffs)
    out: list[RootCluster] = []
    if m0:
        out.append(RootCluster(0j, (0j,) * m0, m0, 0.0))
    n = len(sc) - 1
    if n == 0:
        if not out:
            raise ValueError("polynomial degree must be >= 1")
        return out
    if n == 1:
        root = -sc[0] / sc[1] * lam
        out.append(RootCluster(complex(root), (complex(root),), 1, 0.0))
        return _finish(out, max_multiplicity)
    dsc = np.arange(1, n + 1) * sc[1:]
    u = _aberth(sc, tol, max_iters)
    u = _newton_polish(sc, dsc, u)
    roots = u * lam
    groups = _cluster(roots, cluster_tol)

    original = np.asarray(coeffs, complex)
    original = original[np.argmax(original != 0):] if m0 else original
    for idx in groups:
        subgroups = [idx]
        if len(idx) >= 2:
            # keep close but genuinely distinguishable simple roots separate
            scaled = [complex(u[i]) for i in idx]
            subgroups = [[idx[i] for i in sub] for sub in _subsplit(sc, dsc, scaled)]
        for sub in subgroups:
            members = tuple(complex(roots[i]) for i in sub)
            nu = len(sub)
            center = complex(np.mean([roots[i] for i in sub]))
            radius = max((abs(m - center) for m in members), default=0.0)
            refined = _extended_polish(original, center, nu)
            out.append(RootCluster(refined, members, nu, radius))
    return _finish(out, max_multiplicity)


def _finish(clusters: list[RootCluster], max_multiplicity: int | None) -> list[RootCluster]:
    if max_multiplicity is not None:
        for cl in clusters:
            if cl.multiplicity > max_multiplicity:
                raise SolverError(
                    f"cluster of multiplicity {cl.multiplicity} at {cl.center} exceeds "
                    f"the admissible bound {max_multiplicity}",
                )
    clusters.sort(key=lambda cl: (abs(cl.center), phase(cl.center) if cl.center else 0.0))
    return clusters


def _series_residual(coeffs: np.ndarray, alpha: complex, z: complex) -> float:
    shifted = coeffs.copy()
    shifted[0] -= alpha
    return abs(complex(np.polyval(shifted[::-1], z)))


def alpha_points(
    spec: StructuredFunction | SeriesFunction,
    alpha: complex,
    radius: float,
    tol: float = DEFAULT_TOL,
    angle_tol: float = DEFAULT_ANGLE_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    k: int | None = None,
) -> list[AlphaPoint]:
    """Every alpha-point with |z| <= radius, sorted by modulus then argument.

    Structured specs must be rational (A = A0 = 0) and have alpha != 0; series
    specs must carry a trust radius covering the request (alpha = 0 is allowed
    there, meaning plain zeros of the truncation).  For series specs the sector
    index k defaults to 2, the setting of the quadrant theorems.
    """
    alpha = complex(alpha)
    if radius <= 0:
        raise ValueError("radius must be positive")
    if isinstance(spec, SeriesFunction):
        if radius > spec.trust_radius:
            raise ValueError(
                f"radius {radius} exceeds the certified trust radius {spec.trust_radius}"
            )
        k_eff = 2 if k is None else k
        P = np.asarray(spec.coeffs, complex)
        P = P.copy()
        P[0] -= alpha
    else:
        if alpha == 0:
            raise ValueError("alpha must be nonzero for structured specs")
        k_eff = spec.k
        P = alpha_polynomial(spec, alpha)
    if len(P) - 1 > DEGREE_CAP:
        raise ValueError(f"degree {len(P) - 1} exceeds the cap {DEGREE_CAP}")

    clusters = find_roots(P, tol=min(tol, 1e-10), cluster_tol=cluster_tol, max_multiplicity=2)
    pts: list[AlphaPoint] = []
    failures = []
    for cl in clusters:
        z = cl.center
        if z == 0:
            if isinstance(spec, SeriesFunction):
                raise SolverError("alpha-point at the origin is outside the sector model")
            continue  # spurious origin root introduced by clearing z^-k factors
        if abs(z) > radius:
            continue
        if isinstance(spec, SeriesFunction):
            residual = _series_residual(np.asarray(spec.coeffs, complex), alpha, z)
        else:
            try:
                residual = abs(evaluate_G(spec, z, pole_tol=DEFAULT_POLE_TOL) - alpha)
            except PoleProximity:
                failures.append(cl)
                continue
            if residual > tol * (1 + abs(alpha)) and _far_from_poles(spec, z):
                failures.append(cl)
                continue
        sector, boundary = classify_sector(z, k_eff, angle_tol)
        pts.append(AlphaPoint(z, abs(z), sector, boundary, cl.multiplicity, residual))
    if failures:
        raise SolverError(
            "pole-adjacent or unresolved clusters: "
            + ", ".join(f"{cl.center:.6g} (x{cl.multiplicity})" for cl in failures),
            residuals=[abs(cl.center) for cl in failures],
        )
    pts.sort(key=lambda pt: (pt.modulus, pt.argument))
    return pts


def _far_from_poles(spec: StructuredFunction, z: complex, margin: float = 1e-3) -> bool:
    zk = z**spec.k
    for b in spec.b:
        if abs(zk - b) < margin * b:
            return False
    for d in spec.d:
        if abs(1.0 / zk - d) < margin * d:
            return False
    return True
