"""Leading-order predictors for the kernel coefficients and decay fits.

The scaled partial-kernel coefficient at probe points a/sqrt(k),
b/sqrt(k) off a level-E circle orbit has leading term

    exp(-(a^2+b^2)||X_H||^2/2) e^{-iN ceil(kE/N) t} N (1 - i cot(Nt/2))
        / (2 ||X_H|| sqrt(pi k)),

valid away from the stabilizer set {sin(Nt/2) = 0}; the single-eigenspace
analogue replaces the cotangent factor by N/(||X_H|| sqrt(pi k)) and is
regular on the whole circle.  "Scaled" means the (2pi/k)^n normalization;
multiplying back by (k/2pi)^n gives the raw coefficient that the exact
engines produce.  Both conventions are carried explicitly because mixing
them up silently is the one foreseeable way to get every experiment wrong
by a power of k.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circle_spectral import SpectralConfig, snapped_ceil
from .cp1_geometry import (ProjectivePoint, gradient_flow, height,
                           level_point, rotate, xh_norm)
from .exact_kernels import partial_coeff, section_coeff

STABILIZER_EXCLUSION = 1e-3


@dataclass(frozen=True)
class ScalingProbe:
    """Probe geometry (z0, a, b, t0) for the sqrt(k)-scaled neighborhoods.

    At weight k the probe points are gradient_flow(a/sqrt(k), z0) and
    gradient_flow(b/sqrt(k), rotate(t0, z0)).
    """

    basepoint: ProjectivePoint
    a: float = 0.0
    b: float = 0.0
    t0: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.t0 < 2.0 * math.pi:
            raise ValueError("t0 must lie in [0, 2*pi)")

    def points(self, k: int) -> tuple[ProjectivePoint, ProjectivePoint]:
        s = math.sqrt(k)
        z = gradient_flow(self.a / s, self.basepoint)
        w = gradient_flow(self.b / s, rotate(self.t0, self.basepoint))
        return z, w


@dataclass(frozen=True)
class AsymptoticPrediction:
    """A leading term plus its bookkeeping.

    leading carries the (2pi/k)^n-scaled value; unscaled multiplies the
    prefactor back.  remainder_order records the power of k governing the
    first dropped term (k^-3/2 on the orbit itself where a = b = 0, k^-1
    otherwise).
    """

    leading: complex
    remainder_order: str
    k: int
    dimension: int
    scaled_by: str = "(2pi/k)^n"

    @property
    def unscaled(self) -> complex:
        return self.leading * (self.k / (2.0 * math.pi)) ** self.dimension


def _gauss_factor(a: float, b: float, xh: float) -> float:
    return math.exp(-0.5 * (a * a + b * b) * xh * xh)


def _remainder_order(a: float, b: float) -> str:
    return "k^-3/2" if a == 0.0 and b == 0.0 else "k^-1"


def predict_partial(k: int, energy: float, stabilizer_order: int,
                    dimension: int, xh: float,
                    probe: ScalingProbe) -> AsymptoticPrediction:
    """Leading term of the scaled partial-kernel coefficient at the probe."""
    if xh <= 0.0:
        raise ValueError("orbit speed xh must be positive")
    n_stab = stabilizer_order
    if abs(math.sin(0.5 * n_stab * probe.t0)) < STABILIZER_EXCLUSION:
        raise ValueError(
            "t0 lies in the stabilizer exclusion zone |sin(N t /2)| < 1e-3")
    cut = n_stab * snapped_ceil(k * energy / n_stab)
    phase = cmath.exp(-1j * cut * probe.t0)
    cot = 1.0 / math.tan(0.5 * n_stab * probe.t0)
    lead = (_gauss_factor(probe.a, probe.b, xh) * phase
            * n_stab * (1.0 - 1j * cot) / (2.0 * xh * math.sqrt(math.pi * k)))
    return AsymptoticPrediction(lead, _remainder_order(probe.a, probe.b),
                                k, dimension)


def predict_equivariant(k: int, lambda_k: float, stabilizer_order: int,
                        dimension: int, xh: float,
                        probe: ScalingProbe) -> AsymptoticPrediction:
    """Leading term of the scaled single-eigenspace coefficient at the probe."""
    if xh <= 0.0:
        raise ValueError("orbit speed xh must be positive")
    n_stab = stabilizer_order
    scaled = k * lambda_k / n_stab
    if abs(scaled - round(scaled)) > 1e-9:
        raise ValueError("k*lambda_k must be an integer multiple of N")
    phase = cmath.exp(-1j * k * lambda_k * probe.t0)
    lead = (_gauss_factor(probe.a, probe.b, xh) * phase
            * n_stab / (xh * math.sqrt(math.pi * k)))
    return AsymptoticPrediction(lead, _remainder_order(probe.a, probe.b),
                                k, dimension)


def stirling_estimate(k: int, l_k: int, energy: float, theta: float) -> complex:
    """Leading term of the section coefficient on its own level circle.

    kappa_{k,l_k} ~ k^{1/4}/(2pi)^{3/4} e^{i l_k theta} (E(1-E))^{-1/4}
    at the point [sqrt(E/(1-E)) e^{i theta} : 1], for l_k within O(1) of kE.
    """
    if not 0.0 < energy < 1.0:
        raise ValueError("energy must lie strictly inside (0, 1)")
    if abs(l_k - k * energy) > 2.0:
        raise ValueError("level l_k is too far from k*E for the estimate")
    mag = k ** 0.25 / (2.0 * math.pi) ** 0.75 / (energy * (1.0 - energy)) ** 0.25
    return mag * cmath.exp(1j * l_k * theta)


def error_metric(k: int, energy: float, t0: float,
                 z0: ProjectivePoint) -> float:
    """|exact partial coefficient - leading prediction| on the orbit pair.

    Compares the raw (unscaled) coefficient at (z0, rotate(t0, z0)) against
    the unscaled leading term; z0 must sit on the level set {H = energy}.
    """
    if abs(height(z0) - energy) > 1e-9:
        raise ValueError("base point must lie on the level set of the energy")
    cfg = SpectralConfig(k, energy)
    exact = partial_coeff(cfg, z0, rotate(t0, z0)).to_complex()
    probe = ScalingProbe(z0, 0.0, 0.0, t0)
    approx = predict_partial(k, energy, 1, 1, xh_norm(z0), probe).unscaled
    return abs(exact - approx)


def stirling_deviation(k: int, energy: float, theta: float) -> float:
    """|exact section coefficient - Stirling leading term| at level round(kE)."""
    l_k = round(k * energy)
    point = level_point(energy, theta)
    exact = section_coeff(k, l_k, point).to_complex()
    return abs(exact - stirling_estimate(k, l_k, energy, theta))


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float


def loglog_fit(points: Sequence[tuple[float, float]]) -> FitResult:
    """Least-squares line through (log x, log y)."""
    if len(points) < 3:
        raise ValueError("a log-log fit needs at least 3 points")
    xs = np.array([p[0] for p in points], dtype=float)
    ys = np.array([p[1] for p in points], dtype=float)
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValueError("log-log fit requires strictly positive data")
    return linear_fit(np.log(xs), np.log(ys))


def linear_fit(xs: np.ndarray, ys: np.ndarray) -> FitResult:
    """Plain least-squares line y = slope*x + intercept with r^2."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    design = np.vstack([xs, np.ones_like(xs)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, ys, rcond=None)
    predicted = design @ np.array([slope, intercept])
    ss_res = float(np.sum((ys - predicted) ** 2))
    ss_tot = float(np.sum((ys - np.mean(ys)) ** 2))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res < 1e-30 else 0.0
    else:
        r2 = max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return FitResult(float(slope), float(intercept), r2)
