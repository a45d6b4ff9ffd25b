"""Rotated height observables and the two-projection orthogonality experiment.

On the unit sphere the height reads H(x) = (x3 + 1)/2, so a rotated copy
H_u(x) = (x.u + 1)/2 has superlevel set {H_u >= E} equal to the spherical
cap of angular radius arccos(2E - 1) around the axis u.  Quantizing H_u at
weight k is exact here: conjugate the diagonal spectrum diag(0, 1/k, .., 1)
by the degree-k representation matrix of the SU(2) element rotating the
north pole to u.  Disjoint caps then make the two spectral projections
asymptotically orthogonal, and the product norm is measurable ground truth.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circle_spectral import (IntegerSpectrumOperator, expm_series,
                              spectral_projector_eig)
from .exact_kernels import log_binomial

UNITARY_TOL = 1e-12
BINOMIAL_ROUTE_MAX_K = 32

_SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SIGMA_Y = np.array([[0.0, -1j], [1j, 0.0]], dtype=complex)
_SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class RotationAxis:
    """A unit vector in R^3; (0, 0, 1) is the axis of the standard height."""

    u: tuple[float, float, float]

    def __post_init__(self):
        u = tuple(float(c) for c in self.u)
        if len(u) != 3:
            raise ValueError("axis must be a 3-vector")
        if abs(math.sqrt(sum(c * c for c in u)) - 1.0) > UNITARY_TOL:
            raise ValueError("axis must be a unit vector to 1e-12")
        object.__setattr__(self, "u", u)

    @classmethod
    def from_vector(cls, v) -> "RotationAxis":
        v = np.asarray(v, dtype=float)
        n = np.linalg.norm(v)
        if n == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(tuple(v / n))

    @classmethod
    def polar(cls, beta: float, azimuth: float = 0.0) -> "RotationAxis":
        return cls((math.sin(beta) * math.cos(azimuth),
                    math.sin(beta) * math.sin(azimuth),
                    math.cos(beta)))


def axis_to_su2(axis: RotationAxis) -> np.ndarray:
    """SU(2) lift of the geodesic rotation carrying (0,0,1) to the axis.

    The rotation is about n = e3 x u by the angle between them; either lift
    (U or -U) induces the same conjugation on every observable.
    """
    ux, uy, uz = axis.u
    beta = math.acos(max(-1.0, min(1.0, uz)))
    s = math.hypot(ux, uy)
    if s < 1e-15:
        n = np.array([1.0, 0.0, 0.0]) if uz < 0 else np.array([0.0, 0.0, 1.0])
    else:
        n = np.array([-uy, ux, 0.0]) / s
    n_sigma = n[0] * _SIGMA_X + n[1] * _SIGMA_Y + n[2] * _SIGMA_Z
    return (math.cos(0.5 * beta) * np.eye(2, dtype=complex)
            - 1j * math.sin(0.5 * beta) * n_sigma)


def _validate_su2(u: np.ndarray) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    if np.max(np.abs(u.conj().T @ u - np.eye(2))) > 10 * UNITARY_TOL:
        raise ValueError("matrix is not unitary to 1e-12")
    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    if abs(det - 1.0) > 10 * UNITARY_TOL:
        raise ValueError("matrix must have determinant 1")
    return u


def _su2_log(u: np.ndarray) -> np.ndarray:
    """A 2x2 skew-Hermitian X with exp(X) = u (any branch works)."""
    c = float(np.real(u[0, 0] + u[1, 1])) / 2.0
    c = max(-1.0, min(1.0, c))
    if c <= -1.0 + 1e-12:
        return np.diag([1j * math.pi, -1j * math.pi])
    beta = 2.0 * math.acos(c)
    s = math.sin(0.5 * beta)
    if s < 1e-12:
        return np.zeros((2, 2), dtype=complex)
    return (u - c * np.eye(2)) * (0.5 * beta / s)


def _rep_binomial(k: int, u: np.ndarray) -> np.ndarray:
    """Representation matrix by expanding the pulled-back monomials.

    Column l collects the coefficients of (a z0 + b z1)^l (c z0 + d z1)^{k-l}
    with [a b; c d] = u^{-1}, rescaled by the orthonormal-basis weights.
    Alternating sums make this route ill-conditioned past k ~ 40, so it is
    restricted to small k and kept as the oracle for the generator route.
    """
    inv = u.conj().T
    a, b = inv[0, 0], inv[0, 1]
    c, d = inv[1, 0], inv[1, 1]
    mat = np.zeros((k + 1, k + 1), dtype=complex)
    for l in range(k + 1):
        first = np.array([math.comb(l, i) * a ** i * b ** (l - i)
                          for i in range(l + 1)], dtype=complex)
        second = np.array([math.comb(k - l, j) * c ** j * d ** (k - l - j)
                           for j in range(k - l + 1)], dtype=complex)
        conv = np.convolve(first, second) if k > 0 else first * second
        for m in range(k + 1):
            weight = math.exp(0.5 * (log_binomial(k, l) - log_binomial(k, m)))
            mat[m, l] = conv[m] * weight
    return mat


def _rep_generator(k: int, u: np.ndarray) -> np.ndarray:
    """Representation matrix as exp of the induced derivation.

    For u = exp(X) the action p -> p(u^{-1} z) is the flow of the linear
    field -(Xz).grad, whose matrix in the orthonormal basis is tridiagonal
    with ladder entries -x01*sqrt(l(k-l+1)) and -x10*sqrt((l+1)(k-l));
    exponentiating it is stable at every weight.
    """
    x = _su2_log(u)
    levels = np.arange(k + 1)
    gen = np.zeros((k + 1, k + 1), dtype=complex)
    gen[levels, levels] = -(levels * x[0, 0] + (k - levels) * x[1, 1])
    for l in range(1, k + 1):
        gen[l - 1, l] = -x[0, 1] * math.sqrt(l * (k - l + 1))
    for l in range(k):
        gen[l + 1, l] = -x[1, 0] * math.sqrt((l + 1) * (k - l))
    return expm_series(gen)


def su2_rep_matrix(k: int, u: np.ndarray) -> np.ndarray:
    """Matrix of p(z) -> p(u^{-1} z) on the weight-k orthonormal basis."""
    if k < 0 or int(k) != k:
        raise ValueError("k must be a nonnegative integer")
    u = _validate_su2(u)
    if k <= BINOMIAL_ROUTE_MAX_K:
        return _rep_binomial(int(k), u)
    return _rep_generator(int(k), u)


def rotated_height_operator(k: int, axis: RotationAxis) -> IntegerSpectrumOperator:
    """k times the quantized rotated height: R diag(0, 1, .., k) R*.

    The returned operator has exact spectrum {0, .., k}; dividing by k gives
    the height observable itself, with eigenvalues {l/k}.  The axis (0,0,1)
    returns the diagonal operator unchanged.
    """
    r = su2_rep_matrix(k, axis_to_su2(axis))
    d = np.arange(k + 1, dtype=float)
    m = (r * d) @ r.conj().T
    return IntegerSpectrumOperator(0.5 * (m + m.conj().T))


def caps_disjoint(u1: RotationAxis, e1: float,
                  u2: RotationAxis, e2: float) -> bool:
    """Whether the closed caps {H_u1 >= e1} and {H_u2 >= e2} are disjoint.

    Cap i has angular radius arccos(2 e_i - 1); disjointness of the closed
    caps requires the axis angle to strictly exceed the radius sum, so a
    boundary tangency counts as intersecting.
    """
    for e in (e1, e2):
        if not 0.0 < e < 1.0:
            raise ValueError("cap levels must lie strictly inside (0, 1)")
    dot = sum(a * b for a, b in zip(u1.u, u2.u))
    angle = math.acos(max(-1.0, min(1.0, dot)))
    radius1 = math.acos(2.0 * e1 - 1.0)
    radius2 = math.acos(2.0 * e2 - 1.0)
    return angle > radius1 + radius2


def caps_tangent(u1: RotationAxis, e1: float, u2: RotationAxis, e2: float,
                 tol: float = 1e-9) -> bool:
    """Whether the cap boundaries touch (within tol) without overlapping."""
    dot = sum(a * b for a, b in zip(u1.u, u2.u))
    angle = math.acos(max(-1.0, min(1.0, dot)))
    radius1 = math.acos(2.0 * e1 - 1.0)
    radius2 = math.acos(2.0 * e2 - 1.0)
    return abs(angle - (radius1 + radius2)) <= tol


def _stable_norm(v: np.ndarray) -> float:
    peak = np.max(np.abs(v))
    if peak == 0.0 or not np.isfinite(peak):
        return float(peak)
    return float(peak * np.linalg.norm(v / peak))


def operator_norm_power_iteration(m: np.ndarray, rng: np.random.Generator,
                                  restarts: int = 5, max_iter: int = 10_000,
                                  rel_tol: float = 1e-10) -> float:
    """Largest singular value of m by power iteration on m* m.

    Iterates are renormalized every step so singular values far below 1 do
    not underflow; several random restarts guard against starting vectors
    orthogonal to the top singular space.
    """
    m = np.asarray(m, dtype=complex)
    if np.max(np.abs(m)) < 1e-300:
        return 0.0
    best = 0.0
    dim = m.shape[1]
    for _ in range(restarts):
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        v /= _stable_norm(v)
        sigma = 0.0
        for _ in range(max_iter):
            mv = m @ v
            sigma_new = _stable_norm(mv)
            if sigma_new == 0.0:
                sigma = 0.0
                break
            w = m.conj().T @ (mv / sigma_new)
            wn = _stable_norm(w)
            if wn == 0.0:
                sigma = sigma_new
                break
            v = w / wn
            if abs(sigma_new - sigma) <= rel_tol * max(sigma_new, 1e-300):
                sigma = sigma_new
                break
            sigma = sigma_new
        best = max(best, sigma)
    return best


def projection_product_norm(k: int, u1: RotationAxis, e1: float,
                            u2: RotationAxis, e2: float,
                            seed: int = 20240801) -> float:
    """Operator norm of the product of the two cap spectral projections.

    Each projection keeps the rotated-height eigenvalues l/k >= e_i; the
    norm of their product is the cosine of the smallest principal angle
    between the ranges.
    """
    for e in (e1, e2):
        if not 0.0 < e < 1.0:
            raise ValueError("cap levels must lie strictly inside (0, 1)")
    op1 = rotated_height_operator(k, u1)
    op2 = rotated_height_operator(k, u2)
    p1 = spectral_projector_eig(op1, k * e1)
    p2 = spectral_projector_eig(op2, k * e2)
    rng = np.random.Generator(np.random.Philox(seed))
    return operator_norm_power_iteration(p1 @ p2, rng)
