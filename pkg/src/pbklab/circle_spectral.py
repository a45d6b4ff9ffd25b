"""Fourier analysis on the circle and spectral projections of periodic flows.

The periodic Hilbert transform acts on e_p(t) = e^{ipt} as the Fourier
multiplier -i*sgn(p).  The Hardy-space (Cauchy-Szego) projection keeps the
nonnegative frequencies and satisfies

    P(g) = (i*Hg + g + ghat(0)) / 2.

For a Hermitian matrix A whose one-parameter group U_A(t) = e^{itA} is
2*pi-periodic (equivalently: integer spectrum), the spectral projection
onto [E, infinity) is the Hardy projection of t -> e^{-i ceil(E) t} U_A(t)
evaluated at t = 0:

    P_{A,E} = (i*H_term + Id + mean_term) / 2,
    mean_term = (1/2pi) integral_{-pi}^{pi} U_A(t) e^{-i ceil(E) t} dt,
    H_term   = (1/2pi) integral_0^pi (U_A(-t) e^{i ceil(E) t}
                                      - U_A(t) e^{-i ceil(E) t}) cot(t/2) dt.

Both integrands are trigonometric polynomials, so the open midpoint rule
(which never touches the removable singularity at t = 0) integrates them
exactly once the node count exceeds the frequency content.  This gives a
route to the projector that never touches an eigendecomposition; the
eigendecomposition route is kept alongside as an oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

HERMITIAN_TOL = 1e-12
INTEGER_SPECTRUM_TOL = 1e-8
EIGENVALUE_TIE_TOL = 1e-9


class NodeCountError(ValueError):
    """Raised when a quadrature is attempted with too few nodes."""


def snapped_ceil(x: float, tol: float = EIGENVALUE_TIE_TOL) -> int:
    """ceil(x), except values within tol of an integer snap to that integer.

    Keeps an eigenvalue sitting exactly at the spectral cut inside the
    projector (the cut interval is closed on the left).
    """
    r = round(x)
    if abs(x - r) <= tol:
        return int(r)
    return int(math.ceil(x))


# ---------------------------------------------------------------------------
# finite Fourier series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FourierSeries:
    """A trigonometric polynomial sum_p ghat(p) e^{ipt} with finite support."""

    coefficients: Mapping[int, complex]

    def __post_init__(self):
        pruned = {int(p): complex(c) for p, c in self.coefficients.items()
                  if complex(c) != 0}
        object.__setattr__(self, "coefficients", pruned)

    @property
    def frequencies(self) -> tuple[int, ...]:
        return tuple(sorted(self.coefficients))

    def coefficient(self, p: int) -> complex:
        return self.coefficients.get(p, 0j)

    def evaluate(self, t: float) -> complex:
        return sum(c * np.exp(1j * p * t) for p, c in self.coefficients.items())


def hilbert_multiplier(series: FourierSeries) -> FourierSeries:
    """Periodic Hilbert transform: ghat(p) -> -i*sgn(p)*ghat(p)."""
    out = {}
    for p, c in series.coefficients.items():
        if p > 0:
            out[p] = -1j * c
        elif p < 0:
            out[p] = 1j * c
    return FourierSeries(out)


def szego_project(series: FourierSeries) -> FourierSeries:
    """Hardy-space projection: drop every negative frequency."""
    return FourierSeries({p: c for p, c in series.coefficients.items() if p >= 0})


def szego_via_hilbert(series: FourierSeries) -> FourierSeries:
    """The assembly (i*Hg + g + ghat(0))/2; equals szego_project exactly."""
    hg = hilbert_multiplier(series)
    out = {}
    for p in set(series.coefficients) | set(hg.coefficients) | {0}:
        val = 0.5 * (1j * hg.coefficient(p) + series.coefficient(p))
        if p == 0:
            val += 0.5 * series.coefficient(0)
        out[p] = val
    return FourierSeries(out)


# ---------------------------------------------------------------------------
# operators with integer spectrum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntegerSpectrumOperator:
    """Hermitian matrix whose unitary group e^{itA} is 2*pi-periodic.

    Construction validates Hermitian symmetry (max-norm 1e-12) and that
    every eigenvalue is within 1e-8 of an integer; the rounded integer
    spectrum is cached for node-count bookkeeping only, never for the
    quadrature values themselves.
    """

    matrix: np.ndarray
    spectrum: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("matrix must be square")
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise ValueError("matrix is not Hermitian to 1e-12 in max-norm")
        m = 0.5 * (m + m.conj().T)
        eigs = np.linalg.eigvalsh(m)
        rounded = np.round(eigs)
        if np.max(np.abs(eigs - rounded)) > INTEGER_SPECTRUM_TOL:
            raise ValueError(
                "spectrum is not integral to 1e-8; the flow e^(itA) would "
                "not be 2*pi-periodic")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "spectrum",
                           tuple(int(v) for v in rounded))

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def _as_operator(a) -> IntegerSpectrumOperator:
    if isinstance(a, IntegerSpectrumOperator):
        return a
    return IntegerSpectrumOperator(np.asarray(a, dtype=complex))


def expm_series(m: np.ndarray, term_tol: float = 1e-16,
                max_squarings: int = 64) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring of the Taylor series.

    No eigendecomposition is involved, which keeps the quadrature route to
    spectral projectors independent of the eigen-oracle.
    """
    m = np.asarray(m, dtype=complex)
    norm = np.linalg.norm(m, 1)
    s = 0
    if norm > 0.5:
        s = int(math.ceil(math.log2(norm / 0.5)))
        if s > max_squarings:
            raise ValueError(f"matrix norm {norm:.3e} needs more than "
                             f"{max_squarings} squarings")
    b = m / (2.0 ** s)
    result = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    j = 1
    while True:
        term = term @ b / j
        result = result + term
        if np.linalg.norm(term, 1) < term_tol:
            break
        j += 1
        if j > 128:
            raise RuntimeError("exponential series failed to converge")
    for _ in range(s):
        result = result @ result
    return result


def propagator_matrix(a, t: float) -> np.ndarray:
    """U_A(t) = e^{itA}, computed without eigendecomposition."""
    op = _as_operator(a)
    return expm_series(1j * t * op.matrix)


def _required_nodes(op: IntegerSpectrumOperator, cut: int) -> int:
    max_q = max((abs(p - cut) for p in op.spectrum), default=0)
    return 4 * (max_q + 1)


def default_node_count(a, energy: float) -> int:
    """Default quadrature resolution: 8*(max|p - ceil(E)| + 1)."""
    op = _as_operator(a)
    cut = snapped_ceil(energy)
    return 2 * _required_nodes(op, cut)


def spectral_projector_quadrature(a, energy: float,
                                  nodes: int | None = None) -> np.ndarray:
    """1_{[E,inf)}(A) via the Hilbert-transform representation.

    The mean and Hilbert integrals are discretized with the open midpoint
    rule; with enough nodes the rule is exact for the trigonometric
    integrands, so the only error is rounding.
    """
    op = _as_operator(a)
    cut = snapped_ceil(energy)
    needed = _required_nodes(op, cut)
    if nodes is None:
        nodes = 2 * needed
    if nodes < needed:
        raise NodeCountError(
            f"{nodes} quadrature nodes are insufficient; this operator and "
            f"energy level need at least {needed}")

    d = op.dimension
    ident = np.eye(d, dtype=complex)

    # mean term: (1/2pi) int_{-pi}^{pi} U(t) e^{-i cut t} dt, midpoint rule.
    h = 2.0 * math.pi / nodes
    u_step = expm_series(1j * h * op.matrix)
    u = expm_series(1j * (-math.pi + 0.5 * h) * op.matrix)
    mean_term = np.zeros((d, d), dtype=complex)
    t = -math.pi + 0.5 * h
    for _ in range(nodes):
        mean_term += u * np.exp(-1j * cut * t)
        u = u @ u_step
        t += h
    mean_term /= nodes

    # Hilbert term: (1/2pi) int_0^pi (U(-t)e^{i cut t} - U(t)e^{-i cut t})
    #               cot(t/2) dt, midpoint rule; U(-t) = U(t)^*.
    hh = math.pi / nodes
    u_step = expm_series(1j * hh * op.matrix)
    u = expm_series(1j * 0.5 * hh * op.matrix)
    hilbert_term = np.zeros((d, d), dtype=complex)
    t = 0.5 * hh
    for _ in range(nodes):
        phase = np.exp(-1j * cut * t)
        bracket = u.conj().T * np.conj(phase) - u * phase
        hilbert_term += bracket * (1.0 / math.tan(0.5 * t))
        u = u @ u_step
        t += hh
    hilbert_term *= hh / (2.0 * math.pi)

    return 0.5 * (1j * hilbert_term + ident + mean_term)


def spectral_projector_eig(a, energy: float) -> np.ndarray:
    """Oracle route: sum of v v* over eigenpairs with eigenvalue >= E - 1e-9.

    Accepts an IntegerSpectrumOperator or any Hermitian matrix.
    """
    if isinstance(a, IntegerSpectrumOperator):
        m = a.matrix
    else:
        m = np.asarray(a, dtype=complex)
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
            raise ValueError("matrix is not Hermitian to 1e-12 in max-norm")
    eigvals, eigvecs = np.linalg.eigh(m)
    keep = eigvals >= energy - EIGENVALUE_TIE_TOL
    v = eigvecs[:, keep]
    return v @ v.conj().T


def random_integer_spectrum_operator(dim: int, rng: np.random.Generator,
                                     low: int = -8, high: int = 8
                                     ) -> IntegerSpectrumOperator:
    """A random Hermitian matrix with integer spectrum in [low, high]."""
    ints = rng.integers(low, high + 1, size=dim)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    m = (q * ints) @ q.conj().T
    return IntegerSpectrumOperator(0.5 * (m + m.conj().T))


# ---------------------------------------------------------------------------
# spectral configuration bundles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralConfig:
    """Bundle (k, E, N) with the derived spectral cut.

    The admissible frequencies live on the lattice N*Z, so the cut index is
    N*ceil(k*E/N); for N = 1 this is ceil(k*E), and E_k = ceil(k*E)/k.
    """

    k: int
    energy: float
    stabilizer_order: int = 1

    def __post_init__(self):
        if self.k < 1 or int(self.k) != self.k:
            raise ValueError("k must be a positive integer")
        if self.stabilizer_order < 1 or int(self.stabilizer_order) != self.stabilizer_order:
            raise ValueError("stabilizer order must be a positive integer")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "stabilizer_order", int(self.stabilizer_order))

    @property
    def cut_index(self) -> int:
        n = self.stabilizer_order
        return n * snapped_ceil(self.k * self.energy / n)

    @property
    def e_k(self) -> float:
        return self.cut_index / self.k
