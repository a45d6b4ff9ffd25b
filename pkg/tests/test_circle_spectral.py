import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pbklab.circle_spectral import (FourierSeries, IntegerSpectrumOperator,
                                    NodeCountError, SpectralConfig,
                                    default_node_count, hilbert_multiplier,
                                    propagator_matrix,
                                    random_integer_spectrum_operator,
                                    snapped_ceil, spectral_projector_eig,
                                    spectral_projector_quadrature,
                                    szego_project, szego_via_hilbert)


def coeffs(strategy=None):
    amplitude = st.complex_numbers(min_magnitude=1e-3, max_magnitude=10,
                                   allow_nan=False, allow_infinity=False)
    return st.dictionaries(st.integers(min_value=-12, max_value=12),
                           amplitude, min_size=0, max_size=8)


# --- Fourier series -------------------------------------------------------

def test_hilbert_multiplier_positive_mode():
    out = hilbert_multiplier(FourierSeries({3: 1.0}))
    assert out.coefficients == {3: -1j}


def test_hilbert_multiplier_kills_constant():
    out = hilbert_multiplier(FourierSeries({0: 2.0}))
    assert out.coefficients == {}


def test_hilbert_multiplier_sign_rule():
    out = hilbert_multiplier(FourierSeries({-2: 1.0, 2: 1.0}))
    assert out.coefficients == {-2: 1j, 2: -1j}


@given(coeffs())
def test_hilbert_involution(data):
    series = FourierSeries(data)
    twice = hilbert_multiplier(hilbert_multiplier(series))
    for p in set(series.coefficients) | set(twice.coefficients):
        expected = 0j if p == 0 else -series.coefficient(p)
        assert twice.coefficient(p) == expected


def test_szego_project_truncates():
    out = szego_project(FourierSeries({-1: 1.0, 0: 1.0, 1: 1.0}))
    assert out.coefficients == {0: 1.0 + 0j, 1: 1.0 + 0j}


def test_szego_project_fixes_hardy():
    out = szego_project(FourierSeries({5: 2.0 - 1j}))
    assert out.coefficients == {5: 2.0 - 1j}


@given(coeffs())
def test_szego_two_routes_agree(data):
    series = FourierSeries(data)
    direct = szego_project(series)
    assembled = szego_via_hilbert(series)
    for p in set(direct.coefficients) | set(assembled.coefficients):
        assert abs(direct.coefficient(p) - assembled.coefficient(p)) <= 1e-12


@given(coeffs())
def test_szego_idempotent(data):
    series = FourierSeries(data)
    once = szego_project(series)
    assert szego_project(once).coefficients == once.coefficients


def test_random_degree8_series_routes_to_1e12():
    rng = np.random.default_rng(11)
    data = {p: complex(rng.standard_normal(), rng.standard_normal())
            for p in range(-8, 9)}
    series = FourierSeries(data)
    direct = szego_project(series)
    assembled = szego_via_hilbert(series)
    for p in range(-8, 9):
        assert abs(direct.coefficient(p) - assembled.coefficient(p)) <= 1e-12


def test_evaluation_matches_direct_sum():
    rng = np.random.default_rng(3)
    data = {int(p): complex(rng.standard_normal(), rng.standard_normal())
            for p in rng.integers(-20, 20, size=6)}
    series = FourierSeries(data)
    for t in rng.uniform(-math.pi, math.pi, size=5):
        direct = sum(c * np.exp(1j * p * t) for p, c in data.items())
        assert abs(series.evaluate(t) - direct) <= 1e-12


def test_zero_coefficients_are_pruned():
    series = FourierSeries({4: 0.0, 2: 1.0})
    assert series.frequencies == (2,)


# --- operator construction ------------------------------------------------

def test_rejects_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        IntegerSpectrumOperator(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_rejects_non_integer_spectrum():
    with pytest.raises(ValueError, match="integral"):
        IntegerSpectrumOperator(np.diag([0.5, 1.0]))


def test_spectrum_is_cached():
    op = IntegerSpectrumOperator(np.diag([3.0, -2.0, 0.0]))
    assert op.spectrum == (-2, 0, 3)


def test_snapped_ceil():
    assert snapped_ceil(2.0) == 2
    assert snapped_ceil(2.0 + 1e-12) == 2
    assert snapped_ceil(2.0 - 1e-12) == 2
    assert snapped_ceil(2.1) == 3
    assert snapped_ceil(-0.5) == 0


# --- propagator -----------------------------------------------------------

def test_propagator_periodicity():
    op = IntegerSpectrumOperator(np.array([[1.0]]))
    u = propagator_matrix(op, 2.0 * math.pi)
    assert np.allclose(u, np.eye(1), atol=1e-12)


def test_propagator_diagonal_phases():
    op = IntegerSpectrumOperator(np.diag([0.0, 1.0]))
    u = propagator_matrix(op, math.pi)
    assert np.allclose(u, np.diag([1.0, -1.0]), atol=1e-12)


def test_propagator_group_law_and_unitarity():
    rng = np.random.default_rng(5)
    op = random_integer_spectrum_operator(6, rng)
    s, t = 0.7, -1.3
    us = propagator_matrix(op, s)
    ut = propagator_matrix(op, t)
    ust = propagator_matrix(op, s + t)
    assert np.max(np.abs(us @ ut - ust)) <= 1e-9
    assert np.max(np.abs(us @ us.conj().T - np.eye(6))) <= 1e-10


def test_propagator_rejects_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        propagator_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]), 1.0)


# --- spectral projectors --------------------------------------------------

def test_quadrature_projector_simple_cut():
    op = IntegerSpectrumOperator(np.diag([-1.0, 0.0, 2.0]))
    p = spectral_projector_quadrature(op, 0.0)
    assert np.allclose(p, np.diag([0.0, 1.0, 1.0]), atol=1e-10)


def test_quadrature_projector_shifted_cut():
    op = IntegerSpectrumOperator(np.diag([-1.0, 0.0, 2.0]))
    p = spectral_projector_quadrature(op, 0.5)
    assert np.allclose(p, np.diag([0.0, 0.0, 1.0]), atol=1e-10)


def test_quadrature_matches_eig_oracle():
    rng = np.random.default_rng(42)
    op = random_integer_spectrum_operator(8, rng)
    quad = spectral_projector_quadrature(op, 0.3)
    oracle = spectral_projector_eig(op, 0.3)
    assert np.max(np.abs(quad - oracle)) <= 1e-9


@pytest.mark.parametrize("dim", [1, 2, 8, 33, 64])
def test_projector_idempotent_hermitian(dim):
    rng = np.random.default_rng(dim)
    op = random_integer_spectrum_operator(dim, rng)
    energy = float(rng.uniform(-4, 4))
    for proj in (spectral_projector_quadrature(op, energy),
                 spectral_projector_eig(op, energy)):
        assert np.max(np.abs(proj @ proj - proj)) <= 1e-8
        assert np.max(np.abs(proj - proj.conj().T)) <= 1e-8


def test_insufficient_nodes_error_names_minimum():
    op = IntegerSpectrumOperator(np.diag([-3.0, 5.0]))
    needed = default_node_count(op, 0.0) // 2
    with pytest.raises(NodeCountError, match=str(needed)):
        spectral_projector_quadrature(op, 0.0, nodes=needed - 1)


def test_eig_projector_trivial_cases():
    assert np.allclose(spectral_projector_eig(np.zeros((3, 3)), 0.0),
                       np.eye(3))
    assert np.allclose(spectral_projector_eig(np.diag([1.0, 2.0]), 3.0),
                       np.zeros((2, 2)))


def test_eig_projector_scaled_ladder():
    k = 10
    matrix = np.diag(np.arange(k + 1) / k)
    p = spectral_projector_eig(matrix, 0.5)
    assert np.allclose(p, np.diag([0.0] * 5 + [1.0] * 6))
    assert round(np.trace(p).real) == 6


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=2, max_value=12),
       st.integers(min_value=2, max_value=4),
       st.floats(min_value=-3, max_value=3, allow_nan=False))
def test_period_reduction(dim, n, energy):
    rng = np.random.default_rng(dim * 100 + n)
    ints = n * rng.integers(-3, 4, size=dim)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, _ = np.linalg.qr(g)
    matrix = (q * ints) @ q.conj().T
    matrix = 0.5 * (matrix + matrix.conj().T)
    big = spectral_projector_eig(matrix, energy)
    reduced = spectral_projector_eig(matrix / n, energy / n)
    assert np.max(np.abs(big - reduced)) <= 1e-12


# --- spectral config ------------------------------------------------------

def test_spectral_config_cut():
    cfg = SpectralConfig(10, 0.5)
    assert cfg.cut_index == 5
    assert cfg.e_k == 0.5
    cfg = SpectralConfig(10, 0.51)
    assert cfg.cut_index == 6
    assert cfg.e_k == 0.6


def test_spectral_config_lattice():
    cfg = SpectralConfig(10, 0.55, stabilizer_order=2)
    # k*E/N = 2.75 -> ceil 3 -> cut on the lattice 2Z is 6
    assert cfg.cut_index == 6


@given(st.integers(min_value=1, max_value=500),
       st.floats(min_value=0.01, max_value=0.99))
def test_spectral_config_invariants(k, energy):
    cfg = SpectralConfig(k, energy)
    assert cfg.e_k >= energy - 1e-9
    assert abs(cfg.k * cfg.e_k - round(cfg.k * cfg.e_k)) < 1e-12
    assert cfg.e_k - energy < 1.0 / k + 1e-12
