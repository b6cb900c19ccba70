"""Smoke tests for the pybind11 module: thin checks that the bindings round-trip
numpy arrays and expose the main operations; the C++ suites carry the load."""

import math

import numpy as np
import pytest

import clustersim as cs


def test_kron_and_eig_roundtrip():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    i2 = np.eye(2, dtype=complex)
    emb = cs.kron(sx, i2)
    assert emb.shape == (4, 4)
    values, vectors = cs.herm_eig(emb)
    assert np.allclose(sorted(values), [-1, -1, 1, 1])
    assert np.allclose(vectors @ np.diag(values) @ vectors.conj().T, emb, atol=1e-12)


def test_cluster_state_equivalence_triangle():
    for n in (2, 3, 4):
        product = cs.cluster_product_form(n)
        driven = cs.evolve_pure(cs.initial_state(n), n, math.pi)
        mapped = cs.hadamard_map(cs.cluster_standard(n))
        assert cs.fidelity_pure(product, driven) == pytest.approx(1.0, abs=1e-10)
        assert cs.fidelity_pure(product, mapped) == pytest.approx(1.0, abs=1e-10)


def test_stabilizers():
    ok, residual, _ = cs.verify_stabilizers(cs.cluster_standard(4), 4)
    assert ok and residual < 1e-12
    assert cs.stabilizer_labels(3) == ["X1Z2", "Z1X2Z3", "Z2X3"]
    bad, _, worst = cs.verify_stabilizers(cs.initial_state(4), 4)
    assert not bad and worst


def test_chain_tuning():
    chain = cs.make_tuned_chain(4, e_c=20.0, e_j=1.0, l_j=1.0 / math.pi**2)
    g = cs.derive_g(chain)
    assert g == pytest.approx(chain.rate_g, rel=1e-12)
    h_raw = cs.build_raw(chain)
    h_proj = cs.build_projector_form(4, g)
    shift = cs.equivalence_shift(h_raw, h_proj, 4, g)
    assert shift == pytest.approx(3 * g / 4, rel=1e-10)


def test_single_qubit_decay():
    noise = cs.NoiseModel.relaxation_only(262.69, 100.0)
    rho0 = np.array([[0, 0], [0, 1]], dtype=complex)
    times, states = cs.integrate_master(
        rho0, np.zeros((2, 2), dtype=complex), cs.collapse_operators(noise, 1),
        t_end=5.0, dt=1e-3, sample_every=500)
    g1 = noise.gamma1()
    for t, rho in zip(times, states):
        assert rho[1, 1].real == pytest.approx(math.exp(-g1 * t), abs=1e-6)


def test_unitary_matches_expm():
    h = cs.build_projector_form(3, 1.0)
    for gt in (0.3, 1.7, math.pi):
        delta = cs.unitary_exact(3, gt) - cs.expm_oracle(h, gt)
        assert np.max(np.abs(delta)) < 1e-9


def test_run_scenario(tmp_path):
    config = cs.ExperimentConfig()
    config.n_qubits = 2
    config.t_end = 1.2 * math.pi
    config.kappa = 10.0
    config.scenario = "t1"
    config.output_dir = str(tmp_path)
    result = cs.run_scenario(config)
    assert result.error == ""
    assert (tmp_path / "t1.csv").exists()
    assert 0.0 < result.first_peak_fidelity < 1.0


def test_errors_are_typed():
    with pytest.raises(cs.NumericalError):
        cs.herm_eig(np.array([[0, 1], [0, 0]], dtype=complex))
    config = cs.ExperimentConfig()
    config.dt = 0.0
    with pytest.raises(cs.ConfigError):
        cs.run_scenario(config)
