import numpy as np
import pytest

import harmoniq as hq
from harmoniq.errors import CircuitError, GateError

from conftest import random_state


class TestApplySingle:
    def test_identity(self, rng):
        psi, _, _ = random_state(3, rng)
        out = hq.apply_single(psi, 2, hq.IDENTITY)
        assert np.abs(out.samples - psi.samples).max() < 1e-12

    def test_hadamard_on_sin(self):
        _, grid = hq.build_ladder(1)
        psi = hq.basis_waveform(grid, 1, "sin")
        out = hq.apply_single(psi, 1, hq.HADAMARD)
        t = grid.times
        expected = (np.sin(t) + np.cos(t)) / np.sqrt(2)
        assert np.abs(out.samples - expected).max() < 1e-12

    def test_hadamard_involution(self, rng):
        psi, _, _ = random_state(4, rng)
        out = hq.apply_single(hq.apply_single(psi, 3, hq.HADAMARD), 3, hq.HADAMARD)
        assert np.abs(out.samples - psi.samples).max() < 1e-10

    def test_norm_preserved(self, rng):
        psi, _, _ = random_state(4, rng)
        out = hq.apply_single(psi, 1, hq.HADAMARD)
        assert hq.analyze(out).norm_squared() == pytest.approx(1.0, abs=1e-10)

    def test_nonunitary_rejected(self, rng):
        psi, _, _ = random_state(2, rng)
        squash = hq.Unitary2(1, 0, 0, 0.5)
        with pytest.raises(GateError):
            hq.apply_single(psi, 1, squash)
        out = hq.apply_single(psi, 1, squash, allow_nonunitary=True)
        assert hq.analyze(out).norm_squared() < 1.0


class TestApplyControlled:
    def test_cnot_flips_when_control_cos(self):
        _, grid = hq.build_ladder(2)
        psi = hq.product_basis_waveform(grid, 0b10)  # control cos, target sin
        out = hq.apply_controlled(psi, 1, 2, hq.NOT)
        expected = hq.product_basis_waveform(grid, 0b11)
        assert np.abs(out.samples - expected.samples).max() < 1e-10

    def test_cnot_inert_when_control_sin(self):
        _, grid = hq.build_ladder(2)
        psi = hq.product_basis_waveform(grid, 0b00)
        out = hq.apply_controlled(psi, 1, 2, hq.NOT)
        assert np.abs(out.samples - psi.samples).max() < 1e-10

    def test_controlled_phase_on_cos_cos(self):
        _, grid = hq.build_ladder(2)
        psi = hq.product_basis_waveform(grid, 0b11)
        out = hq.apply_controlled(psi, 1, 2, hq.phase_unitary(2))
        expected = np.exp(1j * np.pi / 4) * psi.samples
        assert np.abs(out.samples - expected).max() < 1e-10

    def test_matches_dense_oracle(self, rng):
        psi, amps, _ = random_state(4, rng)
        dense = hq.DenseState(4, amps)
        op = hq.controlled_op(3, 1, hq.phase_unitary(1))
        out = hq.apply_controlled(psi, 3, 1, hq.phase_unitary(1))
        dense_out = hq.dense_apply(dense, op)
        assert np.abs(hq.analyze(out).amps - dense_out.amps).max() < 1e-10

    def test_toffoli_against_oracle(self, rng):
        psi, amps, _ = random_state(3, rng)
        out = hq.apply_controlled(psi, (1, 2), 3, hq.NOT)
        cube = amps.reshape(2, 2, 2).copy()
        cube[1, 1, :] = cube[1, 1, ::-1]
        assert np.abs(hq.analyze(out).amps - cube.reshape(-1)).max() < 1e-10

    def test_control_depth_limit_enforced(self, rng):
        psi, _, _ = random_state(5, rng)
        with pytest.raises(GateError):
            hq.apply_controlled(psi, (1, 2, 3, 4), 5, hq.NOT)

    def test_overlapping_indices_rejected(self, rng):
        psi, _, _ = random_state(3, rng)
        with pytest.raises(GateError):
            hq.apply_controlled(psi, 2, 2, hq.NOT)

    def test_disjoint_gates_commute(self, rng):
        psi, _, _ = random_state(4, rng)
        ab = hq.apply_controlled(
            hq.apply_single(psi, 1, hq.HADAMARD), 3, 4, hq.NOT
        )
        ba = hq.apply_single(
            hq.apply_controlled(psi, 3, 4, hq.NOT), 1, hq.HADAMARD
        )
        assert np.abs(ab.samples - ba.samples).max() < 1e-10


class TestQft:
    def test_single_qubit_is_hadamard(self):
        circ = hq.build_qft([1])
        assert len(circ.ops) == 1
        assert circ.ops[0].kind == "H"

    def test_three_qubit_gate_count(self):
        circ = hq.build_qft([1, 2, 3])
        kinds = [op.kind for op in circ.ops]
        assert kinds.count("H") == 3
        assert kinds.count("CR") == 3

    def test_nine_qubit_gate_count(self):
        circ = hq.build_qft(list(range(1, 10)))
        kinds = [op.kind for op in circ.ops]
        assert kinds.count("H") == 9
        assert kinds.count("CR") == 36

    def test_phase_distance_assignment(self):
        circ = hq.build_qft([1, 2, 3])
        crs = [(op.d, op.qubits) for op in circ.ops if op.kind == "CR"]
        assert (1, (2, 1)) in crs
        assert (2, (3, 1)) in crs
        assert (1, (3, 2)) in crs

    @pytest.mark.parametrize("n_qubits", [2, 3, 4])
    def test_matches_transform_matrix(self, n_qubits, rng):
        # circuit plus bit-reversed readout equals the analytic transform
        amps = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
        amps /= np.linalg.norm(amps)
        dense = hq.DenseState(n_qubits, amps)
        circ = hq.build_qft(list(range(1, n_qubits + 1)))
        for op in circ.ops:
            dense = hq.dense_apply(dense, op)
        got = dense.amps.reshape([2] * n_qubits)
        got = got.transpose(list(range(n_qubits))[::-1]).reshape(-1)
        expected = hq.qft_matrix(n_qubits) @ amps
        assert np.abs(got - expected).max() < 1e-12

    def test_uniform_superposition_maps_to_zero_index(self, rng):
        n_qubits = 4
        amps = np.full(2**n_qubits, 1 / np.sqrt(2**n_qubits), dtype=complex)
        _, grid = hq.build_ladder(n_qubits)
        psi = hq.synthesize(hq.CoefficientVector(n_qubits, amps), grid)
        circ = hq.build_qft(list(range(1, n_qubits + 1)))
        psi, _ = hq.run_circuit(psi, circ)
        out = hq.analyze(psi).amps
        assert abs(out[0]) == pytest.approx(1.0, abs=1e-8)
        assert np.abs(out[1:]).max() < 1e-8


class TestRunCircuit:
    def test_empty_circuit(self, rng):
        psi, _, _ = random_state(3, rng)
        out, records = hq.run_circuit(psi, hq.Circuit(3))
        assert np.abs(out.samples - psi.samples).max() == 0.0
        assert records == []

    def test_hh_involution(self, rng):
        psi, _, _ = random_state(4, rng)
        circ = hq.Circuit(4, (hq.hadamard_op(2), hq.hadamard_op(2)))
        out, _ = hq.run_circuit(psi, circ)
        assert np.abs(out.samples - psi.samples).max() < 1e-10

    def test_random_circuit_vs_oracle(self, rng):
        psi, amps, _ = random_state(5, rng)
        circ = hq.random_circuit(5, 20, rng)
        dense = hq.DenseState(5, amps)
        for op in circ.ops:
            dense = hq.dense_apply(dense, op)
        out, _ = hq.run_circuit(psi, circ)
        assert np.abs(hq.analyze(out).amps - dense.amps).max() < 1e-8

    def test_removed_qubit_reference_fails(self, rng):
        psi, _, _ = random_state(3, rng)
        circ = hq.Circuit(
            3, (hq.measure_op(3), hq.remove_op(3), hq.hadamard_op(3))
        )
        with pytest.raises(CircuitError):
            hq.run_circuit(psi, circ, rng_seed=0)

    def test_remove_before_measure_fails(self, rng):
        psi, _, _ = random_state(3, rng)
        circ = hq.Circuit(3, (hq.remove_op(2),))
        with pytest.raises(CircuitError):
            hq.run_circuit(psi, circ, rng_seed=0)

    def test_measure_then_gate_on_survivors(self, rng):
        psi, _, _ = random_state(3, rng)
        circ = hq.Circuit(
            3,
            (
                hq.measure_op(2),
                hq.remove_op(2),
                hq.hadamard_op(1),
                hq.cnot_op(1, 3),
            ),
        )
        out, records = hq.run_circuit(psi, circ, rng_seed=5)
        assert out.grid.ladder.n_qubits == 2
        assert len(records) == 1

    def test_circuit_too_wide(self, rng):
        psi, _, _ = random_state(2, rng)
        with pytest.raises(CircuitError):
            hq.run_circuit(psi, hq.Circuit(3, (hq.hadamard_op(3),)))

    def test_seeded_measurement_reproducible(self):
        _, grid = hq.build_ladder(1)
        t = grid.times
        tie = hq.Waveform(grid, ((np.sin(t) + np.cos(t)) / np.sqrt(2)).astype(complex))
        circ = hq.Circuit(1, (hq.measure_op(1),))
        outcomes = {hq.run_circuit(tie, circ, rng_seed=11)[1][0].outcome for _ in range(5)}
        assert len(outcomes) == 1


class TestUnitary2:
    def test_hadamard_is_unitary(self):
        assert hq.HADAMARD.is_unitary()

    def test_phase_gate_is_unitary(self):
        for d in range(5):
            assert hq.phase_unitary(d).is_unitary()

    def test_matrix_round_trip(self):
        u = hq.Unitary2.from_matrix(hq.HADAMARD.matrix())
        assert u == hq.HADAMARD
