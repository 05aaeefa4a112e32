import numpy as np
import pytest

import harmoniq as hq
from harmoniq.errors import CircuitSyntaxError


def test_two_op_circuit():
    circ = hq.parse_circuit("H 1\nCNOT 1 2")
    assert circ.n_qubits == 2
    assert [op.kind for op in circ.ops] == ["H", "CNOT"]


def test_cr_mnemonic_mapping():
    circ = hq.parse_circuit("CR 2 1 3")
    op = circ.ops[0]
    assert op.kind == "CR"
    assert op.d == 2
    assert op.qubits == (1, 3)
    assert hq.phase_unitary(op.d).u11 == pytest.approx(np.exp(1j * np.pi / 4))


def test_comments_and_blank_lines():
    text = """
# full line comment
H 1   # trailing comment

MEASURE 1
REMOVE 1
"""
    circ = hq.parse_circuit(text)
    assert [op.kind for op in circ.ops] == ["H", "MEASURE", "REMOVE"]


def test_unitary_op_with_eight_floats():
    h = 1 / np.sqrt(2)
    circ = hq.parse_circuit(f"U 2 {h} 0 {h} 0 {h} 0 {-h} 0")
    op = circ.ops[0]
    assert op.kind == "U"
    assert op.unitary.is_unitary()


def test_unknown_mnemonic_position():
    with pytest.raises(CircuitSyntaxError) as err:
        hq.parse_circuit("HADAMARD 1")
    assert err.value.line == 1
    assert err.value.column == 1


def test_error_line_number_counts_comments():
    with pytest.raises(CircuitSyntaxError) as err:
        hq.parse_circuit("# intro\nH 1\nBOGUS 2\n")
    assert err.value.line == 3


def test_bad_arity():
    with pytest.raises(CircuitSyntaxError) as err:
        hq.parse_circuit("CNOT 1")
    assert "2 arguments" in str(err.value)


def test_zero_index_rejected_with_column():
    with pytest.raises(CircuitSyntaxError) as err:
        hq.parse_circuit("H 0")
    assert err.value.line == 1
    assert err.value.column == 3


def test_non_integer_index():
    with pytest.raises(CircuitSyntaxError):
        hq.parse_circuit("H x")


def test_control_equals_target():
    with pytest.raises(CircuitSyntaxError):
        hq.parse_circuit("CNOT 2 2")


def test_negative_phase_exponent():
    with pytest.raises(CircuitSyntaxError):
        hq.parse_circuit("CR -1 1 2")


def test_case_insensitive_mnemonics():
    circ = hq.parse_circuit("h 1\ncnot 1 2")
    assert [op.kind for op in circ.ops] == ["H", "CNOT"]


def test_parsed_circuit_runs(rng):
    text = "H 1\nCR 1 1 2\nCNOT 2 3\nH 3\n"
    circ = hq.parse_circuit(text)
    _, grid = hq.build_ladder(3)
    amps = np.zeros(8, dtype=complex)
    amps[0] = 1.0
    psi = hq.synthesize(hq.CoefficientVector(3, amps), grid)
    dense = hq.DenseState(3, amps)
    for op in circ.ops:
        dense = hq.dense_apply(dense, op)
    out, _ = hq.run_circuit(psi, circ)
    assert np.abs(hq.analyze(out).amps - dense.amps).max() < 1e-10
