import numpy as np
import pytest

from harmoniq import CoefficientVector, build_ladder, synthesize


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_state(n_qubits, rng, oversample=2):
    """Random normalized register state and its coefficient vector."""
    _, grid = build_ladder(n_qubits, oversample)
    amps = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    amps /= np.linalg.norm(amps)
    return synthesize(CoefficientVector(n_qubits, amps), grid), amps, grid
