"""Dense state-vector simulator used as an independent correctness oracle.

Intentionally simple: amplitudes indexed exactly like CoefficientVector
(qubit 1 = most significant bit, 0 = sin, 1 = cos), textbook matrix action,
no performance tricks.  Only meant for small registers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gates
from .errors import CircuitError, SizeError
from .measure import pick_outcome
from .spectral import COS, SIN
from .waveform import Waveform, analyze


@dataclass(frozen=True, eq=False)
class DenseState:
    n_qubits: int
    amps: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(self.amps, dtype=np.complex128)
        if a.shape != (2**self.n_qubits,):
            raise SizeError(
                f"expected {2**self.n_qubits} amplitudes, got {self.amps.shape}"
            )
        if abs(np.linalg.norm(a) - 1.0) > 1e-12:
            raise SizeError("dense states must be unit norm")
        a.flags.writeable = False
        object.__setattr__(self, "amps", a)

    @classmethod
    def normalized(cls, n_qubits: int, amps: np.ndarray) -> "DenseState":
        a = np.asarray(amps, dtype=np.complex128)
        return cls(n_qubits, a / np.linalg.norm(a))

    @classmethod
    def zero(cls, n_qubits: int) -> "DenseState":
        a = np.zeros(2**n_qubits, dtype=np.complex128)
        a[0] = 1.0
        return cls(n_qubits, a)


def _apply_1q(amps: np.ndarray, n_qubits: int, n: int, u: np.ndarray) -> np.ndarray:
    cube = amps.reshape([2] * n_qubits)
    cube = np.moveaxis(cube, n - 1, -1) @ u.T
    return np.moveaxis(cube, -1, n - 1).reshape(-1)


def _apply_controlled(
    amps: np.ndarray, n_qubits: int, c: int, n: int, u: np.ndarray
) -> np.ndarray:
    cube = amps.reshape([2] * n_qubits).copy()
    index: list = [slice(None)] * n_qubits
    index[c - 1] = 1
    sub = cube[tuple(index)]
    target_axis = n - 1 if n < c else n - 2
    sub = np.moveaxis(np.moveaxis(sub, target_axis, -1) @ u.T, -1, target_axis)
    cube[tuple(index)] = sub
    return cube.reshape(-1)


def dense_apply(state: DenseState, op: gates.CircuitOp) -> DenseState:
    """Textbook matrix action of one circuit op."""
    n_qubits = state.n_qubits
    if any(q > n_qubits for q in op.qubits):
        raise SizeError(f"op {op.kind} {op.qubits} exceeds {n_qubits} qubits")
    if op.kind == gates.H:
        amps = _apply_1q(state.amps, n_qubits, op.qubits[0], gates.HADAMARD.matrix())
    elif op.kind == gates.U1:
        amps = _apply_1q(state.amps, n_qubits, op.qubits[0], op.unitary.matrix())
    elif op.kind == gates.CR:
        amps = _apply_controlled(
            state.amps, n_qubits, *op.qubits, gates.phase_unitary(op.d).matrix()
        )
    elif op.kind == gates.CNOT:
        amps = _apply_controlled(state.amps, n_qubits, *op.qubits, gates.NOT.matrix())
    elif op.kind == gates.CU:
        amps = _apply_controlled(state.amps, n_qubits, *op.qubits, op.unitary.matrix())
    else:
        raise CircuitError(
            f"dense_apply handles unitary ops only, got {op.kind}; "
            "use dense_measure / dense_remove"
        )
    return DenseState(n_qubits, amps)


def dense_probabilities(state: DenseState, n: int) -> tuple[float, float]:
    cube = np.abs(state.amps.reshape([2] * state.n_qubits)) ** 2
    other = tuple(ax for ax in range(state.n_qubits) if ax != n - 1)
    marg = cube.sum(axis=other)
    return float(marg[0]), float(marg[1])


def dense_measure(
    state: DenseState, n: int, mode: str = "max_rule", rng=None
) -> tuple[str, DenseState]:
    if rng is None:
        rng = np.random.default_rng()
    p_sin, p_cos = dense_probabilities(state, n)
    outcome = pick_outcome(p_sin, p_cos, mode, rng)
    cube = state.amps.reshape([2] * state.n_qubits).copy()
    index: list = [slice(None)] * state.n_qubits
    index[n - 1] = 1 if outcome == SIN else 0
    cube[tuple(index)] = 0.0
    return outcome, DenseState.normalized(state.n_qubits, cube.reshape(-1))


def dense_remove(state: DenseState, n: int, outcome: str) -> DenseState:
    cube = state.amps.reshape([2] * state.n_qubits)
    kept = np.take(cube, 1 if outcome == COS else 0, axis=n - 1).reshape(-1)
    return DenseState.normalized(state.n_qubits - 1, kept)


def dense_run_circuit(
    state: DenseState,
    circuit: gates.Circuit,
    rng_seed: int | None = None,
    measure_mode: str = "max_rule",
):
    """Mirror of gates.run_circuit on the dense backend (same rng protocol)."""
    rng = np.random.default_rng(rng_seed)
    position = {q: q for q in range(1, state.n_qubits + 1)}
    outcomes: dict[int, str] = {}
    results = []

    def pos(q: int) -> int:
        if q not in position:
            raise CircuitError(f"op references removed qubit {q}")
        return position[q]

    for op in circuit.ops:
        if op.kind == gates.MEASURE:
            outcome, state = dense_measure(state, pos(op.qubits[0]), measure_mode, rng)
            outcomes[op.qubits[0]] = outcome
            results.append((op.qubits[0], outcome))
        elif op.kind == gates.REMOVE:
            q = op.qubits[0]
            if q not in outcomes:
                raise CircuitError(f"qubit {q} must be measured before removal")
            removed_pos = pos(q)
            state = dense_remove(state, removed_pos, outcomes[q])
            del position[q]
            for orig, p in position.items():
                if p > removed_pos:
                    position[orig] = p - 1
        else:
            mapped = gates.CircuitOp(
                op.kind, tuple(pos(q) for q in op.qubits), d=op.d, unitary=op.unitary
            )
            state = dense_apply(state, mapped)
    return state, results


def qft_matrix(n_qubits: int) -> np.ndarray:
    """Unitary with entries ``exp(2 pi i x y / 2^n) / 2^(n/2)``."""
    dim = 2**n_qubits
    x = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(x, x) / dim) / np.sqrt(dim)


def assert_equivalent(psi: Waveform, state: DenseState, tol: float) -> dict:
    """Compare waveform-analyzed amplitudes with the dense amplitudes."""
    if psi.grid.ladder.n_qubits != state.n_qubits:
        raise SizeError("qubit counts differ")
    diff = np.abs(analyze(psi).amps - state.amps)
    max_diff = float(diff.max())
    return {
        "max_abs_diff": max_diff,
        "tol": tol,
        "pass": bool(max_diff < tol),
        "worst_index": int(diff.argmax()),
    }


def run_differential_suite(
    n_qubits: int,
    n_circuits: int,
    seed: int,
    depth: int = 20,
    tol: float = 1e-8,
    oversample: int = 2,
) -> dict:
    """Random circuits on both backends; reports the worst deviation."""
    from .spectral import build_ladder
    from .waveform import CoefficientVector, synthesize

    rng = np.random.default_rng(seed)
    _, grid = build_ladder(n_qubits, oversample)
    worst = 0.0
    failures = 0
    for _ in range(n_circuits):
        amps = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
        amps /= np.linalg.norm(amps)
        psi = synthesize(CoefficientVector(n_qubits, amps), grid)
        dense = DenseState(n_qubits, amps)
        circuit = gates.random_circuit(n_qubits, int(rng.integers(1, depth + 1)), rng)
        for op in circuit.ops:
            dense = dense_apply(dense, op)
        psi, _ = gates.run_circuit(psi, circuit)
        report = assert_equivalent(psi, dense, tol)
        worst = max(worst, report["max_abs_diff"])
        failures += 0 if report["pass"] else 1
    return {
        "n_qubits": n_qubits,
        "n_circuits": n_circuits,
        "depth_max": depth,
        "seed": seed,
        "tol": tol,
        "max_abs_diff": worst,
        "failures": failures,
        "pass": failures == 0,
    }
