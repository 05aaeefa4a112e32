"""Gates on waveform registers, circuits, the QFT builder, and a text parser.

Single-qubit matrices act on the ordered basis (|0> = sin, |1> = cos).
Controlled operations follow the nested-addressing recipe: extract the
control's cosine branch, transform the target inside that branch with the
control excluded from the active set, then recombine with the untouched sine
branch.  Deeper nesting implements multi-controlled gates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .addressing import address_fast
from .errors import CircuitError, CircuitSyntaxError, GateError
from .waveform import Waveform

MAX_CONTROL_DEPTH = 3


@dataclass(frozen=True)
class Unitary2:
    """2x2 complex matrix over (sin, cos); u01 maps cos-amplitude into sin."""

    u00: complex
    u01: complex
    u10: complex
    u11: complex

    def matrix(self) -> np.ndarray:
        return np.array(
            [[self.u00, self.u01], [self.u10, self.u11]], dtype=np.complex128
        )

    def is_unitary(self, tol: float = 1e-12) -> bool:
        u = self.matrix()
        return bool(np.allclose(u.conj().T @ u, np.eye(2), atol=tol))

    @classmethod
    def from_matrix(cls, u: np.ndarray) -> "Unitary2":
        return cls(complex(u[0, 0]), complex(u[0, 1]), complex(u[1, 0]), complex(u[1, 1]))


HADAMARD = Unitary2(
    1 / np.sqrt(2), 1 / np.sqrt(2), 1 / np.sqrt(2), -1 / np.sqrt(2)
)
NOT = Unitary2(0, 1, 1, 0)
IDENTITY = Unitary2(1, 0, 0, 1)


def phase_unitary(d: int) -> Unitary2:
    """diag(1, e^{i pi / 2^d}): phase on the cosine branch."""
    if d < 0:
        raise GateError(f"phase exponent must be nonnegative, got {d}")
    return Unitary2(1, 0, 0, np.exp(1j * np.pi / 2**d))


# op kinds
H, CR, CNOT, U1, CU, MEASURE, REMOVE = "H", "CR", "CNOT", "U", "CU", "MEASURE", "REMOVE"
_UNITARY_KINDS = (H, CR, CNOT, U1, CU)


@dataclass(frozen=True)
class CircuitOp:
    """One circuit step; ``qubits`` is (target,) or (control, target)."""

    kind: str
    qubits: tuple[int, ...]
    d: int | None = None
    unitary: Unitary2 | None = None

    def __post_init__(self):
        if any(q < 1 for q in self.qubits):
            raise CircuitError(f"qubit indices are 1-based, got {self.qubits}")
        if len(self.qubits) == 2 and self.qubits[0] == self.qubits[1]:
            raise CircuitError(f"control equals target in {self.kind} op")


def hadamard_op(n: int) -> CircuitOp:
    return CircuitOp(H, (n,))


def phase_op(d: int, control: int, target: int) -> CircuitOp:
    return CircuitOp(CR, (control, target), d=d)


def cnot_op(control: int, target: int) -> CircuitOp:
    return CircuitOp(CNOT, (control, target))


def unitary_op(n: int, u: Unitary2) -> CircuitOp:
    return CircuitOp(U1, (n,), unitary=u)


def controlled_op(control: int, target: int, u: Unitary2) -> CircuitOp:
    return CircuitOp(CU, (control, target), unitary=u)


def measure_op(n: int) -> CircuitOp:
    return CircuitOp(MEASURE, (n,))


def remove_op(n: int) -> CircuitOp:
    return CircuitOp(REMOVE, (n,))


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    ops: tuple[CircuitOp, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if any(q > self.n_qubits for q in op.qubits):
                raise CircuitError(
                    f"op {op.kind} {op.qubits} exceeds {self.n_qubits} qubits"
                )


def _check_unitary(u: Unitary2, allow_nonunitary: bool) -> None:
    if not allow_nonunitary and not u.is_unitary():
        raise GateError("matrix is not unitary (pass allow_nonunitary=True to force)")


def apply_single(
    psi: Waveform, n: int, u: Unitary2, active=None, allow_nonunitary: bool = False
) -> Waveform:
    """Transform qubit ``n``: each isolated coefficient function multiplies
    the transformed image of its basis function."""
    _check_unitary(u, allow_nonunitary)
    pair = address_fast(psi, n, active)
    grid = psi.grid
    w_n = grid.ladder.frequency(n)
    t = grid.times
    s, c = np.sin(w_n * t), np.cos(w_n * t)
    samples = pair.f_s.samples * (u.u00 * s + u.u10 * c) + pair.f_c.samples * (
        u.u01 * s + u.u11 * c
    )
    return Waveform(grid, samples)


def apply_controlled(
    psi: Waveform,
    controls,
    n: int,
    u: Unitary2,
    active=None,
    allow_nonunitary: bool = False,
) -> Waveform:
    """Controlled-``u`` on target ``n``; ``controls`` is an index or a sequence.

    The transform acts only on the branch where every control is in its
    cosine state, by iterating the addressing step once per control.
    """
    _check_unitary(u, allow_nonunitary)
    if isinstance(controls, int):
        controls = (controls,)
    controls = tuple(controls)
    if not controls:
        return apply_single(psi, n, u, active, allow_nonunitary)
    if len(controls) > MAX_CONTROL_DEPTH:
        raise GateError(
            f"at most {MAX_CONTROL_DEPTH} controls supported, got {len(controls)}"
        )
    if len(set(controls) | {n}) != len(controls) + 1:
        raise GateError(f"overlapping qubit indices in controls {controls} target {n}")
    grid = psi.grid
    if active is None:
        active = tuple(range(1, grid.ladder.n_qubits + 1))
    c = controls[0]
    pair = address_fast(psi, c, active)
    reduced = tuple(q for q in active if q != c)
    inner = apply_controlled(
        pair.f_c, controls[1:], n, u, reduced, allow_nonunitary
    )
    w_c = grid.ladder.frequency(c)
    t = grid.times
    samples = inner.samples * np.cos(w_c * t) + pair.f_s.samples * np.sin(w_c * t)
    return Waveform(grid, samples)


def build_qft(qubits) -> Circuit:
    """Fourier-transform circuit over the listed qubits.

    Each qubit gets a Hadamard followed by controlled phase rotations from
    every later qubit, with phase exponent equal to the positional distance.
    The transform finishes with the qubit order reversed; callers read the
    output by relabeling indices (:func:`qft_output_order`), no swap gates
    are emitted.
    """
    qubits = list(qubits)
    if not qubits:
        raise CircuitError("QFT needs at least one qubit")
    ops = []
    for i, target in enumerate(qubits):
        ops.append(hadamard_op(target))
        for j in range(i + 1, len(qubits)):
            ops.append(phase_op(j - i, qubits[j], target))
    return Circuit(n_qubits=max(qubits), ops=tuple(ops))


def qft_output_order(qubits) -> list[int]:
    """Qubit read order after the QFT of :func:`build_qft`."""
    return list(reversed(list(qubits)))


def run_circuit(
    psi: Waveform,
    circuit: Circuit,
    rng_seed: int | None = None,
    measure_mode: str = "max_rule",
):
    """Apply ops in order; returns the final waveform and measurement records.

    Ops always use the circuit's original qubit numbering; removals update an
    internal index map so later ops keep addressing the right physical qubit.
    Measurement and removal are delegated to the measurement module with a
    generator seeded once from ``rng_seed``.
    """
    from .measure import measure, remove_qubit

    if circuit.n_qubits > psi.grid.ladder.n_qubits:
        raise CircuitError(
            f"circuit expects {circuit.n_qubits} qubits, state has "
            f"{psi.grid.ladder.n_qubits}"
        )
    rng = np.random.default_rng(rng_seed)
    position = {q: q for q in range(1, psi.grid.ladder.n_qubits + 1)}
    outcomes: dict[int, str] = {}
    records = []

    def pos(q: int) -> int:
        if q not in position:
            raise CircuitError(f"op references removed qubit {q}")
        return position[q]

    for op in circuit.ops:
        if op.kind == H:
            psi = apply_single(psi, pos(op.qubits[0]), HADAMARD)
        elif op.kind == U1:
            psi = apply_single(psi, pos(op.qubits[0]), op.unitary)
        elif op.kind == CR:
            psi = apply_controlled(
                psi, pos(op.qubits[0]), pos(op.qubits[1]), phase_unitary(op.d)
            )
        elif op.kind == CNOT:
            psi = apply_controlled(psi, pos(op.qubits[0]), pos(op.qubits[1]), NOT)
        elif op.kind == CU:
            psi = apply_controlled(psi, pos(op.qubits[0]), pos(op.qubits[1]), op.unitary)
        elif op.kind == MEASURE:
            record, psi = measure(psi, pos(op.qubits[0]), mode=measure_mode, rng=rng)
            outcomes[op.qubits[0]] = record.outcome
            records.append(record)
        elif op.kind == REMOVE:
            q = op.qubits[0]
            if q not in outcomes:
                raise CircuitError(f"qubit {q} must be measured before removal")
            removed_pos = pos(q)
            psi = remove_qubit(psi, removed_pos, outcomes[q])
            del position[q]
            for orig, p in position.items():
                if p > removed_pos:
                    position[orig] = p - 1
        else:  # pragma: no cover - constructors prevent this
            raise CircuitError(f"unknown op kind {op.kind}")
    return psi, records


def random_circuit(n_qubits: int, depth: int, rng, gate_kinds=(H, CR, CNOT)) -> Circuit:
    """Random unitary circuit for differential testing."""
    ops = []
    for _ in range(depth):
        kind = gate_kinds[rng.integers(len(gate_kinds))]
        if kind == H or n_qubits == 1:
            ops.append(hadamard_op(int(rng.integers(1, n_qubits + 1))))
        else:
            c, t = rng.choice(np.arange(1, n_qubits + 1), size=2, replace=False)
            if kind == CR:
                ops.append(phase_op(int(rng.integers(1, 4)), int(c), int(t)))
            else:
                ops.append(cnot_op(int(c), int(t)))
    return Circuit(n_qubits=n_qubits, ops=tuple(ops))


_ARITY = {"H": 2, "CNOT": 3, "CR": 4, "U": 10, "MEASURE": 2, "REMOVE": 2}


def _parse_int(token: str, line_no: int, col: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise CircuitSyntaxError(line_no, col, f"{what} must be an integer, got {token!r}")
    return value


def _parse_index(token: str, line_no: int, col: int) -> int:
    value = _parse_int(token, line_no, col, "qubit index")
    if value < 1:
        raise CircuitSyntaxError(line_no, col, f"qubit index must be >= 1, got {value}")
    return value


def _parse_float(token: str, line_no: int, col: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise CircuitSyntaxError(line_no, col, f"expected a number, got {token!r}")


def parse_circuit(text: str) -> Circuit:
    """Parse the one-op-per-line circuit format.

    Grammar (``#`` starts a comment, blank lines are skipped)::

        H n
        CNOT c n
        CR d c n
        U n u00re u00im u01re u01im u10re u10im u11re u11im
        MEASURE n
        REMOVE n

    Qubit indices are 1-based; the circuit width is the largest index seen.
    Errors carry 1-based line and column positions.
    """
    ops = []
    max_q = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = []
        col = 0
        while col < len(line):
            if line[col].isspace():
                col += 1
                continue
            end = col
            while end < len(line) and not line[end].isspace():
                end += 1
            tokens.append((line[col:end], col + 1))
            col = end
        mnemonic, mcol = tokens[0]
        mnemonic = mnemonic.upper()
        if mnemonic not in _ARITY:
            raise CircuitSyntaxError(line_no, mcol, f"unknown op {tokens[0][0]!r}")
        if len(tokens) != _ARITY[mnemonic]:
            raise CircuitSyntaxError(
                line_no,
                mcol,
                f"{mnemonic} takes {_ARITY[mnemonic] - 1} arguments, got {len(tokens) - 1}",
            )
        args = tokens[1:]
        try:
            if mnemonic == "H":
                op = hadamard_op(_parse_index(args[0][0], line_no, args[0][1]))
            elif mnemonic == "CNOT":
                op = cnot_op(
                    _parse_index(args[0][0], line_no, args[0][1]),
                    _parse_index(args[1][0], line_no, args[1][1]),
                )
            elif mnemonic == "CR":
                d = _parse_int(args[0][0], line_no, args[0][1], "phase exponent")
                if d < 0:
                    raise CircuitSyntaxError(
                        line_no, args[0][1], f"phase exponent must be >= 0, got {d}"
                    )
                op = phase_op(
                    d,
                    _parse_index(args[1][0], line_no, args[1][1]),
                    _parse_index(args[2][0], line_no, args[2][1]),
                )
            elif mnemonic == "U":
                n = _parse_index(args[0][0], line_no, args[0][1])
                vals = [_parse_float(tok, line_no, c) for tok, c in args[1:]]
                u = Unitary2(
                    complex(vals[0], vals[1]),
                    complex(vals[2], vals[3]),
                    complex(vals[4], vals[5]),
                    complex(vals[6], vals[7]),
                )
                op = unitary_op(n, u)
            elif mnemonic == "MEASURE":
                op = measure_op(_parse_index(args[0][0], line_no, args[0][1]))
            else:
                op = remove_op(_parse_index(args[0][0], line_no, args[0][1]))
        except CircuitError as exc:
            raise CircuitSyntaxError(line_no, mcol, str(exc))
        ops.append(op)
        max_q = max(max_q, *op.qubits)
    return Circuit(n_qubits=max_q, ops=tuple(ops))
